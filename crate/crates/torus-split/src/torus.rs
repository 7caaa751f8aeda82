//! Maximal tori of a given signed cycle type inside Sp_{2n}(q).
//!
//! The torus of type (n̄_1)…(n̄_k)(n_{k+1})…(n_m) is the group of diagonal
//! matrices bd(D_1,…,D_m,D_1⁻¹,…,D_m⁻¹) with D_i = diag(λ_i, λ_i^q, …,
//! λ_i^{q^{n_i−1}}) and λ_i of order dividing d_i = q^{n_i} − ε_i·1. It is
//! abstractly the direct product of cyclic groups of orders d_i, so points
//! are exponent tuples and matrices are materialized only on demand.

use crate::bweyl::{BlockLayout, CycleType};
use crate::gf::{lcm, make_field, prime_power_decompose, Field, FieldElem, GfError};
use crate::sympmat::{signed_to_row, standard_lift, Monomial, SympMatrix};
use std::collections::HashMap;
use std::sync::Arc;
use thiserror::Error;

/// Default cap on materialized torus points.
pub const DEFAULT_TORUS_BUDGET: u64 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TorusError {
    #[error("cycle type has rank {0}, expected {1}")]
    InvalidType(usize, usize),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("torus order {0} exceeds the budget {1}")]
    BudgetExceeded(u64, u64),
    #[error(transparent)]
    Gf(#[from] GfError),
}

/// Sign ε_i of a block: negative blocks have d_i = q^{n_i} + 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Minus,
    Plus,
}

#[derive(Debug)]
struct TorusInner {
    rank: usize,
    q: u64,
    p: u64,
    ctype: CycleType,
    layout: BlockLayout,
    eps: Vec<Sign>,
    d: Vec<u64>,
    l_degree: usize,
    ambient: Field,
    lambda: Vec<FieldElem>,
    n_w: Monomial,
    /// Per block: element index of λ_i^e → e, for solving diagonals.
    dlog: Vec<HashMap<u64, u64>>,
}

/// Shared handle describing one maximal torus.
#[derive(Clone, Debug)]
pub struct TorusSpec(Arc<TorusInner>);

impl PartialEq for TorusSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.rank == other.0.rank
                && self.0.q == other.0.q
                && self.0.ctype == other.0.ctype)
    }
}
impl Eq for TorusSpec {}

/// Builds the torus of the given type in Sp_{2n}(q); the λ_i generators are
/// the canonical elements of order d_i in the ambient field GF(q^L).
pub fn make_torus(n: usize, q: u64, ctype: &CycleType) -> Result<TorusSpec, TorusError> {
    let (p, s) = prime_power_decompose(q).ok_or(TorusError::NotPrimePower(q))?;
    if ctype.rank() != n {
        return Err(TorusError::InvalidType(ctype.rank(), n));
    }
    let layout = BlockLayout::from_type(ctype);
    let m = layout.num_blocks();
    let mut eps = Vec::with_capacity(m);
    let mut d = Vec::with_capacity(m);
    let mut l_degree = 1u64;
    for j in 0..m {
        let nj = layout.sizes[j] as u32;
        let qn = q.checked_pow(nj).expect("q^{n_i} must fit in u64");
        if layout.is_negative(j) {
            eps.push(Sign::Minus);
            d.push(qn + 1);
            l_degree = lcm(l_degree, 2 * nj as u64);
        } else {
            eps.push(Sign::Plus);
            d.push(qn - 1);
            l_degree = lcm(l_degree, nj as u64);
        }
    }
    let ambient = make_field(p, (s as u64 * l_degree) as usize)?.with_q_alias(q);
    let mut lambda = Vec::with_capacity(m);
    let mut dlog = Vec::with_capacity(m);
    for &dj in &d {
        let g = ambient.element_of_order(dj)?;
        let mut table = HashMap::with_capacity(dj as usize);
        let mut acc = ambient.one();
        for e in 0..dj {
            table.insert(acc.index(), e);
            acc = acc.mul(&g);
        }
        lambda.push(g);
        dlog.push(table);
    }
    let n_w = standard_lift(&layout, &ambient);
    Ok(TorusSpec(Arc::new(TorusInner {
        rank: n,
        q,
        p,
        ctype: ctype.clone(),
        layout,
        eps,
        d,
        l_degree: l_degree as usize,
        ambient,
        lambda,
        n_w,
        dlog,
    })))
}

impl TorusSpec {
    pub fn rank(&self) -> usize {
        self.0.rank
    }
    pub fn q(&self) -> u64 {
        self.0.q
    }
    pub fn p(&self) -> u64 {
        self.0.p
    }
    pub fn cycle_type(&self) -> &CycleType {
        &self.0.ctype
    }
    pub fn layout(&self) -> &BlockLayout {
        &self.0.layout
    }
    pub fn eps(&self) -> &[Sign] {
        &self.0.eps
    }
    /// Block orders d_i = q^{n_i} − ε_i·1.
    pub fn block_orders(&self) -> &[u64] {
        &self.0.d
    }
    /// Degree L of the single extension GF(q^L) housing every λ_i.
    pub fn extension_degree(&self) -> usize {
        self.0.l_degree
    }
    pub fn ambient(&self) -> &Field {
        &self.0.ambient
    }
    pub fn lambda_gen(&self) -> &[FieldElem] {
        &self.0.lambda
    }
    /// The standard monomial lift n_w of the type's Weyl representative.
    pub fn sigma_w_lift(&self) -> &Monomial {
        &self.0.n_w
    }

    /// |T| = ∏ d_i.
    pub fn order(&self) -> u64 {
        self.0.d.iter().product()
    }

    pub fn zero(&self) -> TorusPoint {
        TorusPoint {
            spec: self.clone(),
            exps: vec![0; self.0.d.len()],
        }
    }

    pub fn point(&self, exps: Vec<u64>) -> TorusPoint {
        assert_eq!(exps.len(), self.0.d.len());
        let exps = exps
            .into_iter()
            .zip(&self.0.d)
            .map(|(e, &d)| e % d)
            .collect();
        TorusPoint {
            spec: self.clone(),
            exps,
        }
    }

    /// Point with index i in the mixed-radix enumeration order.
    pub fn point_at(&self, mut i: u64) -> TorusPoint {
        let mut exps = Vec::with_capacity(self.0.d.len());
        for &dj in &self.0.d {
            exps.push(i % dj);
            i /= dj;
        }
        TorusPoint {
            spec: self.clone(),
            exps,
        }
    }

    /// Every point exactly once, in mixed-radix order.
    pub fn enumerate(
        &self,
        budget: u64,
    ) -> Result<impl Iterator<Item = TorusPoint> + '_, TorusError> {
        let total = self.order();
        if total > budget {
            return Err(TorusError::BudgetExceeded(total, budget));
        }
        Ok((0..total).map(move |i| self.point_at(i)))
    }

    /// Recovers the exponent tuple of a diagonal, if it lies in this torus.
    pub fn solve_diagonal(&self, diag: &[FieldElem]) -> Option<TorusPoint> {
        if diag.len() != 2 * self.0.rank {
            return None;
        }
        let mut exps = Vec::with_capacity(self.0.d.len());
        for j in 0..self.0.d.len() {
            let head = &diag[self.0.layout.start(j) - 1];
            exps.push(*self.0.dlog[j].get(&head.index())?);
        }
        let pt = TorusPoint {
            spec: self.clone(),
            exps,
        };
        if pt.realize_diag() == diag {
            Some(pt)
        } else {
            None
        }
    }

    /// Membership of a monomial matrix in the realized torus.
    pub fn solve_monomial(&self, m: &Monomial) -> Option<TorusPoint> {
        self.solve_diagonal(&m.diagonal()?)
    }

    /// The twisted Steinberg map x ↦ n_w · x^(q) · n_w⁻¹ defining this form.
    pub fn sigma_w_twist(&self, m: &Monomial) -> Monomial {
        let f = m.frobenius(self.0.q);
        self.0.n_w.mul(&f).mul(&self.0.n_w.inv())
    }

    pub fn is_sigma_w_fixed(&self, m: &Monomial) -> bool {
        self.sigma_w_twist(m) == *m
    }
}

/// Abstract torus point: exponents e_i modulo d_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusPoint {
    spec: TorusSpec,
    exps: Vec<u64>,
}

impl TorusPoint {
    pub fn spec(&self) -> &TorusSpec {
        &self.spec
    }
    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn is_zero(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Componentwise addition modulo d_i (the group law of T).
    pub fn add(&self, other: &TorusPoint) -> TorusPoint {
        assert!(self.spec == other.spec, "torus mismatch");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .zip(&self.spec.0.d)
            .map(|((&a, &b), &d)| (a + b) % d)
            .collect();
        TorusPoint {
            spec: self.spec.clone(),
            exps,
        }
    }

    pub fn neg(&self) -> TorusPoint {
        let exps = self
            .exps
            .iter()
            .zip(&self.spec.0.d)
            .map(|(&a, &d)| (d - a) % d)
            .collect();
        TorusPoint {
            spec: self.spec.clone(),
            exps,
        }
    }

    /// Diagonal entries of the realized matrix, in row order.
    pub fn realize_diag(&self) -> Vec<FieldElem> {
        let inner = &self.spec.0;
        let n = inner.rank;
        let mut diag = vec![inner.ambient.one(); 2 * n];
        for j in 0..inner.d.len() {
            let mut v = inner.lambda[j].upow(self.exps[j]);
            for t in 0..inner.layout.sizes[j] {
                let idx = (inner.layout.start(j) + t) as i32;
                diag[signed_to_row(idx, n)] = v.clone();
                diag[signed_to_row(-idx, n)] = v.inv().expect("torus entries are units");
                if t + 1 < inner.layout.sizes[j] {
                    v = v.upow(inner.q);
                }
            }
        }
        diag
    }

    pub fn realize_monomial(&self) -> Monomial {
        let diag = self.realize_diag();
        Monomial::identity(diag.len(), &self.spec.0.ambient).diag_left(&diag)
    }

    /// The block-diagonal matrix bd(D_1,…,D_m,D_1⁻¹,…,D_m⁻¹).
    pub fn realize(&self) -> SympMatrix {
        SympMatrix::diagonal(&self.realize_diag())
    }
}
