//! Exact dense matrix algebra over finite fields, symplectic membership for
//! the fixed form Q = [[0, I_n], [-I_n, 0]], monomial representatives of Weyl
//! elements, and canonicalization modulo the center {±I}.
//!
//! Rows and columns of a 2n-dimensional matrix follow the index order
//! 1,…,n,−1,…,−n: logical i maps to array position i−1 and −i to n+i−1.
//! Permutation matrices use the column convention M[row(φ(i))][col(i)] = 1.

use crate::bweyl::{BlockLayout, SignedPerm};
use crate::gf::{make_field, Field, FieldElem};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatError {
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("block sizes do not sum to the target dimension")]
    SizeMismatch,
    #[error("generator is not one of the block generators of this centralizer")]
    GeneratorOutsideCentralizer,
    #[error("matrix is not monomial")]
    NotMonomial,
    #[error("malformed matrix JSON: {0}")]
    BadJson(String),
    #[error(transparent)]
    Gf(#[from] crate::gf::GfError),
}

/// Dense square matrix over a finite field. Symplectic semantics apply when
/// the dimension is even (2n for rank n); generic square matrices are allowed
/// for scratch computations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SympMatrix {
    dim: usize,
    field: Field,
    entries: Vec<FieldElem>,
}

impl fmt::Debug for SympMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SympMatrix {}x{} over GF({})", self.dim, self.dim, self.field.order())?;
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl SympMatrix {
    pub fn zero(dim: usize, field: &Field) -> SympMatrix {
        SympMatrix {
            dim,
            field: field.clone(),
            entries: vec![field.zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize, field: &Field) -> SympMatrix {
        let mut m = Self::zero(dim, field);
        for i in 0..dim {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn scalar(dim: usize, value: &FieldElem) -> SympMatrix {
        let mut m = Self::zero(dim, value.field());
        for i in 0..dim {
            m.set(i, i, value.clone());
        }
        m
    }

    pub fn diagonal(values: &[FieldElem]) -> SympMatrix {
        let field = values[0].field().clone();
        let mut m = Self::zero(values.len(), &field);
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Rank n for a 2n-dimensional matrix.
    pub fn rank(&self) -> usize {
        debug_assert!(self.dim % 2 == 0);
        self.dim / 2
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElem {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        self.entries[r * self.dim + c] = v;
    }

    pub fn mul(&self, other: &SympMatrix) -> SympMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        assert!(self.field == other.field, "field mismatch");
        let mut out = Self::zero(self.dim, &self.field);
        for r in 0..self.dim {
            for k in 0..self.dim {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..self.dim {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn checked_mul(&self, other: &SympMatrix) -> Result<SympMatrix, MatError> {
        if self.dim != other.dim {
            return Err(MatError::DimensionMismatch(self.dim, other.dim));
        }
        Ok(self.mul(other))
    }

    pub fn neg(&self) -> SympMatrix {
        SympMatrix {
            dim: self.dim,
            field: self.field.clone(),
            entries: self.entries.iter().map(|e| e.neg()).collect(),
        }
    }

    pub fn scalar_mul(&self, s: &FieldElem) -> SympMatrix {
        SympMatrix {
            dim: self.dim,
            field: self.field.clone(),
            entries: self.entries.iter().map(|e| e.mul(s)).collect(),
        }
    }

    pub fn transpose(&self) -> SympMatrix {
        let mut out = Self::zero(self.dim, &self.field);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// Gauss-Jordan inverse.
    pub fn inv(&self) -> Result<SympMatrix, MatError> {
        let n = self.dim;
        let mut a = self.clone();
        let mut b = Self::identity(n, &self.field);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(MatError::Singular)?;
            if pivot != col {
                for c in 0..n {
                    let (x, y) = (a.get(pivot, c).clone(), a.get(col, c).clone());
                    a.set(pivot, c, y);
                    a.set(col, c, x);
                    let (x, y) = (b.get(pivot, c).clone(), b.get(col, c).clone());
                    b.set(pivot, c, y);
                    b.set(col, c, x);
                }
            }
            let inv = a.get(col, col).inv().expect("pivot is nonzero");
            for c in 0..n {
                a.set(col, c, a.get(col, c).mul(&inv));
                b.set(col, c, b.get(col, c).mul(&inv));
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for c in 0..n {
                    let va = a.get(r, c).sub(&factor.mul(a.get(col, c)));
                    a.set(r, c, va);
                    let vb = b.get(r, c).sub(&factor.mul(b.get(col, c)));
                    b.set(r, c, vb);
                }
            }
        }
        Ok(b)
    }

    pub fn pow(&self, mut e: u64) -> SympMatrix {
        let mut acc = Self::identity(self.dim, &self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar().map(|s| s.is_one()).unwrap_or(false)
    }

    /// Some(c) when the matrix equals c·I with c ≠ 0... zero matrices report
    /// Some(0) as well; callers in group code never see those.
    pub fn is_scalar(&self) -> Option<FieldElem> {
        let c = self.get(0, 0).clone();
        for r in 0..self.dim {
            for col in 0..self.dim {
                let e = self.get(r, col);
                if r == col {
                    if *e != c {
                        return None;
                    }
                } else if !e.is_zero() {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// ±I detection: 1, -1, or None.
    pub fn scalar_sign(&self) -> Option<i8> {
        let s = self.is_scalar()?;
        if s.is_one() {
            Some(1)
        } else if s == self.field.minus_one() {
            Some(-1)
        } else {
            None
        }
    }

    /// Entrywise a ↦ a^q.
    pub fn frobenius(&self, q: u64) -> SympMatrix {
        SympMatrix {
            dim: self.dim,
            field: self.field.clone(),
            entries: self.entries.iter().map(|e| e.upow(q)).collect(),
        }
    }

    /// Block-diagonal assembly.
    pub fn bd(blocks: &[SympMatrix]) -> Result<SympMatrix, MatError> {
        let dim: usize = blocks.iter().map(|b| b.dim).sum();
        let field = blocks[0].field.clone();
        let mut out = Self::zero(dim, &field);
        let mut off = 0;
        for b in blocks {
            if b.field != field {
                return Err(MatError::SizeMismatch);
            }
            for r in 0..b.dim {
                for c in 0..b.dim {
                    out.set(off + r, off + c, b.get(r, c).clone());
                }
            }
            off += b.dim;
        }
        Ok(out)
    }

    /// The form matrix Q of rank n: [[0, I_n], [−I_n, 0]].
    pub fn form_q(n: usize, field: &Field) -> SympMatrix {
        let mut q = Self::zero(2 * n, field);
        for i in 0..n {
            q.set(i, n + i, field.one());
            q.set(n + i, i, field.minus_one());
        }
        q
    }

    /// AᵀQA = Q membership test; requires an even dimension.
    pub fn is_symplectic(&self) -> bool {
        if self.dim % 2 != 0 {
            return false;
        }
        let q = Self::form_q(self.dim / 2, &self.field);
        self.transpose().mul(&q).mul(self) == q
    }

    /// Least e ≤ cap with a^e = I.
    pub fn order_of(&self, cap: u64) -> Option<u64> {
        let mut acc = self.clone();
        for e in 1..=cap {
            if acc.is_identity() {
                return Some(e);
            }
            if e < cap {
                acc = acc.mul(self);
            }
        }
        None
    }

    /// Permutation matrix of a signed permutation on indices 1..n, −1..−n.
    pub fn perm_matrix(p: &SignedPerm, field: &Field) -> SympMatrix {
        let n = p.rank();
        let mut m = Self::zero(2 * n, field);
        for i in 1..=n as i32 {
            m.set(signed_to_row(p.apply(i), n), signed_to_row(i, n), field.one());
            m.set(signed_to_row(p.apply(-i), n), signed_to_row(-i, n), field.one());
        }
        m
    }

    /// Canonical representative of {M, −M}; identity in characteristic 2.
    pub fn psp_canonical(&self) -> ProjPoint {
        if self.field.p() == 2 {
            return ProjPoint { rep: self.clone() };
        }
        for e in &self.entries {
            if !e.is_zero() {
                if e.neg().index() < e.index() {
                    return ProjPoint { rep: self.neg() };
                }
                break;
            }
        }
        ProjPoint { rep: self.clone() }
    }

    pub fn to_monomial(&self) -> Result<Monomial, MatError> {
        let mut perm = vec![usize::MAX; self.dim];
        let mut scale = Vec::with_capacity(self.dim);
        for c in 0..self.dim {
            let mut hit = None;
            for r in 0..self.dim {
                if !self.get(r, c).is_zero() {
                    if hit.is_some() {
                        return Err(MatError::NotMonomial);
                    }
                    hit = Some(r);
                }
            }
            let r = hit.ok_or(MatError::NotMonomial)?;
            perm[c] = r;
            scale.push(self.get(r, c).clone());
        }
        let mut seen = vec![false; self.dim];
        for &r in &perm {
            if seen[r] {
                return Err(MatError::NotMonomial);
            }
            seen[r] = true;
        }
        Ok(Monomial {
            field: self.field.clone(),
            perm,
            scale,
        })
    }

    pub fn to_json(&self) -> Result<MatrixJson, MatError> {
        if self.dim % 2 != 0 {
            return Err(MatError::BadJson("only 2n-dimensional matrices serialize".into()));
        }
        Ok(MatrixJson {
            n: self.dim / 2,
            field: FieldJson {
                p: self.field.p(),
                k: self.field.k(),
                modulus: self.field.modulus().to_vec(),
            },
            entries: (0..self.dim)
                .map(|r| (0..self.dim).map(|c| self.get(r, c).coeffs().to_vec()).collect())
                .collect(),
        })
    }

    pub fn from_json(j: &MatrixJson) -> Result<SympMatrix, MatError> {
        let field = make_field(j.field.p, j.field.k)?;
        if field.modulus() != j.field.modulus.as_slice() {
            return Err(MatError::BadJson(
                "field modulus is not the canonical one".into(),
            ));
        }
        let dim = 2 * j.n;
        if j.entries.len() != dim || j.entries.iter().any(|r| r.len() != dim) {
            return Err(MatError::BadJson("entry grid is not 2n x 2n".into()));
        }
        let mut m = SympMatrix::zero(dim, &field);
        for (r, row) in j.entries.iter().enumerate() {
            for (c, coeffs) in row.iter().enumerate() {
                let e = field
                    .from_coeffs(coeffs)
                    .map_err(|_| MatError::BadJson("coefficient out of range".into()))?;
                m.set(r, c, e);
            }
        }
        Ok(m)
    }
}

/// Canonical point of PSp: the chosen representative of the pair {M, −M}.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProjPoint {
    rep: SympMatrix,
}

impl ProjPoint {
    pub fn rep(&self) -> &SympMatrix {
        &self.rep
    }
}

/// Maps a signed index to its array row: i ↦ i−1, −i ↦ n+i−1.
pub fn signed_to_row(i: i32, n: usize) -> usize {
    debug_assert!(i != 0 && i.unsigned_abs() as usize <= n);
    if i > 0 {
        (i - 1) as usize
    } else {
        n + (-i - 1) as usize
    }
}

/// Inverse of [`signed_to_row`].
pub fn row_to_signed(r: usize, n: usize) -> i32 {
    if r < n {
        r as i32 + 1
    } else {
        -((r - n) as i32 + 1)
    }
}

// ---------------------------------------------------------------------------
// monomial fast path
// ---------------------------------------------------------------------------

/// A monomial matrix in column form: column j has the single nonzero entry
/// `scale[j]` in row `perm[j]`. Products and powers cost O(dim) field
/// operations, which the exhaustive scans rely on.
#[derive(Clone, PartialEq, Eq)]
pub struct Monomial {
    field: Field,
    perm: Vec<usize>,
    scale: Vec<FieldElem>,
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial(perm {:?}, scale ", self.perm)?;
        let s: Vec<String> = self.scale.iter().map(|e| e.to_string()).collect();
        write!(f, "[{}])", s.join(" "))
    }
}

impl Monomial {
    pub fn identity(dim: usize, field: &Field) -> Monomial {
        Monomial {
            field: field.clone(),
            perm: (0..dim).collect(),
            scale: vec![field.one(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn from_signed_perm(p: &SignedPerm, field: &Field) -> Monomial {
        let n = p.rank();
        let mut perm = vec![0usize; 2 * n];
        for i in 1..=n as i32 {
            perm[signed_to_row(i, n)] = signed_to_row(p.apply(i), n);
            perm[signed_to_row(-i, n)] = signed_to_row(p.apply(-i), n);
        }
        Monomial {
            field: field.clone(),
            perm,
            scale: vec![field.one(); 2 * n],
        }
    }

    /// diag(d) · self.
    pub fn diag_left(&self, d: &[FieldElem]) -> Monomial {
        let scale = self
            .scale
            .iter()
            .enumerate()
            .map(|(j, s)| d[self.perm[j]].mul(s))
            .collect();
        Monomial {
            field: self.field.clone(),
            perm: self.perm.clone(),
            scale,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.dim(), other.dim());
        let dim = self.dim();
        let mut perm = vec![0usize; dim];
        let mut scale = Vec::with_capacity(dim);
        for j in 0..dim {
            let mid = other.perm[j];
            perm[j] = self.perm[mid];
            scale.push(self.scale[mid].mul(&other.scale[j]));
        }
        Monomial {
            field: self.field.clone(),
            perm,
            scale,
        }
    }

    pub fn inv(&self) -> Monomial {
        let dim = self.dim();
        let mut perm = vec![0usize; dim];
        let mut scale = vec![self.field.one(); dim];
        for j in 0..dim {
            perm[self.perm[j]] = j;
            scale[self.perm[j]] = self.scale[j].inv().expect("monomial entries are nonzero");
        }
        Monomial {
            field: self.field.clone(),
            perm,
            scale,
        }
    }

    pub fn pow(&self, mut e: u64) -> Monomial {
        let mut acc = Self::identity(self.dim(), &self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn neg(&self) -> Monomial {
        Monomial {
            field: self.field.clone(),
            perm: self.perm.clone(),
            scale: self.scale.iter().map(|s| s.neg()).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &r)| j == r)
            && self.scale.iter().all(|s| s.is_one())
    }

    pub fn is_scalar(&self) -> Option<FieldElem> {
        if !self.perm.iter().enumerate().all(|(j, &r)| j == r) {
            return None;
        }
        let c = self.scale[0].clone();
        if self.scale.iter().all(|s| *s == c) {
            Some(c)
        } else {
            None
        }
    }

    pub fn scalar_sign(&self) -> Option<i8> {
        let s = self.is_scalar()?;
        if s.is_one() {
            Some(1)
        } else if s == self.field.minus_one() {
            Some(-1)
        } else {
            None
        }
    }

    /// Entrywise q-power.
    pub fn frobenius(&self, q: u64) -> Monomial {
        Monomial {
            field: self.field.clone(),
            perm: self.perm.clone(),
            scale: self.scale.iter().map(|s| s.upow(q)).collect(),
        }
    }

    /// Least e ≤ cap with self^e = I (exact identity).
    pub fn order_of(&self, cap: u64) -> Option<u64> {
        let mut acc = self.clone();
        for e in 1..=cap {
            if acc.is_identity() {
                return Some(e);
            }
            if e < cap {
                acc = acc.mul(self);
            }
        }
        None
    }

    /// Least e ≤ cap with self^e = ±I.
    pub fn proj_order_of(&self, cap: u64) -> Option<u64> {
        let mut acc = self.clone();
        for e in 1..=cap {
            if acc.scalar_sign().is_some() {
                return Some(e);
            }
            if e < cap {
                acc = acc.mul(self);
            }
        }
        None
    }

    /// Negates when −M precedes M in the canonical projective order; the
    /// result matches the dense [`SympMatrix::psp_canonical`] choice.
    pub fn psp_canonicalize(&self) -> Monomial {
        if self.field.p() == 2 {
            return self.clone();
        }
        // first nonzero entry in row-major order sits in row 0
        let j0 = self.perm.iter().position(|&r| r == 0).expect("permutation is total");
        let e = &self.scale[j0];
        if e.neg().index() < e.index() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Compact hashable key of the matrix (perm + entry indices).
    pub fn key(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(2 * self.dim());
        for j in 0..self.dim() {
            out.push(self.perm[j] as u64);
            out.push(self.scale[j].index());
        }
        out
    }

    pub fn to_dense(&self) -> SympMatrix {
        let mut m = SympMatrix::zero(self.dim(), &self.field);
        for j in 0..self.dim() {
            m.set(self.perm[j], j, self.scale[j].clone());
        }
        m
    }

    /// The signed permutation underlying the nonzero pattern of a
    /// 2n-dimensional monomial matrix, when the pattern respects signs.
    pub fn weyl_image(&self) -> Option<SignedPerm> {
        let dim = self.dim();
        if dim % 2 != 0 {
            return None;
        }
        let n = dim / 2;
        let mut img = Vec::with_capacity(n);
        for i in 1..=n as i32 {
            let v = row_to_signed(self.perm[signed_to_row(i, n)], n);
            let v_neg = row_to_signed(self.perm[signed_to_row(-i, n)], n);
            if v_neg != -v {
                return None;
            }
            img.push(v);
        }
        SignedPerm::from_images(img).ok()
    }

    /// Entry at (row, col); zero unless the column's nonzero sits there.
    pub fn entry(&self, r: usize, c: usize) -> FieldElem {
        if self.perm[c] == r {
            self.scale[c].clone()
        } else {
            self.field.zero()
        }
    }

    /// Row of the nonzero entry in column c.
    pub fn perm_of(&self, c: usize) -> usize {
        self.perm[c]
    }

    /// The nonzero entry of column c.
    pub fn scale_of(&self, c: usize) -> &FieldElem {
        &self.scale[c]
    }

    /// Same permutation pattern with replaced scales.
    pub fn with_scales(&self, scales: &[FieldElem]) -> Monomial {
        assert_eq!(scales.len(), self.dim());
        Monomial {
            field: self.field.clone(),
            perm: self.perm.clone(),
            scale: scales.to_vec(),
        }
    }

    /// Diagonal part as the vector of entries when the permutation is trivial.
    pub fn diagonal(&self) -> Option<Vec<FieldElem>> {
        if self.perm.iter().enumerate().all(|(j, &r)| j == r) {
            Some(self.scale.clone())
        } else {
            None
        }
    }

    pub fn is_symplectic(&self) -> bool {
        self.to_dense().is_symplectic()
    }
}

// ---------------------------------------------------------------------------
// Weyl representatives
// ---------------------------------------------------------------------------

/// Generators of the centralizer C_W(w) of a standard representative, in the
/// block vocabulary: ϖ_j on negative blocks, ω_j and τ_j on positive blocks,
/// and swaps of equal blocks of the same sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockGen {
    Varpi(usize),
    Omega(usize),
    Tau(usize),
    Swap(usize, usize),
}

impl BlockGen {
    pub fn signed_perm(&self, layout: &BlockLayout) -> SignedPerm {
        match *self {
            BlockGen::Varpi(j) => layout.varpi(j),
            BlockGen::Omega(j) => layout.omega(j),
            BlockGen::Tau(j) => layout.tau(j),
            BlockGen::Swap(a, b) => layout.swap(a, b),
        }
    }
}

/// Monomial representative of a block generator, exactly as used inside the
/// normalizer: plain permutation matrices for ω_j and swaps, a single −1
/// twist on the negative side of block j for ϖ_j, and −I_j on the negative
/// side for τ_j.
///
/// Under the column convention M[φ(i)][i] = 1 the symplectic form fixes the
/// ϖ_j twist at the first index of the block: a monomial matrix Δ·P(φ) is
/// symplectic iff scale(i)·scale(−i) = sign(φ(i)) for every i > 0, and ϖ_j
/// sends only its last index to a negative one.
pub fn block_gen_rep(
    layout: &BlockLayout,
    field: &Field,
    g: &BlockGen,
) -> Result<Monomial, MatError> {
    let n = layout.rank();
    let valid = match *g {
        BlockGen::Varpi(j) => layout.is_negative(j),
        BlockGen::Omega(j) | BlockGen::Tau(j) => !layout.is_negative(j),
        BlockGen::Swap(a, b) => {
            layout.sizes[a] == layout.sizes[b] && layout.is_negative(a) == layout.is_negative(b)
        }
    };
    if !valid {
        return Err(MatError::GeneratorOutsideCentralizer);
    }
    let base = Monomial::from_signed_perm(&g.signed_perm(layout), field);
    let mut d = vec![field.one(); 2 * n];
    match *g {
        BlockGen::Varpi(j) => {
            d[signed_to_row(-(layout.start(j) as i32), n)] = field.minus_one();
        }
        BlockGen::Tau(j) => {
            for t in 0..layout.sizes[j] {
                let idx = (layout.start(j) + t) as i32;
                d[signed_to_row(-idx, n)] = field.minus_one();
            }
        }
        _ => {}
    }
    Ok(base.diag_left(&d))
}

/// Product of block-generator representatives, left to right.
pub fn weyl_rep(
    layout: &BlockLayout,
    field: &Field,
    word: &[BlockGen],
) -> Result<Monomial, MatError> {
    let mut acc = Monomial::identity(2 * layout.rank(), field);
    for g in word {
        acc = acc.mul(&block_gen_rep(layout, field, g)?);
    }
    Ok(acc)
}

/// The standard monomial lift n_w of the type's standard representative:
/// the product of the ϖ_j representatives over negative blocks and the ω_j
/// permutations over positive blocks.
pub fn standard_lift(layout: &BlockLayout, field: &Field) -> Monomial {
    let mut acc = Monomial::identity(2 * layout.rank(), field);
    for j in 0..layout.num_blocks() {
        let g = if layout.is_negative(j) {
            BlockGen::Varpi(j)
        } else {
            BlockGen::Omega(j)
        };
        acc = acc.mul(&block_gen_rep(layout, field, &g).expect("block generator is valid"));
    }
    acc
}

// ---------------------------------------------------------------------------
// JSON forms
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldJson {
    pub p: u64,
    pub k: usize,
    pub modulus: Vec<u64>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MatrixJson {
    pub n: usize,
    pub field: FieldJson,
    pub entries: Vec<Vec<Vec<u64>>>,
}
