//! The algebraic normalizer N = T·⟨Weyl representatives⟩ of a maximal torus
//! inside Sp_{2n}(q), and its image in PSp_{2n}(q).
//!
//! N is assembled as the torus together with one monomial representative per
//! element of C_W(w): the block generators carry the representatives fixed in
//! [`crate::sympmat::block_gen_rep`], and every other centralizer element
//! receives the matrix of its shortest word in those generators
//! (breadth-first, ties broken by generator index order). The quotient N/T
//! is then literally the centralizer, which [`NormalizerGroup::quotient_check`]
//! re-verifies by multiplication.

use crate::bweyl::{centralizer, BweylError, SignedPerm};

use crate::sympmat::{block_gen_rep, BlockGen, MatError, Monomial};
use crate::torus::{TorusError, TorusPoint, TorusSpec};
use std::collections::{HashMap, VecDeque};
use thiserror::Error;

/// Default cap on |N| = |T|·|C_W(w)|.
pub const DEFAULT_NORMALIZER_BUDGET: u64 = 5_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NormalizerError {
    #[error("normalizer order {0} exceeds the budget {1}")]
    BudgetExceeded(u64, u64),
    #[error("centralizer element {0} is not a word in the block generators")]
    WordNotFound(String),
    #[error("element does not lie in the normalizer")]
    NotInNormalizer,
    #[error(transparent)]
    Torus(#[from] TorusError),
    #[error(transparent)]
    Bweyl(#[from] BweylError),
    #[error(transparent)]
    Mat(#[from] MatError),
}

/// Which group the normalizer lives in: Sp_{2n}(q) or its central quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Sp,
    PSp,
}

impl std::fmt::Display for GroupKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupKind::Sp => f.write_str("sp"),
            GroupKind::PSp => f.write_str("psp"),
        }
    }
}

/// T·⟨transversal⟩ for one torus, with the transversal indexed by C_W(w).
#[derive(Debug)]
pub struct NormalizerGroup {
    spec: TorusSpec,
    kind: GroupKind,
    weyl_elements: Vec<SignedPerm>,
    weyl_index: HashMap<SignedPerm, usize>,
    transversal: Vec<Monomial>,
    block_gens: Vec<BlockGen>,
}

/// One element of N in its unique factorization torus · transversal.
#[derive(Clone, Debug)]
pub struct NormalizerElement {
    pub torus_part: TorusPoint,
    pub weyl_part: SignedPerm,
    pub matrix: Monomial,
}

/// Block generators of C_W(w) for this layout: ϖ_j on negative blocks,
/// ω_j (size ≥ 2) and τ_j on positive blocks, swaps of equal same-sign
/// blocks.
pub fn centralizer_block_gens(spec: &TorusSpec) -> Vec<BlockGen> {
    let layout = spec.layout();
    let mut gens = Vec::new();
    for j in 0..layout.num_blocks() {
        if layout.is_negative(j) {
            gens.push(BlockGen::Varpi(j));
        } else {
            if layout.sizes[j] >= 2 {
                gens.push(BlockGen::Omega(j));
            }
            gens.push(BlockGen::Tau(j));
        }
    }
    for j1 in 0..layout.num_blocks() {
        for j2 in j1 + 1..layout.num_blocks() {
            if layout.sizes[j1] == layout.sizes[j2]
                && layout.is_negative(j1) == layout.is_negative(j2)
            {
                gens.push(BlockGen::Swap(j1, j2));
            }
        }
    }
    gens
}

/// Builds the normalizer model for the torus: the full centralizer C_W(w)
/// with one monomial representative per element.
pub fn build_normalizer(
    spec: &TorusSpec,
    kind: GroupKind,
    budget: u64,
) -> Result<NormalizerGroup, NormalizerError> {
    let w = spec.cycle_type().standard_rep();
    let weyl_elements = centralizer(&w)?;
    let total = spec
        .order()
        .checked_mul(weyl_elements.len() as u64)
        .ok_or(NormalizerError::BudgetExceeded(u64::MAX, budget))?;
    if total > budget {
        return Err(NormalizerError::BudgetExceeded(total, budget));
    }
    let weyl_index: HashMap<SignedPerm, usize> = weyl_elements
        .iter()
        .enumerate()
        .map(|(i, x)| (x.clone(), i))
        .collect();
    let block_gens = centralizer_block_gens(spec);
    let field = spec.ambient();
    let layout = spec.layout();
    let gen_perms: Vec<SignedPerm> = block_gens.iter().map(|g| g.signed_perm(layout)).collect();
    let gen_reps: Vec<Monomial> = block_gens
        .iter()
        .map(|g| block_gen_rep(layout, field, g))
        .collect::<Result<_, _>>()?;

    let mut transversal: Vec<Option<Monomial>> = vec![None; weyl_elements.len()];
    let id_idx = weyl_index[&SignedPerm::identity(spec.rank())];
    transversal[id_idx] = Some(Monomial::identity(2 * spec.rank(), field));
    let mut queue = VecDeque::from([id_idx]);
    while let Some(cur) = queue.pop_front() {
        let cur_perm = weyl_elements[cur].clone();
        let cur_mat = transversal[cur].clone().expect("visited nodes carry a matrix");
        for (gp, gm) in gen_perms.iter().zip(&gen_reps) {
            let nxt_perm = cur_perm.compose(gp);
            let idx = weyl_index[&nxt_perm];
            if transversal[idx].is_none() {
                transversal[idx] = Some(cur_mat.mul(gm));
                queue.push_back(idx);
            }
        }
    }
    let transversal: Vec<Monomial> = transversal
        .into_iter()
        .enumerate()
        .map(|(i, t)| t.ok_or_else(|| NormalizerError::WordNotFound(weyl_elements[i].to_string())))
        .collect::<Result<_, _>>()?;
    Ok(NormalizerGroup {
        spec: spec.clone(),
        kind,
        weyl_elements,
        weyl_index,
        transversal,
        block_gens,
    })
}

impl NormalizerGroup {
    pub fn spec(&self) -> &TorusSpec {
        &self.spec
    }
    pub fn kind(&self) -> GroupKind {
        self.kind
    }
    pub fn weyl_elements(&self) -> &[SignedPerm] {
        &self.weyl_elements
    }
    pub fn block_gens(&self) -> &[BlockGen] {
        &self.block_gens
    }

    /// |C_W(w)|.
    pub fn weyl_order(&self) -> u64 {
        self.weyl_elements.len() as u64
    }

    /// |N| = |T|·|C_W(w)| in Sp.
    pub fn order(&self) -> u64 {
        self.spec.order() * self.weyl_order()
    }

    /// |T| in Sp, |T̃| in PSp (halved for odd q, where −I lies in T).
    pub fn torus_order(&self) -> u64 {
        match self.kind {
            GroupKind::Sp => self.spec.order(),
            GroupKind::PSp if self.spec.p() == 2 => self.spec.order(),
            GroupKind::PSp => self.spec.order() / 2,
        }
    }

    /// Order of N in the chosen kind (PSp halves for odd q).
    pub fn quotient_order(&self) -> u64 {
        self.torus_order() * self.weyl_order()
    }

    pub fn rep_of(&self, w: &SignedPerm) -> Option<&Monomial> {
        self.weyl_index.get(w).map(|&i| &self.transversal[i])
    }

    pub fn transversal(&self) -> &[Monomial] {
        &self.transversal
    }

    /// The element realize(t) · rep(w).
    pub fn element(
        &self,
        torus_part: TorusPoint,
        weyl_part: &SignedPerm,
    ) -> Result<NormalizerElement, NormalizerError> {
        let rep = self
            .rep_of(weyl_part)
            .ok_or(NormalizerError::NotInNormalizer)?;
        let matrix = rep.diag_left(&torus_part.realize_diag());
        Ok(NormalizerElement {
            torus_part,
            weyl_part: weyl_part.clone(),
            matrix,
        })
    }

    /// Factors a monomial matrix as torus · transversal, when possible.
    pub fn decompose(&self, m: &Monomial) -> Option<NormalizerElement> {
        let weyl_part = m.weyl_image()?;
        let rep = self.rep_of(&weyl_part)?;
        let torus_mat = m.mul(&rep.inv());
        let torus_part = self.spec.solve_monomial(&torus_mat)?;
        Some(NormalizerElement {
            torus_part,
            weyl_part,
            matrix: m.clone(),
        })
    }

    /// All lifts t·rep(w) of a centralizer element, in torus enumeration
    /// order. In PSp the lifts are canonicalized and deduplicated keeping the
    /// first occurrence.
    pub fn lifts_of(&self, w: &SignedPerm) -> Result<Vec<Monomial>, NormalizerError> {
        let rep = self
            .rep_of(w)
            .ok_or(NormalizerError::NotInNormalizer)?
            .clone();
        let mut out = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for i in 0..self.spec.order() {
            let t = self.spec.point_at(i);
            let m = rep.diag_left(&t.realize_diag());
            let m = match self.kind {
                GroupKind::Sp => m,
                GroupKind::PSp => m.psp_canonicalize(),
            };
            if seen.insert(m.key()) {
                out.push(m);
            }
        }
        Ok(out)
    }

    /// Whether a monomial matrix represents a point of the torus image in
    /// this kind (in PSp, up to sign).
    pub fn is_torus_member(&self, m: &Monomial) -> bool {
        match self.kind {
            GroupKind::Sp => self.spec.solve_monomial(m).is_some(),
            GroupKind::PSp => {
                self.spec.solve_monomial(m).is_some() || self.spec.solve_monomial(&m.neg()).is_some()
            }
        }
    }

    /// Conjugation action of a normalizer element on the abstract torus;
    /// the result depends only on the Weyl part.
    pub fn conjugation_action(
        &self,
        g: &NormalizerElement,
        t: &TorusPoint,
    ) -> Result<TorusPoint, NormalizerError> {
        let conj = g.matrix.mul(&t.realize_monomial()).mul(&g.matrix.inv());
        self.spec
            .solve_monomial(&conj)
            .ok_or(NormalizerError::NotInNormalizer)
    }

    /// Verifies that weyl_part is a homomorphism onto C_W(w) with kernel
    /// exactly the torus: rep(x)·rep(y) factors as torus · rep(xy) for all
    /// pairs, and only the identity's coset meets the torus.
    pub fn quotient_check(&self) -> bool {
        for (i, x) in self.weyl_elements.iter().enumerate() {
            // kernel: rep(x) ∈ T only for x = id
            let in_torus = self.spec.solve_monomial(&self.transversal[i]).is_some();
            if in_torus != x.is_identity() {
                return false;
            }
            for (j, y) in self.weyl_elements.iter().enumerate() {
                let xy = x.compose(y);
                let Some(&k) = self.weyl_index.get(&xy) else {
                    return false;
                };
                let prod = self.transversal[i].mul(&self.transversal[j]);
                let cocycle = prod.mul(&self.transversal[k].inv());
                if self.spec.solve_monomial(&cocycle).is_none() {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bweyl::{enumerate_types, BlockLayout, CycleType};
    use crate::gf::FieldElem;
    use crate::torus::make_torus;

    fn t(neg: &[usize], pos: &[usize]) -> CycleType {
        CycleType::new(neg.to_vec(), pos.to_vec()).unwrap()
    }

    fn norm(n: usize, q: u64, ct: &CycleType, kind: GroupKind) -> NormalizerGroup {
        let spec = make_torus(n, q, ct).unwrap();
        build_normalizer(&spec, kind, DEFAULT_NORMALIZER_BUDGET).unwrap()
    }

    #[test]
    fn normalizer_orders_match_expected() {
        // type (1) at q = 3: C_W(w) = ⟨τ_1⟩, |N| = 2·2 = 4
        let n = norm(1, 3, &t(&[], &[1]), GroupKind::Sp);
        assert_eq!(n.weyl_order(), 2);
        assert_eq!(n.order(), 4);

        // type (1-) at q = 3: |T| = 4, |N| = 8
        let n = norm(1, 3, &t(&[1], &[]), GroupKind::Sp);
        assert_eq!(n.order(), 8);

        // type (1-)(1-) at q = 3: |N| = 16·8 = 128 in Sp, 64 in PSp
        let n = norm(2, 3, &t(&[1, 1], &[]), GroupKind::Sp);
        assert_eq!(n.order(), 128);
        let n = norm(2, 3, &t(&[1, 1], &[]), GroupKind::PSp);
        assert_eq!(n.order(), 128);
        assert_eq!(n.quotient_order(), 64);
    }

    #[test]
    fn transversal_matrices_are_symplectic_sign_matrices_fixed_by_sigma_w() {
        for q in [2u64, 3, 5] {
            for n in 1..=3usize {
                for ct in enumerate_types(n) {
                    let spec = make_torus(n, q, &ct).unwrap();
                    let ng = build_normalizer(&spec, GroupKind::Sp, DEFAULT_NORMALIZER_BUDGET)
                        .unwrap();
                    for (i, m) in ng.transversal().iter().enumerate() {
                        assert!(m.is_symplectic(), "{ct} q={q}");
                        assert!(spec.is_sigma_w_fixed(m), "{ct} q={q}");
                        assert_eq!(m.weyl_image().as_ref(), Some(&ng.weyl_elements()[i]));
                        // entries are 0/±1, in particular they lie in GF(q)
                        let dense = m.to_dense();
                        for r in 0..dense.dim() {
                            for c in 0..dense.dim() {
                                let e = dense.get(r, c);
                                assert!(
                                    e.is_zero() || e.is_one() || *e == spec.ambient().minus_one()
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn quotient_check_small_cases() {
        for q in [2u64, 3, 5] {
            for n in 1..=2usize {
                for ct in enumerate_types(n) {
                    let ng = norm(n, q, &ct, GroupKind::Sp);
                    assert!(ng.quotient_check(), "{ct} q={q}");
                }
            }
        }
    }

    #[test]
    fn varpi_lift_power_reaches_tau_up_to_torus() {
        for ct in [t(&[2], &[]), t(&[2, 1], &[]), t(&[3], &[])] {
            let n = ct.rank();
            let spec = make_torus(n, 3, &ct).unwrap();
            let ng = build_normalizer(&spec, GroupKind::Sp, DEFAULT_NORMALIZER_BUDGET).unwrap();
            let layout = BlockLayout::from_type(&ct);
            for j in 0..layout.num_blocks() {
                if !layout.is_negative(j) {
                    continue;
                }
                let rep = ng.rep_of(&layout.varpi(j)).unwrap();
                let power = rep.pow(layout.sizes[j] as u64);
                let tau_rep = ng.rep_of(&layout.tau(j)).unwrap();
                let cocycle = power.mul(&tau_rep.inv());
                assert!(spec.solve_monomial(&cocycle).is_some(), "{ct} block {j}");
            }
        }
    }

    #[test]
    fn omega_and_tau_representatives_commute_for_single_positive_block() {
        // the two generators of C_W(w) for type (n) commute exactly
        for nn in 2..=3usize {
            let ct = t(&[], &[nn]);
            let ng = norm(nn, 5, &ct, GroupKind::Sp);
            let layout = BlockLayout::from_type(&ct);
            let s = ng.rep_of(&layout.omega(0)).unwrap();
            let u = ng.rep_of(&layout.tau(0)).unwrap();
            assert_eq!(s.mul(u), u.mul(s));
        }
    }

    #[test]
    fn conjugation_action_examples() {
        // identity Weyl part: t is unchanged
        let ct = t(&[1], &[1]);
        let spec = make_torus(2, 3, &ct).unwrap();
        let ng = build_normalizer(&spec, GroupKind::Sp, DEFAULT_NORMALIZER_BUDGET).unwrap();
        let id = SignedPerm::identity(2);
        let g = ng.element(spec.point_at(3), &id).unwrap();
        for pt in spec.enumerate(1000).unwrap() {
            assert_eq!(ng.conjugation_action(&g, &pt).unwrap(), pt);
        }

        // τ_1 lift inverts the torus of type (1): e ↦ −e
        let ct = t(&[], &[1]);
        let spec = make_torus(1, 5, &ct).unwrap();
        let ng = build_normalizer(&spec, GroupKind::Sp, DEFAULT_NORMALIZER_BUDGET).unwrap();
        let tau1 = BlockLayout::from_type(&ct).tau(0);
        let g = ng.element(spec.zero(), &tau1).unwrap();
        for pt in spec.enumerate(1000).unwrap() {
            assert_eq!(ng.conjugation_action(&g, &pt).unwrap(), pt.neg());
        }
    }

    #[test]
    fn conjugation_is_a_group_action_independent_of_torus_part() {
        let ct = t(&[1], &[1]);
        let spec = make_torus(2, 3, &ct).unwrap();
        let ng = build_normalizer(&spec, GroupKind::Sp, DEFAULT_NORMALIZER_BUDGET).unwrap();
        let pts: Vec<_> = spec.enumerate(100).unwrap().collect();
        let weyl = ng.weyl_elements().to_vec();
        for wx in weyl.iter().take(4) {
            for wy in weyl.iter().take(4) {
                let g = ng.element(spec.point_at(1), wx).unwrap();
                let h = ng.element(spec.point_at(5 % spec.order()), wy).unwrap();
                let gh = ng
                    .decompose(&g.matrix.mul(&h.matrix))
                    .expect("products stay in N");
                for pt in pts.iter().take(6) {
                    let lhs = ng.conjugation_action(&gh, pt).unwrap();
                    let rhs = ng
                        .conjugation_action(&g, &ng.conjugation_action(&h, pt).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs);
                    // torus part does not matter
                    let g0 = ng.element(spec.zero(), wx).unwrap();
                    assert_eq!(
                        ng.conjugation_action(&g0, pt).unwrap(),
                        ng.conjugation_action(&g, pt).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn decompose_round_trips_and_rejects_outsiders() {
        let ct = t(&[1], &[1]);
        let spec = make_torus(2, 3, &ct).unwrap();
        let ng = build_normalizer(&spec, GroupKind::Sp, DEFAULT_NORMALIZER_BUDGET).unwrap();
        for w in ng.weyl_elements().to_vec().iter().take(6) {
            let el = ng.element(spec.point_at(2), w).unwrap();
            let back = ng.decompose(&el.matrix).unwrap();
            assert_eq!(back.weyl_part, el.weyl_part);
            assert_eq!(back.torus_part.exps(), el.torus_part.exps());
        }
        // a Weyl element outside C_W(w) is rejected
        let outsider = crate::bweyl::coxeter_generators(2)[0].clone(); // (1,2)(-1,-2)
        assert!(ng.rep_of(&outsider).is_none());
        let m = Monomial::from_signed_perm(&outsider, spec.ambient());
        assert!(ng.decompose(&m).is_none());
    }

    #[test]
    fn psp_lift_counts_halve_for_odd_q() {
        let ct = t(&[1], &[]);
        let spec = make_torus(1, 3, &ct).unwrap();
        let tau = BlockLayout::from_type(&ct).varpi(0);
        let sp = build_normalizer(&spec, GroupKind::Sp, DEFAULT_NORMALIZER_BUDGET).unwrap();
        assert_eq!(sp.lifts_of(&tau).unwrap().len() as u64, spec.order());
        let psp = build_normalizer(&spec, GroupKind::PSp, DEFAULT_NORMALIZER_BUDGET).unwrap();
        assert_eq!(psp.lifts_of(&tau).unwrap().len() as u64, spec.order() / 2);
    }

    /// Commutation relation of two monomial matrices with fixed permutation
    /// parts: `1` when xy = yx, `-1` when xy = −yx, else `0`. All lifts of
    /// one Weyl element share its permutation, so only scale vectors vary;
    /// the check is allocation-free with early exit.
    fn scale_relation(
        sx: &[FieldElem],
        px: &[usize],
        sy: &[FieldElem],
        py: &[usize],
    ) -> i8 {
        let dim = sx.len();
        let mut sign = 0i8;
        for j in 0..dim {
            let ab = sx[py[j]].mul(&sy[j]);
            let ba = sy[px[j]].mul(&sx[j]);
            let here = if ab == ba {
                1
            } else if ab == ba.neg() {
                -1
            } else {
                return 0;
            };
            if sign == 0 {
                sign = here;
            } else if sign != here {
                return 0;
            }
        }
        sign
    }

    struct LiftScan {
        perm: Vec<usize>,
        scales: Vec<Vec<FieldElem>>,
        heads: Vec<FieldElem>,
    }

    fn lift_scan(ng: &NormalizerGroup, w: &SignedPerm, head: usize) -> LiftScan {
        let lifts = ng.lifts_of(w).unwrap();
        let dense0 = lifts[0].to_dense();
        let perm: Vec<usize> = (0..dense0.dim())
            .map(|c| (0..dense0.dim()).find(|&r| !dense0.get(r, c).is_zero()).unwrap())
            .collect();
        let scales: Vec<Vec<FieldElem>> = lifts
            .iter()
            .map(|m| {
                let d = m.to_dense();
                (0..d.dim()).map(|c| d.get(perm[c], c).clone()).collect()
            })
            .collect();
        let heads = lifts.iter().map(|m| m.entry(head, head)).collect();
        LiftScan { perm, scales, heads }
    }

    /// Lifts of τ_1, τ_2 that commute force μ_1² = λ_2² = 1, where μ_1 and
    /// λ_2 are the head entries of the off-blocks. Exhausted over all torus
    /// lifts at q ≤ 7 for two-block types with parts ≤ 2.
    #[test]
    fn commuting_tau_lifts_constrain_off_block_entries() {
        for q in [3u64, 5, 7] {
            for ct in two_block_types(2) {
                let n = ct.rank();
                let spec = make_torus(n, q, &ct).unwrap();
                let ng =
                    build_normalizer(&spec, GroupKind::Sp, DEFAULT_NORMALIZER_BUDGET).unwrap();
                let layout = BlockLayout::from_type(&ct);
                let head2 = layout.start(1) - 1;
                let head1 = layout.start(0) - 1;
                let a = lift_scan(&ng, &layout.tau(0), head2);
                let b = lift_scan(&ng, &layout.tau(1), head1);
                let one = spec.ambient().one();
                let mut fired = 0u64;
                for (s1, mu1) in a.scales.iter().zip(&a.heads) {
                    for (s2, lam2) in b.scales.iter().zip(&b.heads) {
                        if scale_relation(s1, &a.perm, s2, &b.perm) == 1 {
                            fired += 1;
                            assert_eq!(mu1.mul(mu1), one, "{ct} q={q}");
                            assert_eq!(lam2.mul(lam2), one, "{ct} q={q}");
                        }
                    }
                }
                assert!(fired > 0, "commuting pairs exist for {ct} q={q}");
            }
        }
    }

    /// The scale-vector relation agrees with full monomial products on an
    /// exhaustive small cell.
    #[test]
    fn scale_relation_matches_monomial_products() {
        let ct = t(&[1], &[1]);
        let spec = make_torus(2, 3, &ct).unwrap();
        let ng = build_normalizer(&spec, GroupKind::Sp, DEFAULT_NORMALIZER_BUDGET).unwrap();
        let layout = BlockLayout::from_type(&ct);
        let a = lift_scan(&ng, &layout.varpi(0), 1);
        let b = lift_scan(&ng, &layout.tau(1), 0);
        let xs = ng.lifts_of(&layout.varpi(0)).unwrap();
        let ys = ng.lifts_of(&layout.tau(1)).unwrap();
        for (i, x) in xs.iter().enumerate() {
            for (j, y) in ys.iter().enumerate() {
                let expect = {
                    let ab = x.mul(y);
                    let ba = y.mul(x);
                    if ab == ba {
                        1
                    } else if ab == ba.neg() {
                        -1
                    } else {
                        0
                    }
                };
                assert_eq!(
                    scale_relation(&a.scales[i], &a.perm, &b.scales[j], &b.perm),
                    expect
                );
            }
        }
    }

    /// Anticommuting lifts of ϖ_1, ϖ_2 force μ_1² = λ_2² = −1 and odd block
    /// sizes; exhausted over all torus lifts for the negative two-block types.
    #[test]
    fn anticommuting_varpi_lifts_constrain_entries_and_parity() {
        for q in [3u64, 5, 7] {
            for ct in [t(&[1, 1], &[]), t(&[2, 1], &[]), t(&[2, 2], &[])] {
                let n = ct.rank();
                let spec = make_torus(n, q, &ct).unwrap();
                let ng =
                    build_normalizer(&spec, GroupKind::Sp, DEFAULT_NORMALIZER_BUDGET).unwrap();
                let layout = BlockLayout::from_type(&ct);
                let head2 = layout.start(1) - 1;
                let head1 = layout.start(0) - 1;
                let a = lift_scan(&ng, &layout.varpi(0), head2);
                let b = lift_scan(&ng, &layout.varpi(1), head1);
                let minus_one = spec.ambient().minus_one();
                let both_odd = layout.sizes[0] % 2 == 1 && layout.sizes[1] % 2 == 1;
                let mut fired = 0u64;
                for (s1, mu1) in a.scales.iter().zip(&a.heads) {
                    for (s2, lam2) in b.scales.iter().zip(&b.heads) {
                        if scale_relation(s1, &a.perm, s2, &b.perm) == -1 {
                            fired += 1;
                            assert!(both_odd, "{ct} q={q}: anticommuting lifts need odd parts");
                            assert_eq!(mu1.mul(mu1), minus_one);
                            assert_eq!(lam2.mul(lam2), minus_one);
                        }
                    }
                }
                if !both_odd {
                    assert_eq!(fired, 0);
                }
            }
        }
    }

    /// Lifts of ϖ_1 (negative block) against τ_2 (positive block): commuting
    /// forces μ_1² = 1; anticommuting forces μ_1² = λ_2² = −1 with odd n_1.
    #[test]
    fn varpi_against_tau_lift_constraints() {
        for q in [3u64, 5, 7] {
            for ct in [t(&[1], &[1]), t(&[1], &[2]), t(&[2], &[1]), t(&[2], &[2])] {
                let n = ct.rank();
                let spec = make_torus(n, q, &ct).unwrap();
                let ng =
                    build_normalizer(&spec, GroupKind::Sp, DEFAULT_NORMALIZER_BUDGET).unwrap();
                let layout = BlockLayout::from_type(&ct);
                let head2 = layout.start(1) - 1;
                let head1 = layout.start(0) - 1;
                let a = lift_scan(&ng, &layout.varpi(0), head2);
                let b = lift_scan(&ng, &layout.tau(1), head1);
                let one = spec.ambient().one();
                let minus_one = spec.ambient().minus_one();
                for (s1, mu1) in a.scales.iter().zip(&a.heads) {
                    for (s2, lam2) in b.scales.iter().zip(&b.heads) {
                        match scale_relation(s1, &a.perm, s2, &b.perm) {
                            1 => assert_eq!(mu1.mul(mu1), one, "{ct} q={q}"),
                            -1 => {
                                assert_eq!(layout.sizes[0] % 2, 1, "{ct} q={q}");
                                assert_eq!(mu1.mul(mu1), minus_one);
                                assert_eq!(lam2.mul(lam2), minus_one);
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
    }

    fn two_block_types(max_part: usize) -> Vec<CycleType> {
        let mut out = Vec::new();
        for a in 1..=max_part {
            for b in 1..=max_part {
                if a >= b {
                    out.push(t(&[], &[a, b]));
                    out.push(t(&[a, b], &[]));
                }
                out.push(t(&[a], &[b]));
            }
        }
        out
    }
}
