//! The hyperoctahedral group Sl_n of signed permutations: cycle types,
//! standard representatives, centralizers.
//!
//! A signed permutation φ of {±1,…,±n} satisfies φ(−i) = −φ(i), so it is
//! stored by its images on 1..n alone. This group is the Weyl group of type
//! C_n; conjugacy classes are classified by signed cycle types.

use std::collections::HashSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BweylError {
    #[error("ranks differ: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("rank {0} too large for exhaustive enumeration (max {1})")]
    RankTooLargeForExhaustive(usize, usize),
    #[error("cycle type parts must be positive and sum to the rank")]
    InvalidType,
    #[error("cannot parse cycle type string {0:?}")]
    ParseType(String),
}

/// Largest rank for which whole-group enumeration (2^n n! elements) is allowed.
pub const MAX_EXHAUSTIVE_RANK: usize = 6;

/// A signed permutation; `img[i-1]` is φ(i), a value in ±1..±n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    img: Vec<i32>,
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPerm{:?}", self.img)
    }
}

impl fmt::Display for SignedPerm {
    /// Cycle notation on signed points, e.g. `(1,2,-1,-2)` or `()` for the
    /// identity. Each cycle starts at its smallest positive point.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rank() as i32;
        let mut seen = HashSet::new();
        let mut out = String::new();
        for start in 1..=n {
            if seen.contains(&start) {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            loop {
                cyc.push(x);
                seen.insert(x);
                seen.insert(-x);
                x = self.apply(x);
                if x == start || x == -start {
                    break;
                }
            }
            if x == -start {
                // the negative half of the cycle is traversed explicitly
                let mut y = x;
                while y != start {
                    cyc.push(y);
                    y = self.apply(y);
                }
            }
            if cyc.len() > 1 || cyc[0] != self.apply(cyc[0]) {
                out.push('(');
                out.push_str(
                    &cyc.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
                );
                out.push(')');
            }
        }
        if out.is_empty() {
            out.push_str("()");
        }
        f.write_str(&out)
    }
}

impl SignedPerm {
    pub fn identity(n: usize) -> SignedPerm {
        SignedPerm {
            img: (1..=n as i32).collect(),
        }
    }

    /// Builds from images of 1..n; validates the signed-permutation property.
    pub fn from_images(img: Vec<i32>) -> Result<SignedPerm, BweylError> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &v in &img {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a - 1] {
                return Err(BweylError::InvalidType);
            }
            seen[a - 1] = true;
        }
        Ok(SignedPerm { img })
    }

    pub fn rank(&self) -> usize {
        self.img.len()
    }

    /// φ(i) for signed i; φ(−i) = −φ(i) by construction.
    pub fn apply(&self, i: i32) -> i32 {
        debug_assert!(i != 0 && i.unsigned_abs() as usize <= self.img.len());
        if i > 0 {
            self.img[(i - 1) as usize]
        } else {
            -self.img[(-i - 1) as usize]
        }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| v == i as i32 + 1)
    }

    /// (a∘b)(i) = a(b(i)).
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        SignedPerm {
            img: (1..=self.rank() as i32).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn checked_compose(&self, other: &SignedPerm) -> Result<SignedPerm, BweylError> {
        if self.rank() != other.rank() {
            return Err(BweylError::RankMismatch(self.rank(), other.rank()));
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.rank();
        let mut img = vec![0i32; n];
        for i in 1..=n as i32 {
            let v = self.apply(i);
            if v > 0 {
                img[(v - 1) as usize] = i;
            } else {
                img[(-v - 1) as usize] = -i;
            }
        }
        SignedPerm { img }
    }

    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut e = 1;
        while !acc.is_identity() {
            acc = acc.compose(self);
            e += 1;
        }
        e
    }

    pub fn conjugate_by(&self, g: &SignedPerm) -> SignedPerm {
        g.inverse().compose(self).compose(g)
    }

    /// Signed cycle type: lengths of negative and positive cycles.
    pub fn cycle_type(&self) -> CycleType {
        let n = self.rank() as i32;
        let mut seen = vec![false; self.rank()];
        let mut neg = Vec::new();
        let mut pos = Vec::new();
        for start in 1..=n {
            if seen[(start - 1) as usize] {
                continue;
            }
            let mut len = 0usize;
            let mut x = start;
            loop {
                seen[(x.abs() - 1) as usize] = true;
                len += 1;
                x = self.apply(x);
                if x.abs() == start {
                    break;
                }
            }
            if x == -start {
                neg.push(len);
            } else {
                pos.push(len);
            }
        }
        CycleType::new(neg, pos).expect("a traced decomposition is always valid")
    }
}

/// A signed cycle type: multisets of negative and positive cycle lengths,
/// each stored descending; negative parts come first in displays and block
/// layouts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CycleType {
    neg: Vec<usize>,
    pos: Vec<usize>,
}

impl CycleType {
    pub fn new(mut neg: Vec<usize>, mut pos: Vec<usize>) -> Result<CycleType, BweylError> {
        if neg.iter().chain(pos.iter()).any(|&x| x == 0) {
            return Err(BweylError::InvalidType);
        }
        neg.sort_unstable_by(|a, b| b.cmp(a));
        pos.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { neg, pos })
    }

    pub fn neg_parts(&self) -> &[usize] {
        &self.neg
    }
    pub fn pos_parts(&self) -> &[usize] {
        &self.pos
    }

    /// Rank this type belongs to: the sum of all parts.
    pub fn rank(&self) -> usize {
        self.neg.iter().chain(self.pos.iter()).sum()
    }

    /// Number of blocks m = k + (positive count).
    pub fn num_blocks(&self) -> usize {
        self.neg.len() + self.pos.len()
    }

    /// Number of negative blocks k.
    pub fn num_negative(&self) -> usize {
        self.neg.len()
    }

    /// Block sizes in layout order: negative parts first, each descending.
    pub fn block_sizes(&self) -> Vec<usize> {
        self.neg.iter().chain(self.pos.iter()).copied().collect()
    }

    /// Standard representative ϖ_1…ϖ_k ω_{k+1}…ω_m on consecutive blocks.
    pub fn standard_rep(&self) -> SignedPerm {
        let layout = BlockLayout::from_type(self);
        let mut w = SignedPerm::identity(self.rank());
        for j in 0..layout.num_blocks() {
            let g = if j < layout.neg_count {
                layout.varpi(j)
            } else {
                layout.omega(j)
            };
            w = w.compose(&g);
        }
        w
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &p in &self.neg {
            write!(f, "({p}-)")?;
        }
        for &p in &self.pos {
            write!(f, "({p})")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for CycleType {
    type Err = BweylError;

    /// Grammar: a sequence of "(k)" or "(k-)" tokens, e.g. "(2-)(1)".
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || BweylError::ParseType(s.to_string());
        let mut neg = Vec::new();
        let mut pos = Vec::new();
        let mut rest = s.trim();
        if rest.is_empty() {
            return Err(bad());
        }
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(bad());
            }
            let close = rest.find(')').ok_or_else(bad)?;
            let token = &rest[1..close];
            let (digits, negative) = match token.strip_suffix('-') {
                Some(d) => (d, true),
                None => (token, false),
            };
            let v: usize = digits.parse().map_err(|_| bad())?;
            if v == 0 {
                return Err(bad());
            }
            if negative {
                neg.push(v);
            } else {
                pos.push(v);
            }
            rest = &rest[close + 1..];
        }
        CycleType::new(neg, pos)
    }
}

/// Index blocks of a cycle type: consecutive runs starting at 1, negative
/// blocks first. The j-th block (0-based) covers starts[j]..starts[j]+sizes[j].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockLayout {
    pub sizes: Vec<usize>,
    pub neg_count: usize,
    starts: Vec<usize>,
}

impl BlockLayout {
    pub fn from_type(t: &CycleType) -> BlockLayout {
        let sizes = t.block_sizes();
        let mut starts = Vec::with_capacity(sizes.len());
        let mut acc = 1usize;
        for &s in &sizes {
            starts.push(acc);
            acc += s;
        }
        BlockLayout {
            sizes,
            neg_count: t.num_negative(),
            starts,
        }
    }

    pub fn rank(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn num_blocks(&self) -> usize {
        self.sizes.len()
    }

    /// First index (1-based) of block j.
    pub fn start(&self, j: usize) -> usize {
        self.starts[j]
    }

    pub fn is_negative(&self, j: usize) -> bool {
        j < self.neg_count
    }

    /// ω_j: the positive cycle (b,…,b+s−1)(−b,…,−(b+s−1)).
    pub fn omega(&self, j: usize) -> SignedPerm {
        let mut img: Vec<i32> = (1..=self.rank() as i32).collect();
        let b = self.starts[j];
        let s = self.sizes[j];
        for t in 0..s {
            let from = (b + t) as i32;
            let to = (b + (t + 1) % s) as i32;
            img[(from - 1) as usize] = to;
        }
        SignedPerm { img }
    }

    /// ϖ_j: the negative cycle (b,…,b+s−1,−b,…,−(b+s−1)).
    pub fn varpi(&self, j: usize) -> SignedPerm {
        let mut img: Vec<i32> = (1..=self.rank() as i32).collect();
        let b = self.starts[j];
        let s = self.sizes[j];
        for t in 0..s {
            let from = (b + t) as i32;
            let to = if t + 1 == s { -(b as i32) } else { (b + t + 1) as i32 };
            img[(from - 1) as usize] = to;
        }
        SignedPerm { img }
    }

    /// τ_j: all sign flips (b,−b)…(b+s−1,−(b+s−1)) in block j.
    pub fn tau(&self, j: usize) -> SignedPerm {
        let mut img: Vec<i32> = (1..=self.rank() as i32).collect();
        let b = self.starts[j];
        let s = self.sizes[j];
        for t in 0..s {
            img[b + t - 1] = -((b + t) as i32);
        }
        SignedPerm { img }
    }

    /// Entrywise swap of two equal-size blocks.
    pub fn swap(&self, j1: usize, j2: usize) -> SignedPerm {
        assert_eq!(self.sizes[j1], self.sizes[j2], "swap needs equal blocks");
        let mut img: Vec<i32> = (1..=self.rank() as i32).collect();
        let (b1, b2) = (self.starts[j1], self.starts[j2]);
        for t in 0..self.sizes[j1] {
            img[b1 + t - 1] = (b2 + t) as i32;
            img[b2 + t - 1] = (b1 + t) as i32;
        }
        SignedPerm { img }
    }
}

/// Coxeter generators [φ_1,…,φ_{n−1}, τ] of Sl_n.
pub fn coxeter_generators(n: usize) -> Vec<SignedPerm> {
    assert!(n >= 1);
    let mut gens = Vec::with_capacity(n);
    for i in 1..n {
        let mut img: Vec<i32> = (1..=n as i32).collect();
        img[i - 1] = i as i32 + 1;
        img[i] = i as i32;
        gens.push(SignedPerm { img });
    }
    let mut img: Vec<i32> = (1..=n as i32).collect();
    img[n - 1] = -(n as i32);
    gens.push(SignedPerm { img });
    gens
}

/// Every element of Sl_n, sorted by canonical key. 2^n · n! elements.
pub fn enumerate_group(n: usize) -> Result<Vec<SignedPerm>, BweylError> {
    if n > MAX_EXHAUSTIVE_RANK {
        return Err(BweylError::RankTooLargeForExhaustive(n, MAX_EXHAUSTIVE_RANK));
    }
    let mut perms: Vec<Vec<i32>> = Vec::new();
    let mut cur: Vec<i32> = (1..=n as i32).collect();
    loop {
        perms.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    let mut out = Vec::with_capacity(perms.len() << n);
    for base in &perms {
        for mask in 0u32..(1 << n) {
            let img = base
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                .collect();
            out.push(SignedPerm { img });
        }
    }
    out.sort();
    Ok(out)
}

/// Full element list of the centralizer of w in Sl_n, canonically sorted.
pub fn centralizer(w: &SignedPerm) -> Result<Vec<SignedPerm>, BweylError> {
    let all = enumerate_group(w.rank())?;
    Ok(all
        .into_iter()
        .filter(|x| x.compose(w) == w.compose(x))
        .collect())
}

/// Closure of a generating set inside Sl_n (breadth-first, deterministic).
pub fn closure(n: usize, gens: &[SignedPerm]) -> Vec<SignedPerm> {
    let mut seen: HashSet<SignedPerm> = HashSet::new();
    let id = SignedPerm::identity(n);
    let mut frontier = vec![id.clone()];
    seen.insert(id);
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    let mut out: Vec<SignedPerm> = seen.into_iter().collect();
    out.sort();
    out
}

/// All signed cycle types of rank n, ordered by (block count, negative count,
/// parts). Their number equals the number of conjugacy classes of Sl_n.
pub fn enumerate_types(n: usize) -> Vec<CycleType> {
    fn partitions(n: usize) -> Vec<Vec<usize>> {
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if n == 0 {
                out.push(prefix.clone());
                return;
            }
            for part in (1..=n.min(max)).rev() {
                prefix.push(part);
                rec(n - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
    let mut out = Vec::new();
    for nn in 0..=n {
        let negs = partitions(nn);
        let poss = partitions(n - nn);
        for ng in &negs {
            for ps in &poss {
                out.push(CycleType::new(ng.clone(), ps.clone()).unwrap());
            }
        }
    }
    out.sort_by(|a, b| {
        (a.num_blocks(), a.num_negative(), &a.neg, &a.pos)
            .cmp(&(b.num_blocks(), b.num_negative(), &b.neg, &b.pos))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coxeter_relations() {
        let g1 = coxeter_generators(1);
        assert_eq!(g1.len(), 1);
        assert_eq!(g1[0], SignedPerm::from_images(vec![-1]).unwrap());

        let g2 = coxeter_generators(2);
        let (phi1, tau) = (&g2[0], &g2[1]);
        assert!(phi1.compose(phi1).is_identity());
        assert!(tau.compose(tau).is_identity());
        assert_eq!(phi1.compose(tau).order(), 4);

        let g3 = coxeter_generators(3);
        let (phi1, tau) = (&g3[0], &g3[2]);
        assert_eq!(tau.compose(phi1), phi1.compose(tau));
    }

    #[test]
    fn group_orders_by_closure() {
        for n in 1..=5usize {
            let got = closure(n, &coxeter_generators(n)).len();
            let expect = (1usize << n) * (1..=n).product::<usize>();
            assert_eq!(got, expect, "rank {n}");
        }
    }

    #[test]
    fn compose_and_inverse_axioms() {
        let els = enumerate_group(3).unwrap();
        let id = SignedPerm::identity(3);
        for a in &els {
            assert_eq!(a.compose(&a.inverse()), id);
            assert_eq!(id.compose(a), *a);
        }
        assert_eq!(
            SignedPerm::identity(2).checked_compose(&id).unwrap_err(),
            BweylError::RankMismatch(2, 3)
        );
    }

    #[test]
    fn cycle_type_examples() {
        let id3 = SignedPerm::identity(3);
        assert_eq!(id3.cycle_type(), CycleType::new(vec![], vec![1, 1, 1]).unwrap());

        // the negative 2-cycle (1,2,-1,-2)
        let w = SignedPerm::from_images(vec![2, -1]).unwrap();
        assert_eq!(w.cycle_type(), CycleType::new(vec![2], vec![]).unwrap());

        // standard representative of (2-)(1) in rank 3 traces back to its type
        let t = CycleType::new(vec![2], vec![1]).unwrap();
        assert_eq!(t.standard_rep().cycle_type(), t);
    }

    #[test]
    fn standard_rep_round_trip_all_types() {
        for n in 1..=5usize {
            for t in enumerate_types(n) {
                assert_eq!(t.standard_rep().cycle_type(), t, "type {t}");
            }
        }
        let allpos = CycleType::new(vec![], vec![1, 1, 1]).unwrap();
        assert!(allpos.standard_rep().is_identity());
        // single negative block: the full negative cycle
        let t = CycleType::new(vec![3], vec![]).unwrap();
        assert_eq!(
            t.standard_rep(),
            SignedPerm::from_images(vec![2, 3, -1]).unwrap()
        );
        // (1-)(1) in rank 2 is the sign flip on index 1
        let t = CycleType::new(vec![1], vec![1]).unwrap();
        assert_eq!(t.standard_rep(), SignedPerm::from_images(vec![-1, 2]).unwrap());
    }

    #[test]
    fn type_string_grammar() {
        let t: CycleType = "(2-)(1)".parse().unwrap();
        assert_eq!(t, CycleType::new(vec![2], vec![1]).unwrap());
        assert_eq!(t.to_string(), "(2-)(1)");
        let t: CycleType = "(1)(2-)".parse().unwrap();
        assert_eq!(t.to_string(), "(2-)(1)");
        assert!("(0)".parse::<CycleType>().is_err());
        assert!("".parse::<CycleType>().is_err());
        assert!("(2".parse::<CycleType>().is_err());
        assert!("2-".parse::<CycleType>().is_err());
    }

    #[test]
    fn enumerate_type_counts() {
        assert_eq!(enumerate_types(1).len(), 2);
        assert_eq!(enumerate_types(2).len(), 5);
        assert_eq!(enumerate_types(3).len(), 10);
        let shown: Vec<String> = enumerate_types(2).iter().map(|t| t.to_string()).collect();
        assert_eq!(shown, ["(2)", "(2-)", "(1)(1)", "(1-)(1)", "(1-)(1-)"]);
    }

    #[test]
    fn types_classify_conjugacy_classes() {
        // class bijection + conjugation invariance, exhaustive at rank ≤ 3
        for n in 1..=3usize {
            let all = enumerate_group(n).unwrap();
            for a in &all {
                for g in &all {
                    assert_eq!(a.conjugate_by(g).cycle_type(), a.cycle_type());
                }
            }
            let mut classes: HashSet<Vec<SignedPerm>> = HashSet::new();
            for a in &all {
                let mut orbit: Vec<SignedPerm> =
                    all.iter().map(|g| a.conjugate_by(g)).collect();
                orbit.sort();
                orbit.dedup();
                classes.insert(orbit);
            }
            assert_eq!(classes.len(), enumerate_types(n).len(), "rank {n}");
        }
    }

    #[test]
    fn centralizer_orders() {
        // centralizer of the identity is the whole group
        let c = centralizer(&SignedPerm::identity(2)).unwrap();
        assert_eq!(c.len(), 8);

        // (n1-)(n2-) with distinct parts: order 2n1 · 2n2, generated by the ϖ's
        let t = CycleType::new(vec![2, 1], vec![]).unwrap();
        let w = t.standard_rep();
        let c = centralizer(&w).unwrap();
        assert_eq!(c.len(), 4 * 2);
        let layout = BlockLayout::from_type(&t);
        let gen_closure = closure(3, &[layout.varpi(0), layout.varpi(1)]);
        assert_eq!(gen_closure, c);

        // equal parts (1-)(1-): order 8
        let t = CycleType::new(vec![1, 1], vec![]).unwrap();
        let c = centralizer(&t.standard_rep()).unwrap();
        assert_eq!(c.len(), 8);

        assert_eq!(
            centralizer(&SignedPerm::identity(7)).unwrap_err(),
            BweylError::RankTooLargeForExhaustive(7, 6)
        );
    }

    #[test]
    fn orbit_stabilizer_for_all_types() {
        for n in 1..=4usize {
            let all = enumerate_group(n).unwrap();
            for t in enumerate_types(n) {
                let w = t.standard_rep();
                let c = centralizer(&w).unwrap().len();
                let mut orbit: Vec<SignedPerm> = all.iter().map(|g| w.conjugate_by(g)).collect();
                orbit.sort();
                orbit.dedup();
                assert_eq!(c * orbit.len(), all.len(), "type {t}");
            }
        }
    }

    #[test]
    fn varpi_power_is_tau() {
        for t in enumerate_types(4) {
            let layout = BlockLayout::from_type(&t);
            for j in 0..layout.num_blocks() {
                let mut acc = SignedPerm::identity(layout.rank());
                for _ in 0..layout.sizes[j] {
                    acc = acc.compose(&layout.varpi(j));
                }
                assert_eq!(acc, layout.tau(j));
            }
        }
    }

    #[test]
    fn block_elements_lie_in_the_centralizer() {
        for n in 1..=4usize {
            for t in enumerate_types(n) {
                let w = t.standard_rep();
                let c = centralizer(&w).unwrap();
                let in_c = |x: &SignedPerm| c.binary_search(x).is_ok();
                let layout = BlockLayout::from_type(&t);
                for j in 0..layout.num_blocks() {
                    if layout.is_negative(j) {
                        assert!(in_c(&layout.varpi(j)));
                    } else {
                        assert!(in_c(&layout.omega(j)));
                        assert!(in_c(&layout.tau(j)));
                    }
                }
            }
        }
    }
}
