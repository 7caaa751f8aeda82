//! Exact arithmetic in prime fields GF(p) and extension fields GF(p^k).
//!
//! Fields are constructed canonically: the modulus of GF(p^k) is the
//! lexicographically least monic irreducible polynomial of degree k over
//! GF(p), coefficients compared low-degree-first. Two constructions of the
//! same field are therefore bit-identical, and "first element found in scan
//! order" is a well-defined deterministic choice everywhere below.

use smallvec::SmallVec;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Coefficient vector of a field element, low degree first, length `k`.
pub type Coeffs = SmallVec<[u64; 6]>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GfError {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("{0} is not a power of the characteristic {1}")]
    QNotPowerOfCharacteristic(u64, u64),
    #[error("order {0} does not divide the multiplicative group order {1}")]
    OrderDoesNotDivide(u64, u64),
    #[error("-1 is not a square in GF({0})")]
    NoSquareRootOfMinusOne(u64),
    #[error("GF({0}) is not a subfield of GF({1})")]
    NoSubfieldRelation(u64, u64),
    #[error("invalid coefficient vector for this field")]
    InvalidCoefficients,
}

/// Canonical description of GF(p^k).
#[derive(Debug)]
pub struct FieldSpec {
    p: u64,
    k: usize,
    /// Monic modulus, low-to-high, length k+1. For k = 1 this is `x`.
    modulus: Vec<u64>,
    /// Optional note that this field plays the role of GF(q^m) for an
    /// ambient q; ignored by equality and arithmetic.
    q_alias: Option<u64>,
}

impl FieldSpec {
    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
    pub fn q_alias(&self) -> Option<u64> {
        self.q_alias
    }
}

/// Shared handle to a [`FieldSpec`]; all element operations go through it.
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldSpec>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}
impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.p.hash(state);
        self.0.k.hash(state);
    }
}

/// Builds the canonical GF(p^k).
///
/// The modulus search enumerates monic degree-k polynomials in ascending
/// low-degree-first lexicographic order and takes the first irreducible one.
pub fn make_field(p: u64, k: usize) -> Result<Field, GfError> {
    if !is_prime(p) {
        return Err(GfError::NonPrimeCharacteristic(p));
    }
    if k == 0 {
        return Err(GfError::DegreeZero);
    }
    let modulus = if k == 1 {
        vec![0, 1]
    } else {
        canonical_irreducible(p, k)
    };
    Ok(Field(Arc::new(FieldSpec {
        p,
        k,
        modulus,
        q_alias: None,
    })))
}

impl Field {
    pub fn spec(&self) -> &FieldSpec {
        &self.0
    }
    pub fn p(&self) -> u64 {
        self.0.p
    }
    pub fn k(&self) -> usize {
        self.0.k
    }
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// Field order p^k.
    pub fn order(&self) -> u64 {
        self.0.p.checked_pow(self.0.k as u32).expect("field order overflows u64")
    }

    /// Same field with an ambient-q annotation attached.
    pub fn with_q_alias(&self, q: u64) -> Field {
        Field(Arc::new(FieldSpec {
            p: self.0.p,
            k: self.0.k,
            modulus: self.0.modulus.clone(),
            q_alias: Some(q),
        }))
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            field: self.clone(),
            coeffs: std::iter::repeat(0).take(self.0.k).collect(),
        }
    }

    pub fn one(&self) -> FieldElem {
        self.from_u64(1)
    }

    pub fn minus_one(&self) -> FieldElem {
        self.from_u64(self.0.p - 1)
    }

    /// Embeds an integer as a constant (prime-subfield) element.
    pub fn from_u64(&self, v: u64) -> FieldElem {
        let mut c: Coeffs = std::iter::repeat(0).take(self.0.k).collect();
        c[0] = v % self.0.p;
        FieldElem {
            field: self.clone(),
            coeffs: c,
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElem, GfError> {
        if coeffs.len() != self.0.k || coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(GfError::InvalidCoefficients);
        }
        Ok(FieldElem {
            field: self.clone(),
            coeffs: coeffs.iter().copied().collect(),
        })
    }

    /// Element with the given scan index (base-p digits, low degree least
    /// significant). Indices run over 0..order().
    pub fn from_index(&self, mut idx: u64) -> FieldElem {
        let mut c: Coeffs = SmallVec::with_capacity(self.0.k);
        for _ in 0..self.0.k {
            c.push(idx % self.0.p);
            idx /= self.0.p;
        }
        debug_assert_eq!(idx, 0);
        FieldElem {
            field: self.clone(),
            coeffs: c,
        }
    }

    /// All elements in canonical scan order (zero first).
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.order()).map(move |i| self.from_index(i))
    }

    /// First element of exact multiplicative order d in scan order.
    pub fn element_of_order(&self, d: u64) -> Result<FieldElem, GfError> {
        let group = self.order() - 1;
        if d == 0 || group % d != 0 {
            return Err(GfError::OrderDoesNotDivide(d, group));
        }
        let primes: Vec<u64> = factorize(d).into_iter().map(|(r, _)| r).collect();
        for idx in 1..self.order() {
            let g = self.from_index(idx);
            if !g.upow(d).is_one() {
                continue;
            }
            if primes.iter().all(|&r| !g.upow(d / r).is_one()) {
                return Ok(g);
            }
        }
        unreachable!("GF({})* is cyclic, an element of each dividing order exists", self.order())
    }

    /// First λ in scan order with λ² = −1. In characteristic 2 this is 1.
    pub fn sqrt_minus_one(&self) -> Result<FieldElem, GfError> {
        if self.0.p == 2 {
            return Ok(self.one());
        }
        if (self.order() - 1) % 4 != 0 {
            return Err(GfError::NoSquareRootOfMinusOne(self.order()));
        }
        let minus_one = self.minus_one();
        for idx in 1..self.order() {
            let g = self.from_index(idx);
            if g.mul(&g) == minus_one {
                return Ok(g);
            }
        }
        unreachable!("4 | q-1 guarantees a square root of -1")
    }

    fn reduce(&self, poly: &[u64]) -> Coeffs {
        let mut r = poly_rem(poly, &self.0.modulus, self.0.p);
        r.resize(self.0.k, 0);
        r.into_iter().take(self.0.k).collect()
    }
}

/// Element of a [`Field`]: a polynomial residue, low-degree-first coefficients.
#[derive(Clone)]
pub struct FieldElem {
    field: Field,
    coeffs: Coeffs,
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}
impl Eq for FieldElem {}

impl std::hash::Hash for FieldElem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.order().hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gf{}:{:?}", self.field.order(), self.coeffs.as_slice())
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// The four basic arithmetic operations, as named by [`checked_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked arithmetic over a pair of elements; rejects mixed fields.
pub fn checked_arith(a: &FieldElem, b: &FieldElem, op: ArithOp) -> Result<FieldElem, GfError> {
    if a.field != b.field {
        return Err(GfError::FieldMismatch);
    }
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Div => a.div(b)?,
    })
}

impl FieldElem {
    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Scan-order index: base-p value of the coefficient vector.
    pub fn index(&self) -> u64 {
        let p = self.field.p();
        self.coeffs.iter().rev().fold(0u64, |acc, &c| acc * p + c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &FieldElem) -> FieldElem {
        assert!(self.field == other.field, "field mismatch");
        let p = self.field.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        FieldElem {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &FieldElem) -> FieldElem {
        assert!(self.field == other.field, "field mismatch");
        let p = self.field.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        FieldElem {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn neg(&self) -> FieldElem {
        let p = self.field.p();
        let coeffs = self.coeffs.iter().map(|&a| (p - a) % p).collect();
        FieldElem {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn mul(&self, other: &FieldElem) -> FieldElem {
        assert!(self.field == other.field, "field mismatch");
        let p = self.field.p();
        let prod = poly_mul(&self.coeffs, &other.coeffs, p);
        FieldElem {
            field: self.field.clone(),
            coeffs: self.field.reduce(&prod),
        }
    }

    pub fn inv(&self) -> Result<FieldElem, GfError> {
        if self.is_zero() {
            return Err(GfError::DivisionByZero);
        }
        let inv = poly_inv_mod(&self.coeffs, self.field.modulus(), self.field.p())
            .expect("nonzero residue is invertible modulo an irreducible polynomial");
        let mut c = inv;
        c.resize(self.field.k(), 0);
        Ok(FieldElem {
            field: self.field.clone(),
            coeffs: c.into_iter().collect(),
        })
    }

    pub fn div(&self, other: &FieldElem) -> Result<FieldElem, GfError> {
        assert!(self.field == other.field, "field mismatch");
        Ok(self.mul(&other.inv()?))
    }

    /// Non-negative exponent power by square-and-multiply.
    pub fn upow(&self, mut e: u64) -> FieldElem {
        let mut base = self.clone();
        let mut acc = self.field.one();
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

    /// Signed exponent power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<FieldElem, GfError> {
        if e >= 0 {
            Ok(self.upow(e as u64))
        } else {
            Ok(self.inv()?.upow(e.unsigned_abs()))
        }
    }

    /// a ↦ a^q for q a power of the characteristic; a field automorphism.
    pub fn frobenius(&self, q: u64) -> Result<FieldElem, GfError> {
        let p = self.field.p();
        let mut m = q;
        while m > 1 && m % p == 0 {
            m /= p;
        }
        if m != 1 || q == 0 {
            return Err(GfError::QNotPowerOfCharacteristic(q, p));
        }
        Ok(self.upow(q))
    }

    /// Exact multiplicative order; panics on zero.
    pub fn order(&self) -> u64 {
        assert!(!self.is_zero(), "zero has no multiplicative order");
        let mut e = self.field.order() - 1;
        for (r, _) in factorize(e) {
            while e % r == 0 && self.upow(e / r).is_one() {
                e /= r;
            }
        }
        e
    }

    /// Embeds into a larger field through the canonical embedding.
    pub fn embed(&self, target: &Field) -> Result<FieldElem, GfError> {
        Embedding::new(self.field.clone(), target.clone())?.apply(self)
    }
}

/// The canonical embedding GF(p^a) → GF(p^b) for a | b: the residue class of
/// x in the source maps to the first root (in scan order) of the source
/// modulus inside the target.
pub struct Embedding {
    src: Field,
    dst: Field,
    root_powers: Vec<FieldElem>,
}

impl Embedding {
    pub fn new(src: Field, dst: Field) -> Result<Embedding, GfError> {
        if src.p() != dst.p() || dst.k() % src.k() != 0 {
            return Err(GfError::NoSubfieldRelation(src.order(), dst.order()));
        }
        let root = (0..dst.order())
            .map(|i| dst.from_index(i))
            .find(|cand| eval_gfp_poly(src.modulus(), cand).is_zero())
            .expect("the source modulus splits in any extension of compatible degree");
        let mut root_powers = Vec::with_capacity(src.k());
        let mut acc = dst.one();
        for _ in 0..src.k() {
            root_powers.push(acc.clone());
            acc = acc.mul(&root);
        }
        Ok(Embedding {
            src,
            dst,
            root_powers,
        })
    }

    pub fn src(&self) -> &Field {
        &self.src
    }
    pub fn dst(&self) -> &Field {
        &self.dst
    }

    pub fn apply(&self, a: &FieldElem) -> Result<FieldElem, GfError> {
        if a.field() != &self.src {
            return Err(GfError::FieldMismatch);
        }
        let mut acc = self.dst.zero();
        for (c, rp) in a.coeffs().iter().zip(&self.root_powers) {
            if *c != 0 {
                acc = acc.add(&self.dst.from_u64(*c).mul(rp));
            }
        }
        Ok(acc)
    }
}

/// Evaluates a GF(p)[x] polynomial at an element of any field of the same
/// characteristic.
fn eval_gfp_poly(poly: &[u64], at: &FieldElem) -> FieldElem {
    let f = at.field();
    let mut acc = f.zero();
    for &c in poly.iter().rev() {
        acc = acc.mul(at).add(&f.from_u64(c));
    }
    acc
}

// ---------------------------------------------------------------------------
// number-theoretic helpers
// ---------------------------------------------------------------------------

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, (prime, multiplicity) pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut m = 0;
            while n % d == 0 {
                n /= d;
                m += 1;
            }
            out.push((d, m));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Writes q = p^s with p prime, if possible.
pub fn prime_power_decompose(q: u64) -> Option<(u64, u32)> {
    let f = factorize(q);
    match f.as_slice() {
        [(p, s)] => Some((*p, *s)),
        _ => None,
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

// ---------------------------------------------------------------------------
// polynomial arithmetic over GF(p), dense low-degree-first vectors
// ---------------------------------------------------------------------------

fn mod_inv_prime(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a ≠ 0 mod p.
    debug_assert!(a % p != 0);
    let mut e = p - 2;
    let mut base = a % p;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn poly_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_deg(v: &[u64]) -> Option<usize> {
    v.iter().rposition(|&c| c != 0)
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + ai * bj) % p;
        }
    }
    out
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect()
}

/// Remainder of a modulo m; m need not be monic (leading coeff inverted).
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let (q, r) = poly_divmod(a, m, p);
    let _ = q;
    r
}

fn poly_divmod(a: &[u64], m: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let dm = poly_deg(m).expect("division by zero polynomial");
    let lead_inv = mod_inv_prime(m[dm], p);
    let mut r: Vec<u64> = a.to_vec();
    poly_trim(&mut r);
    let mut q = vec![0u64; r.len().saturating_sub(dm) + 1];
    while let Some(dr) = poly_deg(&r) {
        if dr < dm {
            break;
        }
        let coef = r[dr] * lead_inv % p;
        let shift = dr - dm;
        q[shift] = coef;
        for (i, &mi) in m.iter().enumerate() {
            if mi != 0 {
                let idx = i + shift;
                r[idx] = (r[idx] + p - coef * mi % p) % p;
            }
        }
    }
    poly_trim(&mut r);
    poly_trim(&mut q);
    (q, r)
}

/// Inverse of a modulo m via the extended Euclidean algorithm; None when
/// gcd(a, m) is not a unit.
fn poly_inv_mod(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
    let mut r0: Vec<u64> = m.to_vec();
    let mut r1: Vec<u64> = poly_rem(a, m, p);
    let mut t0: Vec<u64> = vec![];
    let mut t1: Vec<u64> = vec![1];
    poly_trim(&mut r0);
    while poly_deg(&r1).is_some() {
        let (q, r2) = poly_divmod(&r0, &r1, p);
        let t2 = poly_sub(&t0, &poly_mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
        poly_trim(&mut r1);
        poly_trim(&mut t1);
    }
    let d = poly_deg(&r0)?;
    if d != 0 {
        return None;
    }
    let scale = mod_inv_prime(r0[0], p);
    let mut out = t0.iter().map(|&c| c * scale % p).collect::<Vec<_>>();
    out = poly_rem(&out, m, p);
    Some(out)
}

/// x^e modulo m over GF(p).
fn poly_x_powmod(e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = poly_rem(&[0, 1], m, p);
    let mut exp = e;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &base, p), m, p);
        }
        exp >>= 1;
        if exp > 0 {
            base = poly_rem(&poly_mul(&base, &base, p), m, p);
        }
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    while poly_deg(&r1).is_some() {
        let r2 = poly_rem(&r0, &r1, p);
        r0 = r1;
        r1 = r2;
    }
    r0
}

/// Rabin irreducibility test for a monic polynomial of degree k over GF(p).
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let k = poly_deg(f).unwrap();
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let pk = p.checked_pow(k as u32).expect("p^k must fit in u64");
    // x^(p^k) ≡ x (mod f)
    let xpk = poly_x_powmod(pk, f, p);
    let x = poly_rem(&[0, 1], f, p);
    if xpk != x {
        return false;
    }
    // gcd(x^(p^(k/r)) − x, f) = 1 for every prime r | k
    for (r, _) in factorize(k as u64) {
        let e = p.pow((k as u64 / r) as u32);
        let g = poly_sub(&poly_x_powmod(e, f, p), &x, p);
        let gc = poly_gcd(&g, f, p);
        if poly_deg(&gc) != Some(0) {
            return false;
        }
    }
    true
}

/// First monic irreducible of degree k over GF(p), candidates ordered by
/// low-degree-first lexicographic comparison of the constant..x^{k-1}
/// coefficients.
fn canonical_irreducible(p: u64, k: usize) -> Vec<u64> {
    let total = p.checked_pow(k as u32).expect("p^k must fit in u64");
    for t in 0..total {
        // digit c_0 is the most significant in the enumeration order
        let mut f = vec![0u64; k + 1];
        let mut rest = t;
        for i in (0..k).rev() {
            f[i] = rest % p;
            rest /= p;
        }
        f[k] = 1;
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}
