//! Arithmetic in GF(2^m) for 1 <= m <= 16.
//!
//! Elements are coefficient words in the polynomial basis `{1, g, .., g^(m-1)}`
//! where `g` is the residue of `X` modulo the field polynomial. Bit `i` of a
//! word is the coefficient of `g^i`.
//!
//! Powers follow the convention that every power of zero is zero, including
//! `0^0` and negative exponents. This differs from the usual `0^0 = 1` and is
//! what the monomial constructions in [`crate::construct`] rely on.

use std::fmt;
use std::ops::BitXor;

use crate::error::{invalid, Error, Result};

pub const MAX_DEGREE: u32 = 16;

/// An element of GF(2^m), stored as its coefficient word.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wraps a coefficient word without checking it against a field.
    pub const fn from_word(value: u32) -> Self {
        FieldElement(value)
    }

    pub const fn value(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl BitXor for FieldElement {
    type Output = FieldElement;

    fn bitxor(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// GF(2^m) with an explicit irreducible modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldSpec {
    m: u32,
    modulus: u32,
    // Bit j is Tr(g^j); the absolute trace is the parity of `x & trace_word`.
    trace_word: u32,
}

/// A GF(2)-basis of the subfield GF(2^k) inside GF(2^m).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubfieldBasis {
    k: u32,
    elements: Vec<FieldElement>,
}

/// Builds GF(2^m). Without a modulus the irreducible polynomial of degree `m`
/// with the smallest integer encoding is used.
pub fn make_field(m: u32, modulus: Option<u32>) -> Result<FieldSpec> {
    FieldSpec::new(m, modulus)
}

impl FieldSpec {
    pub fn new(m: u32, modulus: Option<u32>) -> Result<Self> {
        if m == 0 || m > MAX_DEGREE {
            return Err(invalid(format!(
                "field degree {m} outside 1..={MAX_DEGREE}"
            )));
        }
        let modulus = match modulus {
            Some(p) => {
                check_modulus(m, p as u64)?;
                p
            }
            None => smallest_irreducible(m),
        };
        let mut field = FieldSpec {
            m,
            modulus,
            trace_word: 0,
        };
        let mut word = 0u32;
        for j in 0..m {
            let t = field.trace(FieldElement(1 << j), 1).expect("1 divides m");
            word |= t.0 << j;
        }
        field.trace_word = word;
        Ok(field)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of field elements, `2^m`.
    pub fn size(&self) -> usize {
        1usize << self.m
    }

    /// Order of the multiplicative group, `2^m - 1`.
    pub fn group_order(&self) -> u64 {
        (1u64 << self.m) - 1
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if (value as u64) < (1u64 << self.m) {
            Ok(FieldElement(value))
        } else {
            Err(invalid(format!(
                "{value} is not an element of GF(2^{})",
                self.m
            )))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..(1u32 << self.m)).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        a ^ b
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(poly_mulmod(a.0 as u64, b.0 as u64, self.modulus as u64) as u32)
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    /// `a^t` with the exponent reduced modulo `2^m - 1`. All powers of zero
    /// are zero, `pow(0, 0)` included.
    pub fn pow(&self, a: FieldElement, t: i64) -> FieldElement {
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let order = self.group_order() as i64;
        let mut e = t.rem_euclid(order) as u64;
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; zero maps to zero.
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        self.pow(a, -1)
    }

    /// `a^(2^i)`.
    pub fn frobenius(&self, a: FieldElement, i: u32) -> FieldElement {
        (0..i).fold(a, |acc, _| self.square(acc))
    }

    /// Relative trace `Tr^m_k(x) = sum_{i < m/k} x^(2^(k i))`. `k = 1` gives
    /// the absolute trace, returned as `0` or `1`.
    pub fn trace(&self, x: FieldElement, k: u32) -> Result<FieldElement> {
        if k == 0 || !self.m.is_multiple_of(k) {
            return Err(invalid(format!("{k} does not divide {}", self.m)));
        }
        let mut acc = FieldElement::ZERO;
        let mut term = x;
        for _ in 0..self.m / k {
            acc = acc ^ term;
            term = self.frobenius(term, k);
        }
        Ok(acc)
    }

    /// Absolute trace `Tr_m(x)` as a bit.
    #[inline]
    pub fn abs_trace(&self, x: FieldElement) -> u8 {
        ((x.0 & self.trace_word).count_ones() & 1) as u8
    }

    /// The word `w` with `Tr_m(c z) = parity(w & z)` for every `z`.
    pub fn trace_mask(&self, c: FieldElement) -> u32 {
        let mut w = 0u32;
        for j in 0..self.m {
            w |= (self.abs_trace(self.mul(c, FieldElement(1 << j))) as u32) << j;
        }
        w
    }

    /// True if `x^(2^k) = x`, i.e. `x` lies in the copy of GF(2^k).
    pub fn is_in_subfield(&self, x: FieldElement, k: u32) -> bool {
        self.m.is_multiple_of(k) && self.frobenius(x, k) == x
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FieldElement) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let mut order = self.group_order();
        for p in prime_factors(self.group_order()) {
            while order.is_multiple_of(p) && self.pow(a, (order / p) as i64) == FieldElement::ONE {
                order /= p;
            }
        }
        Some(order)
    }

    /// Smallest element (by coefficient word) of order `2^m - 1`.
    pub fn primitive_element(&self) -> FieldElement {
        let full = self.group_order();
        self.elements()
            .skip(1)
            .find(|&a| self.order(a) == Some(full))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    /// Polynomial basis `{1, delta, .., delta^(k-1)}` of GF(2^k), where
    /// `delta = g^((2^m - 1)/(2^k - 1))` for the primitive element `g`.
    pub fn subfield_basis(&self, k: u32) -> Result<SubfieldBasis> {
        if k == 0 || !self.m.is_multiple_of(k) {
            return Err(invalid(format!("{k} does not divide {}", self.m)));
        }
        let g = self.primitive_element();
        let cofactor = self.group_order() / ((1u64 << k) - 1);
        let delta = self.pow(g, cofactor as i64);
        let mut elements = Vec::with_capacity(k as usize);
        let mut acc = FieldElement::ONE;
        for _ in 0..k {
            elements.push(acc);
            acc = self.mul(acc, delta);
        }
        let basis = SubfieldBasis { k, elements };
        debug_assert!(basis.validate(self).is_ok());
        Ok(basis)
    }

    /// All elements of GF(2^k), ascending by coefficient word.
    pub fn subfield_elements(&self, k: u32) -> Result<Vec<FieldElement>> {
        if k == 0 || !self.m.is_multiple_of(k) {
            return Err(invalid(format!("{k} does not divide {}", self.m)));
        }
        Ok(self
            .elements()
            .filter(|&x| self.frobenius(x, k) == x)
            .collect())
    }
}

impl SubfieldBasis {
    /// Checks a user-supplied basis: every element in GF(2^k) and rank `k`.
    pub fn new(field: &FieldSpec, k: u32, elements: Vec<FieldElement>) -> Result<Self> {
        let basis = SubfieldBasis { k, elements };
        basis.validate(field)?;
        Ok(basis)
    }

    fn validate(&self, field: &FieldSpec) -> Result<()> {
        if self.k == 0 || !field.m().is_multiple_of(self.k) {
            return Err(invalid(format!("{} does not divide {}", self.k, field.m())));
        }
        if self.elements.len() != self.k as usize {
            return Err(Error::DimensionMismatch {
                expected: self.k as usize,
                got: self.elements.len(),
            });
        }
        if let Some(a) = self
            .elements
            .iter()
            .find(|&&a| !field.is_in_subfield(a, self.k))
        {
            return Err(invalid(format!("{a} is not in GF(2^{})", self.k)));
        }
        let words: Vec<u64> = self.elements.iter().map(|a| a.value() as u64).collect();
        if gf2_rank(&words) != self.k as usize {
            return Err(invalid("basis elements are linearly dependent"));
        }
        Ok(())
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn elements(&self) -> &[FieldElement] {
        &self.elements
    }

    /// `sum_i bit_i(coords) * alpha_i`.
    pub fn combine(&self, coords: u32) -> FieldElement {
        self.elements
            .iter()
            .enumerate()
            .filter(|(i, _)| coords >> i & 1 == 1)
            .fold(FieldElement::ZERO, |acc, (_, &a)| acc ^ a)
    }

    /// Coordinates of a subfield element, `None` outside the span.
    pub fn coordinates(&self, x: FieldElement) -> Option<u32> {
        (0..1u32 << self.k).find(|&c| self.combine(c) == x)
    }
}

// ---------------------------------------------------------------------------
// GF(2)[X] helpers on u64 words.

fn degree(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

fn clmul(a: u64, b: u64) -> u64 {
    let mut acc = 0u64;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    acc
}

fn poly_rem(mut a: u64, p: u64) -> u64 {
    let dp = degree(p);
    while a != 0 && degree(a) >= dp {
        a ^= p << (degree(a) - dp);
    }
    a
}

fn poly_mulmod(a: u64, b: u64, p: u64) -> u64 {
    poly_rem(clmul(a, b), p)
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// Irreducibility over GF(2) by `gcd(p, X^(2^i) - X) = 1` for `i <= deg/2`.
pub fn is_irreducible(p: u64) -> bool {
    let d = degree(p);
    if d < 1 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = 0b10u64;
    let mut h = x;
    for _ in 1..=d / 2 {
        h = poly_mulmod(h, h, p);
        if poly_gcd(p, h ^ x) != 1 {
            return false;
        }
    }
    true
}

fn check_modulus(m: u32, p: u64) -> Result<()> {
    let fail = |reason| {
        Err(Error::InvalidModulus {
            m,
            modulus: p,
            reason,
        })
    };
    if degree(p) != m as i32 {
        return fail("wrong degree");
    }
    if p & 1 == 0 {
        return fail("constant term is zero");
    }
    if !is_irreducible(p) {
        return fail("reducible over GF(2)");
    }
    Ok(())
}

fn smallest_irreducible(m: u32) -> u32 {
    ((1u64 << m) + 1..1u64 << (m + 1))
        .step_by(2)
        .find(|&p| is_irreducible(p))
        .expect("irreducible polynomials exist in every degree") as u32
}

/// Rank over GF(2) of a set of bit vectors.
pub fn gf2_rank(rows: &[u64]) -> usize {
    let mut pivots: Vec<u64> = Vec::new();
    for &r in rows {
        let mut v = r;
        for &p in &pivots {
            v = v.min(v ^ p);
        }
        if v != 0 {
            pivots.push(v);
            pivots.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    pivots.len()
}

// ---------------------------------------------------------------------------
// Integer helpers shared by the exponent bookkeeping.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Inverse of `a` modulo `n` in `0..n`, if it exists.
pub fn mod_inverse(a: i64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let n = n as i128;
    let (mut old_r, mut r) = ((a as i128).rem_euclid(n), n);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r == 1).then(|| old_s.rem_euclid(n) as u64)
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
