//! Exact arithmetic in `Z[zeta]` for `zeta` a primitive `2^K`-th root of unity.
//!
//! An element is stored over the integral basis `1, zeta, .., zeta^(L-1)` with
//! `L = 2^(K-1)`, reduced by `zeta^L = -1`. The representation is unique, so an
//! element is a rational integer `N` exactly when its coefficient vector is
//! `(N, 0, .., 0)`. That is how `|H|^2 = 2^n` gets checked without floats.
//!
//! Coefficients are `i64`. Character sums over `2^n` points have coefficients
//! bounded by `2^n`, and their squared norms by `2^(2n + K - 1)`, which stays in
//! range for `n <= 26` and `K <= 8`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{invalid, Result};

pub const MAX_LEVEL: u32 = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloInt {
    level: u32,
    coeffs: Vec<i64>,
}

/// Length of the coefficient vector at level `K`.
pub const fn basis_len(level: u32) -> usize {
    if level == 0 {
        1
    } else {
        1 << (level - 1)
    }
}

impl CycloInt {
    pub fn zero(level: u32) -> Self {
        assert!(
            (1..=MAX_LEVEL).contains(&level),
            "cyclotomic level {level} out of range"
        );
        CycloInt {
            level,
            coeffs: vec![0; basis_len(level)],
        }
    }

    pub fn from_integer(level: u32, value: i64) -> Self {
        let mut z = Self::zero(level);
        z.coeffs[0] = value;
        z
    }

    pub fn from_coeffs(level: u32, coeffs: Vec<i64>) -> Result<Self> {
        if !(1..=MAX_LEVEL).contains(&level) || coeffs.len() != basis_len(level) {
            return Err(invalid(format!(
                "level {level} needs {} coefficients, got {}",
                basis_len(level),
                coeffs.len()
            )));
        }
        Ok(CycloInt { level, coeffs })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// The rational integer this element equals, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..]
            .iter()
            .all(|&c| c == 0)
            .then_some(self.coeffs[0])
    }

    pub fn try_mul(&self, other: &CycloInt) -> Result<CycloInt> {
        if self.level != other.level {
            return Err(invalid(format!(
                "level mismatch: {} vs {}",
                self.level, other.level
            )));
        }
        let mut out = vec![0; self.coeffs.len()];
        negacyclic_mul(&self.coeffs, &other.coeffs, &mut out);
        Ok(CycloInt {
            level: self.level,
            coeffs: out,
        })
    }

    /// Image under `zeta -> zeta^-1`.
    pub fn conj(&self) -> CycloInt {
        let mut out = vec![0; self.coeffs.len()];
        conj_into(&self.coeffs, &mut out);
        CycloInt {
            level: self.level,
            coeffs: out,
        }
    }

    /// `z * conj(z)`, i.e. `|z|^2`.
    pub fn norm_sq(&self) -> CycloInt {
        self.try_mul(&self.conj()).expect("same level")
    }

    /// Complex value, for cross-checking only.
    pub fn to_complex(&self) -> (f64, f64) {
        let order = (1u64 << self.level) as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (t, &c)| {
                let angle = 2.0 * std::f64::consts::PI * t as f64 / order;
                (re + c as f64 * angle.cos(), im + c as f64 * angle.sin())
            })
    }

    fn check_level(&self, other: &CycloInt) {
        assert_eq!(self.level, other.level, "cyclotomic level mismatch");
    }
}

/// `zeta_(2^K)^t`, with `t` reduced modulo `2^K`.
pub fn unit_root(level: u32, t: i64) -> CycloInt {
    let mut z = CycloInt::zero(level);
    let (index, sign) = unit_root_coord(level, t);
    z.coeffs[index] = sign;
    z
}

/// Basis position and sign of `zeta^t`.
#[inline]
pub fn unit_root_coord(level: u32, t: i64) -> (usize, i64) {
    let half = basis_len(level) as i64;
    let t = t.rem_euclid(2 * half);
    if t < half {
        (t as usize, 1)
    } else {
        ((t - half) as usize, -1)
    }
}

pub fn cyc_mul(a: &CycloInt, b: &CycloInt) -> Result<CycloInt> {
    a.try_mul(b)
}

pub fn cyc_conj(a: &CycloInt) -> CycloInt {
    a.conj()
}

/// Product modulo `X^L + 1` of two coefficient slices of length `L`.
pub fn negacyclic_mul(a: &[i64], b: &[i64], out: &mut [i64]) {
    let len = a.len();
    debug_assert!(b.len() == len && out.len() == len);
    out.iter_mut().for_each(|c| *c = 0);
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let k = i + j;
            if k < len {
                out[k] += x * y;
            } else {
                out[k - len] -= x * y;
            }
        }
    }
}

/// Conjugation on coefficient slices: `zeta^t -> -zeta^(L - t)` for `t > 0`.
pub fn conj_into(a: &[i64], out: &mut [i64]) {
    let len = a.len();
    out[0] = a[0];
    for t in 1..len {
        out[len - t] = -a[t];
    }
}

impl Add for &CycloInt {
    type Output = CycloInt;

    fn add(self, rhs: &CycloInt) -> CycloInt {
        self.check_level(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        CycloInt {
            level: self.level,
            coeffs,
        }
    }
}

impl Sub for &CycloInt {
    type Output = CycloInt;

    fn sub(self, rhs: &CycloInt) -> CycloInt {
        self.check_level(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycloInt {
            level: self.level,
            coeffs,
        }
    }
}

impl Mul for &CycloInt {
    type Output = CycloInt;

    fn mul(self, rhs: &CycloInt) -> CycloInt {
        self.try_mul(rhs).expect("cyclotomic level mismatch")
    }
}

impl Neg for &CycloInt {
    type Output = CycloInt;

    fn neg(self) -> CycloInt {
        CycloInt {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
