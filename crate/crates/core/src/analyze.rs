//! Searches and checks around the constructions.
//!
//! The exponent condition on triples is
//! `(b0 + b1 + b2)^(-e) = b0^(-e) + b1^(-e) + b2^(-e)`, where `0` raised to any
//! power is `0`. A witness is a triple of pairwise distinct elements; since both
//! sides scale by `c^(-e)`, the search fixes `b0 = 1` and walks `(b1, b2)` with
//! `b1 < b2` lexicographically, `b1 = 0` allowed. Triples `{0, a, b}` hold
//! exactly when `{a, b, a + b}` does, so admitting zero never changes a
//! verdict; the `b0 = 0` sweep runs anyway and is only reached when the
//! normalized search fails.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::boolfun::{bent_dual, PairingSpec, TruthTable};
use crate::construct::ExponentPair;
use crate::error::{invalid, precondition, Error, Result};
use crate::gf::{make_field, FieldElement, FieldSpec};
use crate::groupfun::GroupFunction;
use crate::spread::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessTriple {
    pub beta: [FieldElement; 3],
    pub e: i64,
}

/// Whether some triple satisfies the exponent condition for `e`, with the
/// lexicographically first witness.
pub fn triple_condition(field: &FieldSpec, e: i64) -> (bool, Option<WitnessTriple>) {
    let size = field.size() as u32;
    let p: Vec<u32> = field.elements().map(|x| field.pow(x, -e).value()).collect();
    let holds = |a: u32, b: u32, c: u32| {
        p[(a ^ b ^ c) as usize] == p[a as usize] ^ p[b as usize] ^ p[c as usize]
    };
    let wrap = |a: u32, b: u32, c: u32| WitnessTriple {
        beta: [
            FieldElement::from_word(a),
            FieldElement::from_word(b),
            FieldElement::from_word(c),
        ],
        e,
    };

    let normalized = (0..size)
        .into_par_iter()
        .filter(|&b1| b1 != 1)
        .find_map_first(|b1| {
            (b1 + 1..size)
                .filter(|&b2| b2 != 1)
                .find(|&b2| holds(1, b1, b2))
                .map(|b2| wrap(1, b1, b2))
        });
    let found = normalized.or_else(|| {
        (1..size).into_par_iter().find_map_first(|b1| {
            (b1 + 1..size)
                .find(|&b2| holds(0, b1, b2))
                .map(|b2| wrap(0, b1, b2))
        })
    });
    (found.is_some(), found)
}

/// Least members of the cyclotomic classes of 2 modulo `2^n - 1`, ascending,
/// including the classes of 0 and 1.
pub fn coset_leaders(n: u32) -> Vec<u64> {
    let order = (1u64 << n) - 1;
    let mut seen = vec![false; order as usize];
    let mut leaders = Vec::new();
    for e in 0..order {
        if seen[e as usize] {
            continue;
        }
        leaders.push(e);
        let mut x = e;
        loop {
            seen[x as usize] = true;
            x = (x * 2) % order;
            if x == e {
                break;
            }
        }
    }
    leaders
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetClassification {
    pub n: u32,
    pub fulfilled: BTreeSet<u64>,
    pub not_fulfilled: BTreeSet<u64>,
}

/// Classify every class leader except those of 0 and 1 by `triple_condition`
/// over the default field of degree `n`.
pub fn classify_exponents(n: u32) -> Result<CosetClassification> {
    if !(2..=16).contains(&n) {
        return Err(invalid(format!("degree {n} out of range")));
    }
    let field = make_field(n, None)?;
    let leaders: Vec<u64> = coset_leaders(n).into_iter().filter(|&e| e > 1).collect();
    let verdicts: Vec<(u64, bool)> = leaders
        .par_iter()
        .map(|&e| (e, triple_condition(&field, e as i64).0))
        .collect();
    let mut out = CosetClassification {
        n,
        fulfilled: BTreeSet::new(),
        not_fulfilled: BTreeSet::new(),
    };
    for (e, ok) in verdicts {
        if ok {
            out.fulfilled.insert(e);
        } else {
            out.not_fulfilled.insert(e);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumKind {
    /// Sum of `(-1)^(Tr(ux) + Tr(v s x^(2^k+1)))`.
    Omega,
    /// Sum of `(-1)^(Tr(u s x^-d) + Tr(vx))`.
    Upsilon,
}

/// Precomputed tables for the double character sums over
/// `{s : Tr^m_k(s) = gamma} x GF(2^m)^*`.
pub struct CharacterSums<'a> {
    field: &'a FieldSpec,
    pair: ExponentPair,
    fibers: Vec<Vec<FieldElement>>,
    pow_neg_e: Vec<FieldElement>,
    pow_neg_d: Vec<FieldElement>,
}

impl<'a> CharacterSums<'a> {
    pub fn new(field: &'a FieldSpec, k: u32) -> Result<Self> {
        let pair = ExponentPair::new(field.m(), k)?;
        let mut fibers = vec![Vec::new(); field.size()];
        for s in field.elements() {
            fibers[field.trace(s, k)?.value() as usize].push(s);
        }
        let pow_neg_e = field
            .elements()
            .map(|x| field.pow(x, pair.neg_e()))
            .collect();
        let pow_neg_d = field
            .elements()
            .map(|x| field.pow(x, -(pair.d() as i64)))
            .collect();
        Ok(CharacterSums {
            field,
            pair,
            fibers,
            pow_neg_e,
            pow_neg_d,
        })
    }

    pub fn pair(&self) -> &ExponentPair {
        &self.pair
    }

    fn fiber(&self, gamma: FieldElement) -> Result<&[FieldElement]> {
        if !self.field.is_in_subfield(gamma, self.pair.k()) {
            return Err(invalid(format!(
                "{gamma} is not in GF(2^{})",
                self.pair.k()
            )));
        }
        Ok(&self.fibers[gamma.value() as usize])
    }

    /// The sum evaluated term by term.
    pub fn brute(
        &self,
        kind: SumKind,
        u: FieldElement,
        v: FieldElement,
        gamma: FieldElement,
    ) -> Result<i64> {
        let f = self.field;
        let mut total = 0i64;
        for &s in self.fiber(gamma)? {
            for x in f.elements().skip(1) {
                let xi = x.value() as usize;
                let bit = match kind {
                    SumKind::Omega => {
                        f.abs_trace(f.mul(u, x))
                            ^ f.abs_trace(f.mul(f.mul(v, s), self.pow_neg_e[xi]))
                    }
                    SumKind::Upsilon => {
                        f.abs_trace(f.mul(f.mul(u, s), self.pow_neg_d[xi]))
                            ^ f.abs_trace(f.mul(v, x))
                    }
                };
                total += 1 - 2 * bit as i64;
            }
        }
        Ok(total)
    }

    /// `2^m - 2^(m-k)` on the distinguished `gamma`, `-2^(m-k)` elsewhere.
    pub fn closed(
        &self,
        kind: SumKind,
        u: FieldElement,
        v: FieldElement,
        gamma: FieldElement,
    ) -> Result<i64> {
        let f = self.field;
        let (m, k) = (f.m(), self.pair.k());
        self.fiber(gamma)?;
        let hit = match kind {
            SumKind::Omega => {
                if v.is_zero() {
                    return Err(precondition("the Omega sum needs v != 0"));
                }
                let nu = f.trace(f.mul(u, f.pow(v, self.pair.d() as i64)), k)?;
                gamma == f.square(nu)
            }
            SumKind::Upsilon => {
                if u.is_zero() {
                    return Err(precondition("the Upsilon sum needs u != 0"));
                }
                f.square(gamma) == f.trace(f.mul(v, f.pow(u, self.pair.e())), k)?
            }
        };
        Ok(if hit {
            (1i64 << m) - (1i64 << (m - k))
        } else {
            -(1i64 << (m - k))
        })
    }
}

/// `(brute force, closed form)` for one sum.
pub fn omega_upsilon(
    field: &FieldSpec,
    k: u32,
    u: FieldElement,
    v: FieldElement,
    gamma: FieldElement,
    kind: SumKind,
) -> Result<(i64, i64)> {
    let sums = CharacterSums::new(field, k)?;
    let closed = sums.closed(kind, u, v, gamma)?;
    Ok((sums.brute(kind, u, v, gamma)?, closed))
}

/// Something with a value at every point of `V_n`.
pub trait PointFunction {
    fn n(&self) -> u32;
    fn point(&self, x: usize) -> u32;
}

impl PointFunction for TruthTable {
    fn n(&self) -> u32 {
        TruthTable::n(self)
    }

    fn point(&self, x: usize) -> u32 {
        self.get(x) as u32
    }
}

impl PointFunction for GroupFunction {
    fn n(&self) -> u32 {
        GroupFunction::n(self)
    }

    fn point(&self, x: usize) -> u32 {
        self.value(x)
    }
}

/// Whether `f` is constant on each of `cells`.
pub fn constant_on_cells<F: PointFunction + ?Sized>(
    f: &F,
    n: u32,
    cells: &[Vec<usize>],
) -> Result<bool> {
    if f.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n as usize,
            got: f.n() as usize,
        });
    }
    Ok(cells.iter().all(|cell| match cell.split_first() {
        Some((&first, rest)) => {
            let v = f.point(first);
            rest.iter().all(|&x| f.point(x) == v)
        }
        None => true,
    }))
}

pub fn constant_on<F: PointFunction + ?Sized>(f: &F, p: &Partition) -> Result<bool> {
    constant_on_cells(f, p.n(), p.cells())
}

fn dual_of(f: &TruthTable, p: &PairingSpec, index: usize) -> Result<TruthTable> {
    bent_dual(f, p)?.ok_or(Error::NotBent { index })
}

/// Whether `(b0 + b1 + b2)* = b0* + b1* + b2*`. A non-bent input is an error
/// naming it; index 3 stands for the sum.
pub fn triple_dual_check(
    b0: &TruthTable,
    b1: &TruthTable,
    b2: &TruthTable,
    p: &PairingSpec,
) -> Result<bool> {
    let d0 = dual_of(b0, p, 0)?;
    let d1 = dual_of(b1, p, 1)?;
    let d2 = dual_of(b2, p, 2)?;
    let sum = dual_of(&b0.xor(b1).xor(b2), p, 3)?;
    Ok(sum == d0.xor(&d1).xor(&d2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VectorialDualReport {
    /// Every nonzero combination of the component duals is bent.
    pub dual_bent: bool,
    /// The dual of every combination is the same combination of duals.
    pub additive: bool,
}

fn combination(components: &[TruthTable], mask: usize) -> TruthTable {
    components
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .fold(TruthTable::zero(components[0].n()), |acc, (_, c)| {
            acc.xor(c)
        })
}

/// Checks a vectorial bent function given by its coordinates. A combination
/// that is not bent yields `NotBent` with its mask as index.
pub fn vectorial_dual_bent_check(
    components: &[TruthTable],
    p: &PairingSpec,
) -> Result<VectorialDualReport> {
    if components.is_empty() || components.len() > 16 {
        return Err(invalid("need between 1 and 16 components"));
    }
    let n = components[0].n();
    if let Some(c) = components.iter().find(|c| c.n() != n) {
        return Err(Error::DimensionMismatch {
            expected: n as usize,
            got: c.n() as usize,
        });
    }
    let masks: Vec<usize> = (1..1usize << components.len()).collect();
    let duals: Vec<TruthTable> = masks
        .par_iter()
        .map(|&mask| dual_of(&combination(components, mask), p, mask))
        .collect::<Result<_>>()?;
    let basic: Vec<TruthTable> = (0..components.len())
        .map(|i| duals[(1 << i) - 1].clone())
        .collect();
    let mut dual_bent = true;
    let mut additive = true;
    for (&mask, dual) in masks.iter().zip(&duals) {
        let combined = combination(&basic, mask);
        additive &= combined == *dual;
        dual_bent &= combined.is_bent(p)?;
    }
    Ok(VectorialDualReport {
        dual_bent,
        additive,
    })
}
