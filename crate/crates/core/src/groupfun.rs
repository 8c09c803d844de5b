//! Functions from V_n into a finite abelian 2-group `B = Z_o1 x .. x Z_or`.
//!
//! Group elements are packed into a `u32`: component `i` occupies
//! `log2(o_i)` bits starting after the bits of the earlier components. For a
//! cyclic group this is the residue itself, for `Z_2^k` it is the bit vector.
//! Character indices use the same packing.
//!
//! Character sums are exact [`CycloInt`] values at level `K = log2(max o_i)`.
//! They are computed as `2^(K-1)` integer Walsh transforms, one per basis
//! coordinate of the pointwise values `chi_a(f(x))`.

use rayon::prelude::*;

use crate::boolfun::{bent_dual, fwht, PairingSpec, TruthTable};
use crate::cyclo::{basis_len, conj_into, negacyclic_mul, unit_root_coord, CycloInt};
use crate::error::{invalid, Error, Result};

/// `B = Z_o1 x .. x Z_or`, every order a power of two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    orders: Vec<u32>,
}

impl GroupSpec {
    pub fn new(orders: Vec<u32>) -> Result<Self> {
        if orders.is_empty() {
            return Err(invalid("a group needs at least one cyclic factor"));
        }
        if let Some(o) = orders.iter().find(|&&o| o < 2 || !o.is_power_of_two()) {
            return Err(invalid(format!(
                "cyclic order {o} is not a power of two >= 2"
            )));
        }
        let bits: u32 = orders.iter().map(|o| o.trailing_zeros()).sum();
        if bits > 31 {
            return Err(invalid("group order exceeds 2^31"));
        }
        Ok(GroupSpec { orders })
    }

    /// `Z_(2^k)`.
    pub fn cyclic(k: u32) -> Self {
        GroupSpec::new(vec![1 << k]).expect("valid cyclic order")
    }

    /// `Z_2^k`.
    pub fn elementary(k: u32) -> Self {
        GroupSpec::new(vec![2; k as usize]).expect("valid elementary group")
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    /// `log2 |B|`.
    pub fn k_total(&self) -> u32 {
        self.orders.iter().map(|o| o.trailing_zeros()).sum()
    }

    pub fn size(&self) -> u32 {
        1 << self.k_total()
    }

    /// Cyclotomic level needed for the characters, `log2` of the exponent.
    pub fn level(&self) -> u32 {
        self.orders
            .iter()
            .map(|o| o.trailing_zeros())
            .max()
            .unwrap_or(1)
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.len() == 1
    }

    pub fn is_elementary(&self) -> bool {
        self.orders.iter().all(|&o| o == 2)
    }

    fn offsets(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.orders.iter().scan(0u32, |off, &o| {
            let w = o.trailing_zeros();
            let here = *off;
            *off += w;
            Some((here, w))
        })
    }

    pub fn unpack(&self, g: u32) -> Vec<u32> {
        self.offsets()
            .map(|(off, w)| (g >> off) & ((1 << w) - 1))
            .collect()
    }

    pub fn pack(&self, residues: &[u32]) -> Result<u32> {
        if residues.len() != self.orders.len() {
            return Err(Error::DimensionMismatch {
                expected: self.orders.len(),
                got: residues.len(),
            });
        }
        let mut g = 0;
        for ((off, _), (&r, &o)) in self.offsets().zip(residues.iter().zip(&self.orders)) {
            if r >= o {
                return Err(invalid(format!("residue {r} not below {o}")));
            }
            g |= r << off;
        }
        Ok(g)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let mut g = 0;
        for (off, w) in self.offsets() {
            let mask = (1u32 << w) - 1;
            g |= (((a >> off) + (b >> off)) & mask) << off;
        }
        g
    }

    pub fn neg(&self, a: u32) -> u32 {
        let mut g = 0;
        for (off, w) in self.offsets() {
            let mask = (1u32 << w) - 1;
            g |= ((a >> off).wrapping_neg() & mask) << off;
        }
        g
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// `c * g` with `c` a nonnegative integer.
    pub fn scale(&self, g: u32, c: u32) -> u32 {
        let mut out = 0;
        for (off, w) in self.offsets() {
            let mask = (1u32 << w) - 1;
            out |= (((g >> off) & mask).wrapping_mul(c) & mask) << off;
        }
        out
    }

    /// `t` with `chi_a(g) = zeta_(2^K)^t`, `K = self.level()`.
    #[inline]
    pub fn character_exponent(&self, a: u32, g: u32) -> i64 {
        let level = self.level();
        let mut t = 0i64;
        for (off, w) in self.offsets() {
            let mask = (1u32 << w) - 1;
            let prod = (((a >> off) & mask) as i64) * (((g >> off) & mask) as i64);
            t += prod << (level - w);
        }
        t.rem_euclid(1 << level)
    }

    /// `chi_a(g)` as an exact cyclotomic integer.
    pub fn character(&self, a: u32, g: u32) -> CycloInt {
        crate::cyclo::unit_root(self.level(), self.character_exponent(a, g))
    }
}

/// A map `V_n -> B`, values packed as in [`GroupSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupFunction {
    n: u32,
    group: GroupSpec,
    values: Vec<u32>,
}

impl GroupFunction {
    pub fn new(n: u32, group: GroupSpec, values: Vec<u32>) -> Result<Self> {
        if values.len() != 1usize << n {
            return Err(Error::DimensionMismatch {
                expected: 1 << n,
                got: values.len(),
            });
        }
        if let Some(v) = values.iter().find(|&&v| v >= group.size()) {
            return Err(invalid(format!(
                "value {v} outside a group of order {}",
                group.size()
            )));
        }
        Ok(GroupFunction { n, group, values })
    }

    pub fn from_fn(n: u32, group: GroupSpec, f: impl FnMut(usize) -> u32) -> Result<Self> {
        Self::new(n, group, (0..1usize << n).map(f).collect())
    }

    /// A Boolean function viewed as a map into `Z_2`.
    pub fn lift(f: &TruthTable) -> Self {
        GroupFunction {
            n: f.n(),
            group: GroupSpec::cyclic(1),
            values: (0..f.len()).map(|i| f.get(i) as u32).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    #[inline]
    pub fn value(&self, x: usize) -> u32 {
        self.values[x]
    }

    /// `c * f` pointwise.
    pub fn scale(&self, c: u32) -> GroupFunction {
        GroupFunction {
            n: self.n,
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .map(|&g| self.group.scale(g, c))
                .collect(),
        }
    }

    /// Bits of the packed values as Boolean functions, lowest bit first. For
    /// a cyclic group these are the `a_j` of `f = a_0 + 2 a_1 + .. `.
    pub fn bit_tables(&self) -> Vec<TruthTable> {
        (0..self.group.k_total())
            .map(|j| TruthTable::from_fn(self.n, |x| self.values[x] >> j & 1 == 1))
            .collect()
    }

    /// Binary expansion `f = a_0 + 2 a_1 + .. + 2^(k-1) a_(k-1)` for cyclic `B`.
    pub fn components(&self) -> Result<Vec<TruthTable>> {
        if !self.group.is_cyclic() {
            return Err(invalid("component decomposition needs a cyclic group"));
        }
        Ok(self.bit_tables())
    }

    /// Inverse of [`GroupFunction::components`].
    pub fn compose(components: &[TruthTable]) -> Result<GroupFunction> {
        let first = components.first().ok_or_else(|| invalid("no components"))?;
        let n = first.n();
        if components.iter().any(|c| c.n() != n) {
            return Err(invalid("components on different spaces"));
        }
        let k = components.len() as u32;
        let values = (0..1usize << n)
            .map(|x| {
                components
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (j, c)| acc | (c.get(x) as u32) << j)
            })
            .collect();
        GroupFunction::new(n, GroupSpec::cyclic(k), values)
    }

    /// Every derivative `f(x + a) - f(x)`, `a != 0`, takes each value of `B`
    /// exactly `2^n / |B|` times. Quadratic in `2^n`; a diagnostic only.
    pub fn derivatives_balanced(&self) -> bool {
        let len = 1usize << self.n;
        let size = self.group.size() as usize;
        if !len.is_multiple_of(size) {
            return false;
        }
        let target = len / size;
        (1..len).into_par_iter().all(|a| {
            let mut counts = vec![0usize; size];
            for x in 0..len {
                counts[self.group.sub(self.values[x ^ a], self.values[x]) as usize] += 1;
            }
            counts.iter().all(|&c| c == target)
        })
    }
}

/// One value `H_f(a, b)` with its indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSpectrumEntry {
    pub character: u32,
    pub b: usize,
    pub value: CycloInt,
}

/// `H_f(a, b)` for a fixed character index `a` and every `b`, stored
/// coordinate-major: `coords[t][b]` is the coefficient of `zeta^t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSpectrum {
    n: u32,
    level: u32,
    character: u32,
    coords: Vec<Vec<i64>>,
}

impl GSpectrum {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn character(&self) -> u32 {
        self.character
    }

    pub fn len(&self) -> usize {
        1usize << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, b: usize) -> CycloInt {
        let coeffs = self.coords.iter().map(|c| c[b]).collect();
        CycloInt::from_coeffs(self.level, coeffs).expect("consistent level")
    }

    pub fn entries(&self) -> impl Iterator<Item = GSpectrumEntry> + '_ {
        (0..self.len()).map(|b| GSpectrumEntry {
            character: self.character,
            b,
            value: self.get(b),
        })
    }

    /// True iff `|H(a, b)|^2 = 2^n` exactly for every `b`.
    pub fn is_flat(&self) -> bool {
        let target = 1i64 << self.n;
        let width = self.coords.len();
        (0..self.len())
            .into_par_iter()
            .map_init(
                || (vec![0i64; width], vec![0i64; width], vec![0i64; width]),
                |(z, conj, norm), b| {
                    for (t, c) in self.coords.iter().enumerate() {
                        z[t] = c[b];
                    }
                    conj_into(z, conj);
                    negacyclic_mul(z, conj, norm);
                    norm[0] == target && norm[1..].iter().all(|&c| c == 0)
                },
            )
            .all(|ok| ok)
    }

    /// `sum_b |H(a, b)|^2` as an exact cyclotomic integer.
    pub fn parseval_sum(&self) -> CycloInt {
        let width = self.coords.len();
        let mut acc = vec![0i64; width];
        let mut z = vec![0i64; width];
        let mut conj = vec![0i64; width];
        let mut norm = vec![0i64; width];
        for b in 0..self.len() {
            for (t, c) in self.coords.iter().enumerate() {
                z[t] = c[b];
            }
            conj_into(&z, &mut conj);
            negacyclic_mul(&z, &conj, &mut norm);
            acc.iter_mut().zip(&norm).for_each(|(a, v)| *a += v);
        }
        CycloInt::from_coeffs(self.level, acc).expect("consistent level")
    }
}

/// `H_f(a, b) = sum_x chi_a(f(x)) (-1)^<b, x>` for every `b`.
pub fn gen_walsh(f: &GroupFunction, character: u32, p: &PairingSpec) -> Result<GSpectrum> {
    if p.n() != f.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n() as usize,
            got: p.n() as usize,
        });
    }
    let group = f.group();
    if character >= group.size() {
        return Err(invalid(format!("character index {character} out of range")));
    }
    let level = group.level();
    if 2 * f.n() + level > 63 {
        return Err(invalid("transform would overflow 64-bit coefficients"));
    }
    let width = basis_len(level);
    let len = 1usize << f.n();

    // exponent of chi_a at every group value, then basis position and sign
    let table: Vec<(usize, i64)> = (0..group.size())
        .map(|g| unit_root_coord(level, group.character_exponent(character, g)))
        .collect();

    let coords: Vec<Vec<i64>> = (0..width)
        .into_par_iter()
        .map(|t| {
            let mut data = vec![0i64; len];
            for (x, slot) in data.iter_mut().enumerate() {
                let (pos, sign) = table[f.values[x] as usize];
                if pos == t {
                    *slot = sign;
                }
            }
            fwht(&mut data);
            p.permute_spectrum(&data)
        })
        .collect();

    Ok(GSpectrum {
        n: f.n(),
        level,
        character,
        coords,
    })
}

fn require_even(n: u32) -> Result<()> {
    if n % 2 == 1 {
        return Err(invalid(format!("bentness needs even n, got {n}")));
    }
    Ok(())
}

/// `|H_f(1, b)| = 2^(n/2)` for all `b`; `B` must be cyclic.
pub fn is_generalized_bent(f: &GroupFunction, p: &PairingSpec) -> Result<bool> {
    require_even(f.n())?;
    if !f.group().is_cyclic() {
        return Err(invalid("generalized bentness is defined for cyclic groups"));
    }
    Ok(gen_walsh(f, 1, p)?.is_flat())
}

/// `|H_f(a, b)| = 2^(n/2)` for every nonzero character index `a` and all `b`.
/// For cyclic `B` this is `Z_(2^k)`-bentness, for `Z_2^k` vectorial bentness.
pub fn is_group_bent(f: &GroupFunction, p: &PairingSpec) -> Result<bool> {
    require_even(f.n())?;
    let k = f.group().k_total();
    if k > f.n() / 2 {
        return Err(Error::BoundViolation {
            k,
            max: f.n() / 2,
            n: f.n(),
        });
    }
    let size = f.group().size();
    let results: Result<Vec<bool>> = (1..size)
        .into_par_iter()
        .map(|a| Ok(gen_walsh(f, a, p)?.is_flat()))
        .collect();
    Ok(results?.into_iter().all(|ok| ok))
}

/// Where the component characterisation first failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineWitness {
    /// `a_(k-t-1) + sum_{j in mask} a_j` is not bent.
    NotBent { t: u32, member: u32 },
    /// The dual of the sum of three members differs from the sum of duals.
    DualMismatch { t: u32, members: [u32; 3] },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSpaceReport {
    pub verdict: bool,
    pub witness: Option<AffineWitness>,
}

/// Checks the affine space `A_t = a_(k-t-1) + <a_(k-t-2), .., a_0>`: every
/// member bent, and duals additive on every triple of distinct members. This
/// holds exactly when `2^t f` is generalized bent.
pub fn affine_space_check_at(
    f: &GroupFunction,
    p: &PairingSpec,
    t: u32,
) -> Result<AffineSpaceReport> {
    require_even(f.n())?;
    let comps = f.components()?;
    let k = comps.len() as u32;
    if t >= k {
        return Err(invalid(format!("t = {t} must be below k = {k}")));
    }
    let top = (k - t - 1) as usize;
    let span = &comps[..top];
    let members = 1u32 << span.len();
    let member = |mask: u32| {
        span.iter()
            .enumerate()
            .filter(|(j, _)| mask >> j & 1 == 1)
            .fold(comps[top].clone(), |acc, (_, a)| acc.xor(a))
    };

    let duals: Vec<Option<TruthTable>> = (0..members)
        .into_par_iter()
        .map(|mask| bent_dual(&member(mask), p))
        .collect::<Result<_>>()?;
    if let Some(mask) = duals.iter().position(Option::is_none) {
        return Ok(AffineSpaceReport {
            verdict: false,
            witness: Some(AffineWitness::NotBent {
                t,
                member: mask as u32,
            }),
        });
    }
    let duals: Vec<TruthTable> = duals.into_iter().flatten().collect();
    for i in 0..members {
        for j in i + 1..members {
            for l in j + 1..members {
                let lhs = &duals[(i ^ j ^ l) as usize];
                let rhs = duals[i as usize]
                    .xor(&duals[j as usize])
                    .xor(&duals[l as usize]);
                if *lhs != rhs {
                    return Ok(AffineSpaceReport {
                        verdict: false,
                        witness: Some(AffineWitness::DualMismatch {
                            t,
                            members: [i, j, l],
                        }),
                    });
                }
            }
        }
    }
    Ok(AffineSpaceReport {
        verdict: true,
        witness: None,
    })
}

/// [`affine_space_check_at`] for every `t`; agrees with [`is_group_bent`]
/// on cyclic groups.
pub fn affine_space_check(f: &GroupFunction, p: &PairingSpec) -> Result<AffineSpaceReport> {
    let k = f.group().k_total();
    for t in 0..k {
        let report = affine_space_check_at(f, p, t)?;
        if !report.verdict {
            return Ok(report);
        }
    }
    Ok(AffineSpaceReport {
        verdict: true,
        witness: None,
    })
}
