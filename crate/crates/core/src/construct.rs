//! Constructions of bent functions on `GF(2^m) x GF(2^m)` (and on spreads of
//! V_n in general).
//!
//! * partial spread functions into any abelian 2-group (`I`: punctured
//!   subspaces, `II`: whole subspaces for one distinguished value);
//! * the trace families `f1 = sum_i 2^i Tr(alpha_i x y^d)` and
//!   `f2 = sum_i 2^i Tr(alpha_i^-e x^e y)` into `Z_(2^k)`;
//! * functions constant on the cells of Gamma1 / Gamma2 (`f_A`, `f_B`) and
//!   the Boolean functions supported on `2^(k-1)` of those cells;
//! * Maiorana-McFarland monomials and the majority combination `g`, `g*`.
//!
//! The point `(x, y)` has index `x * 2^m + y`.

use rayon::prelude::*;

use crate::boolfun::TruthTable;
use crate::error::{invalid, precondition, Error, Result};
use crate::gf::{gcd, mod_inverse, FieldElement, FieldSpec, SubfieldBasis};
use crate::groupfun::{GroupFunction, GroupSpec};
use crate::spread::{is_partial_spread, GammaCells, Side};

/// `e = 2^m - 2^j - 2` and its inverse `d` modulo `2^m - 1`, with
/// `k = gcd(m, j)` so that `gcd(2^m - 1, 2^j - 1) = 2^k - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExponentPair {
    m: u32,
    j: u32,
    k: u32,
    e: u64,
    d: u64,
}

impl ExponentPair {
    /// The case `j = k`, `k | m`.
    pub fn new(m: u32, k: u32) -> Result<Self> {
        if k == 0 || !m.is_multiple_of(k) {
            return Err(invalid(format!("{k} does not divide {m}")));
        }
        Self::with_j(m, k)
    }

    pub fn with_j(m: u32, j: u32) -> Result<Self> {
        if m == 0 || m > 31 {
            return Err(invalid(format!("degree {m} out of range")));
        }
        let order = (1u64 << m) - 1;
        let k = gcd(m as u64, j as u64) as u32;
        if j >= 63 || gcd(order, (1u64 << j) + 1) != 1 {
            return Err(precondition(format!("gcd(2^{m} - 1, 2^{j} + 1) != 1")));
        }
        let raw = (1i128 << m) - (1i128 << j) - 2;
        let e = raw.rem_euclid(order.max(1) as i128) as u64;
        let d = mod_inverse(e as i64, order)
            .ok_or_else(|| precondition(format!("e = {raw} is not invertible modulo {order}")))?;
        Ok(ExponentPair { m, j, k, e, d })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `e` reduced into `0..2^m - 1`.
    pub fn e(&self) -> i64 {
        self.e as i64
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// `-e` reduced into `0..2^m - 1`; equals `2^j + 1` for `j < m`.
    pub fn neg_e(&self) -> i64 {
        let order = ((1u64 << self.m) - 1).max(1);
        ((order - self.e % order) % order) as i64
    }
}

/// Variant of the partial spread construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpreadVariant {
    /// Nonzero values on `2^(m-k)` punctured subspaces each; zero elsewhere.
    I,
    /// One value on `2^(m-k) + 1` whole subspaces, the others as in `I`.
    II,
}

/// Which group value takes which cells of a partial spread.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub blocks: Vec<(u32, Vec<usize>)>,
    /// The value owning whole subspaces in variant `II`.
    pub tilde: Option<u32>,
}

impl Assignment {
    /// Nonzero values in increasing order take consecutive cells; in variant
    /// `II` the value `tilde` gets the extra subspace.
    pub fn sequential(
        group: &GroupSpec,
        variant: SpreadVariant,
        m: u32,
        tilde: u32,
    ) -> Result<Self> {
        let k = group.k_total();
        if k > m {
            return Err(precondition(format!("|B| = 2^{k} exceeds 2^{m}")));
        }
        let per = 1usize << (m - k);
        let mut next = 0;
        let mut blocks = Vec::new();
        for g in 1..group.size() {
            let count = if variant == SpreadVariant::II && g == tilde {
                per + 1
            } else {
                per
            };
            blocks.push((g, (next..next + count).collect()));
            next += count;
        }
        let tilde = (variant == SpreadVariant::II).then_some(tilde);
        Ok(Assignment { blocks, tilde })
    }
}

/// Partial spread function into `group`. `cells` are the subspaces (with or
/// without the zero vector).
pub fn spread_construction(
    cells: &[Vec<usize>],
    n: u32,
    group: &GroupSpec,
    variant: SpreadVariant,
    asg: &Assignment,
) -> Result<GroupFunction> {
    if !is_partial_spread(cells, n) {
        return Err(precondition("cells do not form a partial spread"));
    }
    let m = n / 2;
    let k = group.k_total();
    if k > m {
        return Err(precondition(format!("|B| = 2^{k} exceeds 2^{m}")));
    }
    let per = 1usize << (m - k);
    let tilde = match (variant, asg.tilde) {
        (SpreadVariant::I, None) => None,
        (SpreadVariant::II, Some(t)) if t != 0 && t < group.size() => Some(t),
        (SpreadVariant::I, Some(_)) => {
            return Err(Error::InvalidAssignment(
                "variant I has no distinguished value".into(),
            ))
        }
        (SpreadVariant::II, _) => {
            return Err(Error::InvalidAssignment(
                "variant II needs a nonzero distinguished value".into(),
            ))
        }
    };

    let mut used = vec![false; cells.len()];
    let mut covered = vec![false; group.size() as usize];
    for (g, idx) in &asg.blocks {
        if *g == 0 || *g >= group.size() {
            return Err(Error::InvalidAssignment(format!(
                "{g} is not a nonzero group element"
            )));
        }
        if std::mem::replace(&mut covered[*g as usize], true) {
            return Err(Error::InvalidAssignment(format!(
                "value {g} assigned twice"
            )));
        }
        let want = if Some(*g) == tilde { per + 1 } else { per };
        if idx.len() != want {
            return Err(Error::InvalidAssignment(format!(
                "value {g} needs {want} subspaces, got {}",
                idx.len()
            )));
        }
        for &c in idx {
            if c >= cells.len() {
                return Err(Error::InvalidAssignment(format!("no cell {c}")));
            }
            if std::mem::replace(&mut used[c], true) {
                return Err(Error::InvalidAssignment(format!("cell {c} used twice")));
            }
        }
    }
    if covered.iter().skip(1).any(|&c| !c) {
        return Err(Error::InvalidAssignment(
            "every nonzero value needs subspaces".into(),
        ));
    }

    let mut values = vec![0u32; 1 << n];
    for (g, idx) in &asg.blocks {
        for &c in idx {
            for &x in &cells[c] {
                values[x] = *g;
            }
        }
        if Some(*g) == tilde {
            values[0] = *g;
        }
    }
    if tilde.is_none() {
        values[0] = 0;
    }
    GroupFunction::new(n, group.clone(), values)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceVariant {
    /// `sum_i 2^i Tr(alpha_i x y^d)`.
    F1,
    /// `sum_i 2^i Tr(alpha_i^-e x^e y)`.
    F2,
}

// sum_i 2^i parity(mask_i & z) for every z in the field
fn trace_word_table(field: &FieldSpec, coeffs: &[FieldElement]) -> Vec<u32> {
    let masks: Vec<u32> = coeffs.iter().map(|&c| field.trace_mask(c)).collect();
    field
        .elements()
        .map(|z| {
            masks.iter().enumerate().fold(0u32, |acc, (i, &w)| {
                acc | ((w & z.value()).count_ones() & 1) << i
            })
        })
        .collect()
}

fn fill_xy(field: &FieldSpec, f: impl Fn(FieldElement, FieldElement) -> u32 + Sync) -> Vec<u32> {
    let m = field.m();
    let size = field.size();
    let mut values = vec![0u32; size * size];
    values
        .par_chunks_mut(size)
        .enumerate()
        .for_each(|(x, row)| {
            let x = FieldElement::from_word(x as u32);
            for (y, slot) in row.iter_mut().enumerate() {
                *slot = f(x, FieldElement::from_word(y as u32));
            }
        });
    debug_assert_eq!(values.len(), 1 << (2 * m));
    values
}

/// `f1` or `f2` into `Z_(2^k)` for the given subfield basis.
pub fn trace_family(
    field: &FieldSpec,
    pair: &ExponentPair,
    variant: TraceVariant,
    basis: &SubfieldBasis,
) -> Result<GroupFunction> {
    if pair.m() != field.m() {
        return Err(invalid("exponent pair built for another field"));
    }
    if basis.k() != pair.k() {
        return Err(invalid(format!(
            "basis of GF(2^{}) for k = {}",
            basis.k(),
            pair.k()
        )));
    }
    let n = 2 * field.m();
    let group = GroupSpec::cyclic(pair.k());
    let values = match variant {
        TraceVariant::F1 => {
            let words = trace_word_table(field, basis.elements());
            let yd: Vec<FieldElement> = field
                .elements()
                .map(|y| field.pow(y, pair.d() as i64))
                .collect();
            fill_xy(field, |x, y| {
                words[field.mul(x, yd[y.value() as usize]).value() as usize]
            })
        }
        TraceVariant::F2 => {
            let coeffs: Vec<FieldElement> = basis
                .elements()
                .iter()
                .map(|&a| field.pow(a, pair.neg_e()))
                .collect();
            let words = trace_word_table(field, &coeffs);
            let xe: Vec<FieldElement> = field.elements().map(|x| field.pow(x, pair.e())).collect();
            fill_xy(field, |x, y| {
                words[field.mul(xe[x.value() as usize], y).value() as usize]
            })
        }
    };
    GroupFunction::new(n, group, values)
}

/// The bijection `i -> sum_j bit_j(i) alpha_j` onto GF(2^k).
pub fn default_pi(field: &FieldSpec, k: u32) -> Result<Vec<FieldElement>> {
    let basis = field.subfield_basis(k)?;
    Ok((0..1u32 << k).map(|i| basis.combine(i)).collect())
}

/// `f_A` (`Side::A`): value `i` on `A(pi[i])`, `u_label` on `U`.
/// `f_B` (`Side::B`): value `i` on `B(pi[i])`, `u_label` on `V`.
/// The value `i` is the group element with packed code `i`.
pub fn partition_bent(
    field: &FieldSpec,
    k: u32,
    side: Side,
    pi: &[FieldElement],
    group: &GroupSpec,
    u_label: u32,
) -> Result<GroupFunction> {
    if group.k_total() != k {
        return Err(invalid(format!(
            "group of order {} for k = {k}",
            group.size()
        )));
    }
    if u_label >= group.size() {
        return Err(invalid(format!("u_label {u_label} is not a group element")));
    }
    if pi.len() != 1 << k {
        return Err(invalid(format!("pi needs {} entries", 1u32 << k)));
    }
    let mut inverse = vec![u32::MAX; field.size()];
    for (i, &g) in pi.iter().enumerate() {
        if !field.is_in_subfield(g, k) {
            return Err(invalid(format!("pi({i}) = {g} is not in GF(2^{k})")));
        }
        if inverse[g.value() as usize] != u32::MAX {
            return Err(invalid("pi is not injective"));
        }
        inverse[g.value() as usize] = i as u32;
    }
    let cells = GammaCells::new(field, k, side)?;
    let mut values = vec![u_label; 1 << (2 * field.m())];
    for (gamma, cell) in cells.fibers() {
        let label = inverse[gamma.value() as usize];
        for &x in cell {
            values[x] = label;
        }
    }
    GroupFunction::new(2 * field.m(), group.clone(), values)
}

/// Boolean function supported on `A(gamma)` (`Side::A`) or `B(gamma)`
/// (`Side::B`) for `gamma` in `subset`, plus `U` (resp. `V`) when
/// `include_hyper` is set. `subset` must have `2^(k-1)` elements.
pub fn psap(
    field: &FieldSpec,
    k: u32,
    subset: &[FieldElement],
    include_hyper: bool,
    side: Side,
) -> Result<TruthTable> {
    if subset.len() != 1 << (k - 1) {
        return Err(invalid(format!(
            "subset needs {} elements, got {}",
            1u32 << (k - 1),
            subset.len()
        )));
    }
    let mut sorted = subset.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != subset.len() {
        return Err(invalid("subset has repeated elements"));
    }
    let cells = GammaCells::new(field, k, side)?;
    let mut table = TruthTable::zero(2 * field.m());
    for gamma in subset {
        let cell = cells
            .fiber(*gamma)
            .ok_or_else(|| invalid(format!("{gamma} is not in GF(2^{k})")))?;
        cell.iter().for_each(|&x| table.set(x, true));
    }
    if include_hyper {
        cells.hyper().iter().for_each(|&x| table.set(x, true));
    }
    Ok(table)
}

fn check_monomial(field: &FieldSpec, beta: FieldElement, exponent: i64) -> Result<()> {
    if beta.is_zero() {
        return Err(invalid("beta must be nonzero"));
    }
    if gcd(
        exponent.rem_euclid(field.group_order() as i64) as u64,
        field.group_order(),
    ) != 1
    {
        return Err(precondition(format!(
            "gcd({exponent}, 2^{} - 1) != 1",
            field.m()
        )));
    }
    Ok(())
}

/// `Tr(beta x y^exponent)`.
pub fn mm(field: &FieldSpec, beta: FieldElement, exponent: i64) -> Result<TruthTable> {
    check_monomial(field, beta, exponent)?;
    let w = field.trace_mask(beta);
    let ye: Vec<u32> = field
        .elements()
        .map(|y| field.pow(y, exponent).value())
        .collect();
    let values = fill_xy(field, |x, y| {
        let z = field.mul(x, FieldElement::from_word(ye[y.value() as usize]));
        (w & z.value()).count_ones() & 1
    });
    Ok(TruthTable::from_fn(2 * field.m(), |i| values[i] == 1))
}

/// `Tr(beta x^exponent y)`.
pub fn mm_transposed(field: &FieldSpec, beta: FieldElement, exponent: i64) -> Result<TruthTable> {
    check_monomial(field, beta, exponent)?;
    let w = field.trace_mask(beta);
    let xe: Vec<u32> = field
        .elements()
        .map(|x| field.pow(x, exponent).value())
        .collect();
    let values = fill_xy(field, |x, y| {
        let z = field.mul(FieldElement::from_word(xe[x.value() as usize]), y);
        (w & z.value()).count_ones() & 1
    });
    Ok(TruthTable::from_fn(2 * field.m(), |i| values[i] == 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CarletKind {
    /// Majority of `Tr(beta_i^-e x^e y)`.
    G,
    /// Majority of `Tr(beta_i x y^d)`.
    GStar,
}

fn majority(a: &TruthTable, b: &TruthTable, c: &TruthTable) -> TruthTable {
    a.and(b).xor(&a.and(c)).xor(&b.and(c))
}

/// `g` or `g*` for `beta_0, beta_1, beta_2` in `GF(2^k)^*`.
pub fn carlet(
    field: &FieldSpec,
    pair: &ExponentPair,
    betas: [FieldElement; 3],
    which: CarletKind,
) -> Result<TruthTable> {
    for b in betas {
        if b.is_zero() || !field.is_in_subfield(b, pair.k()) {
            return Err(invalid(format!("{b} is not in GF(2^{})^*", pair.k())));
        }
    }
    let parts: Vec<TruthTable> = betas
        .iter()
        .map(|&b| match which {
            CarletKind::G => mm_transposed(field, field.pow(b, pair.neg_e()), pair.e()),
            CarletKind::GStar => mm(field, b, pair.d() as i64),
        })
        .collect::<Result<_>>()?;
    Ok(majority(&parts[0], &parts[1], &parts[2]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfun::{anf_degree, bent_dual, PairingSpec};
    use crate::gf::make_field;
    use crate::groupfun::is_group_bent;
    use crate::spread::desarguesian;

    #[test]
    fn exponent_pairs() {
        let p = ExponentPair::new(6, 2).unwrap();
        assert_eq!((p.e(), p.d()), (58, 25));
        assert_eq!(p.neg_e(), 5);
        assert_eq!(58 * 25 % 63, 1);
        let p = ExponentPair::new(9, 3).unwrap();
        assert_eq!(p.e(), 502);
        assert_eq!(p.e() as u64 * p.d() % 511, 1);
        assert!(matches!(
            ExponentPair::new(4, 2),
            Err(Error::PreconditionViolation(_))
        ));
        // j = 0 and j = m give the same exponent 2^m - 3
        let full = ExponentPair::new(5, 5).unwrap();
        let zero = ExponentPair::with_j(5, 0).unwrap();
        assert_eq!(full.e(), 29);
        assert_eq!(zero.e(), 29);
        assert_eq!(zero.k(), 5);
    }

    #[test]
    fn sequential_assignment_weights() {
        let f = make_field(4, None).unwrap();
        let d = desarguesian(&f);
        let z2 = GroupSpec::cyclic(1);
        for (variant, weight) in [(SpreadVariant::I, 120), (SpreadVariant::II, 136)] {
            let asg = Assignment::sequential(&z2, variant, 4, 1).unwrap();
            let g = spread_construction(d.cells(), 8, &z2, variant, &asg).unwrap();
            let t = &g.bit_tables()[0];
            assert_eq!(t.weight(), weight);
            assert!(t.is_bent(&PairingSpec::dot(8)).unwrap());
        }
    }

    #[test]
    fn assignment_errors() {
        let f = make_field(3, None).unwrap();
        let d = desarguesian(&f);
        let z4 = GroupSpec::cyclic(2);
        let mut asg = Assignment::sequential(&z4, SpreadVariant::I, 3, 1).unwrap();
        asg.blocks[0].1.pop();
        assert!(matches!(
            spread_construction(d.cells(), 6, &z4, SpreadVariant::I, &asg),
            Err(Error::InvalidAssignment(_))
        ));
        let mut asg = Assignment::sequential(&z4, SpreadVariant::I, 3, 1).unwrap();
        asg.blocks[1].1[0] = 0;
        assert!(spread_construction(d.cells(), 6, &z4, SpreadVariant::I, &asg).is_err());
        let asg = Assignment::sequential(&z4, SpreadVariant::I, 3, 1).unwrap();
        assert!(spread_construction(d.cells(), 6, &z4, SpreadVariant::II, &asg).is_err());
        let broken = vec![vec![0, 1, 2, 4]];
        assert!(matches!(
            spread_construction(&broken, 6, &z4, SpreadVariant::I, &asg),
            Err(Error::PreconditionViolation(_))
        ));
        let z4_asg = Assignment::sequential(&z4, SpreadVariant::II, 3, 2).unwrap();
        let g = spread_construction(d.cells(), 6, &z4, SpreadVariant::II, &z4_asg).unwrap();
        assert_eq!(g.value(0), 2);
        assert!(is_group_bent(&g, &PairingSpec::dot(6)).unwrap());
    }

    #[test]
    fn mm_duals_small() {
        let f = make_field(2, None).unwrap();
        let p = PairingSpec::trace(&f);
        let b = mm(&f, FieldElement::ONE, 1).unwrap();
        assert_eq!(bent_dual(&b, &p).unwrap(), Some(b));
        assert!(mm(&make_field(4, None).unwrap(), FieldElement::ONE, 3).is_err());
        assert!(mm(&f, FieldElement::ZERO, 1).is_err());
    }

    #[test]
    fn mm_dual_formula_6_2() {
        let f = make_field(6, None).unwrap();
        let pair = ExponentPair::new(6, 2).unwrap();
        let p = PairingSpec::trace(&f);
        for beta in f.elements().skip(1) {
            let b = mm(&f, beta, pair.d() as i64).unwrap();
            let expect = mm_transposed(&f, f.pow(beta, -pair.e()), pair.e()).unwrap();
            assert_eq!(bent_dual(&b, &p).unwrap(), Some(expect), "beta = {beta}");
        }
    }

    #[test]
    fn f2_degrees_6_2() {
        let f = make_field(6, None).unwrap();
        let pair = ExponentPair::new(6, 2).unwrap();
        let basis = f.subfield_basis(2).unwrap();
        let f2 = trace_family(&f, &pair, TraceVariant::F2, &basis).unwrap();
        for c in f2.components().unwrap() {
            assert_eq!(anf_degree(&c).degree, 5);
        }
    }

    #[test]
    fn carlet_identical_betas() {
        let f = make_field(6, None).unwrap();
        let pair = ExponentPair::new(6, 2).unwrap();
        for beta in f.subfield_elements(2).unwrap().into_iter().skip(1) {
            let g = carlet(&f, &pair, [beta; 3], CarletKind::G).unwrap();
            assert_eq!(
                g,
                mm_transposed(&f, f.pow(beta, pair.neg_e()), pair.e()).unwrap()
            );
        }
        let outside = f.elements().find(|&x| !f.is_in_subfield(x, 2)).unwrap();
        assert!(carlet(
            &f,
            &pair,
            [FieldElement::ONE, outside, FieldElement::ONE],
            CarletKind::G
        )
        .is_err());
    }

    #[test]
    fn carlet_zero_sum_triples() {
        // three distinct elements of GF(4)^* add up to zero; g is then b0 | b1
        let f = make_field(6, None).unwrap();
        let pair = ExponentPair::new(6, 2).unwrap();
        let sub = f.subfield_elements(2).unwrap();
        let g = carlet(&f, &pair, [sub[1], sub[2], sub[3]], CarletKind::G).unwrap();
        let b: Vec<_> = sub[1..3]
            .iter()
            .map(|&x| mm_transposed(&f, f.pow(x, pair.neg_e()), pair.e()).unwrap())
            .collect();
        assert_eq!(g, b[0].xor(&b[1]).xor(&b[0].and(&b[1])));
        assert!(!g.is_bent(&PairingSpec::trace(&f)).unwrap());
    }

    #[test]
    fn psap_argument_checks() {
        let f = make_field(6, None).unwrap();
        let sub = f.subfield_elements(2).unwrap();
        assert!(psap(&f, 2, &sub[..1], false, Side::A).is_err());
        assert!(psap(&f, 2, &[sub[1], sub[1]], false, Side::A).is_err());
        let t = psap(&f, 2, &sub[..2], false, Side::A).unwrap();
        assert_eq!(t.weight(), 2016);
        let t = psap(&f, 2, &sub[..2], true, Side::B).unwrap();
        assert_eq!(t.weight(), 2080);
    }

    #[test]
    fn partition_bent_checks() {
        let f = make_field(6, None).unwrap();
        let pi = default_pi(&f, 2).unwrap();
        let z4 = GroupSpec::cyclic(2);
        assert!(partition_bent(&f, 2, Side::A, &pi, &z4, 4).is_err());
        assert!(partition_bent(&f, 2, Side::A, &pi[..3], &z4, 0).is_err());
        let dup = vec![pi[0], pi[1], pi[1], pi[3]];
        assert!(partition_bent(&f, 2, Side::A, &dup, &z4, 0).is_err());
        assert!(partition_bent(&f, 2, Side::A, &pi, &GroupSpec::cyclic(3), 0).is_err());
        let fa = partition_bent(&f, 2, Side::A, &pi, &z4, 3).unwrap();
        assert_eq!(fa.value(0), 3);
        assert!(is_group_bent(&fa, &PairingSpec::trace(&f)).unwrap());
    }
}
