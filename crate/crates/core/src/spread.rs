//! Spreads and spread-like partitions of `GF(2^m) x GF(2^m)`.
//!
//! Points are indexed as `x * 2^m + y`. For `k | m` with
//! `gcd(2^m - 1, 2^k + 1) = 1`, `e = 2^m - 2^k - 2` and `d = e^-1`:
//!
//! * `U = {(0, y)}`, `U_s = {(x, s x^-e)}`, and `A(gamma)` is the union of the
//!   punctured `U_s` over `Tr^m_k(s) = gamma`;
//! * `V = {(x, 0)}`, `V_s = {(x^-d s, x)}`, and `B(gamma)` likewise.
//!
//! Gamma1 is `{A(0) + U, A(gamma)}` and Gamma2 is `{B(0) + V, B(gamma)}`; the
//! point `(0, 0)` always sits in the cell holding `U` (resp. `V`).

use std::collections::BTreeMap;
use std::fmt;

use crate::construct::ExponentPair;
use crate::error::{invalid, Result};
use crate::gf::{gf2_rank, FieldElement, FieldSpec};
use crate::groupfun::GroupFunction;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CellLabel {
    /// `U = {(0, y)}`.
    Vertical,
    /// `V = {(x, 0)}`.
    Horizontal,
    /// A line `{(x, s x)}` of the Desarguesian spread.
    Slope(FieldElement),
    /// The relative-trace value `gamma` of a Gamma1/Gamma2 cell.
    Trace(FieldElement),
    /// A preimage `f^-1(value)`.
    Value(u32),
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellLabel::Vertical => write!(f, "U"),
            CellLabel::Horizontal => write!(f, "V"),
            CellLabel::Slope(s) => write!(f, "slope:{s}"),
            CellLabel::Trace(g) => write!(f, "trace:{g}"),
            CellLabel::Value(v) => write!(f, "value:{v}"),
        }
    }
}

/// A labelled partition of `{0, .., 2^n - 1}` into nonempty sorted cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    n: u32,
    cells: Vec<Vec<usize>>,
    labels: Vec<CellLabel>,
    distinguished: Option<usize>,
}

impl Partition {
    pub fn new(n: u32, mut cells: Vec<Vec<usize>>, labels: Vec<CellLabel>) -> Result<Self> {
        if cells.len() != labels.len() {
            return Err(invalid("one label per cell required"));
        }
        let len = 1usize << n;
        let mut seen = vec![false; len];
        for cell in cells.iter_mut() {
            if cell.is_empty() {
                return Err(invalid("empty cell"));
            }
            cell.sort_unstable();
            for &i in cell.iter() {
                if i >= len {
                    return Err(invalid(format!("point {i} outside V_{n}")));
                }
                if std::mem::replace(&mut seen[i], true) {
                    return Err(invalid(format!("point {i} lies in two cells")));
                }
            }
        }
        if let Some(i) = seen.iter().position(|&s| !s) {
            return Err(invalid(format!("point {i} is not covered")));
        }
        let distinguished = cells.iter().position(|c| c[0] == 0);
        Ok(Partition {
            n,
            cells,
            labels,
            distinguished,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn labels(&self) -> &[CellLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Index of the cell containing the zero vector.
    pub fn distinguished(&self) -> Option<usize> {
        self.distinguished
    }

    /// Cell index of every point.
    pub fn cell_index(&self) -> Vec<usize> {
        let mut out = vec![0; 1 << self.n];
        for (c, cell) in self.cells.iter().enumerate() {
            for &i in cell {
                out[i] = c;
            }
        }
        out
    }

    /// The cells with the zero vector removed (empty cells dropped).
    pub fn punctured_cells(&self) -> Vec<Vec<usize>> {
        self.cells
            .iter()
            .map(|c| c.iter().copied().filter(|&i| i != 0).collect::<Vec<_>>())
            .filter(|c| !c.is_empty())
            .collect()
    }

    /// Cells as a sorted list, ignoring labels and order.
    pub fn canonical_cells(&self) -> Vec<Vec<usize>> {
        let mut cells = self.cells.clone();
        cells.sort_unstable();
        cells
    }

    /// Equality as unordered partitions.
    pub fn same_cells(&self, other: &Partition) -> bool {
        self.n == other.n && self.canonical_cells() == other.canonical_cells()
    }
}

#[inline]
fn point(m: u32, x: FieldElement, y: FieldElement) -> usize {
    ((x.value() as usize) << m) | y.value() as usize
}

/// The Desarguesian spread: `U` (with the zero vector) and the punctured
/// lines `U_s^* = {(x, s x) : x != 0}`; `2^m + 1` cells.
pub fn desarguesian(field: &FieldSpec) -> Partition {
    let m = field.m();
    let mut cells = vec![field
        .elements()
        .map(|y| point(m, FieldElement::ZERO, y))
        .collect::<Vec<_>>()];
    let mut labels = vec![CellLabel::Vertical];
    for s in field.elements() {
        cells.push(
            field
                .elements()
                .skip(1)
                .map(|x| point(m, x, field.mul(s, x)))
                .collect(),
        );
        labels.push(CellLabel::Slope(s));
    }
    Partition::new(2 * m, cells, labels).expect("the Desarguesian spread partitions V_n")
}

/// Which family of spread-like sets: `A`/`U_s` (Gamma1) or `B`/`V_s` (Gamma2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

/// The sets behind Gamma1 or Gamma2 before `U` (or `V`) is merged into the
/// zero-trace cell.
#[derive(Clone, Debug)]
pub struct GammaCells {
    n: u32,
    side: Side,
    hyper: Vec<usize>,
    fibers: Vec<(FieldElement, Vec<usize>)>,
}

impl GammaCells {
    pub fn new(field: &FieldSpec, k: u32, side: Side) -> Result<Self> {
        let pair = ExponentPair::new(field.m(), k)?;
        let m = field.m();
        let gammas = field.subfield_elements(k)?;
        let slot: BTreeMap<FieldElement, usize> =
            gammas.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let trace: Vec<usize> = field
            .elements()
            .map(|s| slot[&field.trace(s, k).expect("k divides m")])
            .collect();
        let mut fibers: Vec<(FieldElement, Vec<usize>)> =
            gammas.iter().map(|&g| (g, Vec::new())).collect();
        let hyper: Vec<usize>;
        match side {
            Side::A => {
                // (x, y) with x != 0 lies on U_s for s = y x^e
                hyper = field
                    .elements()
                    .map(|y| point(m, FieldElement::ZERO, y))
                    .collect();
                for x in field.elements().skip(1) {
                    let xe = field.pow(x, pair.e());
                    for y in field.elements() {
                        let s = field.mul(y, xe);
                        fibers[trace[s.value() as usize]].1.push(point(m, x, y));
                    }
                }
            }
            Side::B => {
                // (x, y) with y != 0 lies on V_s for s = x y^d
                hyper = field
                    .elements()
                    .map(|x| point(m, x, FieldElement::ZERO))
                    .collect();
                for y in field.elements().skip(1) {
                    let yd = field.pow(y, pair.d() as i64);
                    for x in field.elements() {
                        let s = field.mul(x, yd);
                        fibers[trace[s.value() as usize]].1.push(point(m, x, y));
                    }
                }
            }
        }
        fibers.iter_mut().for_each(|(_, c)| c.sort_unstable());
        Ok(GammaCells {
            n: 2 * m,
            side,
            hyper,
            fibers,
        })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// `U` or `V`, including the zero vector.
    pub fn hyper(&self) -> &[usize] {
        &self.hyper
    }

    /// `(gamma, A(gamma))` or `(gamma, B(gamma))`, ascending in `gamma`.
    pub fn fibers(&self) -> &[(FieldElement, Vec<usize>)] {
        &self.fibers
    }

    pub fn fiber(&self, gamma: FieldElement) -> Option<&[usize]> {
        self.fibers
            .iter()
            .find(|(g, _)| *g == gamma)
            .map(|(_, c)| c.as_slice())
    }

    /// Gamma1 or Gamma2: `2^k` cells, the hyperplane merged into `gamma = 0`.
    pub fn partition(&self) -> Partition {
        let mut cells = Vec::with_capacity(self.fibers.len());
        let mut labels = Vec::with_capacity(self.fibers.len());
        for (g, cell) in &self.fibers {
            let mut cell = cell.clone();
            if g.is_zero() {
                cell.extend_from_slice(&self.hyper);
            }
            cells.push(cell);
            labels.push(CellLabel::Trace(*g));
        }
        Partition::new(self.n, cells, labels).expect("gamma cells partition V_n")
    }

    /// `2^k + 1` cells with `U` (or `V`) kept separate.
    pub fn refined_partition(&self) -> Partition {
        let mut cells = vec![self.hyper.clone()];
        let mut labels = vec![match self.side {
            Side::A => CellLabel::Vertical,
            Side::B => CellLabel::Horizontal,
        }];
        for (g, cell) in &self.fibers {
            cells.push(cell.clone());
            labels.push(CellLabel::Trace(*g));
        }
        Partition::new(self.n, cells, labels).expect("gamma cells partition V_n")
    }
}

/// Gamma1 (`Side::A`) or Gamma2 (`Side::B`).
pub fn gamma_partition(field: &FieldSpec, k: u32, which: Side) -> Result<Partition> {
    Ok(GammaCells::new(field, k, which)?.partition())
}

/// One cell per attained value, ascending by value.
pub fn preimage_partition(f: &GroupFunction) -> Partition {
    let mut by_value: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (x, &v) in f.values().iter().enumerate() {
        by_value.entry(v).or_default().push(x);
    }
    let (labels, cells): (Vec<_>, Vec<_>) = by_value
        .into_iter()
        .map(|(v, c)| (CellLabel::Value(v), c))
        .unzip();
    Partition::new(f.n(), cells, labels).expect("preimages partition V_n")
}

/// True iff every cell joined with zero is an `n/2`-dimensional subspace and
/// distinct cells meet only in zero.
pub fn is_partial_spread(cells: &[Vec<usize>], n: u32) -> bool {
    if n % 2 == 1 {
        return false;
    }
    let half = n / 2;
    let mut seen = vec![false; 1 << n];
    for cell in cells {
        let mut nonzero: Vec<usize> = cell.iter().copied().filter(|&i| i != 0).collect();
        nonzero.sort_unstable();
        nonzero.dedup();
        if nonzero.len() + 1 != 1 << half || nonzero.iter().any(|&i| i >> n != 0) {
            return false;
        }
        let words: Vec<u64> = nonzero.iter().map(|&i| i as u64).collect();
        // 2^half points spanning a space of dimension half form that space
        if gf2_rank(&words) != half as usize {
            return false;
        }
        for &i in &nonzero {
            if std::mem::replace(&mut seen[i], true) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn desarguesian_counts() {
        let f2 = make_field(2, None).unwrap();
        let d = desarguesian(&f2);
        assert_eq!(d.len(), 5);
        let mut sizes: Vec<_> = d.cells().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 3, 3, 3, 4]);
        assert_eq!(d.distinguished(), Some(0));
        assert_eq!(d.labels()[0], CellLabel::Vertical);
        let d4 = desarguesian(&make_field(4, None).unwrap());
        assert_eq!(d4.len(), 17);
        assert_eq!(d4.cells().iter().map(Vec::len).sum::<usize>(), 256);
        assert!(is_partial_spread(d4.cells(), 8));
    }

    #[test]
    fn desarguesian_cells_meet_in_zero() {
        let d = desarguesian(&make_field(3, None).unwrap());
        for (i, a) in d.cells().iter().enumerate() {
            for b in &d.cells()[i + 1..] {
                assert!(a.iter().all(|p| !b.contains(p)));
            }
        }
        assert!(is_partial_spread(d.cells(), 6));
    }

    #[test]
    fn gamma_sizes_6_2() {
        let f = make_field(6, None).unwrap();
        for side in [Side::A, Side::B] {
            let g = gamma_partition(&f, 2, side).unwrap();
            assert_eq!(g.len(), 4);
            let zero = g.distinguished().unwrap();
            assert_eq!(g.labels()[zero], CellLabel::Trace(FieldElement::ZERO));
            for (i, c) in g.cells().iter().enumerate() {
                assert_eq!(c.len(), if i == zero { 1072 } else { 1008 });
            }
            assert!(!is_partial_spread(g.cells(), 12));
        }
    }

    #[test]
    fn gcd_condition_enforced() {
        let f = make_field(4, None).unwrap();
        assert!(gamma_partition(&f, 2, Side::A).is_err());
        assert!(gamma_partition(&make_field(6, None).unwrap(), 4, Side::A).is_err());
    }

    #[test]
    fn cells_are_unions_of_punctured_sets() {
        for (m, k) in [(3u32, 1u32), (6, 2)] {
            let f = make_field(m, None).unwrap();
            let pair = ExponentPair::new(m, k).unwrap();
            let g = gamma_partition(&f, k, Side::A).unwrap();
            let idx = g.cell_index();
            for s in f.elements() {
                let gamma = f.trace(s, k).unwrap();
                let cells: Vec<usize> = f
                    .elements()
                    .skip(1)
                    .map(|x| idx[point(m, x, f.mul(s, f.pow(x, pair.neg_e())))])
                    .collect();
                assert!(cells
                    .iter()
                    .all(|&c| g.labels()[c] == CellLabel::Trace(gamma)));
            }
        }
    }

    #[test]
    fn full_degree_reduces_to_spread() {
        for m in 2..=4 {
            let f = make_field(m, None).unwrap();
            let cells = GammaCells::new(&f, m, Side::A).unwrap();
            let g = cells.partition();
            assert_eq!(g.len(), 1 << m);
            let zero = g.distinguished().unwrap();
            assert_eq!(g.cells()[zero].len(), (1 << m) + (1 << m) - 1);
            let refined = cells.refined_partition();
            assert!(is_partial_spread(refined.cells(), 2 * m));
            // A(gamma) = {(x, gamma x^2)}
            for (gamma, cell) in cells.fibers() {
                let expect: Vec<usize> = {
                    let mut v: Vec<_> = f
                        .elements()
                        .skip(1)
                        .map(|x| point(m, x, f.mul(*gamma, f.square(x))))
                        .collect();
                    v.sort();
                    v
                };
                assert_eq!(cell, &expect);
            }
        }
    }

    #[test]
    fn partial_spread_rejects_overlap() {
        // two 2-dimensional subspaces of V_4 sharing the point 1
        let a = vec![0, 1, 2, 3];
        let b = vec![0, 1, 4, 5];
        assert!(!is_partial_spread(&[a.clone(), b], 4));
        assert!(is_partial_spread(&[a, vec![0, 4, 8, 12]], 4));
        assert!(!is_partial_spread(&[vec![0, 1, 2, 4]], 4));
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(
            1,
            vec![vec![0], vec![0, 1]],
            vec![CellLabel::Value(0), CellLabel::Value(1)]
        )
        .is_err());
        assert!(Partition::new(1, vec![vec![0]], vec![CellLabel::Value(0)]).is_err());
        assert!(Partition::new(
            1,
            vec![vec![1, 0], vec![]],
            vec![CellLabel::Value(0), CellLabel::Value(1)]
        )
        .is_err());
        let p = Partition::new(1, vec![vec![1, 0]], vec![CellLabel::Value(0)]).unwrap();
        assert_eq!(p.cells(), &[vec![0, 1]]);
    }
}
