//! Boolean functions on V_n as packed truth tables.
//!
//! Spectra are taken with respect to an explicit [`PairingSpec`]: the value at
//! `b` is `sum_x (-1)^(f(x) + <b, x>)` with `<b, x> = b^T G x`. For points of
//! `GF(2^m) x GF(2^m)` the index of `(x, y)` is `x * 2^m + y`.

use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::gf::{gf2_rank, FieldElement, FieldSpec};

const WORD: usize = 64;

/// A Boolean function on `n` variables, bit `i` holding `f(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: u32,
    words: Vec<u64>,
}

impl TruthTable {
    pub fn zero(n: u32) -> Self {
        let len = (1usize << n).div_ceil(WORD);
        TruthTable {
            n,
            words: vec![0; len],
        }
    }

    pub fn from_fn(n: u32, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut t = Self::zero(n);
        for i in 0..1usize << n {
            if f(i) {
                t.set(i, true);
            }
        }
        t
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        let n = bits.len().trailing_zeros();
        if bits.len() != 1usize << n {
            return Err(invalid(format!(
                "table length {} is not a power of two",
                bits.len()
            )));
        }
        Ok(Self::from_fn(n, |i| bits[i]))
    }

    /// Indicator of a set of points.
    pub fn from_support(n: u32, support: impl IntoIterator<Item = usize>) -> Self {
        let mut t = Self::zero(n);
        for i in support {
            t.set(i, true);
        }
        t
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        1usize << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.get(i))
    }

    pub fn xor(&self, other: &TruthTable) -> TruthTable {
        assert_eq!(self.n, other.n, "xor of tables on different spaces");
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a ^ b)
            .collect();
        TruthTable { n: self.n, words }
    }

    pub fn and(&self, other: &TruthTable) -> TruthTable {
        assert_eq!(self.n, other.n, "and of tables on different spaces");
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        TruthTable { n: self.n, words }
    }

    pub fn complement(&self) -> TruthTable {
        let mut t = TruthTable {
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
        };
        t.clear_padding();
        t
    }

    fn clear_padding(&mut self) {
        let len = self.len();
        if len < WORD {
            self.words[0] &= (1u64 << len) - 1;
        }
    }

    /// `(-1)^f(x)` as integers.
    pub fn signs(&self) -> Vec<i64> {
        (0..self.len())
            .map(|i| if self.get(i) { -1 } else { 1 })
            .collect()
    }

    pub fn is_bent(&self, p: &PairingSpec) -> Result<bool> {
        Ok(walsh_spectrum(self, p)?.is_flat())
    }
}

/// A symmetric nondegenerate bilinear form on V_n, given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingSpec {
    n: u32,
    // rows[i] bit j = G[i][j]
    rows: Vec<u64>,
    tag: PairingTag,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairingTag {
    Dot,
    Trace,
    Custom,
}

impl PairingSpec {
    /// The dot product (identity Gram matrix).
    pub fn dot(n: u32) -> Self {
        PairingSpec {
            n,
            rows: (0..n).map(|i| 1u64 << i).collect(),
            tag: PairingTag::Dot,
        }
    }

    /// `<(u, v), (x, y)> = Tr(u x) + Tr(v y)` on `GF(2^m) x GF(2^m)`,
    /// block diagonal in the `xy` index layout.
    pub fn trace(field: &FieldSpec) -> Self {
        let m = field.m();
        let mut rows = vec![0u64; 2 * m as usize];
        for i in 0..m {
            let row = field.trace_mask(FieldElement::from_word(1 << i)) as u64;
            rows[i as usize] = row;
            rows[(i + m) as usize] = row << m;
        }
        PairingSpec {
            n: 2 * m,
            rows,
            tag: PairingTag::Trace,
        }
    }

    pub fn from_gram(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len() as u32;
        for i in 0..rows.len() {
            if rows[i] >> n != 0 {
                return Err(invalid("gram row wider than n"));
            }
            for j in 0..rows.len() {
                if (rows[i] >> j & 1) != (rows[j] >> i & 1) {
                    return Err(invalid("gram matrix is not symmetric"));
                }
            }
        }
        if gf2_rank(&rows) != rows.len() {
            return Err(invalid("gram matrix is singular"));
        }
        Ok(PairingSpec {
            n,
            rows,
            tag: PairingTag::Custom,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn tag(&self) -> PairingTag {
        self.tag
    }

    pub fn gram_rows(&self) -> &[u64] {
        &self.rows
    }

    /// `G b` as an index.
    #[inline]
    pub fn apply(&self, b: usize) -> usize {
        let mut out = 0usize;
        for (i, &row) in self.rows.iter().enumerate() {
            out |= (((row & b as u64).count_ones() & 1) as usize) << i;
        }
        out
    }

    /// `<b, x>` as a bit.
    pub fn eval(&self, b: usize, x: usize) -> u8 {
        ((self.apply(b) & x).count_ones() & 1) as u8
    }

    // Table of G b for every b; for n > 16 it is built from two halves.
    fn index_map(&self) -> Vec<usize> {
        let len = 1usize << self.n;
        if self.tag == PairingTag::Dot {
            return (0..len).collect();
        }
        let lo_bits = self.n / 2;
        let hi_bits = self.n - lo_bits;
        let lo: Vec<usize> = (0..1usize << lo_bits).map(|b| self.apply(b)).collect();
        let hi: Vec<usize> = (0..1usize << hi_bits)
            .map(|b| self.apply(b << lo_bits))
            .collect();
        (0..len)
            .map(|b| lo[b & ((1 << lo_bits) - 1)] ^ hi[b >> lo_bits])
            .collect()
    }

    /// Reorders a dot-product spectrum so that entry `b` is read at `G b`.
    pub fn permute_spectrum<T: Copy + Send + Sync>(&self, dot_values: &[T]) -> Vec<T> {
        if self.tag == PairingTag::Dot {
            return dot_values.to_vec();
        }
        self.index_map()
            .into_iter()
            .map(|gb| dot_values[gb])
            .collect()
    }
}

/// Walsh values `W_f(b)` for every `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    n: u32,
    values: Vec<i64>,
}

impl Spectrum {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn parseval_sum(&self) -> i128 {
        self.values.iter().map(|&w| (w as i128) * (w as i128)).sum()
    }

    /// Every `|W(b)| = 2^(n/2)`; false for odd `n`.
    pub fn is_flat(&self) -> bool {
        if self.n % 2 == 1 {
            return false;
        }
        let r = 1i64 << (self.n / 2);
        self.values.iter().all(|&w| w == r || w == -r)
    }
}

/// In-place unnormalised Walsh-Hadamard transform.
pub fn fwht(data: &mut [i64]) {
    let len = data.len();
    assert!(
        len.is_power_of_two(),
        "transform length must be a power of two"
    );
    const PAR_THRESHOLD: usize = 1 << 14;
    let mut h = 1;
    while h < len {
        let block = 2 * h;
        let butterfly = |chunk: &mut [i64]| {
            let (lo, hi) = chunk.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        };
        if len >= PAR_THRESHOLD && block <= len / 8 {
            data.par_chunks_mut(block.max(1 << 12)).for_each(|seg| {
                seg.chunks_mut(block).for_each(butterfly);
            });
        } else {
            data.chunks_mut(block).for_each(butterfly);
        }
        h = block;
    }
}

pub fn walsh_spectrum(f: &TruthTable, p: &PairingSpec) -> Result<Spectrum> {
    if p.n() != f.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n() as usize,
            got: p.n() as usize,
        });
    }
    let mut data = f.signs();
    fwht(&mut data);
    Ok(Spectrum {
        n: f.n(),
        values: p.permute_spectrum(&data),
    })
}

/// The dual `f*` with `W_f(b) = 2^(n/2) (-1)^f*(b)`, or `None` if `f` is not bent.
pub fn bent_dual(f: &TruthTable, p: &PairingSpec) -> Result<Option<TruthTable>> {
    if f.n() % 2 == 1 {
        return Err(invalid(format!(
            "bent functions need even n, got {}",
            f.n()
        )));
    }
    let spectrum = walsh_spectrum(f, p)?;
    if !spectrum.is_flat() {
        return Ok(None);
    }
    let values = spectrum.values();
    Ok(Some(TruthTable::from_fn(f.n(), |b| values[b] < 0)))
}

/// Algebraic normal form and degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Anf {
    pub coefficients: TruthTable,
    pub degree: u32,
}

// Masks selecting the low half of every 2^(i+1)-bit block, i < 6.
const LOW_HALF: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// Binary Moebius transform on the packed words; an involution.
pub fn moebius(f: &TruthTable) -> TruthTable {
    let mut words = f.words.clone();
    for (i, &mask) in LOW_HALF.iter().enumerate().take(f.n.min(6) as usize) {
        let shift = 1 << i;
        for w in words.iter_mut() {
            *w ^= (*w & mask) << shift;
        }
    }
    let mut stride = 1;
    while stride < words.len() {
        for block in words.chunks_mut(2 * stride) {
            let (lo, hi) = block.split_at_mut(stride);
            for (l, h) in lo.iter().zip(hi.iter_mut()) {
                *h ^= *l;
            }
        }
        stride *= 2;
    }
    let mut out = TruthTable { n: f.n, words };
    out.clear_padding();
    out
}

/// ANF coefficients and algebraic degree; the zero function has degree 0.
pub fn anf_degree(f: &TruthTable) -> Anf {
    let coefficients = moebius(f);
    let degree = coefficients
        .support()
        .map(|u| u.count_ones())
        .max()
        .unwrap_or(0);
    Anf {
        coefficients,
        degree,
    }
}
