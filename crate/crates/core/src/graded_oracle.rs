//! Brute-force dimensions by graded linear algebra.
//!
//! Substituting `z = x + y` identifies `F2[x,y,z]/(x^d1, y^d2, z^d3, x+y+z)`
//! with `F2[x,y]/(x^d1, y^d2, (x+y)^d3)`. Everything here works in the
//! two-variable ring one degree at a time: the degree-`D` piece of
//! `F2[x,y]/(x^d1, y^d2)` has a monomial basis, and the multiples of
//! `(x+y)^d3` landing in degree `D` span a subspace whose rank is subtracted.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::binary_forms::{multiply_row, power_row, BinaryRow};
use crate::error::{Error, Result};
use crate::gf2_linalg::{BitMatrix, BitVec};

/// Exponents `(d1, d2, d3)` of `x`, `y` and `z`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[u64; 3]", into = "[u64; 3]")]
pub struct ExponentTriple {
    pub d1: u64,
    pub d2: u64,
    pub d3: u64,
}

impl ExponentTriple {
    pub const fn new(d1: u64, d2: u64, d3: u64) -> Self {
        ExponentTriple { d1, d2, d3 }
    }

    /// The same exponents in non-decreasing order.
    pub fn sorted(self) -> Self {
        let mut a = self.to_array();
        a.sort_unstable();
        a.into()
    }

    pub fn to_array(self) -> [u64; 3] {
        [self.d1, self.d2, self.d3]
    }

    pub fn has_zero(self) -> bool {
        self.d1 == 0 || self.d2 == 0 || self.d3 == 0
    }

    pub fn max(self) -> u64 {
        self.d1.max(self.d2).max(self.d3)
    }

    /// All six orderings, with repeats when entries coincide.
    pub fn permutations(self) -> [ExponentTriple; 6] {
        let [a, b, c] = self.to_array();
        [
            ExponentTriple::new(a, b, c),
            ExponentTriple::new(a, c, b),
            ExponentTriple::new(b, a, c),
            ExponentTriple::new(b, c, a),
            ExponentTriple::new(c, a, b),
            ExponentTriple::new(c, b, a),
        ]
    }
}

impl From<[u64; 3]> for ExponentTriple {
    fn from([d1, d2, d3]: [u64; 3]) -> Self {
        ExponentTriple { d1, d2, d3 }
    }
}

impl From<ExponentTriple> for [u64; 3] {
    fn from(t: ExponentTriple) -> Self {
        t.to_array()
    }
}

impl fmt::Debug for ExponentTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.d1, self.d2, self.d3)
    }
}

impl fmt::Display for ExponentTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Standard monomials of degree `D` in `F2[x,y]/(x^d1, y^d2)`:
/// `{x^i y^(D-i) : lo <= i <= hi}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    pub degree: usize,
    pub lo: usize,
    pub hi: usize,
    empty: bool,
}

impl MonomialBasis {
    pub fn new(d1: usize, d2: usize, degree: usize) -> Self {
        let lo = (degree + 1).saturating_sub(d2);
        let empty = d1 == 0 || d2 == 0 || lo > degree.min(d1 - 1);
        let hi = if d1 == 0 { 0 } else { degree.min(d1 - 1) };
        MonomialBasis {
            degree,
            lo,
            hi,
            empty,
        }
    }

    pub fn size(&self) -> usize {
        if self.empty {
            0
        } else {
            self.hi - self.lo + 1
        }
    }

    /// Coordinate of `x^i y^(D-i)`, or `None` if it lies in `(x^d1, y^d2)`.
    #[inline]
    pub fn index_of(&self, i: usize) -> Option<usize> {
        (!self.empty && (self.lo..=self.hi).contains(&i)).then(|| i - self.lo)
    }

    /// Coordinates of a degree-`D` form modulo `(x^d1, y^d2)`.
    pub fn reduce(&self, form: &BinaryRow) -> BitVec {
        debug_assert_eq!(form.degree(), self.degree);
        let mut v = BitVec::zeros(self.size());
        for k in form.support() {
            if let Some(c) = self.index_of(k) {
                v.set(c, true);
            }
        }
        v
    }
}

/// Dimensions of the graded pieces, indexed by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HilbertFunction {
    pub values: Vec<u64>,
}

impl HilbertFunction {
    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }

    pub fn get(&self, degree: usize) -> u64 {
        self.values.get(degree).copied().unwrap_or(0)
    }
}

fn as_index(d: u64) -> usize {
    usize::try_from(d).expect("exponent does not fit in memory-addressable range")
}

/// Relations in degree `degree`: the multiples `x^a y^b (x+y)^d3` with
/// `a + b = degree - d3`, reduced into `basis` coordinates.
fn relation_matrix(power: &BinaryRow, basis: &MonomialBasis) -> BitMatrix {
    let d3 = power.degree();
    let mut m = BitMatrix::with_columns(basis.size());
    let Some(span) = basis.degree.checked_sub(d3) else {
        return m;
    };
    if basis.size() == 0 {
        return m;
    }
    // x^a (x+y)^d3 has x-exponents in [a, a + d3]; skip shifts that miss the window.
    let first = basis.lo.saturating_sub(d3);
    let last = span.min(basis.hi);
    for a in first..=last {
        let row = basis.reduce(&multiply_row(power, a, span - a));
        if !row.is_zero() {
            m.push_row(&row).expect("row built with basis width");
        }
    }
    m
}

/// Hilbert function of `F2[x,y,z]/(x^d1, y^d2, z^d3, x+y+z)`, by rank
/// computation in the isomorphic two-variable quotient.
///
/// Empty when some exponent is zero.
pub fn hilbert_function_oracle(t: ExponentTriple) -> HilbertFunction {
    if t.has_zero() {
        return HilbertFunction::default();
    }
    let (d1, d2, d3) = (as_index(t.d1), as_index(t.d2), as_index(t.d3));
    let power = power_row(d3);
    let top = d1 + d2 - 2;
    let values = (0..=top)
        .map(|degree| {
            let basis = MonomialBasis::new(d1, d2, degree);
            let rank = relation_matrix(&power, &basis).into_rank();
            (basis.size() - rank) as u64
        })
        .collect();
    HilbertFunction { values }
}

/// `dim_F2 F2[x,y,z]/(x^d1, y^d2, z^d3, x+y+z)` by brute force.
pub fn dimension_oracle(t: ExponentTriple) -> u64 {
    hilbert_function_oracle(t).total()
}

/// `dim J_t / J_(t+1)` for `J_t = (x^d1, y^d2, (x+y)^t)`, read off the
/// short exact sequence `0 -> J_t/J_(t+1) -> R/J_(t+1) -> R/J_t -> 0`.
pub fn successive_quotient_dim(d1: u64, d2: u64, t: u64) -> u64 {
    let wider = dimension_oracle(ExponentTriple::new(d1, d2, t + 1));
    let narrower = dimension_oracle(ExponentTriple::new(d1, d2, t));
    wider - narrower
}

/// Multiplication by `(x+y)^d3` from degree `degree` to `degree + d3` of
/// `F2[x,y]/(x^d1, y^d2)`, one row per source basis monomial.
fn multiplication_matrix(power: &BinaryRow, d1: usize, d2: usize, degree: usize) -> BitMatrix {
    let source = MonomialBasis::new(d1, d2, degree);
    let target = MonomialBasis::new(d1, d2, degree + power.degree());
    let mut m = BitMatrix::with_columns(target.size());
    if source.size() == 0 {
        return m;
    }
    for i in source.lo..=source.hi {
        let image = multiply_row(power, i, degree - i);
        m.push_row(&target.reduce(&image))
            .expect("row built with basis width");
    }
    m
}

/// Lowest degree in which `(x^d1, y^d2 : (x+y)^d3)` is strictly larger than
/// `(x^d1, y^d2)`.
///
/// In each degree the colon modulo `(x^d1, y^d2)` is the kernel of
/// multiplication by `(x+y)^d3`, so this is the first degree with a nonzero
/// kernel. Returns 0 when `(x+y)^d3` already lies in `(x^d1, y^d2)`.
pub fn colon_min_degree(t: ExponentTriple) -> Result<u64> {
    if t.has_zero() {
        return Err(Error::ZeroExponent {
            d1: t.d1,
            d2: t.d2,
            d3: t.d3,
        });
    }
    let (d1, d2, d3) = (as_index(t.d1), as_index(t.d2), as_index(t.d3));
    let power = power_row(d3);
    // The socle x^(d1-1) y^(d2-1) is always killed, so the loop returns.
    for degree in 0..=d1 + d2 - 2 {
        let m = multiplication_matrix(&power, d1, d2, degree);
        let size = m.nrows();
        if m.into_rank() < size {
            return Ok(degree as u64);
        }
    }
    unreachable!("socle degree has a nonzero kernel")
}
