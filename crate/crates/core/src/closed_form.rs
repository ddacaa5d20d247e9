//! Closed-form dimension of `F2[x,y,z]/(x^d1, y^d2, z^d3, x+y+z)`.
//!
//! Three facts cover every triple once it is sorted `d1 <= d2 <= d3`:
//!
//! * if `d1, d2 <= q <= d3` for a power of two `q`, the dimension is `d1 * d2`;
//! * if `d1 <= q <= d2, d3`, it is `d1 * q` plus the dimension for
//!   `(d1, d2 - q, d3 - q)`;
//! * if `q/2 < d1, d2, d3 <= q`, it is
//!   `d1 d2 + d2 d3 + d1 d3 - q (d1 + d2 + d3) + q^2`.
//!
//! [`dimension`] walks powers of two downward from the largest exponent,
//! applying whichever case fits, and records each step.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded_oracle::ExponentTriple;

fn check_power_of_two(q: u64) -> Result<()> {
    if q.is_power_of_two() {
        Ok(())
    } else {
        Err(Error::NotPowerOfTwo { q })
    }
}

/// The polynomial `d1 d2 + d2 d3 + d1 d3 - q (d1 + d2 + d3) + q^2`, evaluated
/// without any window check.
fn window_polynomial(d1: u64, d2: u64, d3: u64, q: u64) -> i128 {
    let (a, b, c, q) = (d1 as i128, d2 as i128, d3 as i128, q as i128);
    a * b + b * c + a * c - q * (a + b + c) + q * q
}

/// Dimension when all three exponents lie in `(q/2, q]`.
pub fn theorem_formula(d1: u64, d2: u64, d3: u64, q: u64) -> Result<u64> {
    check_power_of_two(q)?;
    let inside = |d: u64| q / 2 < d && d <= q;
    if !(inside(d1) && inside(d2) && inside(d3)) {
        return Err(Error::OutsideTheoremWindow { d1, d2, d3, q });
    }
    let v = window_polynomial(d1, d2, d3, q);
    Ok(u64::try_from(v).expect("formula is non-negative inside its window"))
}

/// Dimension when `d1, d2 <= q <= d3` for some power of two `q`: the
/// `(x+y)^d3` generator is redundant and only `x^d1, y^d2` remain.
pub fn prop_i(d1: u64, d2: u64) -> u64 {
    d1 * d2
}

/// One reduction step for `d1 <= q <= d2, d3`: returns the summand `d1 * q`
/// and the triple `(d1, d2 - q, d3 - q)` whose dimension makes up the rest.
pub fn prop_ii_step(d1: u64, d2: u64, d3: u64, q: u64) -> Result<(u64, ExponentTriple)> {
    check_power_of_two(q)?;
    if !(d1 <= q && q <= d2 && q <= d3) {
        return Err(Error::ReductionPrecondition { d1, d2, d3, q });
    }
    Ok((d1 * q, ExponentTriple::new(d1, d2 - q, d3 - q)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    #[serde(rename = "SKIP")]
    Skip,
    #[serde(rename = "PROP_I")]
    PropI,
    #[serde(rename = "PROP_II")]
    PropII,
    #[serde(rename = "THEOREM")]
    Theorem,
}

impl Branch {
    pub fn is_terminal(self) -> bool {
        matches!(self, Branch::PropI | Branch::Theorem)
    }
}

/// One iteration of the power-of-two descent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchStep {
    /// The loop's power of two; strictly decreasing along a trace.
    pub q: u64,
    pub branch: Branch,
    /// The power of two the summand was evaluated at. Equal to `q`, except
    /// for `THEOREM`, where the sorted exponents lie in `[q, 2q)` and the
    /// window formula is taken at `2q`.
    pub window: u64,
    pub summand: u64,
    pub triple_after: ExponentTriple,
}

/// `2 * e` for the half-integer deviation `e >= 0` with
/// `dim = quadric / 4 + e^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Deviation {
    pub doubled: u64,
}

impl Deviation {
    pub fn is_integer(self) -> bool {
        self.doubled.is_multiple_of(2)
    }
}

impl fmt::Display for Deviation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub triple: ExponentTriple,
    pub dimension: u64,
    pub trace: Vec<BranchStep>,
    /// `None` only if `4 * dimension - quadric` fails to be a perfect square,
    /// which would mean the closed form is wrong.
    pub deviation_doubled: Option<u64>,
}

impl DimensionReport {
    pub fn deviation(&self) -> Option<Deviation> {
        self.deviation_doubled.map(|doubled| Deviation { doubled })
    }
}

/// `2 d1 d2 + 2 d1 d3 + 2 d2 d3 - d1^2 - d2^2 - d3^2`.
pub fn quadric(t: ExponentTriple) -> i128 {
    let (a, b, c) = (t.d1 as i128, t.d2 as i128, t.d3 as i128);
    2 * (a * b + a * c + b * c) - a * a - b * b - c * c
}

fn doubled_deviation(t: ExponentTriple, dim: u64) -> Result<u64> {
    let disc = 4 * dim as i128 - quadric(t);
    let non_square = || Error::NonSquareDiscriminant {
        d1: t.d1,
        d2: t.d2,
        d3: t.d3,
        value: disc.clamp(i64::MIN as i128, i64::MAX as i128) as i64,
    };
    let disc = u128::try_from(disc).map_err(|_| non_square())?;
    let root = disc.isqrt();
    if root * root != disc {
        return Err(non_square());
    }
    Ok(root as u64)
}

/// Dimension by descending over powers of two.
///
/// At each `q = 2^i`, from `i = floor(log2(max))` down to 0, the triple is
/// re-sorted and:
///
/// * all three `< q`: nothing happens (`SKIP`);
/// * `d1, d2 < q <= d3`: add `d1 d2` and stop (`PROP_I`);
/// * `d1 < q <= d2, d3`: add `d1 q`, continue with `(d1, d2 - q, d3 - q)` (`PROP_II`);
/// * `q <= d1, d2, d3`: add the window formula at `2q` and stop (`THEOREM`).
///
/// A zero exponent, initially or after a reduction, contributes nothing and
/// ends the descent.
pub fn dimension(t: ExponentTriple) -> DimensionReport {
    let mut trace = Vec::new();
    let mut total: u64 = 0;

    if !t.has_zero() {
        let mut cur = t.sorted();
        let mut i = cur.max().ilog2() as i64;
        while i >= 0 {
            cur = cur.sorted();
            let q = 1u64 << i;
            let ExponentTriple { d1, d2, d3 } = cur;
            let step = if d3 < q {
                BranchStep {
                    q,
                    branch: Branch::Skip,
                    window: q,
                    summand: 0,
                    triple_after: cur,
                }
            } else if d2 < q {
                BranchStep {
                    q,
                    branch: Branch::PropI,
                    window: q,
                    summand: prop_i(d1, d2),
                    triple_after: cur,
                }
            } else if d1 < q {
                let (summand, next) =
                    prop_ii_step(d1, d2, d3, q).expect("branch guard implies d1 < q <= d2, d3");
                cur = next;
                BranchStep {
                    q,
                    branch: Branch::PropII,
                    window: q,
                    summand,
                    triple_after: next,
                }
            } else {
                // q <= d1 <= d2 <= d3 < 2q. When d1 = q the window is closed
                // on the left, but the polynomial still equals q^2 + (d2-q)(d3-q),
                // which is what one reduction step followed by d1 d2 gives.
                let window = 2 * q;
                let v = window_polynomial(d1, d2, d3, window);
                BranchStep {
                    q,
                    branch: Branch::Theorem,
                    window,
                    summand: u64::try_from(v).expect("non-negative on [q, 2q)"),
                    triple_after: cur,
                }
            };
            total += step.summand;
            trace.push(step);
            if step.branch.is_terminal() || cur.has_zero() {
                break;
            }
            i -= 1;
        }
    }

    DimensionReport {
        triple: t,
        dimension: total,
        trace,
        deviation_doubled: doubled_deviation(t, total).ok(),
    }
}

/// The half-integer `e >= 0` with `dim = quadric / 4 + e^2`.
pub fn deviation(t: ExponentTriple) -> Result<Deviation> {
    if t.has_zero() {
        return Err(Error::ZeroExponent {
            d1: t.d1,
            d2: t.d2,
            d3: t.d3,
        });
    }
    let dim = dimension(t).dimension;
    doubled_deviation(t, dim).map(|doubled| Deviation { doubled })
}
