//! Homogeneous forms in two variables over F2.
//!
//! A form of degree `n` is stored as its coefficient bits: bit `k` is the
//! coefficient of `x^k y^(n-k)`.

use crate::error::{Error, Result};
use crate::gf2_linalg::BitVec;

/// `C(n, k) mod 2`, via the carry criterion: odd iff `k & (n - k) == 0`.
pub fn binomial_mod2(n: u64, k: u64) -> Result<bool> {
    if k > n {
        return Err(Error::BinomialRange { n, k });
    }
    Ok(k & (n - k) == 0)
}

/// A homogeneous binary form of fixed degree over F2.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BinaryRow {
    degree: usize,
    coeffs: BitVec,
}

impl BinaryRow {
    pub fn zero(degree: usize) -> Self {
        BinaryRow {
            degree,
            coeffs: BitVec::zeros(degree + 1),
        }
    }

    /// The monomial `x^a y^b`.
    pub fn monomial(a: usize, b: usize) -> Self {
        let mut r = BinaryRow::zero(a + b);
        r.coeffs.set(a, true);
        r
    }

    /// Wraps a coefficient vector; its length fixes the degree (`len - 1`).
    ///
    /// Panics on an empty vector, which has no degree.
    pub fn from_coeffs(coeffs: BitVec) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a form of degree n has n + 1 coefficients"
        );
        BinaryRow {
            degree: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        BinaryRow::from_coeffs(BitVec::from_bits(bits))
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn coeffs(&self) -> &BitVec {
        &self.coeffs
    }

    /// Coefficient of `x^k y^(degree - k)`.
    #[inline]
    pub fn coeff(&self, k: usize) -> bool {
        self.coeffs.get(k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Value at `(1, 1)`: the parity of the number of terms.
    pub fn eval_at_one(&self) -> bool {
        self.coeffs.count_ones() % 2 == 1
    }

    /// Sum of two forms of the same degree.
    pub fn add(&self, other: &BinaryRow) -> Result<BinaryRow> {
        let mut coeffs = self.coeffs.clone();
        coeffs.xor_assign(&other.coeffs)?;
        Ok(BinaryRow {
            degree: self.degree,
            coeffs,
        })
    }

    /// Product of two forms; degrees add.
    pub fn mul(&self, other: &BinaryRow) -> BinaryRow {
        let mut out = BinaryRow::zero(self.degree + other.degree);
        for i in self.coeffs.ones() {
            for j in other.coeffs.ones() {
                out.coeffs.flip(i + j);
            }
        }
        out
    }

    /// Exponents of `x` appearing with coefficient 1, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.ones()
    }
}

/// Coefficient row of `(x + y)^n` over F2.
pub fn power_row(n: usize) -> BinaryRow {
    let mut r = BinaryRow::zero(n);
    for k in 0..=n {
        if k & (n - k) == 0 {
            r.coeffs.set(k, true);
        }
    }
    r
}

/// `x^a y^b * r`: the degree grows by `a + b` and every bit moves up by `a`.
pub fn multiply_row(r: &BinaryRow, a: usize, b: usize) -> BinaryRow {
    let mut out = BinaryRow::zero(r.degree + a + b);
    for k in r.coeffs.ones() {
        out.coeffs.set(k + a, true);
    }
    out
}
