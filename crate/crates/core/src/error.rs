use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("binomial C({n}, {k}) requested with k > n")]
    BinomialRange { n: u64, k: u64 },

    #[error("{q} is not a power of two")]
    NotPowerOfTwo { q: u64 },

    #[error("({d1}, {d2}, {d3}) is outside the window q/2 < d <= q for q = {q}")]
    OutsideTheoremWindow { d1: u64, d2: u64, d3: u64, q: u64 },

    #[error("reduction needs d1 <= q <= d2, d3; got ({d1}, {d2}, {d3}) with q = {q}")]
    ReductionPrecondition { d1: u64, d2: u64, d3: u64, q: u64 },

    #[error("exponent triple ({d1}, {d2}, {d3}) contains a zero")]
    ZeroExponent { d1: u64, d2: u64, d3: u64 },

    #[error("4*dim - quadric = {value} is not a perfect square for ({d1}, {d2}, {d3})")]
    NonSquareDiscriminant {
        d1: u64,
        d2: u64,
        d3: u64,
        value: i64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
