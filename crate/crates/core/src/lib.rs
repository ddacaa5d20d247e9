//! Exact dimensions of `F2[x,y,z]/(x^d1, y^d2, z^d3, x+y+z)`.
//!
//! Two independent routes are provided: [`closed_form::dimension`], a
//! power-of-two descent with closed formulas at each level, and
//! [`graded_oracle::dimension_oracle`], which computes the Hilbert function
//! degree by degree with rank computations over GF(2).

pub mod binary_forms;
pub mod closed_form;
pub mod error;
pub mod gf2_linalg;
pub mod graded_oracle;

pub use binary_forms::{binomial_mod2, multiply_row, power_row, BinaryRow};
pub use closed_form::{
    deviation, dimension, prop_i, prop_ii_step, quadric, theorem_formula, Branch, BranchStep,
    Deviation, DimensionReport,
};
pub use error::{Error, Result};
pub use gf2_linalg::{BitMatrix, BitVec};
pub use graded_oracle::{
    colon_min_degree, dimension_oracle, hilbert_function_oracle, successive_quotient_dim,
    ExponentTriple, HilbertFunction, MonomialBasis,
};
