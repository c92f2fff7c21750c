//! Exact nonsymmetric and symmetric Macdonald-Koornwinder polynomials.
//!
//! The computation follows the alcove-path expansion over a double
//! affine datum `(X, Y)`, and every result can be cross-checked against the
//! polynomial representation of the double affine Hecke algebra.

pub mod ambient;
pub mod coeff;
pub mod denom;
pub mod duality;
pub mod error;
pub mod hecke;
pub mod int;
pub mod linalg;
pub mod names;
pub mod poly;
pub mod qbg;
pub mod ram_yip;
pub mod relations;
pub mod render;
pub mod root_data;
pub mod weyl;
pub mod xpoly;

pub use coeff::{Coeff, CoeffRat};
pub use error::{Error, Result};
pub use int::Int;
pub use poly::{LaurentPoly, Mono, Var};
pub use xpoly::{Wt, XPoly};

/// Polynomials in `X` with exact rational-function coefficients.
pub type RatPoly = XPoly<CoeffRat>;
/// Polynomials in `X` with Laurent-polynomial coefficients (numerators).
pub type LaurentXPoly = XPoly<LaurentPoly>;
