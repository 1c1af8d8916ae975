//! Exact arithmetic: rationals, sparse multivariate polynomials over `Q`, and
//! fraction-free determinants.

mod matrix;
mod monomial;
mod parse;
mod scalar;

pub use matrix::{det_fraction_free, SquareMatrix};
pub use monomial::{Monomial, Var};
pub use parse::Universe;
pub use scalar::{Rational, Scalar};
