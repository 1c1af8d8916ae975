//! Exact computation of Hankel determinants for power series given by
//! C-fractions, together with the convergent and orthogonal-polynomial machinery
//! attached to them.

pub mod catalog;
pub mod cfrac;
pub mod closedform;
pub mod error;
pub mod exactalg;
pub mod hankel;
pub mod orthopoly;

pub use catalog::{builtin_series, qbinomial, reconstruct_cfrac, Builtin};
pub use error::{Error, Result};
pub use exactalg::{Monomial, Rational, Scalar, SquareMatrix, Universe, Var};
pub use cfrac::{BSeq, CFrac, Numerators, PowerSeq, PowerSeries, XPoly};
pub use hankel::{hankel_det, hankel_transform, HankelSpec};
