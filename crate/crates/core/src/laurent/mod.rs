//! Exact arithmetic for integer Laurent polynomials and determinants of
//! matrices over them.
//!
//! Everything here is generic over the coefficient ring; the crate root
//! fixes the big-integer instantiation used by the knot computations.

mod det;
mod matrix;
mod poly;
mod ring;

use thiserror::Error;

pub use det::{bareiss_determinant, determinant};
pub use matrix::Matrix;
pub use poly::LaurentPoly;
pub use ring::{Coefficient, ExactDiv, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("the zero polynomial has no normal form")]
    ZeroPolynomial,
    #[error("cannot evaluate a Laurent polynomial at x = 0")]
    ZeroEvaluationPoint,
    #[error("determinant of a non-square {rows}x{cols} matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("inexact division during elimination step {step}")]
    InexactDivision { step: usize },
    #[error("cannot parse polynomial {0:?}")]
    Parse(String),
}
