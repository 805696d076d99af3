//! Exact invariants of long-knot diagrams.
//!
//! A knot diagram is read in PD form (or built from a braid word), cut open
//! at a basepoint edge, and turned into integer and Laurent polynomial
//! matrices: the span traversal matrix `T`, the crossing sign matrices, the
//! Alexander incidence matrix `A` and the winding matrix `W`. From these the
//! crate computes `beta = det(I + T(I - X^{-S}))` and `Delta = det A` and
//! checks, exactly, the identity `beta = ±x^{-l} Delta` together with the
//! matrix identity and entrywise lemmas behind it.
//!
//! The arithmetic core is generic over the coefficient ring; the aliases
//! below fix the big-integer instantiation the knot computations use.

pub mod diagram;
pub mod fixtures;
pub mod invariants;
pub mod laurent;
pub mod planar;
pub mod random;

use num_bigint::BigInt;

pub use diagram::{BraidWord, ClosedDiagram, Corner, Diagnostic, DiagramError, LongKnotDiagram};
pub use invariants::{InvariantBundle, InvariantError, VerificationReport};
pub use laurent::{LaurentError, LaurentPoly, Matrix};

/// Laurent polynomial with arbitrary-precision integer coefficients.
pub type Laurent = LaurentPoly<BigInt>;

/// Dense matrix of [`Laurent`] entries.
pub type LaurentMatrix = Matrix<Laurent>;

/// Dense integer matrix (`T`, `W`, and the sign diagonals).
pub type IntMatrix = Matrix<i64>;
