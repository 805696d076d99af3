//! The span-matrix invariant `beta`, the Alexander polynomial `Delta`, and
//! executable checks of the identities that connect them through the
//! winding matrix.

mod verify;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{DiagramError, LongKnotDiagram};
use crate::laurent::{bareiss_determinant, determinant, LaurentError};
use crate::planar::{alexander_matrix, sign_data, traversal_matrix, winding_matrix, MarkingScheme, PlanarError};
use crate::{IntMatrix, Laurent, LaurentMatrix};

pub use verify::{
    det_w_unit, verify, verify_bundle, verify_lemmas, verify_proposition, verify_theorem, LemmaCheck, PropositionCheck,
    TheoremCheck, VerificationReport, Witness,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Planar(#[from] PlanarError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("det W = {0}, expected a unit")]
    DetWNotUnit(String),
}

/// Every matrix the invariants are built from, for one numbered long knot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    pub n: usize,
    #[serde(rename = "T")]
    pub t: IntMatrix,
    #[serde(rename = "Sigma")]
    pub sigma: IntMatrix,
    #[serde(rename = "D")]
    pub d: IntMatrix,
    #[serde(rename = "S")]
    pub s: IntMatrix,
    /// `X^{-S}`.
    #[serde(rename = "X_neg_S")]
    pub x_neg_s: LaurentMatrix,
    /// `X^{-(1+S)/2}`.
    #[serde(rename = "X_neg_half_1_plus_S")]
    pub x_neg_half: LaurentMatrix,
    #[serde(rename = "A")]
    pub a: LaurentMatrix,
    #[serde(rename = "W")]
    pub w: IntMatrix,
    pub beta: Laurent,
    pub delta: Laurent,
    /// Number of crossings with `S = +1`.
    pub l: usize,
}

impl InvariantBundle {
    pub fn compute(lk: &LongKnotDiagram) -> Result<Self, InvariantError> {
        let n = lk.crossing_count();
        let signs = sign_data(lk);
        let diag = |v: &[i8]| IntMatrix::diagonal(v.iter().map(|&e| i64::from(e)).collect());
        let t = traversal_matrix(lk);
        let x_neg_s = LaurentMatrix::diagonal(signs.svec.iter().map(|&s| Laurent::x_pow(-i32::from(s))).collect());
        let x_neg_half =
            LaurentMatrix::diagonal(signs.svec.iter().map(|&s| Laurent::x_pow(-(1 + i32::from(s)) / 2)).collect());
        let a = alexander_matrix(lk, MarkingScheme::Modified)?;
        let w = winding_matrix(lk)?;
        let beta = determinant(&beta_matrix(&t, &x_neg_s))?;
        let delta = determinant(&a)?;
        Ok(Self {
            n,
            sigma: diag(&signs.sigma),
            d: diag(&signs.dvec),
            s: diag(&signs.svec),
            t,
            x_neg_s,
            x_neg_half,
            a,
            w,
            beta,
            delta,
            l: signs.positive_s_count(),
        })
    }

    /// Flips one entry of `T` and recomputes `beta` from it. Exists to drive
    /// the failure paths of the verifiers.
    pub fn with_corrupted_t(mut self, i: usize, j: usize) -> Result<Self, InvariantError> {
        if i >= self.n || j >= self.n {
            return Err(PlanarError::Internal(format!("T entry ({i}, {j}) out of range")).into());
        }
        self.t[(i, j)] = 1 - self.t[(i, j)];
        self.beta = determinant(&beta_matrix(&self.t, &self.x_neg_s))?;
        Ok(self)
    }

    /// Diagonal entry `i` of the sign matrices as `(sigma, d, S)`.
    pub fn signs(&self, i: usize) -> (i64, i64, i64) {
        (self.sigma[(i, i)], self.d[(i, i)], self.s[(i, i)])
    }

    /// `I + T (I - X^{-S})`.
    pub fn beta_matrix(&self) -> LaurentMatrix {
        beta_matrix(&self.t, &self.x_neg_s)
    }

    /// `I + T^t (I - X^{-S})`.
    pub fn transposed_beta_matrix(&self) -> LaurentMatrix {
        beta_matrix(&self.t.transpose(), &self.x_neg_s)
    }
}

pub(crate) fn to_laurent(m: &IntMatrix) -> LaurentMatrix {
    m.map(|&v| Laurent::constant(BigInt::from(v)))
}

fn beta_matrix(t: &IntMatrix, x_neg_s: &LaurentMatrix) -> LaurentMatrix {
    let n = t.rows();
    let id = LaurentMatrix::identity(n);
    id.add(&to_laurent(t).matmul(&id.sub(x_neg_s)))
}

/// `det(I + T (I - X^{-S}))`.
pub fn beta(lk: &LongKnotDiagram) -> Result<Laurent, InvariantError> {
    let signs = sign_data(lk);
    let x_neg_s = LaurentMatrix::diagonal(signs.svec.iter().map(|&s| Laurent::x_pow(-i32::from(s))).collect());
    Ok(determinant(&beta_matrix(&traversal_matrix(lk), &x_neg_s))?)
}

/// Determinant of the modified-scheme Alexander matrix. The 0-crossing long
/// knot has an empty matrix, whose determinant is 1.
pub fn delta(lk: &LongKnotDiagram) -> Result<Laurent, InvariantError> {
    Ok(determinant(&alexander_matrix(lk, MarkingScheme::Modified)?)?)
}

pub(crate) fn integer_det(m: &IntMatrix) -> Result<BigInt, InvariantError> {
    Ok(bareiss_determinant(&m.map(|&v| BigInt::from(v)))?)
}

pub(crate) fn det_as_i64(det: &BigInt) -> i64 {
    det.to_i64().unwrap_or(if det.sign() == num_bigint::Sign::Minus { i64::MIN } else { i64::MAX })
}
