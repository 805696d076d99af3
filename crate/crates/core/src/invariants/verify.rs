use serde::{Deserialize, Serialize};

use super::{det_as_i64, integer_det, to_laurent, InvariantBundle, InvariantError};
use crate::diagram::LongKnotDiagram;
use crate::{Laurent, LaurentMatrix};

/// A failed check: where, what was expected, what was found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of `beta = s x^{-l} Delta`. `sign` is `0` when neither sign works.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub holds: bool,
    pub sign: i8,
    pub l: usize,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropositionCheck {
    pub holds: bool,
    /// `Sigma A W S X^{-(1+S)/2}`.
    pub lhs: LaurentMatrix,
    /// `I + T^t (I - X^{-S})`.
    pub rhs: LaurentMatrix,
    pub mismatches: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    /// Diagonal of `A W` against `d_j x^{(1+S_j)/2}`.
    pub lemma1_holds: bool,
    /// Off-diagonal of `A W` against `sigma_i (x - 1) T_ji`.
    pub lemma2_holds: bool,
    pub product: LaurentMatrix,
    pub witnesses: Vec<Witness>,
}

/// Combined outcome of every check on one diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem_holds: bool,
    pub sign: i8,
    pub l: usize,
    pub proposition_holds: bool,
    pub lemma1_holds: bool,
    pub lemma2_holds: bool,
    #[serde(rename = "detW")]
    pub det_w: i64,
    pub failures: Vec<Witness>,
}

impl VerificationReport {
    /// True when every check passed, including `det W = ±1`.
    pub fn all_hold(&self) -> bool {
        self.theorem_holds
            && self.proposition_holds
            && self.lemma1_holds
            && self.lemma2_holds
            && self.det_w.abs() == 1
            && self.failures.is_empty()
    }
}

fn check_theorem(b: &InvariantBundle) -> TheoremCheck {
    let scaled = b.delta.shift(-(b.l as i32));
    let sign = if b.beta == scaled {
        1
    } else if b.beta == -scaled.clone() {
        -1
    } else {
        0
    };
    let witness = (sign == 0).then(|| Witness {
        location: "theorem".into(),
        expected: format!("±x^-{} * ({})", b.l, b.delta),
        actual: b.beta.to_string(),
    });
    TheoremCheck { holds: sign != 0, sign, l: b.l, witness }
}

fn check_proposition(b: &InvariantBundle) -> PropositionCheck {
    let lhs =
        to_laurent(&b.sigma).matmul(&b.a).matmul(&to_laurent(&b.w)).matmul(&to_laurent(&b.s)).matmul(&b.x_neg_half);
    let rhs = b.transposed_beta_matrix();
    let mismatches: Vec<Witness> = lhs
        .mismatches(&rhs)
        .map(|(i, j)| Witness {
            location: format!("proposition ({}, {})", i + 1, j + 1),
            expected: rhs[(i, j)].to_string(),
            actual: lhs[(i, j)].to_string(),
        })
        .collect();
    PropositionCheck { holds: mismatches.is_empty(), lhs, rhs, mismatches }
}

fn check_lemmas(b: &InvariantBundle) -> LemmaCheck {
    let product = b.a.matmul(&to_laurent(&b.w));
    let x_minus_one: Laurent = Laurent::from_coeffs(0, &[-1, 1]);
    let mut witnesses = Vec::new();
    let (mut lemma1, mut lemma2) = (true, true);
    for i in 0..b.n {
        for j in 0..b.n {
            let (sigma_i, _, _) = b.signs(i);
            let expected = if i == j {
                let (_, d, s) = b.signs(j);
                Laurent::from_coeffs(((1 + s) / 2) as i32, &[d])
            } else {
                x_minus_one.scale(&(sigma_i * b.t[(j, i)]).into())
            };
            if product[(i, j)] != expected {
                let lemma = if i == j { 1 } else { 2 };
                if i == j {
                    lemma1 = false;
                } else {
                    lemma2 = false;
                }
                witnesses.push(Witness {
                    location: format!("lemma {lemma} (AW)({}, {})", i + 1, j + 1),
                    expected: expected.to_string(),
                    actual: product[(i, j)].to_string(),
                });
            }
        }
    }
    LemmaCheck { lemma1_holds: lemma1, lemma2_holds: lemma2, product, witnesses }
}

/// Discovers the sign `s` with `beta = s x^{-l} Delta`, where `l` counts the
/// crossings with `S = +1`.
pub fn verify_theorem(lk: &LongKnotDiagram) -> Result<TheoremCheck, InvariantError> {
    Ok(check_theorem(&InvariantBundle::compute(lk)?))
}

/// Compares `Sigma A W S X^{-(1+S)/2}` with `I + T^t (I - X^{-S})` entry by
/// entry.
pub fn verify_proposition(lk: &LongKnotDiagram) -> Result<PropositionCheck, InvariantError> {
    Ok(check_proposition(&InvariantBundle::compute(lk)?))
}

/// Entrywise check of `A W`: diagonal `d_j x^{(1+S_j)/2}`, off-diagonal
/// `sigma_i (x - 1) T_ji`.
pub fn verify_lemmas(lk: &LongKnotDiagram) -> Result<LemmaCheck, InvariantError> {
    Ok(check_lemmas(&InvariantBundle::compute(lk)?))
}

/// `det W`, which must be `±1`.
pub fn det_w_unit(lk: &LongKnotDiagram) -> Result<i64, InvariantError> {
    let bundle = InvariantBundle::compute(lk)?;
    let det = integer_det(&bundle.w)?;
    let value = det_as_i64(&det);
    if value.abs() != 1 {
        return Err(InvariantError::DetWNotUnit(det.to_string()));
    }
    Ok(value)
}

/// Runs every check against an already assembled bundle.
pub fn verify_bundle(b: &InvariantBundle) -> Result<VerificationReport, InvariantError> {
    let theorem = check_theorem(b);
    let proposition = check_proposition(b);
    let lemmas = check_lemmas(b);
    let det = integer_det(&b.w)?;
    let det_w = det_as_i64(&det);

    let mut failures = Vec::new();
    failures.extend(theorem.witness);
    failures.extend(proposition.mismatches);
    failures.extend(lemmas.witnesses);
    if det_w.abs() != 1 {
        failures.push(Witness { location: "det W".into(), expected: "±1".into(), actual: det.to_string() });
    }
    Ok(VerificationReport {
        theorem_holds: theorem.holds,
        sign: theorem.sign,
        l: theorem.l,
        proposition_holds: proposition.holds,
        lemma1_holds: lemmas.lemma1_holds,
        lemma2_holds: lemmas.lemma2_holds,
        det_w,
        failures,
    })
}

pub fn verify(lk: &LongKnotDiagram) -> Result<VerificationReport, InvariantError> {
    verify_bundle(&InvariantBundle::compute(lk)?)
}
