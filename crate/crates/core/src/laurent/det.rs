use super::matrix::Matrix;
use super::poly::LaurentPoly;
use super::ring::{Coefficient, ExactDiv};
use super::LaurentError;

/// Fraction-free (Bareiss) determinant over an integral domain.
///
/// Every intermediate entry is a minor of the input, so each division by the
/// previous pivot is exact; a nonzero remainder means the ring arithmetic is
/// broken and is reported rather than rounded away.
pub fn bareiss_determinant<T: ExactDiv>(m: &Matrix<T>) -> Result<T, LaurentError> {
    if !m.is_square() {
        return Err(LaurentError::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(T::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return Ok(T::zero()),
            }
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            let lead = a[(i, k)].clone();
            for j in k + 1..n {
                let cross = a[(i, j)].clone() * pivot.clone() - lead.clone() * a[(k, j)].clone();
                a[(i, j)] = cross.div_exact(&prev).ok_or(LaurentError::InexactDivision { step: k })?;
            }
            a[(i, k)] = T::zero();
        }
        prev = pivot;
    }
    let det = a[(n - 1, n - 1)].clone();
    Ok(if negate { -det } else { det })
}

/// Exact determinant of a Laurent polynomial matrix.
///
/// Each row is multiplied by `x^k` so its lowest exponent becomes zero, the
/// resulting polynomial matrix goes through [`bareiss_determinant`], and the
/// accumulated `x^(sum k)` is divided back out.
pub fn determinant<C: Coefficient>(m: &Matrix<LaurentPoly<C>>) -> Result<LaurentPoly<C>, LaurentError> {
    if !m.is_square() {
        return Err(LaurentError::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let mut shifted = m.clone();
    let mut total_shift = 0i32;
    for i in 0..m.rows() {
        let Some(low) = m.row(i).iter().filter_map(LaurentPoly::min_exponent).min() else {
            return Ok(LaurentPoly::zero());
        };
        for j in 0..m.cols() {
            shifted[(i, j)] = m[(i, j)].shift(-low);
        }
        total_shift += low;
    }
    Ok(bareiss_determinant(&shifted)?.shift(total_shift))
}
