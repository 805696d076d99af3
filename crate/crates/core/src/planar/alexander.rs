use serde::{Deserialize, Serialize};

use super::faces::{faces, FaceSet};
use super::PlanarError;
use crate::diagram::LongKnotDiagram;
use crate::laurent::LaurentPoly;
use crate::{Laurent, LaurentMatrix};

/// Which corner-marking convention fills the incidence matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum MarkingScheme {
    /// Read along the over-strand: `-x` then `x` on its right, `1` then `-1`
    /// on its left.
    #[default]
    Modified,
    /// Read along the under-strand: `-x` then `x` on its left, `1` then `-1`
    /// on its right.
    Classical,
}

/// Marking of corner `quadrant` as `(sign, power of x)`.
///
/// With slot 0 at the bottom, the under-strand runs upward (slot 0 to 2) and
/// quadrants 0..=3 are the lower-right, upper-right, upper-left and lower-left
/// corners. A positive crossing carries the over-strand left to right (slot 3
/// to 1), so its right side is the bottom: lower-left `-x`, lower-right `x`,
/// upper-left `1`, upper-right `-1`. A negative crossing runs right to left
/// and its right side is the top: upper-right `-x`, upper-left `x`,
/// lower-right `1`, lower-left `-1`. The classical scheme only looks at the
/// under-strand, whose left is the left column: lower-left `-x`, upper-left
/// `x`, lower-right `1`, upper-right `-1`, whatever the sign.
const fn marking(scheme: MarkingScheme, positive: bool, quadrant: usize) -> (i8, i32) {
    const MODIFIED_POSITIVE: [(i8, i32); 4] = [(1, 1), (-1, 0), (1, 0), (-1, 1)];
    const MODIFIED_NEGATIVE: [(i8, i32); 4] = [(1, 0), (-1, 1), (1, 1), (-1, 0)];
    const CLASSICAL: [(i8, i32); 4] = [(1, 0), (-1, 0), (1, 1), (-1, 1)];
    match (scheme, positive) {
        (MarkingScheme::Modified, true) => MODIFIED_POSITIVE[quadrant],
        (MarkingScheme::Modified, false) => MODIFIED_NEGATIVE[quadrant],
        (MarkingScheme::Classical, _) => CLASSICAL[quadrant],
    }
}

fn marking_poly(scheme: MarkingScheme, positive: bool, quadrant: usize) -> Laurent {
    let (sign, power) = marking(scheme, positive, quadrant);
    LaurentPoly::from_coeffs(power, &[sign as i64])
}

/// Crossing-by-region incidence matrix over all `n + 2` faces.
///
/// Columns are the bounded regions `1..=n` followed by the two unbounded
/// faces; `column_faces` records the face behind each column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FullAlexanderMatrix {
    pub matrix: LaurentMatrix,
    pub column_faces: Vec<usize>,
    #[serde(skip)]
    faces: FaceSet,
}

impl FullAlexanderMatrix {
    /// Deletes columns `a` and `b`, which must belong to faces sharing an edge.
    pub fn delete_columns(&self, a: usize, b: usize) -> Result<LaurentMatrix, PlanarError> {
        let cols = self.column_faces.len();
        if a >= cols || b >= cols {
            return Err(PlanarError::ColumnOutOfRange { column: a.max(b), columns: cols });
        }
        if !self.faces.adjacent(self.column_faces[a], self.column_faces[b]) {
            return Err(PlanarError::NotAdjacent { a, b });
        }
        Ok(self.matrix.without_columns(&[a, b]))
    }

    /// All column pairs `(a, b)`, `a < b`, whose faces are adjacent.
    pub fn adjacent_pairs(&self) -> Vec<(usize, usize)> {
        let cols = self.column_faces.len();
        let mut pairs = Vec::new();
        for a in 0..cols {
            for b in a + 1..cols {
                if self.faces.adjacent(self.column_faces[a], self.column_faces[b]) {
                    pairs.push((a, b));
                }
            }
        }
        pairs
    }
}

pub fn full_alexander_matrix(lk: &LongKnotDiagram, scheme: MarkingScheme) -> Result<FullAlexanderMatrix, PlanarError> {
    let fs = faces(lk)?;
    let n = lk.crossing_count();
    let mut column_faces = fs.bounded_order.clone();
    column_faces.extend(fs.unbounded);
    let mut column_of = vec![0; fs.len()];
    for (col, &f) in column_faces.iter().enumerate() {
        column_of[f] = col;
    }
    let mut matrix = LaurentMatrix::zeros(n, n + 2);
    for i in 1..=n {
        let positive = lk.diagram().sign(lk.index_of(i)) > 0;
        for q in 0..4 {
            let f = fs.face_of(crate::diagram::Corner { crossing: i, quadrant: q });
            // a crossing may touch one face at two corners; the markings add
            matrix[(i - 1, column_of[f])] += marking_poly(scheme, positive, q);
        }
    }
    Ok(FullAlexanderMatrix { matrix, column_faces, faces: fs })
}

/// `n x n` incidence matrix over the bounded regions: entry `(i, j)` is the
/// marking crossing `i` puts in region `j`.
pub fn alexander_matrix(lk: &LongKnotDiagram, scheme: MarkingScheme) -> Result<LaurentMatrix, PlanarError> {
    let n = lk.crossing_count();
    let full = full_alexander_matrix(lk, scheme)?;
    Ok(full.matrix.without_columns(&[n, n + 1]))
}
