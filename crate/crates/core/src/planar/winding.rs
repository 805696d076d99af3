use std::collections::{BTreeSet, VecDeque};

use super::faces::{faces, FaceSet};
use super::visits::{span_edges_in, visit_sequence};
use super::PlanarError;
use crate::diagram::{EdgeId, LongKnotDiagram};
use crate::IntMatrix;

/// Winding number of every face about the closed curve formed by `span`.
///
/// A ray from a face out to infinity picks up `+1` each time the span
/// crosses it from left to right, so stepping across a span edge from its
/// left face to its right face raises the winding number by one. Values are
/// propagated breadth-first from the first unbounded face; afterwards every
/// edge is re-checked, and both unbounded faces must come out as zero.
pub fn face_windings(fs: &FaceSet, span: &BTreeSet<EdgeId>, label: usize) -> Result<Vec<i64>, PlanarError> {
    let m = fs.edge_count();
    let mut incident: Vec<Vec<EdgeId>> = vec![Vec::new(); fs.len()];
    for e in 0..m {
        for f in fs.sides(e) {
            incident[f].push(e);
        }
    }
    let step = |e: EdgeId| i64::from(span.contains(&e));

    let mut value: Vec<Option<i64>> = vec![None; fs.len()];
    let start = fs.unbounded[0];
    value[start] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(f) = queue.pop_front() {
        let here = value[f].expect("queued faces are labelled");
        for &e in &incident[f] {
            let [left, right] = fs.sides(e);
            let (other, there) = if f == left { (right, here + step(e)) } else { (left, here - step(e)) };
            if value[other].is_none() {
                value[other] = Some(there);
                queue.push_back(other);
            }
        }
    }

    let value: Vec<i64> = value
        .into_iter()
        .enumerate()
        .map(|(f, v)| v.ok_or_else(|| PlanarError::Internal(format!("face {f} unreachable in the dual graph"))))
        .collect::<Result<_, _>>()?;
    for e in 0..m {
        let [left, right] = fs.sides(e);
        if value[right] - value[left] != step(e) {
            return Err(PlanarError::WindingInconsistency { span: label, edge: e });
        }
    }
    if let Some(&f) = fs.unbounded.iter().find(|&&f| value[f] != 0) {
        return Err(PlanarError::Internal(format!("unbounded face {f} has winding {} about span {label}", value[f])));
    }
    Ok(value)
}

/// `W[i][j]` is the winding number of bounded region `i + 1` about the span
/// of crossing `j + 1`.
pub fn winding_matrix(lk: &LongKnotDiagram) -> Result<IntMatrix, PlanarError> {
    let n = lk.crossing_count();
    let fs = faces(lk)?;
    let seq = visit_sequence(lk);
    let mut w = IntMatrix::zeros(n, n);
    for j in 1..=n {
        let span = span_edges_in(lk, &seq, j);
        let values = face_windings(&fs, &span, j)?;
        for (i, &f) in fs.bounded_order.iter().enumerate() {
            w[(i, j - 1)] = values[f];
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::ClosedDiagram;

    #[test]
    fn kink_interior_winds_once() {
        for raw in [[0, 1, 1, 0], [1, 1, 0, 0], [0, 0, 1, 1]] {
            let (d, _) = ClosedDiagram::from_raw(&[raw]).unwrap();
            for basepoint in 0..2 {
                let lk = LongKnotDiagram::new(d.clone(), basepoint).unwrap();
                let w = winding_matrix(&lk).unwrap();
                assert_eq!(w[(0, 0)].abs(), 1, "{raw:?} at {basepoint}");
            }
        }
    }

    #[test]
    fn empty_span_gives_zero_everywhere() {
        let (d, _) = ClosedDiagram::from_raw(&[[0, 1, 1, 0]]).unwrap();
        let lk = LongKnotDiagram::new(d, 0).unwrap();
        let fs = faces(&lk).unwrap();
        assert_eq!(face_windings(&fs, &BTreeSet::new(), 0).unwrap(), vec![0; 3]);
    }

    #[test]
    fn open_path_is_inconsistent() {
        // a single edge is not a closed curve, so propagation must disagree
        let (d, _) = ClosedDiagram::from_raw(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]).unwrap();
        let lk = LongKnotDiagram::new(d, 0).unwrap();
        let fs = faces(&lk).unwrap();
        let result = face_windings(&fs, &BTreeSet::from([2]), 0);
        assert!(result.is_err(), "{result:?}");
    }
}
