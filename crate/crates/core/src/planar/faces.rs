use serde::Serialize;

use super::PlanarError;
use crate::diagram::{face_cycles, Corner, EdgeId, LongKnotDiagram};

/// Faces of a long-knot diagram.
///
/// Faces are indexed `0..n + 2`; `unbounded` names the two faces on either
/// side of the basepoint edge and `bounded_order[k - 1]` the face numbered
/// as region `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceSet {
    pub faces: Vec<Vec<Corner>>,
    pub unbounded: [usize; 2],
    pub bounded_order: Vec<usize>,
    #[serde(skip)]
    corner_face: Vec<[usize; 4]>,
    #[serde(skip)]
    edge_sides: Vec<[usize; 2]>,
    #[serde(skip)]
    region_of: Vec<Option<usize>>,
}

impl FaceSet {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Face containing `corner`.
    pub fn face_of(&self, corner: Corner) -> usize {
        self.corner_face[corner.crossing - 1][corner.quadrant]
    }

    /// Region number (1-based) of a bounded face; `None` when unbounded.
    pub fn region_of(&self, face: usize) -> Option<usize> {
        self.region_of[face]
    }

    pub fn is_unbounded(&self, face: usize) -> bool {
        self.unbounded.contains(&face)
    }

    /// Faces to the left and right of edge `e`, looking along its orientation.
    pub fn sides(&self, e: EdgeId) -> [usize; 2] {
        self.edge_sides[e]
    }

    pub fn edge_count(&self) -> usize {
        self.edge_sides.len()
    }

    /// True if some edge has `a` on one side and `b` on the other.
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        a != b && self.edge_sides.iter().any(|&[l, r]| (l == a && r == b) || (l == b && r == a))
    }
}

/// Traces the faces of the diagram's combinatorial map, marks the two faces
/// beside the basepoint as unbounded and numbers the rest, either by the
/// diagram's region override or in order of discovery (crossings by number,
/// quadrants 0..=3).
pub fn faces(lk: &LongKnotDiagram) -> Result<FaceSet, PlanarError> {
    let n = lk.crossing_count();
    if n == 0 {
        if lk.region_corners().is_some_and(|c| !c.is_empty()) {
            return Err(PlanarError::RegionOrder("the unknot has no bounded regions".into()));
        }
        return Ok(FaceSet {
            faces: vec![Vec::new(), Vec::new()],
            unbounded: [0, 1],
            bounded_order: Vec::new(),
            corner_face: Vec::new(),
            edge_sides: Vec::new(),
            region_of: vec![None, None],
        });
    }
    let d = lk.diagram();
    let cycles = face_cycles(n, |c, s| d.partner(c, s));
    if cycles.len() != n + 2 {
        return Err(PlanarError::FaceCount { found: cycles.len(), expected: n + 2 });
    }

    let mut corner_face = vec![[usize::MAX; 4]; n];
    let mut edge_sides = vec![[usize::MAX; 2]; d.edge_count()];
    let mut faces = Vec::with_capacity(cycles.len());
    for (f, cycle) in cycles.iter().enumerate() {
        let mut corners = Vec::with_capacity(cycle.len());
        for &(c, q) in cycle {
            let number = lk.number_of(c);
            corner_face[number - 1][q] = f;
            corners.push(Corner { crossing: number, quadrant: q });
            // the face lies to the right of the edge traversed from slot q + 1
            let slot = (q + 1) % 4;
            let e = d.crossings()[c][slot];
            let side = if d.is_outgoing(c, slot) { 1 } else { 0 };
            edge_sides[e][side] = f;
        }
        faces.push(corners);
    }
    if let Some(e) = edge_sides.iter().position(|s| s.contains(&usize::MAX)) {
        return Err(PlanarError::Internal(format!("edge {e} is missing a face on one side")));
    }

    let unbounded = edge_sides[lk.basepoint()];
    let mut region_of = vec![None; faces.len()];
    let bounded_order = match lk.region_corners() {
        Some(corners) => {
            let mut order = Vec::with_capacity(n);
            for (k, &corner) in corners.iter().enumerate() {
                let f = corner_face[corner.crossing - 1][corner.quadrant];
                if unbounded.contains(&f) {
                    return Err(PlanarError::RegionOrder(format!(
                        "region {} names corner {corner:?} of an unbounded face",
                        k + 1
                    )));
                }
                if let Some(prev) = region_of[f] {
                    return Err(PlanarError::RegionOrder(format!("regions {prev} and {} name the same face", k + 1)));
                }
                region_of[f] = Some(k + 1);
                order.push(f);
            }
            order
        }
        None => {
            let mut order = Vec::with_capacity(n);
            for &f in corner_face.iter().flatten() {
                if !unbounded.contains(&f) && region_of[f].is_none() {
                    order.push(f);
                    region_of[f] = Some(order.len());
                }
            }
            order
        }
    };
    Ok(FaceSet { faces, unbounded, bounded_order, corner_face, edge_sides, region_of })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{from_braid, BraidWord, ClosedDiagram};

    #[test]
    fn unknot_has_two_unbounded_faces() {
        let lk = LongKnotDiagram::new(ClosedDiagram::unknot(), 0).unwrap();
        let fs = faces(&lk).unwrap();
        assert_eq!(fs.len(), 2);
        assert!(fs.bounded_order.is_empty());
    }

    #[test]
    fn kink_has_three_faces() {
        let (d, _) = ClosedDiagram::from_raw(&[[0, 1, 1, 0]]).unwrap();
        let lk = LongKnotDiagram::new(d, 0).unwrap();
        let fs = faces(&lk).unwrap();
        assert_eq!(fs.len(), 3);
        assert_eq!(fs.bounded_order.len(), 1);
        // the loop edge 1 bounds the single bounded face on its own
        let bounded = fs.bounded_order[0];
        assert_eq!(fs.faces[bounded], vec![Corner { crossing: 1, quadrant: 1 }]);
    }

    #[test]
    fn corners_partition_and_euler() {
        let d = from_braid(&BraidWord::new(3, vec![1, -2, 1, -2]).unwrap()).unwrap();
        let lk = LongKnotDiagram::new(d, 3).unwrap();
        let fs = faces(&lk).unwrap();
        assert_eq!(fs.len(), 4 + 2);
        let corners: usize = fs.faces.iter().map(Vec::len).sum();
        assert_eq!(corners, 16);
        for e in 0..8 {
            let [l, r] = fs.sides(e);
            assert_ne!(l, r);
        }
        assert!(fs.unbounded.iter().all(|&f| fs.region_of(f).is_none()));
    }
}
