use std::collections::BTreeSet;

use serde::Serialize;

use crate::diagram::{EdgeId, LongKnotDiagram, UNDER_IN};
use crate::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Pass {
    Over,
    Under,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Visit {
    /// 1-based crossing number.
    pub crossing: usize,
    pub pass: Pass,
}

/// The `2n` crossing passes met walking along the long knot from its
/// basepoint, in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VisitSequence {
    pub visits: Vec<Visit>,
}

impl VisitSequence {
    /// Positions of the two passes through crossing `j` (1-based), in walking order.
    pub fn passes(&self, j: usize) -> (usize, usize) {
        let mut hits = self.visits.iter().enumerate().filter(|(_, v)| v.crossing == j).map(|(k, _)| k);
        match (hits.next(), hits.next()) {
            (Some(a), Some(b)) => (a, b),
            _ => panic!("crossing {j} is not visited twice"),
        }
    }

    pub fn len(&self) -> usize {
        self.visits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.visits.is_empty()
    }
}

/// Visit `k` happens where walk edge `k` ends.
pub fn visit_sequence(lk: &LongKnotDiagram) -> VisitSequence {
    let d = lk.diagram();
    let visits = lk
        .walk()
        .map(|e| {
            let (c, slot) = d.edge_head(e);
            let pass = if slot == UNDER_IN { Pass::Under } else { Pass::Over };
            Visit { crossing: lk.number_of(c), pass }
        })
        .collect();
    VisitSequence { visits }
}

/// Per-crossing signs, indexed by crossing number minus one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignData {
    /// Crossing signs.
    pub sigma: Vec<i8>,
    /// `+1` if the over-pass comes before the under-pass.
    pub dvec: Vec<i8>,
    /// `sigma * dvec`.
    pub svec: Vec<i8>,
}

impl SignData {
    /// Number of crossings with `svec = +1`.
    pub fn positive_s_count(&self) -> usize {
        self.svec.iter().filter(|&&s| s == 1).count()
    }
}

pub fn sign_data(lk: &LongKnotDiagram) -> SignData {
    let n = lk.crossing_count();
    let seq = visit_sequence(lk);
    let mut dvec = vec![0i8; n];
    for v in &seq.visits {
        let d = &mut dvec[v.crossing - 1];
        if *d == 0 {
            *d = if v.pass == Pass::Over { 1 } else { -1 };
        }
    }
    let sigma: Vec<i8> = (1..=n).map(|k| lk.diagram().sign(lk.index_of(k))).collect();
    let svec = sigma.iter().zip(&dvec).map(|(s, d)| s * d).collect();
    SignData { sigma, dvec, svec }
}

/// Edges walked strictly between the two passes through crossing `j`: from
/// the edge leaving the first pass up to the edge entering the second.
pub fn span_edges(lk: &LongKnotDiagram, j: usize) -> BTreeSet<EdgeId> {
    let seq = visit_sequence(lk);
    span_edges_in(lk, &seq, j)
}

pub(crate) fn span_edges_in(lk: &LongKnotDiagram, seq: &VisitSequence, j: usize) -> BTreeSet<EdgeId> {
    let (first, second) = seq.passes(j);
    lk.walk().skip(first + 1).take(second - first).collect()
}

/// `T[i][j] = 1` iff the walk along the span of crossing `i + 1` passes under
/// crossing `j + 1`. Under-passes at the span's own endpoints do not count.
pub fn traversal_matrix(lk: &LongKnotDiagram) -> IntMatrix {
    let n = lk.crossing_count();
    let seq = visit_sequence(lk);
    let mut t = IntMatrix::zeros(n, n);
    for i in 1..=n {
        let (first, second) = seq.passes(i);
        for v in &seq.visits[first + 1..second] {
            if v.pass == Pass::Under {
                t[(i - 1, v.crossing - 1)] = 1;
            }
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{ClosedDiagram, LongKnotDiagram};

    fn kink(raw: [u64; 4], basepoint: usize) -> LongKnotDiagram {
        let (d, _) = ClosedDiagram::from_raw(&[raw]).unwrap();
        LongKnotDiagram::new(d, basepoint).unwrap()
    }

    #[test]
    fn unknot_has_no_visits() {
        let lk = LongKnotDiagram::new(ClosedDiagram::unknot(), 0).unwrap();
        assert!(visit_sequence(&lk).is_empty());
        assert_eq!(traversal_matrix(&lk).rows(), 0);
    }

    #[test]
    fn kink_passes() {
        // edge 0 enters the crossing as the under strand
        let lk = kink([0, 1, 1, 0], 0);
        let seq = visit_sequence(&lk);
        assert_eq!(seq.visits, vec![Visit { crossing: 1, pass: Pass::Under }, Visit { crossing: 1, pass: Pass::Over }]);
        let s = sign_data(&lk);
        assert_eq!((s.sigma[0], s.dvec[0], s.svec[0]), (-1, -1, 1));
        // starting on the other edge reverses the pass order
        let lk = kink([0, 1, 1, 0], 1);
        assert_eq!(sign_data(&lk).dvec, vec![1]);
    }

    #[test]
    fn kink_span_is_the_loop() {
        let lk = kink([0, 1, 1, 0], 0);
        assert_eq!(span_edges(&lk, 1), BTreeSet::from([1]));
        assert_eq!(traversal_matrix(&lk), IntMatrix::zeros(1, 1));
    }

    #[test]
    fn positive_kink_sign() {
        let lk = kink([1, 1, 0, 0], 0);
        assert_eq!(sign_data(&lk).sigma, vec![1]);
    }

    #[test]
    fn mirror_keeps_d_and_negates_sigma() {
        let (d, _) = ClosedDiagram::from_raw(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]).unwrap();
        let lk = LongKnotDiagram::new(d, 0).unwrap();
        let (a, b) = (sign_data(&lk), sign_data(&lk.mirror()));
        assert_eq!(a.dvec, b.dvec);
        assert_eq!(a.sigma.iter().map(|s| -s).collect::<Vec<_>>(), b.sigma);
    }
}
