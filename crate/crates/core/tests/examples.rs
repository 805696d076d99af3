//! Per-operation examples on small and built-in diagrams.

use std::collections::BTreeSet;

use longknot::diagram::{
    from_braid, parse_braid, parse_pd, validate, BraidWord, ClosedDiagram, Diagnostic, LongKnotDiagram,
};
use longknot::fixtures::{example, six_crossing};
use longknot::invariants::{
    beta, delta, det_w_unit, verify_lemmas, verify_proposition, verify_theorem, InvariantBundle,
};
use longknot::laurent::determinant;
use longknot::planar::{
    alexander_matrix, faces, full_alexander_matrix, sign_data, span_edges, traversal_matrix, visit_sequence,
    winding_matrix, MarkingScheme, Pass, PlanarError,
};
use longknot::{DiagramError, Laurent, LaurentMatrix};
use num_bigint::BigInt;
use num_rational::Ratio;

fn lp(lowest: i32, coeffs: &[i64]) -> Laurent {
    Laurent::from_coeffs(lowest, coeffs)
}

fn kink() -> LongKnotDiagram {
    LongKnotDiagram::new(parse_pd("X(0,1,1,0)").unwrap(), 0).unwrap()
}

fn long_unknot() -> LongKnotDiagram {
    LongKnotDiagram::new(parse_pd("").unwrap(), 0).unwrap()
}

#[test]
fn parsing_examples() {
    let empty = parse_pd("").unwrap();
    assert_eq!((empty.crossing_count(), empty.edge_count()), (0, 0));
    let fixture = six_crossing().unwrap();
    assert_eq!((fixture.crossing_count(), fixture.diagram().edge_count()), (6, 12));
    assert_eq!(parse_pd("X(0,1,1,0)").unwrap().crossing_count(), 1);
}

#[test]
fn braid_examples() {
    let unknot = from_braid(&BraidWord::new(1, vec![]).unwrap()).unwrap();
    assert_eq!(unknot.crossing_count(), 0);
    let trefoil = from_braid(&parse_braid("strands 2; s1 s1 s1").unwrap()).unwrap();
    assert_eq!(trefoil.crossing_count(), 3);
    assert!(validate(&trefoil.crossings().iter().map(|q| q.map(|e| e as u64)).collect::<Vec<_>>()).is_empty());
    let hopf = from_braid(&parse_braid("strands 2; s1 s1").unwrap());
    assert_eq!(hopf, Err(DiagramError::MultiComponent { components: 2 }));
}

#[test]
fn long_knot_examples() {
    for bp in [0, 5, 17] {
        assert_eq!(LongKnotDiagram::new(ClosedDiagram::unknot(), bp).unwrap().crossing_count(), 0);
    }
    assert_eq!(example("trefoil").unwrap().crossing_count(), 3);
    assert_eq!(six_crossing().unwrap().crossing_order(), &[1, 2, 3, 4, 5, 6]);
}

#[test]
fn validation_examples() {
    assert!(validate(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]).is_empty());
    let single = validate(&[[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2], [7, 7, 3, 8]]);
    assert!(single.iter().any(|d| d.to_string() == "edge 8 multiplicity 1"), "{single:?}");
    let once = validate(&[[0, 1, 1, 0], [2, 2, 3, 4]]);
    assert!(once.contains(&Diagnostic::EdgeMultiplicity { edge: 3, count: 1 }));
    assert_eq!(
        once.iter().find(|d| matches!(d, Diagnostic::EdgeMultiplicity { edge: 3, .. })).unwrap().to_string(),
        "edge 3 multiplicity 1"
    );
    let two = validate(&[[0, 1, 1, 0], [2, 3, 3, 2]]);
    assert_eq!(two.iter().map(ToString::to_string).collect::<Vec<_>>(), ["2 components"]);
}

#[test]
fn visit_sequence_examples() {
    assert!(visit_sequence(&long_unknot()).is_empty());
    let seq = visit_sequence(&kink());
    assert_eq!(seq.len(), 2);
    assert!(seq.visits.iter().all(|v| v.crossing == 1));
    assert_ne!(seq.visits[0].pass, seq.visits[1].pass);

    let fixture = six_crossing().unwrap();
    let seq = visit_sequence(&fixture);
    let d: Vec<i8> = (1..=6)
        .map(|j| {
            let first = seq.visits.iter().find(|v| v.crossing == j).unwrap();
            if first.pass == Pass::Over {
                1
            } else {
                -1
            }
        })
        .collect();
    assert_eq!(d, [-1, 1, -1, 1, -1, 1]);
}

#[test]
fn sign_examples() {
    let s = sign_data(&six_crossing().unwrap());
    assert_eq!(s.sigma, [1, 1, 1, -1, -1, 1]);
    assert_eq!(s.dvec, [-1, 1, -1, 1, -1, 1]);
    assert_eq!(s.svec, [-1, 1, -1, -1, 1, 1]);

    let positive = LongKnotDiagram::new(from_braid(&BraidWord::new(2, vec![1]).unwrap()).unwrap(), 0).unwrap();
    let p = sign_data(&positive);
    assert_eq!(p.sigma, [1]);
    let seq = visit_sequence(&positive);
    assert_eq!(p.dvec, [if seq.visits[0].pass == Pass::Over { 1 } else { -1 }]);

    let lk = example("figure8").unwrap();
    let (a, b) = (sign_data(&lk), sign_data(&lk.mirror()));
    assert_eq!(b.sigma, a.sigma.iter().map(|s| -s).collect::<Vec<_>>());
    assert_eq!(b.dvec, a.dvec);
}

#[test]
fn span_examples() {
    let k = kink();
    assert_eq!(span_edges(&k, 1).len(), 1);

    let fixture = six_crossing().unwrap();
    let span = span_edges(&fixture, 2);
    let under_heads: BTreeSet<usize> = span
        .iter()
        .filter_map(|&e| {
            let (c, slot) = fixture.diagram().edge_head(e);
            (slot == 0).then(|| fixture.number_of(c))
        })
        // the closing edge ends at crossing 2's own pass, which is not interior
        .filter(|&j| j != 2)
        .collect();
    assert_eq!(under_heads, BTreeSet::from([3, 5]));

    // both ends of the long knot are halves of the basepoint edge
    for j in 1..=6 {
        assert!(!span_edges(&fixture, j).contains(&fixture.basepoint()), "span {j}");
    }
}

#[test]
fn traversal_examples() {
    assert_eq!(traversal_matrix(&long_unknot()).rows(), 0);
    let t = traversal_matrix(&kink());
    assert_eq!((t.rows(), t[(0, 0)]), (1, 0));
}

#[test]
fn face_examples() {
    let u = faces(&long_unknot()).unwrap();
    assert_eq!((u.len(), u.bounded_order.len()), (2, 0));
    let k = faces(&kink()).unwrap();
    assert_eq!((k.len(), k.bounded_order.len()), (3, 1));
    let f = faces(&six_crossing().unwrap()).unwrap();
    assert_eq!((f.len(), f.bounded_order.len()), (8, 6));
}

#[test]
fn alexander_examples() {
    let a = alexander_matrix(&six_crossing().unwrap(), MarkingScheme::Modified).unwrap();
    assert_eq!(
        a.row(5),
        &[Laurent::x(), Laurent::zero(), Laurent::zero(), Laurent::zero(), Laurent::zero(), -Laurent::one()]
    );
    let k = alexander_matrix(&kink(), MarkingScheme::Modified).unwrap();
    assert_eq!((k.rows(), k.cols()), (1, 1));
    assert!(k[(0, 0)].is_unit());
}

#[test]
fn full_alexander_examples() {
    let lk = six_crossing().unwrap();
    let full = full_alexander_matrix(&lk, MarkingScheme::Modified).unwrap();
    assert_eq!(full.delete_columns(6, 7).unwrap(), alexander_matrix(&lk, MarkingScheme::Modified).unwrap());
    for s in full.matrix.row_sums() {
        assert!(s.is_zero());
    }
    let delta = lp(1, &[1, -3, 3, -3, 1]);
    let pairs = full.adjacent_pairs();
    assert!(pairs.len() > 1);
    for (a, b) in pairs {
        let d = determinant(&full.delete_columns(a, b).unwrap()).unwrap();
        assert!(d.unit_ratio(&delta).is_some(), "({a},{b}): {d}");
    }
    // regions 1 and 5 share no edge
    let far = (0..8).flat_map(|a| (a + 1..8).map(move |b| (a, b))).find(|&(a, b)| full.delete_columns(a, b).is_err());
    let (a, b) = far.expect("some pair is not adjacent");
    assert_eq!(full.delete_columns(a, b), Err(PlanarError::NotAdjacent { a, b }));
}

#[test]
fn winding_examples() {
    let w = winding_matrix(&six_crossing().unwrap()).unwrap();
    assert_eq!(w.row(0), &[0, 0, 0, 1, 1, 1]);
    assert_eq!((0..6).map(|i| w[(i, 1)]).collect::<Vec<_>>(), [0, -1, -1, -1, -1, 0]);
    assert_eq!(winding_matrix(&kink()).unwrap()[(0, 0)].abs(), 1);
}

#[test]
fn laurent_examples() {
    assert_eq!(lp(0, &[-1, 1]) * lp(0, &[1, 1]), lp(0, &[-1, 0, 1]));
    assert_eq!(lp(-1, &[-1, 1]) * lp(1, &[-1]), lp(0, &[1, -1]));
    let p = lp(-2, &[3, 0, -7, 1]);
    assert!((p.clone() + -p).is_zero());

    assert!(determinant(&LaurentMatrix::zeros(0, 0)).unwrap().is_one());
    let p = lp(-1, &[2, 0, 5]);
    assert_eq!(determinant(&LaurentMatrix::from_rows(vec![vec![p.clone()]])).unwrap(), p);

    let quartic = lp(0, &[1, -3, 3, -3, 1]);
    assert_eq!(lp(1, &[1, -3, 3, -3, 1]).normalize().unwrap(), quartic);
    assert_eq!(lp(-2, &[-1, 3, -3, 3, -1]).normalize().unwrap(), quartic);
    assert!(lp(7, &[-1]).normalize().unwrap().is_one());

    let one = Ratio::from_integer(BigInt::from(1));
    let fixture = six_crossing().unwrap();
    assert_eq!(beta(&fixture).unwrap().evaluate(&one).unwrap(), one);
    assert_eq!(delta(&fixture).unwrap().evaluate(&one).unwrap(), Ratio::from_integer(BigInt::from(-1)));
}

#[test]
fn invariant_examples() {
    let unknot = long_unknot();
    assert!(beta(&unknot).unwrap().is_one());
    assert!(delta(&unknot).unwrap().is_one());
    let th = verify_theorem(&unknot).unwrap();
    assert!(th.holds && th.sign == 1 && th.l == 0);
    let prop = verify_proposition(&unknot).unwrap();
    assert!(prop.holds && prop.lhs.rows() == 0 && prop.rhs.rows() == 0);

    let k = kink();
    assert!(beta(&k).unwrap().is_one());
    assert!(delta(&k).unwrap().normalize().unwrap().is_one());
    assert_eq!(det_w_unit(&k).unwrap().abs(), 1);

    let trefoil = example("trefoil").unwrap();
    assert_eq!(delta(&trefoil).unwrap().normalize().unwrap(), lp(0, &[1, -1, 1]));

    let fixture = six_crossing().unwrap();
    let lem = verify_lemmas(&fixture).unwrap();
    assert!(lem.lemma1_holds && lem.lemma2_holds);
    let prop = verify_proposition(&fixture).unwrap();
    assert_eq!(prop.rhs.row(3), LaurentMatrix::identity(6).row(3));
    assert_eq!(determinant(&prop.lhs).unwrap(), lp(-2, &[-1, 3, -3, 3, -1]));
    assert_eq!(det_w_unit(&fixture).unwrap().abs(), 1);

    // crossings with S = -1 have diagonal entry exactly d_j
    let b = InvariantBundle::compute(&fixture).unwrap();
    for j in 0..6 {
        let (_, d, s) = b.signs(j);
        if s == -1 {
            assert_eq!(lem.product[(j, j)], Laurent::constant(d.into()));
        }
    }
}
