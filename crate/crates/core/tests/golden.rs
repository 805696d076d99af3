//! Cell-for-cell reproduction of the built-in six-crossing example.

use longknot::fixtures::six_crossing;
use longknot::invariants::{verify, InvariantBundle};
use longknot::{IntMatrix, Laurent, LaurentMatrix};

/// Reads the handful of entry shapes that occur in the printed matrices.
fn cell(s: &str) -> Laurent {
    let terms: &[(i32, i64)] = match s {
        "0" => &[],
        "1" => &[(0, 1)],
        "-1" => &[(0, -1)],
        "x" => &[(1, 1)],
        "-x" => &[(1, -1)],
        "1/x" => &[(-1, 1)],
        "1-x" => &[(0, 1), (1, -1)],
        "1-1/x" => &[(0, 1), (-1, -1)],
        other => panic!("unhandled cell {other}"),
    };
    Laurent::from_terms(terms.iter().map(|&(e, c)| (e, c.into())))
}

fn laurent_matrix(rows: &[[&str; 6]]) -> LaurentMatrix {
    LaurentMatrix::from_rows(rows.iter().map(|r| r.iter().map(|s| cell(s)).collect()).collect())
}

fn int_matrix(rows: &[[i64; 6]]) -> IntMatrix {
    IntMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
}

fn int_diag(d: [i64; 6]) -> IntMatrix {
    IntMatrix::diagonal(d.to_vec())
}

fn laurent_diag(d: [&str; 6]) -> LaurentMatrix {
    LaurentMatrix::diagonal(d.iter().map(|s| cell(s)).collect())
}

fn bundle() -> InvariantBundle {
    InvariantBundle::compute(&six_crossing().unwrap()).unwrap()
}

#[test]
fn sign_matrices() {
    let b = bundle();
    assert_eq!(b.sigma, int_diag([1, 1, 1, -1, -1, 1]));
    assert_eq!(b.d, int_diag([-1, 1, -1, 1, -1, 1]));
    assert_eq!(b.s, int_diag([-1, 1, -1, -1, 1, 1]));
    assert_eq!(b.x_neg_s, laurent_diag(["x", "1/x", "x", "x", "1/x", "1/x"]));
    assert_eq!(b.l, 3);
}

#[test]
fn traversal_matrix() {
    let expected = int_matrix(&[
        [0, 0, 1, 0, 1, 0],
        [0, 0, 1, 0, 1, 0],
        [0, 1, 0, 0, 1, 0],
        [0, 1, 0, 0, 1, 1],
        [0, 1, 0, 0, 0, 1],
        [1, 1, 1, 0, 1, 0],
    ]);
    assert_eq!(bundle().t, expected);
}

#[test]
fn alexander_matrix() {
    let expected = laurent_matrix(&[
        ["x", "-1", "0", "1", "0", "-x"],
        ["x", "-x", "-1", "1", "0", "0"],
        ["x", "0", "-x", "1", "0", "0"],
        ["0", "0", "0", "1", "-1", "0"],
        ["0", "0", "0", "x", "-1", "-x"],
        ["x", "0", "0", "0", "0", "-1"],
    ]);
    assert_eq!(bundle().a, expected);
}

#[test]
fn winding_matrix() {
    let expected = int_matrix(&[
        [0, 0, 0, 1, 1, 1],
        [0, -1, -1, 0, 0, 0],
        [-1, -1, 0, 1, 1, 0],
        [-1, -1, -1, 0, 0, -1],
        [-1, -1, -1, -1, 0, -1],
        [0, 0, 0, 1, 1, 0],
    ]);
    assert_eq!(bundle().w, expected);
}

#[test]
fn half_shift_and_transposed_beta_matrix() {
    let b = bundle();
    assert_eq!(b.x_neg_half, laurent_diag(["1", "1/x", "1", "1", "1/x", "1/x"]));
    let expected = laurent_matrix(&[
        ["1", "0", "0", "0", "0", "1-1/x"],
        ["0", "1", "1-x", "1-x", "1-1/x", "1-1/x"],
        ["1-x", "1-1/x", "1", "0", "0", "1-1/x"],
        ["0", "0", "0", "1", "0", "0"],
        ["1-x", "1-1/x", "1-x", "1-x", "1", "1-1/x"],
        ["0", "0", "0", "1-x", "1-1/x", "1"],
    ]);
    assert_eq!(b.transposed_beta_matrix(), expected);
}

#[test]
fn beta_and_delta() {
    let b = bundle();
    let beta = Laurent::from_coeffs(-2, &[-1, 3, -3, 3, -1]);
    let delta = Laurent::from_coeffs(1, &[1, -3, 3, -3, 1]);
    assert_eq!(b.beta, beta);
    assert_eq!(b.delta, delta);
    assert_eq!(b.beta.to_string(), "-x^-2 + 3x^-1 - 3 + 3x - x^2");
    // beta = -x^-3 Delta
    assert_eq!(b.beta, -delta.shift(-3));
}

#[test]
fn full_report() {
    let r = verify(&six_crossing().unwrap()).unwrap();
    assert!(r.all_hold(), "{r:?}");
    assert_eq!((r.sign, r.l), (-1, 3));
    assert_eq!(r.det_w.abs(), 1);
}
