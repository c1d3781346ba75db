//! Fraction-free elimination is the independent referee: every closed form
//! is replayed against it, and inadmissible parameters are refused up front
//! instead of failing somewhere deep inside.

use qhilbert::error::Error;
use qhilbert::fib::ThetaParam;
use qhilbert::field::ratio;
use qhilbert::hankel::{
    build_matrix, closed_form_det, closed_form_inverse, det_ratio_check, MatrixKind,
};
use qhilbert::oracle::{bareiss_det, exact_inverse};
use qhilbert::quantum::QuantumParam;

fn main() {
    let half = QuantumParam::from_rational(ratio(1, 2)).unwrap();
    let three_fifths = QuantumParam::from_rational(ratio(3, 5)).unwrap();
    let kinds = [
        ("classical alpha=1", MatrixKind::classical(ratio(1, 1)).unwrap()),
        ("classical alpha=5/3", MatrixKind::classical(ratio(5, 3)).unwrap()),
        ("quantum s=1/2 alpha=1", MatrixKind::quantum(1, half).unwrap()),
        ("quantum s=3/5 alpha=2", MatrixKind::quantum(2, three_fifths).unwrap()),
        ("filbert m=1 alpha=2", MatrixKind::filbert(2, ThetaParam::new(1).unwrap()).unwrap()),
    ];
    for (label, kind) in &kinds {
        for n in 0..=5 {
            let matrix = build_matrix(kind, n).unwrap();
            assert_eq!(
                closed_form_inverse(kind, n).unwrap(),
                exact_inverse(&matrix).unwrap()
            );
            assert_eq!(closed_form_det(kind, n).unwrap(), bareiss_det(&matrix));
        }
        println!("certified for n <= 5: {label}");
    }

    // Consecutive determinants shrink by one explicit factor per step.
    let kind = MatrixKind::quantum(2, QuantumParam::from_rational(ratio(1, 2)).unwrap()).unwrap();
    for n in 1..=6 {
        det_ratio_check(&kind, n).unwrap();
    }
    println!("determinant ratio identity holds for n <= 6.");

    // s = i makes q = -1, so [2] vanishes: a root of unity is rejected.
    let imaginary = QuantumParam::from_imaginary_rational(ratio(1, 1)).unwrap();
    let bad = MatrixKind::quantum(1, imaginary).unwrap();
    match build_matrix(&bad, 2) {
        Err(Error::RootOfUnity { order }) => {
            println!("s = i rejected: the quantum integer [{order}] vanishes.");
        }
        other => panic!("expected a root-of-unity rejection, got {other:?}"),
    }
}
