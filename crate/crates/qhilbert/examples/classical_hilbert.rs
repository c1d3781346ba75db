//! The classical Hilbert matrix: exact entries, the integer-entry
//! closed-form inverse, and the determinant, cross-checked against
//! fraction-free elimination.

use qhilbert::field::ratio;
use qhilbert::hankel::{build_matrix, closed_form_det, closed_form_inverse, MatrixKind};
use qhilbert::oracle::{bareiss_det, exact_inverse};

fn main() {
    let kind = MatrixKind::classical(ratio(1, 1)).expect("alpha = 1 is valid");
    let n = 4;

    let matrix = build_matrix(&kind, n).expect("construction is total for positive alpha");
    println!("Hilbert matrix, indices 0..={n}:");
    print!("{}", matrix.to_pretty());

    let inverse = closed_form_inverse(&kind, n).expect("closed form");
    println!("\nclosed-form inverse (every entry an integer):");
    print!("{}", inverse.to_pretty());
    assert_eq!(inverse, exact_inverse(&matrix).expect("nonsingular"));
    assert!(matrix.mul(&inverse).expect("sizes match").is_identity());

    let det = closed_form_det(&kind, n).expect("closed form");
    println!("\ndeterminant: {det}");
    assert_eq!(det, bareiss_det(&matrix));

    // A rational order works just as well as an integer one.
    let shifted = MatrixKind::classical(ratio(3, 2)).expect("alpha = 3/2 is valid");
    let shifted_det = closed_form_det(&shifted, n).expect("closed form");
    println!("determinant at alpha = 3/2: {shifted_det}");
    assert_eq!(
        shifted_det,
        bareiss_det(&build_matrix(&shifted, n).expect("total"))
    );
}
