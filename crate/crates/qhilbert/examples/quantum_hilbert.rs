//! The quantum deformation: entries [alpha]/[l+j+alpha] built from quantum
//! integers, with certified closed-form inverse and determinant.

use qhilbert::field::ratio;
use qhilbert::hankel::{build_matrix, closed_form_det, closed_form_inverse, MatrixKind};
use qhilbert::oracle::bareiss_det;
use qhilbert::quantum::{quantum_integer, QuantumParam};

fn main() {
    let param = QuantumParam::from_rational(ratio(1, 2)).expect("s = 1/2 is admissible");
    println!("quantum integers at s = 1/2:");
    for k in 1..=6 {
        println!("  [{k}] = {}", quantum_integer(k, &param));
    }

    let kind = MatrixKind::quantum(2, param).expect("alpha = 2");
    let n = 3;
    let matrix = build_matrix(&kind, n).expect("rational s != +-1 is never a root of unity");
    println!("\nmatrix at alpha = 2, indices 0..={n}:");
    print!("{}", matrix.to_pretty());

    let inverse = closed_form_inverse(&kind, n).expect("closed form");
    println!("\nclosed-form inverse:");
    print!("{}", inverse.to_pretty());
    assert!(matrix.mul(&inverse).expect("sizes match").is_identity());

    let det = closed_form_det(&kind, n).expect("closed form");
    println!("\ndeterminant: {det}");
    assert_eq!(det, bareiss_det(&matrix));

    // s and 1/s give the same matrix: the defining sums are symmetric.
    let mirrored = MatrixKind::quantum(2, QuantumParam::from_rational(ratio(2, 1)).unwrap())
        .expect("alpha = 2");
    assert_eq!(build_matrix(&mirrored, n).unwrap(), matrix);
    println!("\ns = 2 builds the same matrix as s = 1/2.");
}
