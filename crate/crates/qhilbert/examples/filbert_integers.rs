//! The Fibonacci family: entries F_alpha/F_(l+j+alpha); the closed-form
//! inverse clears to integers after one multiplication by F_alpha.

use qhilbert::fib::{FibSequence, ThetaParam};
use qhilbert::field::Rational;
use qhilbert::hankel::{build_matrix, closed_form_det, closed_form_inverse, MatrixKind};
use qhilbert::oracle::exact_inverse;

fn main() {
    let theta = ThetaParam::new(1).expect("m = 1: ordinary Fibonacci numbers");
    let seq = FibSequence::new(&theta, 12);
    println!("Fibonacci numbers F_0..F_12: {:?}", seq.values());

    let n = 3;
    for alpha in [1u32, 3] {
        let kind = MatrixKind::filbert(alpha, theta.clone()).expect("alpha >= 1");
        let matrix = build_matrix(&kind, n).expect("Fibonacci denominators never vanish");
        println!("\nmatrix at alpha = {alpha}:");
        print!("{}", matrix.to_pretty());

        let inverse = closed_form_inverse(&kind, n).expect("closed form");
        assert_eq!(inverse, exact_inverse(&matrix).expect("nonsingular"));
        println!("inverse:");
        print!("{}", inverse.to_pretty());

        // Entries of the inverse are integers divided by F_alpha.
        let f_alpha = Rational::from(seq.value(alpha).clone());
        for l in 0..inverse.size() {
            for j in 0..inverse.size() {
                let entry = inverse.entry(l, j).as_rational().expect("rational data");
                assert!((entry * &f_alpha).is_integer());
            }
        }
        println!("F_{alpha} = {f_alpha}; F_{alpha} times the inverse has integer entries.");

        println!("determinant: {}", closed_form_det(&kind, n).expect("closed form"));
    }

    // m = 2 swaps in the Pell numbers; everything still certifies.
    let pell = ThetaParam::new(2).expect("m = 2");
    let kind = MatrixKind::filbert(2, pell).expect("alpha = 2");
    let matrix = build_matrix(&kind, n).unwrap();
    assert_eq!(
        closed_form_inverse(&kind, n).unwrap(),
        exact_inverse(&matrix).unwrap()
    );
    println!("\nsame story for the m = 2 (Pell) weights.");
}
