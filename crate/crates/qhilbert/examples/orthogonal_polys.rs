//! The discrete measure behind the quantum family: exact moments,
//! orthogonal polynomials, and the kernel whose coefficient matrix
//! reproduces the closed-form inverse.

use qhilbert::field::ratio;
use qhilbert::hankel::{closed_form_inverse, MatrixKind};
use qhilbert::qpoly::{
    integrate_against_measure, kernel_coeffs, specialized_poly, verify_orthogonality,
    MeasureSpec, PolyCoeffs,
};
use qhilbert::quantum::{quantum_integer, QuantumParam};

fn main() {
    let param = QuantumParam::from_rational(ratio(1, 2)).expect("s = 1/2");
    let alpha = 1;
    let spec = MeasureSpec::new(alpha, param.clone()).expect("alpha >= 1");
    println!("measure is convergent: {}", spec.is_convergent());

    let ctx = param.context();
    println!("\nmoments of x^k (each equals [alpha]/[k+alpha]):");
    for k in 0..=5usize {
        let mut coeffs = vec![ctx.zero(); k + 1];
        coeffs[k] = ctx.one();
        let monomial = PolyCoeffs::new(ctx, coeffs);
        println!("  k = {k}: {}", integrate_against_measure(&monomial, &spec).unwrap());
    }

    println!("\northogonal polynomial coefficients:");
    for n in 0..=3u32 {
        let poly = specialized_poly(n, alpha, &param).unwrap();
        let rendered: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
        println!("  p_{n}: [{}]", rendered.join(", "));
    }

    for n in 0..=3u32 {
        for m in 0..=3u32 {
            let integral = verify_orthogonality(n, m, alpha, &param).unwrap();
            if n == m {
                let norm = quantum_integer(alpha, &param)
                    .div(&quantum_integer(2 * n + alpha, &param))
                    .unwrap();
                assert_eq!(integral, norm);
            } else {
                assert!(integral.is_zero());
            }
        }
    }
    println!("\nintegrals of p_n p_m: zero off the diagonal, [alpha]/[2n+alpha] on it.");

    // Summing p_k(x) p_k(y) over the squared norms gives a polynomial whose
    // coefficient matrix inverts the moment matrix.
    let n = 4;
    let kernel = kernel_coeffs(n, alpha, &param).unwrap();
    let kind = MatrixKind::quantum(alpha, param).unwrap();
    assert_eq!(kernel, closed_form_inverse(&kind, n).unwrap());
    println!("kernel coefficients equal the closed-form inverse at n = {n}.");
}
