//! One substitution makes the Fibonacci family quantum: at s = i e^(-theta)
//! the quantum integers become Fibonacci numbers up to powers of i, and
//! conjugation by diag(i^0, i^1, ...) carries each matrix onto the other.

use qhilbert::fib::{bridge_check, fib_theta, quantum_param_from_theta, ThetaParam};
use qhilbert::hankel::{build_matrix, closed_form_inverse, unitary_conjugate, MatrixKind};
use qhilbert::quantum::quantum_integer;

fn main() {
    let theta = ThetaParam::new(1).expect("golden ratio weights");
    let param = quantum_param_from_theta(&theta);
    println!("s = {}", param.s());
    println!("q = {}", param.q());

    // [n] at this parameter is i^(n-1) times the n-th Fibonacci number.
    println!("\nquantum integers against Fibonacci numbers:");
    for n in 1..=8u32 {
        println!("  [{n}] = {:24}  F_{n} = {}", quantum_integer(n, &param).to_string(), fib_theta(n, &theta));
    }
    for n in 0..=12 {
        bridge_check(n, &theta).expect("bridge identities hold");
    }
    println!("bridge identities verified for n <= 12.");

    let alpha = 2;
    let n = 3;
    let fib_kind = MatrixKind::filbert(alpha, theta.clone()).expect("alpha = 2");
    let quantum_kind = MatrixKind::quantum(alpha, param).expect("alpha = 2");
    let fib = build_matrix(&fib_kind, n).unwrap();
    let quantum = build_matrix(&quantum_kind, n).unwrap();

    // Conjugation multiplies entry (l, j) by i^(l+j), which is U M U for
    // U = diag(i^0, ..., i^n).
    assert_eq!(unitary_conjugate(&fib), quantum);
    println!("\nU F U = H holds entrywise at alpha = {alpha}, n = {n}.");

    let fib_inverse = closed_form_inverse(&fib_kind, n).unwrap();
    let quantum_inverse = closed_form_inverse(&quantum_kind, n).unwrap();
    assert_eq!(unitary_conjugate(&quantum_inverse), fib_inverse);
    println!("U H^-1 U = F^-1 holds entrywise too.");
}
