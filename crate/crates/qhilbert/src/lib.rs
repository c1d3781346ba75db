//! Exact quantum Hilbert, Filbert, and classical Hilbert matrices.
//!
//! Everything is computed in the number field Q(i, sqrt(d)) with
//! arbitrary-precision rational coordinates, so every comparison in this
//! crate is exact. Closed forms for inverses and determinants are certified
//! against a fraction-free elimination oracle instead of being trusted.
//!
//! Module map:
//! - [`field`]: the field Q(i, sqrt(d)) and its arithmetic.
//! - [`quantum`]: quantum integers [n], factorials, and binomials.
//! - [`fib`]: generalized Fibonacci numbers, fibonomials, and the theta
//!   parameterization that turns them into a quantum family.
//! - [`matrix`]: dense exact matrices with JSON and CSV serialization.
//! - [`oracle`]: fraction-free determinant and exact Gauss-Jordan inverse.
//! - [`hankel`]: the three matrix families, their closed-form inverses and
//!   determinants, and the unitary conjugation linking two of them.
//! - [`qpoly`]: orthogonal polynomials of a discrete measure, exact
//!   integration, and the kernel whose coefficients invert the matrix.
//! - [`cli`]: the `qhilbert` binary.
//!
//! The examples directory walks through each capability; start with
//! `classical_hilbert` and `oracle_certification`.

pub mod cli;
pub mod error;
pub mod fib;
pub mod field;
pub mod hankel;
pub mod matrix;
pub mod oracle;
pub mod qpoly;
pub mod quantum;

pub use error::{Error, Result};
pub use fib::ThetaParam;
pub use field::{FieldContext, FieldElement, Rational};
pub use matrix::ExactMatrix;
pub use qpoly::{MeasureSpec, PolyCoeffs};
pub use quantum::QuantumParam;
