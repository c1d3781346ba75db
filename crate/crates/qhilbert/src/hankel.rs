//! The three Hankel matrix families and their closed-form inverses and
//! determinants.
//!
//! All families are (n+1) x (n+1), indexed 0..=n:
//!
//! * classical: entry alpha/(l+j+alpha) for a positive rational alpha
//!   (alpha = 1 is the Hilbert matrix);
//! * quantum: entry [alpha]/[l+j+alpha] in quantum integers at a fixed s;
//! * Fibonacci: entry F_alpha/F_{l+j+alpha} for the generalized Fibonacci
//!   sequence with parameter m.
//!
//! The Fibonacci and quantum families are unitarily conjugate: scaling entry
//! (l,j) by i^(l+j) turns one into the other when s = i*e^(-theta). Closed
//! forms are certified elsewhere against the elimination oracle; this module
//! only evaluates the formulas.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fib::{fibonomial_in, FibSequence, ThetaParam};
use crate::field::{FieldContext, FieldElement, Rational};
use crate::matrix::ExactMatrix;
use crate::quantum::{QBinomialTable, QuantumParam};

/// Which matrix family, with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum MatrixKind {
    Classical { alpha: Rational },
    Quantum { alpha: u32, param: QuantumParam },
    Filbert { alpha: u32, theta: ThetaParam },
}

impl MatrixKind {
    pub fn classical(alpha: Rational) -> Result<Self> {
        let kind = MatrixKind::Classical { alpha };
        kind.validate()?;
        Ok(kind)
    }

    pub fn quantum(alpha: u32, param: QuantumParam) -> Result<Self> {
        let kind = MatrixKind::Quantum { alpha, param };
        kind.validate()?;
        Ok(kind)
    }

    pub fn filbert(alpha: u32, theta: ThetaParam) -> Result<Self> {
        let kind = MatrixKind::Filbert { alpha, theta };
        kind.validate()?;
        Ok(kind)
    }

    pub fn context(&self) -> FieldContext {
        match self {
            MatrixKind::Classical { .. } => FieldContext::RATIONAL_DEFAULT,
            MatrixKind::Quantum { param, .. } => param.context(),
            MatrixKind::Filbert { theta, .. } => theta.context(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            MatrixKind::Classical { alpha } if !alpha.is_positive() => Err(
                Error::InvalidParameter(format!("alpha must be positive, got {alpha}")),
            ),
            MatrixKind::Quantum { alpha: 0, .. } | MatrixKind::Filbert { alpha: 0, .. } => Err(
                Error::InvalidParameter("alpha must be a positive integer".into()),
            ),
            _ => Ok(()),
        }
    }
}

fn sign_elem(ctx: FieldContext, exponent: i64) -> FieldElement {
    ctx.from_integer(if exponent.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// Generalized binomial coefficient with rational upper argument:
/// x(x-1)...(x-k+1)/k!; zero when k < 0.
pub fn generalized_binomial(x: &Rational, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for j in 1..=k {
        acc *= (x - Rational::from_integer(BigInt::from(j - 1))) / Rational::from_integer(j.into());
    }
    acc
}

/// The matrix of the family at index bound n.
pub fn build_matrix(kind: &MatrixKind, n: u32) -> Result<ExactMatrix> {
    kind.validate()?;
    let n = n as usize;
    match kind {
        MatrixKind::Classical { alpha } => {
            let ctx = FieldContext::RATIONAL_DEFAULT;
            Ok(ExactMatrix::from_fn(ctx, n, |l, j| {
                let denom = Rational::from_integer(BigInt::from(l + j)) + alpha;
                ctx.from_rational(alpha / denom)
            }))
        }
        MatrixKind::Quantum { alpha, param } => {
            let table = QBinomialTable::new(param, 2 * n as u32 + alpha)?;
            let ctx = param.context();
            let top = table.integer(*alpha);
            let ratios: Vec<FieldElement> = (0..=2 * n)
                .map(|t| {
                    top.div(&table.integer(t as u32 + alpha))
                        .expect("orders validated by the table")
                })
                .collect();
            Ok(ExactMatrix::from_fn(ctx, n, |l, j| ratios[l + j].clone()))
        }
        MatrixKind::Filbert { alpha, theta } => {
            let ctx = theta.context();
            let seq = FibSequence::new(theta, 2 * n as u32 + alpha);
            let top = seq.value(*alpha);
            let ratios: Vec<FieldElement> = (0..=2 * n)
                .map(|t| {
                    ctx.from_rational(Rational::new(
                        top.clone(),
                        seq.value(t as u32 + alpha).clone(),
                    ))
                })
                .collect();
            Ok(ExactMatrix::from_fn(ctx, n, |l, j| ratios[l + j].clone()))
        }
    }
}

/// One entry of the quantum closed-form inverse:
/// (-1)^(l+j) ([l+j+a]/[a]) C(n+l+a, n-j) C(n+j+a, n-l) C(l+j+a-1, l) C(l+j+a-1, j)
/// in quantum binomials. Vanishes for l > n or j > n through the negative
/// lower binomial arguments, which the induction identity relies on.
pub(crate) fn quantum_inverse_entry(
    table: &QBinomialTable,
    alpha: u32,
    n: i64,
    l: i64,
    j: i64,
) -> FieldElement {
    let ctx = table.param().context();
    let a = i64::from(alpha);
    let sign = sign_elem(ctx, l + j);
    let ratio = table
        .integer((l + j + a) as u32)
        .div(&table.integer(alpha))
        .expect("orders validated by the table");
    let product = &(&table.binom(n + l + a, n - j) * &table.binom(n + j + a, n - l))
        * &(&table.binom(l + j + a - 1, l) * &table.binom(l + j + a - 1, j));
    &(&sign * &ratio) * &product
}

/// Closed-form inverse of `build_matrix(kind, n)`.
///
/// The product with the built matrix is the identity, exactly; the
/// acceptance suite certifies this against the elimination oracle.
pub fn closed_form_inverse(kind: &MatrixKind, n: u32) -> Result<ExactMatrix> {
    kind.validate()?;
    let n_us = n as usize;
    match kind {
        MatrixKind::Classical { alpha } => {
            let ctx = FieldContext::RATIONAL_DEFAULT;
            let n = i64::from(n);
            Ok(ExactMatrix::from_fn(ctx, n_us, |l, j| {
                let (l, j) = (l as i64, j as i64);
                let offset = Rational::from_integer(BigInt::from(l + j)) + alpha;
                let ratio = &offset / alpha;
                let value = ratio
                    * generalized_binomial(&(Rational::from_integer(BigInt::from(n + l)) + alpha), n - j)
                    * generalized_binomial(&(Rational::from_integer(BigInt::from(n + j)) + alpha), n - l)
                    * generalized_binomial(&(&offset - Rational::one()), l)
                    * generalized_binomial(&(&offset - Rational::one()), j);
                let signed = if (l + j) % 2 == 0 { value } else { -value };
                ctx.from_rational(signed)
            }))
        }
        MatrixKind::Quantum { alpha, param } => {
            let table = QBinomialTable::new(param, 2 * n + alpha)?;
            Ok(ExactMatrix::from_fn(kind.context(), n_us, |l, j| {
                quantum_inverse_entry(&table, *alpha, i64::from(n), l as i64, j as i64)
            }))
        }
        MatrixKind::Filbert { alpha, theta } => {
            let ctx = theta.context();
            let seq = FibSequence::new(theta, 2 * n + alpha);
            let f_alpha = seq.value(*alpha).clone();
            let n = i64::from(n);
            let a = i64::from(*alpha);
            Ok(ExactMatrix::from_fn(ctx, n_us, |l, j| {
                let (l, j) = (l as i64, j as i64);
                // Sign exponent n(l+j+alpha) - C(l,2) - C(j,2); the matrix
                // scaled up by F_alpha has integer entries throughout.
                let exponent = n * (l + j + a) - l * (l - 1) / 2 - j * (j - 1) / 2;
                let numer = seq.value((l + j + a) as u32)
                    * fibonomial_in(&seq, n + l + a, n - j)
                    * fibonomial_in(&seq, n + j + a, n - l)
                    * fibonomial_in(&seq, l + j + a - 1, l)
                    * fibonomial_in(&seq, l + j + a - 1, j);
                let signed = if exponent.rem_euclid(2) == 0 { numer } else { -numer };
                ctx.from_rational(Rational::new(signed, f_alpha.clone()))
            }))
        }
    }
}

/// Closed-form determinant of `build_matrix(kind, n)`.
pub fn closed_form_det(kind: &MatrixKind, n: u32) -> Result<FieldElement> {
    kind.validate()?;
    match kind {
        MatrixKind::Classical { alpha } => {
            let ctx = FieldContext::RATIONAL_DEFAULT;
            let mut denom = Rational::one();
            for k in 1..=i64::from(n) {
                let order = Rational::from_integer(BigInt::from(2 * k)) + alpha;
                let binom =
                    generalized_binomial(&(&order - Rational::one()), k);
                denom *= order * (&binom * &binom);
            }
            let mut numer = Rational::one();
            for _ in 0..n {
                numer *= alpha;
            }
            Ok(ctx.from_rational(numer / denom))
        }
        MatrixKind::Quantum { alpha, param } => {
            let table = QBinomialTable::new(param, 2 * n + alpha)?;
            let mut acc = table.integer(*alpha).powu(u64::from(n));
            for k in 1..=n {
                let binom = table.binom(i64::from(2 * k + alpha) - 1, i64::from(k));
                let term = &table.integer(2 * k + alpha) * &(&binom * &binom);
                acc = acc.div(&term).expect("orders validated by the table");
            }
            Ok(acc)
        }
        MatrixKind::Filbert { alpha, theta } => {
            let ctx = theta.context();
            let seq = FibSequence::new(theta, 2 * n + alpha);
            let mut numer = BigInt::one();
            for _ in 0..n {
                numer *= seq.value(*alpha);
            }
            let mut denom = BigInt::one();
            for k in 1..=i64::from(n) {
                let a = i64::from(*alpha);
                let binom = fibonomial_in(&seq, 2 * k + a - 1, k);
                denom *= seq.value((2 * k + a) as u32) * (&binom * &binom);
            }
            let exponent = i64::from(*alpha) * i64::from(n) * (i64::from(n) + 1) / 2;
            if exponent.rem_euclid(2) == 1 {
                numer = -numer;
            }
            Ok(ctx.from_rational(Rational::new(numer, denom)))
        }
    }
}

/// Conjugate by the unitary diagonal U = diag(i^0, ..., i^n) on both sides:
/// entry (l,j) picks up the factor i^(l+j).
pub fn unitary_conjugate(matrix: &ExactMatrix) -> ExactMatrix {
    let ctx = matrix.context();
    matrix.map_entries(|l, j, e| e * &ctx.i_power((l + j) as i64))
}

/// Check the determinant ratio against the squared leading coefficient of
/// the orthonormal polynomials:
/// det(n-1)/det(n) = ([2n+alpha]/[alpha]) * C_q(2n+alpha-1, n)^2.
pub fn det_ratio_check(kind: &MatrixKind, n: u32) -> Result<()> {
    let MatrixKind::Quantum { alpha, param } = kind else {
        return Err(Error::InvalidParameter(
            "determinant ratio check applies to the quantum family".into(),
        ));
    };
    if n == 0 {
        return Err(Error::InvalidParameter(
            "determinant ratio needs n >= 1".into(),
        ));
    }
    let lhs = closed_form_det(kind, n - 1)?.div(&closed_form_det(kind, n)?)?;
    let table = QBinomialTable::new(param, 2 * n + alpha)?;
    let binom = table.binom(i64::from(2 * n + alpha) - 1, i64::from(n));
    let rhs = &table
        .integer(2 * n + alpha)
        .div(&table.integer(*alpha))
        .expect("orders validated by the table")
        * &(&binom * &binom);
    if lhs != rhs {
        return Err(Error::IdentityViolation(format!(
            "determinant ratio at n={n}: {lhs} != {rhs}"
        )));
    }
    Ok(())
}
