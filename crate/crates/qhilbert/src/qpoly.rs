//! Orthogonal polynomials for the discrete measure behind the quantum
//! family, with exact integration.
//!
//! The measure mu^(alpha) places mass (1-q^alpha) q^(k*alpha) at the point
//! s q^k for k = 0, 1, 2, ...; integrating x^j termwise gives the closed
//! geometric sum (1-q^alpha) s^j / (1-q^(alpha+j)), so integration never
//! truncates anything. The identity holds formally whenever the denominators
//! are nonzero; |q| < 1 decides whether it is also a convergent-measure
//! statement, and is reported separately.
//!
//! The polynomials p_n here are normalized so that the kernel coefficient
//! matrix (which needs only squared norms, never a square root) coincides
//! with the closed-form inverse of the quantum matrix; that duality is one
//! of the main certified facts.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};
use crate::hankel::quantum_inverse_entry;
use crate::matrix::ExactMatrix;
use crate::quantum::{QBinomialTable, QuantumParam};

/// Dense polynomial over the field; index = power of x, trailing zeros
/// trimmed so the representation is canonical.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyCoeffs {
    ctx: FieldContext,
    coeffs: Vec<FieldElement>,
}

impl PolyCoeffs {
    pub fn new(ctx: FieldContext, mut coeffs: Vec<FieldElement>) -> Self {
        assert!(
            coeffs.iter().all(|c| c.context() == ctx),
            "coefficient context mismatch"
        );
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyCoeffs { ctx, coeffs }
    }

    pub fn zero(ctx: FieldContext) -> Self {
        PolyCoeffs { ctx, coeffs: Vec::new() }
    }

    pub fn one(ctx: FieldContext) -> Self {
        Self::new(ctx, vec![ctx.one()])
    }

    pub fn context(&self) -> FieldContext {
        self.ctx
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of x^j (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> FieldElement {
        self.coeffs.get(j).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn add(&self, rhs: &PolyCoeffs) -> PolyCoeffs {
        assert_eq!(self.ctx, rhs.ctx, "polynomial context mismatch");
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|j| &self.coeff(j) + &rhs.coeff(j)).collect();
        Self::new(self.ctx, coeffs)
    }

    /// Naive convolution product.
    pub fn mul(&self, rhs: &PolyCoeffs) -> PolyCoeffs {
        assert_eq!(self.ctx, rhs.ctx, "polynomial context mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.ctx);
        }
        let mut coeffs = vec![self.ctx.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Self::new(self.ctx, coeffs)
    }

    pub fn scale(&self, factor: &FieldElement) -> PolyCoeffs {
        Self::new(self.ctx, self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Coefficients of p(factor * x): the x^k coefficient gains factor^k.
    pub fn scale_argument(&self, factor: &FieldElement) -> PolyCoeffs {
        let mut power = self.ctx.one();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if k > 0 {
                    power = &power * factor;
                }
                c * &power
            })
            .collect();
        Self::new(self.ctx, coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.ctx.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }
}

impl Serialize for PolyCoeffs {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PolyCoeffs {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs: Vec<FieldElement> = Vec::deserialize(deserializer)?;
        let Some(first) = coeffs.first() else {
            return Err(D::Error::custom(
                "polynomial needs at least one coefficient",
            ));
        };
        let ctx = first.context();
        if coeffs.iter().any(|c| c.context() != ctx) {
            return Err(D::Error::custom("coefficients must share one context"));
        }
        Ok(Self::new(ctx, coeffs))
    }
}

/// The measure mu^(alpha) at the given quantum parameter.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasureSpec {
    alpha: u32,
    param: QuantumParam,
}

impl MeasureSpec {
    pub fn new(alpha: u32, param: QuantumParam) -> Result<Self> {
        if alpha == 0 {
            return Err(Error::InvalidParameter(
                "measure order alpha must be a positive integer".into(),
            ));
        }
        Ok(MeasureSpec { alpha, param })
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn param(&self) -> &QuantumParam {
        &self.param
    }

    /// Whether |q| < 1, decided exactly by comparing |q|^2 with 1 in
    /// Q(sqrt(d)). True means the formal integrals below are also honest
    /// convergent integrals against a finite complex measure.
    pub fn is_convergent(&self) -> bool {
        let q = self.param.q();
        let abs2 = q.abs_squared();
        let gap = &self.param.context().one() - &abs2;
        gap.real_sign() == Some(std::cmp::Ordering::Greater)
    }
}

/// Finite q-shifted factorial (a; q)_k = prod_{i=0}^{k-1} (1 - a q^i).
pub fn q_pochhammer(a: &FieldElement, q: &FieldElement, k: u32) -> FieldElement {
    let ctx = a.context();
    let one = ctx.one();
    let mut acc = ctx.one();
    let mut shifted = a.clone();
    for _ in 0..k {
        acc = &acc * &(&one - &shifted);
        shifted = &shifted * q;
    }
    acc
}

/// Little q-Jacobi polynomial p_n(x; a, b; q) as the terminating basic
/// hypergeometric sum: the x^k coefficient is
/// (q^(-n); q)_k (a b q^(n+1); q)_k / ((a q; q)_k (q; q)_k) * q^k.
pub fn little_q_jacobi(
    n: u32,
    a: &FieldElement,
    b: &FieldElement,
    p: &QuantumParam,
) -> Result<PolyCoeffs> {
    let ctx = p.context();
    for x in [a, b] {
        if x.context() != ctx {
            return Err(Error::ContextMismatch {
                left: x.context().radicand(),
                right: ctx.radicand(),
            });
        }
    }
    let q = p.q();
    let one = ctx.one();
    let q_minus_n = q.pow(-i64::from(n)).expect("q is nonzero");
    let abq = &(a * b) * &q.powu(u64::from(n) + 1);
    let aq = a * q;

    // Running factors (x; q)_k / (x; q)_{k-1} = 1 - x q^(k-1).
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    coeffs.push(ctx.one());
    let mut acc = ctx.one();
    let mut q_pow = ctx.one();
    for k in 1..=n {
        let numer = &(&one - &(&q_minus_n * &q_pow)) * &(&one - &(&abq * &q_pow));
        let denom = &(&one - &(&aq * &q_pow)) * &(&one - &(q * &q_pow));
        if denom.is_zero() {
            return Err(Error::DegenerateDenominator { order: k });
        }
        acc = &(&acc * &numer).div(&denom)? * q;
        coeffs.push(acc.clone());
        q_pow = &q_pow * q;
    }
    Ok(PolyCoeffs::new(ctx, coeffs))
}

/// The degree-n polynomial attached to the quantum family of order alpha:
/// the x^j coefficient is (-1)^j C_q(n, j) C_q(n+j+alpha-1, n).
pub fn specialized_poly(n: u32, alpha: u32, p: &QuantumParam) -> Result<PolyCoeffs> {
    if alpha == 0 {
        return Err(Error::InvalidParameter(
            "alpha must be a positive integer".into(),
        ));
    }
    let table = QBinomialTable::new(p, 2 * n + alpha - 1)?;
    let ctx = p.context();
    let coeffs = (0..=i64::from(n))
        .map(|j| {
            let value = &table.binom(i64::from(n), j)
                * &table.binom(i64::from(n) + j + i64::from(alpha) - 1, i64::from(n));
            if j % 2 == 0 {
                value
            } else {
                -value
            }
        })
        .collect();
    Ok(PolyCoeffs::new(ctx, coeffs))
}

/// Exact integral of a polynomial against mu^(alpha): the x^j term
/// contributes (1 - q^alpha) s^j / (1 - q^(alpha+j)).
pub fn integrate_against_measure(poly: &PolyCoeffs, spec: &MeasureSpec) -> Result<FieldElement> {
    let ctx = spec.param.context();
    if poly.context() != ctx {
        return Err(Error::ContextMismatch {
            left: poly.context().radicand(),
            right: ctx.radicand(),
        });
    }
    let one = ctx.one();
    let q = spec.param.q();
    let s = spec.param.s();
    let mass = &one - &q.powu(u64::from(spec.alpha));
    let mut acc = ctx.zero();
    let mut s_pow = ctx.one();
    for (j, coeff) in poly.coeffs().iter().enumerate() {
        if j > 0 {
            s_pow = &s_pow * s;
        }
        if coeff.is_zero() {
            continue;
        }
        let order = spec.alpha + j as u32;
        let denom = &one - &q.powu(u64::from(order));
        if denom.is_zero() {
            return Err(Error::DegenerateDenominator { order });
        }
        let term = (&(coeff * &s_pow) * &mass).div(&denom)?;
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Integral of p_n p_m against mu^(alpha). The orthogonality relation says
/// the result is 0 off the diagonal and [alpha]/[2n+alpha] on it.
pub fn verify_orthogonality(
    n: u32,
    m: u32,
    alpha: u32,
    p: &QuantumParam,
) -> Result<FieldElement> {
    let pn = specialized_poly(n, alpha, p)?;
    let pm = specialized_poly(m, alpha, p)?;
    let spec = MeasureSpec::new(alpha, p.clone())?;
    integrate_against_measure(&pn.mul(&pm), &spec)
}

/// One term of the kernel sum:
/// (-1)^(l+j) ([2k+alpha]/[alpha]) C(k,l) C(k,j) C(k+l+alpha-1,k) C(k+j+alpha-1,k).
pub(crate) fn kernel_summand(
    table: &QBinomialTable,
    alpha: u32,
    k: i64,
    l: i64,
    j: i64,
) -> FieldElement {
    let a = i64::from(alpha);
    let ratio = table
        .integer((2 * k + a) as u32)
        .div(&table.integer(alpha))
        .expect("orders validated by the table");
    let product = &(&table.binom(k, l) * &table.binom(k, j))
        * &(&table.binom(k + l + a - 1, k) * &table.binom(k + j + a - 1, k));
    let value = &ratio * &product;
    if (l + j) % 2 == 0 {
        value
    } else {
        -value
    }
}

/// Coefficient matrix of the kernel polynomial sum_{k<=n} p_k(x) p_k(y) /
/// (squared norm): entry (l,j) collects the x^l y^j coefficient. Equals the
/// closed-form inverse of the quantum matrix, which the tests certify.
pub fn kernel_coeffs(n: u32, alpha: u32, p: &QuantumParam) -> Result<ExactMatrix> {
    if alpha == 0 {
        return Err(Error::InvalidParameter(
            "alpha must be a positive integer".into(),
        ));
    }
    let table = QBinomialTable::new(p, 2 * n + alpha)?;
    let ctx = p.context();
    Ok(ExactMatrix::from_fn(ctx, n as usize, |l, j| {
        let mut acc = ctx.zero();
        for k in l.max(j)..=n as usize {
            acc = &acc + &kernel_summand(&table, alpha, k as i64, l as i64, j as i64);
        }
        acc
    }))
}

/// Induction step behind the closed-form inverse: with R(n; l, j) the
/// closed-form entry (zero once l or j exceeds n) and C(k; l, j) the kernel
/// summand, checks R(n+1; l, j) - R(n; l, j) = C(n+1; l, j).
pub fn induction_identity_check(
    n: u32,
    l: u32,
    j: u32,
    alpha: u32,
    p: &QuantumParam,
) -> Result<()> {
    if alpha == 0 {
        return Err(Error::InvalidParameter(
            "alpha must be a positive integer".into(),
        ));
    }
    if l > n + 1 || j > n + 1 {
        return Err(Error::InvalidParameter(format!(
            "indices l={l}, j={j} must be at most n+1={}",
            n + 1
        )));
    }
    let table = QBinomialTable::new(p, 2 * n + 2 + alpha)?;
    let (n, l, j) = (i64::from(n), i64::from(l), i64::from(j));
    let next = quantum_inverse_entry(&table, alpha, n + 1, l, j);
    let prev = quantum_inverse_entry(&table, alpha, n, l, j);
    let step = kernel_summand(&table, alpha, n + 1, l, j);
    if &next - &prev != step {
        return Err(Error::IdentityViolation(format!(
            "induction step at n={n}, l={l}, j={j}: ({next}) - ({prev}) != {step}"
        )));
    }
    Ok(())
}

/// The bracket manipulation inside the induction proof:
/// [n+l+a+1][n+j+a+1] - [n+1-j][n+1-l] = [2n+2+a][l+j+a].
pub fn braces_identity_check(
    n: u32,
    l: u32,
    j: u32,
    alpha: u32,
    p: &QuantumParam,
) -> Result<()> {
    use crate::quantum::quantum_integer;
    if alpha == 0 {
        return Err(Error::InvalidParameter(
            "alpha must be a positive integer".into(),
        ));
    }
    if l > n + 1 || j > n + 1 {
        return Err(Error::InvalidParameter(format!(
            "indices l={l}, j={j} must be at most n+1={}",
            n + 1
        )));
    }
    let lhs = &(&quantum_integer(n + l + alpha + 1, p) * &quantum_integer(n + j + alpha + 1, p))
        - &(&quantum_integer(n + 1 - j, p) * &quantum_integer(n + 1 - l, p));
    let rhs = &quantum_integer(2 * n + 2 + alpha, p) * &quantum_integer(l + j + alpha, p);
    if lhs != rhs {
        return Err(Error::IdentityViolation(format!(
            "braces identity at n={n}, l={l}, j={j}, alpha={alpha}: {lhs} != {rhs}"
        )));
    }
    Ok(())
}
