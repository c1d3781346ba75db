//! Quantum integers, factorials, and the two binomial families.
//!
//! The fundamental parameter is s = q^(1/2), carried exactly as a field
//! element; q is its square. Quantum integers use the symmetric Laurent sum
//!
//!   [n] = s^(n-1) + s^(n-3) + ... + s^(1-n),
//!
//! which needs no division and therefore stays total at s = +-1 and at roots
//! of unity, where the quotient form (q^(n/2)-q^(-n/2))/(q^(1/2)-q^(-1/2))
//! degenerates to 0/0. In particular [n] = n at s = +-1 and q = 1.

use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement, Rational};

/// Evaluation point: a fixed nonzero square root s of q.
#[derive(Clone, Debug, PartialEq)]
pub struct QuantumParam {
    s: FieldElement,
    q: FieldElement,
}

impl QuantumParam {
    /// Any nonzero s. The library computes with this root throughout; which
    /// square root of q the caller means is the caller's choice.
    pub fn new(s: FieldElement) -> Result<Self> {
        if s.is_zero() {
            return Err(Error::InvalidParameter(
                "quantum parameter s must be nonzero".into(),
            ));
        }
        let q = &s * &s;
        Ok(QuantumParam { s, q })
    }

    /// Real s > 0 or s < 0, supplied as a rational.
    pub fn from_rational(s: Rational) -> Result<Self> {
        Self::new(FieldContext::RATIONAL_DEFAULT.from_rational(s))
    }

    /// Purely imaginary s = t*i, the natural root for negative q = -t^2.
    pub fn from_imaginary_rational(t: Rational) -> Result<Self> {
        let ctx = FieldContext::RATIONAL_DEFAULT;
        Self::new(&ctx.from_rational(t) * &ctx.imaginary_unit())
    }

    pub fn s(&self) -> &FieldElement {
        &self.s
    }

    pub fn q(&self) -> &FieldElement {
        &self.q
    }

    pub fn context(&self) -> FieldContext {
        self.s.context()
    }
}

/// The quantum integer [n] by the symmetric Laurent sum in s.
pub fn quantum_integer(n: u32, p: &QuantumParam) -> FieldElement {
    let ctx = p.context();
    if n == 0 {
        return ctx.zero();
    }
    // Terms s^(1-n), s^(3-n), ..., s^(n-1): start at the lowest power and
    // climb by q.
    let mut term = p.s.pow(1 - i64::from(n)).expect("s is nonzero");
    let mut sum = ctx.zero();
    for _ in 0..n {
        sum = &sum + &term;
        term = &term * &p.q;
    }
    sum
}

/// [n]! = [1][2]...[n], with [0]! = 1.
pub fn quantum_factorial(n: u32, p: &QuantumParam) -> FieldElement {
    let mut acc = p.context().one();
    for k in 1..=n {
        acc = &acc * &quantum_integer(k, p);
    }
    acc
}

/// Quantum binomial coefficient by the product formula
/// [n](n-1)...[n-k+1] / ([1][2]...[k]); zero when k < 0 or k > n.
///
/// When some denominator [j] vanishes (q a root of unity of order j) the
/// product form cannot be evaluated, even if the numerator vanishes too: the
/// coefficient's limit value can be nonzero there, so returning 0 would be
/// wrong. Both cases report the offending order.
pub fn quantum_binomial(n: u32, k: i64, p: &QuantumParam) -> Result<FieldElement> {
    let ctx = p.context();
    if k < 0 || k > i64::from(n) {
        return Ok(ctx.zero());
    }
    let k = k as u32;
    let mut numer = ctx.one();
    let mut denom = ctx.one();
    for j in 1..=k {
        let d = quantum_integer(j, p);
        if d.is_zero() {
            return Err(Error::DegenerateDenominator { order: j });
        }
        numer = &numer * &quantum_integer(n - j + 1, p);
        denom = &denom * &d;
    }
    numer.div(&denom)
}

/// Gaussian q-binomial by the q-shifted product
/// prod_{j=1}^{m} (1 - q^(n-m+j)) / (1 - q^j) with m = min(k, n-k).
///
/// Using the shorter side means only denominators that actually occur are
/// required nonzero; in particular (n, 0) is 1 for every q, including q = 1.
pub fn gaussian_q_binomial(n: u32, k: i64, q: &FieldElement) -> Result<FieldElement> {
    let ctx = q.context();
    if k < 0 || k > i64::from(n) {
        return Ok(ctx.zero());
    }
    let m = (k as u32).min(n - k as u32);
    let one = ctx.one();
    let mut numer = ctx.one();
    let mut denom = ctx.one();
    for j in 1..=m {
        let d = &one - &q.powu(u64::from(j));
        if d.is_zero() {
            return Err(Error::DegenerateDenominator { order: j });
        }
        numer = &numer * &(&one - &q.powu(u64::from(n - m + j)));
        denom = &denom * &d;
    }
    numer.div(&denom)
}

/// Succeeds iff [k] != 0 for all 2 <= k <= max_order, i.e. q is not a root
/// of unity of order at most max_order. Reports the smallest violating order.
pub fn assert_valid_order(p: &QuantumParam, max_order: u32) -> Result<()> {
    for k in 2..=max_order {
        if quantum_integer(k, p).is_zero() {
            return Err(Error::RootOfUnity { order: k });
        }
    }
    Ok(())
}

/// Precomputed quantum factorials [0]!, ..., [max]! for O(1) binomials.
///
/// Construction runs the root-of-unity check up front, so every later
/// division is by a nonzero factorial.
#[derive(Clone, Debug)]
pub struct QBinomialTable {
    param: QuantumParam,
    fact: Vec<FieldElement>,
}

impl QBinomialTable {
    pub fn new(p: &QuantumParam, max: u32) -> Result<Self> {
        assert_valid_order(p, max)?;
        let mut fact = Vec::with_capacity(max as usize + 1);
        fact.push(p.context().one());
        for k in 1..=max {
            let next = &fact[(k - 1) as usize] * &quantum_integer(k, p);
            fact.push(next);
        }
        Ok(QBinomialTable {
            param: p.clone(),
            fact,
        })
    }

    pub fn param(&self) -> &QuantumParam {
        &self.param
    }

    /// Largest n this table can serve.
    pub fn max(&self) -> u32 {
        (self.fact.len() - 1) as u32
    }

    /// [n], read off as [n]!/[n-1]!.
    pub fn integer(&self, n: u32) -> FieldElement {
        let n = n as usize;
        assert!(n < self.fact.len(), "quantum integer beyond table size");
        if n == 0 {
            return self.param.context().zero();
        }
        self.fact[n]
            .div(&self.fact[n - 1])
            .expect("table factorials are nonzero")
    }

    /// Quantum binomial via factorials; zero when k < 0 or k > n.
    pub fn binom(&self, n: i64, k: i64) -> FieldElement {
        if k < 0 || k > n {
            return self.param.context().zero();
        }
        let (n, k) = (n as usize, k as usize);
        assert!(n < self.fact.len(), "quantum binomial beyond table size");
        let denom = &self.fact[k] * &self.fact[n - k];
        self.fact[n]
            .div(&denom)
            .expect("table factorials are nonzero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::ratio;
    use proptest::prelude::*;

    fn param_rational(n: i64, d: i64) -> QuantumParam {
        QuantumParam::from_rational(ratio(n, d)).unwrap()
    }

    /// s = i(sqrt(5)-1)/2, the square root of q = -(3-sqrt(5))/2.
    fn param_golden() -> QuantumParam {
        let ctx = FieldContext::new(5).unwrap();
        QuantumParam::new(ctx.from_coords(
            ratio(0, 1),
            ratio(0, 1),
            ratio(-1, 2),
            ratio(1, 2),
        ))
        .unwrap()
    }

    #[test]
    fn zero_parameter_is_rejected() {
        assert!(matches!(
            QuantumParam::from_rational(ratio(0, 1)),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn quantum_integers_match_hand_values() {
        let ctx = FieldContext::RATIONAL_DEFAULT;
        // [n] = n at s = 1.
        assert_eq!(quantum_integer(5, &param_rational(1, 1)), ctx.from_integer(5));
        // [2] = s + 1/s = 1/2 + 2.
        assert_eq!(
            quantum_integer(2, &param_rational(1, 2)),
            ctx.from_rational(ratio(5, 2))
        );
        // q = -1: [2] = i + 1/i = 0.
        let p_i = QuantumParam::from_imaginary_rational(ratio(1, 1)).unwrap();
        assert!(quantum_integer(2, &p_i).is_zero());
        // [3] = s^2 + 1 + s^(-2) = (sqrt(5)-3)/2 + 1 - (3+sqrt(5))/2 = -2.
        assert_eq!(
            quantum_integer(3, &param_golden()),
            param_golden().context().from_integer(-2)
        );
        assert!(quantum_integer(0, &param_rational(1, 2)).is_zero());
    }

    #[test]
    fn quantum_factorials_match_hand_values() {
        let ctx = FieldContext::RATIONAL_DEFAULT;
        assert_eq!(quantum_factorial(0, &param_rational(1, 2)), ctx.one());
        assert_eq!(quantum_factorial(3, &param_rational(1, 1)), ctx.from_integer(6));
        // [1][2][3] = 1 * 5/2 * 21/4.
        assert_eq!(
            quantum_factorial(3, &param_rational(1, 2)),
            ctx.from_rational(ratio(105, 8))
        );
    }

    #[test]
    fn quantum_binomials_match_hand_values() {
        let ctx = FieldContext::RATIONAL_DEFAULT;
        let p = param_rational(1, 2);
        assert_eq!(quantum_binomial(4, 0, &p).unwrap(), ctx.one());
        assert_eq!(
            quantum_binomial(4, 2, &param_rational(1, 1)).unwrap(),
            ctx.from_integer(6)
        );
        // [4][3]/([1][2]) = (85/8)(21/4)/(5/2).
        assert_eq!(
            quantum_binomial(4, 2, &p).unwrap(),
            ctx.from_rational(ratio(357, 16))
        );
        assert!(quantum_binomial(4, -1, &p).unwrap().is_zero());
        assert!(quantum_binomial(4, 5, &p).unwrap().is_zero());
    }

    #[test]
    fn vanishing_denominator_is_an_error_even_when_the_limit_exists() {
        // q = -1 makes [2] = 0; the (4,2) coefficient's limit there is 2,
        // which the product form cannot produce.
        let p_i = QuantumParam::from_imaginary_rational(ratio(1, 1)).unwrap();
        assert_eq!(
            quantum_binomial(4, 2, &p_i),
            Err(Error::DegenerateDenominator { order: 2 })
        );
        let q_one = FieldContext::RATIONAL_DEFAULT.one();
        assert_eq!(
            gaussian_q_binomial(4, 2, &q_one),
            Err(Error::DegenerateDenominator { order: 1 })
        );
    }

    #[test]
    fn gaussian_binomials_match_hand_values() {
        let ctx = FieldContext::RATIONAL_DEFAULT;
        let q2 = ctx.from_integer(2);
        // (1 + q + q^2)(1 + q^2) at q = 2.
        assert_eq!(gaussian_q_binomial(4, 2, &q2).unwrap(), ctx.from_integer(35));
        // (n, 0) needs no denominators at all, so even q = 1 works.
        assert_eq!(gaussian_q_binomial(7, 0, &ctx.one()).unwrap(), ctx.one());
        assert_eq!(gaussian_q_binomial(7, 7, &ctx.one()).unwrap(), ctx.one());
        let q_quarter = ctx.from_rational(ratio(1, 4));
        assert_eq!(
            gaussian_q_binomial(4, 2, &q_quarter).unwrap(),
            ctx.from_rational(ratio(357, 256))
        );
    }

    #[test]
    fn order_validation_finds_the_smallest_root_of_unity() {
        let p_i = QuantumParam::from_imaginary_rational(ratio(1, 1)).unwrap();
        assert_eq!(
            assert_valid_order(&p_i, 2),
            Err(Error::RootOfUnity { order: 2 })
        );
        assert!(assert_valid_order(&param_rational(1, 2), 100).is_ok());
        // |q| = (3 - sqrt(5))/2 < 1 and q is not real-positive, so no root
        // of unity ever occurs.
        assert!(assert_valid_order(&param_golden(), 100).is_ok());
    }

    #[test]
    fn table_serves_integers_and_binomials() {
        let p = param_rational(1, 2);
        let table = QBinomialTable::new(&p, 12).unwrap();
        for n in 0..=12u32 {
            assert_eq!(table.integer(n), quantum_integer(n, &p));
            for k in -1..=(n as i64 + 1) {
                assert_eq!(table.binom(i64::from(n), k), quantum_binomial(n, k, &p).unwrap());
            }
        }
        let p_i = QuantumParam::from_imaginary_rational(ratio(1, 1)).unwrap();
        assert_eq!(
            QBinomialTable::new(&p_i, 4).err(),
            Some(Error::RootOfUnity { order: 2 })
        );
    }

    /// Nonzero rational s values; q = s^2 is never a root of unity except
    /// q = 1 at s = +-1, which individual tests exclude where needed.
    fn nonzero_s() -> impl Strategy<Value = QuantumParam> {
        (-8i64..=8, 1i64..=6)
            .prop_filter("s must be nonzero", |(n, _)| *n != 0)
            .prop_map(|(n, d)| param_rational(n, d))
    }

    proptest! {
        #[test]
        fn laurent_sum_symmetries(p in nonzero_s(), n in 0u32..=12) {
            // s -> 1/s leaves [n] unchanged.
            let inv = QuantumParam::new(p.s().inv().unwrap()).unwrap();
            prop_assert_eq!(quantum_integer(n, &inv), quantum_integer(n, &p));
            // s -> -s multiplies [n] by (-1)^(n-1).
            let neg = QuantumParam::new(-p.s()).unwrap();
            let expected = if n % 2 == 0 && n > 0 {
                -quantum_integer(n, &p)
            } else {
                quantum_integer(n, &p)
            };
            prop_assert_eq!(quantum_integer(n, &neg), expected);
        }

        #[test]
        fn binomial_equals_factorial_ratio(p in nonzero_s(), n in 0u32..=10, k in 0u32..=10) {
            prop_assume!(k <= n);
            let lhs = quantum_binomial(n, i64::from(k), &p).unwrap();
            let denom = &quantum_factorial(k, &p) * &quantum_factorial(n - k, &p);
            let rhs = quantum_factorial(n, &p).div(&denom).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn binomial_symmetry(p in nonzero_s(), n in 0u32..=10, k in 0u32..=10) {
            prop_assume!(k <= n);
            let lhs = quantum_binomial(n, i64::from(k), &p).unwrap();
            let rhs = quantum_binomial(n, i64::from(n - k), &p).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn gaussian_is_s_power_times_quantum(p in nonzero_s(), n in 0u32..=10, k in 0u32..=10) {
            prop_assume!(k <= n);
            // q = 1 (s = +-1) is outside the Gaussian product's domain
            // unless the product is empty.
            prop_assume!(!(p.q() - &p.context().one()).is_zero() || k == 0 || k == n);
            let gauss = gaussian_q_binomial(n, i64::from(k), p.q()).unwrap();
            let scale = p.s().pow(i64::from(k) * i64::from(n - k)).unwrap();
            let quantum = quantum_binomial(n, i64::from(k), &p).unwrap();
            prop_assert_eq!(gauss, &scale * &quantum);
        }
    }
}
