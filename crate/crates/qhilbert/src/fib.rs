//! Generalized Fibonacci numbers and their bridge to the quantum world.
//!
//! The parameter is a positive integer m = 2*sinh(theta). Everything about
//! theta is carried through the exact values e^theta = (m + sqrt(d))/2 and
//! e^(-theta) = (sqrt(d) - m)/2 with d = m^2 + 4, so theta itself is never
//! represented. The sequence F_n solves F_{n+1} = m*F_n + F_{n-1} with
//! F_0 = 0, F_1 = 1 and consists of integers; m = 1 gives the classical
//! Fibonacci numbers.
//!
//! Setting s = i*e^(-theta), so q = s^2 = -e^(-2*theta), quantum quantities
//! become Fibonacci quantities up to powers of i:
//!
//!   [n]    = (-i)^(n-1)   * F_n,
//!   C_q(n,k) = (-i)^(k(n-k)) * C_F(n,k),
//!
//! where C_F is the Fibonomial coefficient. `bridge_check` certifies both.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement, Rational, ratio};
use crate::quantum::{quantum_binomial, quantum_integer, QuantumParam};

/// The hyperbolic parameter, held exactly: m = 2*sinh(theta).
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaParam {
    m: u32,
    ctx: FieldContext,
    e_theta: FieldElement,
    e_minus_theta: FieldElement,
}

impl ThetaParam {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter(
                "theta parameter m must be a positive integer".into(),
            ));
        }
        // d = m^2 + 4 sits strictly between m^2 and (m+1)^2 for m >= 2, and
        // equals 5 for m = 1, so it is never a perfect square.
        let d = u64::from(m) * u64::from(m) + 4;
        let ctx = FieldContext::new(d)?;
        let half = ratio(1, 2);
        let half_m = Rational::from_integer(BigInt::from(m)) * &half;
        let e_theta = ctx.from_coords(
            half_m.clone(),
            half.clone(),
            Rational::zero(),
            Rational::zero(),
        );
        let e_minus_theta = ctx.from_coords(-half_m, half, Rational::zero(), Rational::zero());
        debug_assert!((&e_theta * &e_minus_theta).is_one());
        Ok(ThetaParam {
            m,
            ctx,
            e_theta,
            e_minus_theta,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn context(&self) -> FieldContext {
        self.ctx
    }

    pub fn e_theta(&self) -> &FieldElement {
        &self.e_theta
    }

    pub fn e_minus_theta(&self) -> &FieldElement {
        &self.e_minus_theta
    }
}

/// Prefix F_0, ..., F_max of the generalized Fibonacci sequence.
#[derive(Clone, Debug)]
pub struct FibSequence {
    values: Vec<BigInt>,
}

impl FibSequence {
    pub fn new(t: &ThetaParam, max: u32) -> Self {
        let m = BigInt::from(t.m);
        let mut values = Vec::with_capacity(max as usize + 1);
        values.push(BigInt::zero());
        if max >= 1 {
            values.push(BigInt::one());
        }
        for n in 2..=max as usize {
            let next = &m * &values[n - 1] + &values[n - 2];
            values.push(next);
        }
        FibSequence { values }
    }

    pub fn value(&self, n: u32) -> &BigInt {
        &self.values[n as usize]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// F_n by the integer recursion.
pub fn fib_theta(n: u32, t: &ThetaParam) -> BigInt {
    FibSequence::new(t, n).value(n).clone()
}

/// F_n by the closed form (e^(n*theta) - (-1)^n e^(-n*theta)) / (e^theta + e^(-theta)),
/// evaluated exactly in Q(sqrt(d)).
pub fn fib_closed_form(n: u32, t: &ThetaParam) -> BigInt {
    let pos = t.e_theta.powu(u64::from(n));
    let neg = t.e_minus_theta.powu(u64::from(n));
    let numer = if n % 2 == 0 { &pos - &neg } else { &pos + &neg };
    let denom = &t.e_theta + &t.e_minus_theta;
    let value = numer.div(&denom).expect("e^theta + e^(-theta) = sqrt(d) > 0");
    let rational = value
        .as_rational()
        .expect("closed form collapses to a rational")
        .clone();
    assert!(rational.is_integer(), "closed form must be an integer");
    rational.to_integer()
}

/// Fibonomial coefficient F_n F_{n-1} ... F_{n-k+1} / (F_1 F_2 ... F_k);
/// zero when k < 0 or k > n. The quotient is always an exact integer.
pub fn fibonomial(n: u32, k: i64, t: &ThetaParam) -> BigInt {
    let seq = FibSequence::new(t, n);
    fibonomial_in(&seq, i64::from(n), k)
}

/// Fibonomial from a precomputed sequence; `seq` must reach index n.
pub(crate) fn fibonomial_in(seq: &FibSequence, n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigRational::one();
    for j in 1..=k {
        let numer = seq.value((n - j + 1) as u32);
        let denom = seq.value(j as u32);
        acc *= BigRational::new(numer.clone(), denom.clone());
    }
    assert!(acc.is_integer(), "Fibonomial quotients are exact");
    acc.to_integer()
}

/// The quantum parameter s = i*e^(-theta), giving q = -e^(-2*theta).
pub fn quantum_param_from_theta(t: &ThetaParam) -> QuantumParam {
    let s = &t.ctx.imaginary_unit() * &t.e_minus_theta;
    QuantumParam::new(s).expect("e^(-theta) is nonzero")
}

fn integer_elem(ctx: FieldContext, value: &BigInt) -> FieldElement {
    ctx.from_rational(Rational::from_integer(value.clone()))
}

/// Certify the quantum-Fibonacci dictionary at index n:
/// [n] = (-i)^(n-1) F_n, and C_q(n,k) = (-i)^(k(n-k)) C_F(n,k) for all
/// 0 <= k <= n. A violation is an implementation bug, never expected.
pub fn bridge_check(n: u32, t: &ThetaParam) -> Result<()> {
    let p = quantum_param_from_theta(t);
    let ctx = p.context();
    let seq = FibSequence::new(t, n);

    let lhs = quantum_integer(n, &p);
    let rhs = &ctx.i_power(-(i64::from(n) - 1)) * &integer_elem(ctx, seq.value(n));
    if lhs != rhs {
        return Err(Error::BridgeViolation(format!(
            "[{n}] = {lhs} but (-i)^{} F_{n} = {rhs}",
            i64::from(n) - 1
        )));
    }

    for k in 0..=i64::from(n) {
        let lhs = quantum_binomial(n, k, &p)?;
        let phase = ctx.i_power(-(k * (i64::from(n) - k)));
        let rhs = &phase * &integer_elem(ctx, &fibonomial_in(&seq, i64::from(n), k));
        if lhs != rhs {
            return Err(Error::BridgeViolation(format!(
                "C_q({n},{k}) = {lhs} but phase * C_F({n},{k}) = {rhs}"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_m_zero() {
        assert!(matches!(ThetaParam::new(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn exponential_values_are_reciprocal() {
        for m in 1..=5 {
            let t = ThetaParam::new(m).unwrap();
            assert!((t.e_theta() * t.e_minus_theta()).is_one());
            assert_eq!(t.context().radicand(), u64::from(m) * u64::from(m) + 4);
        }
    }

    #[test]
    fn classical_and_m2_prefixes() {
        let t1 = ThetaParam::new(1).unwrap();
        let expected1: Vec<BigInt> = [0, 1, 1, 2, 3, 5, 8, 13].map(BigInt::from).to_vec();
        assert_eq!(FibSequence::new(&t1, 7).values(), &expected1[..]);

        let t2 = ThetaParam::new(2).unwrap();
        let expected2: Vec<BigInt> = [0, 1, 2, 5, 12, 29].map(BigInt::from).to_vec();
        assert_eq!(FibSequence::new(&t2, 5).values(), &expected2[..]);
    }

    #[test]
    fn second_term_equals_m() {
        for m in 1..=6 {
            let t = ThetaParam::new(m).unwrap();
            assert_eq!(fib_theta(2, &t), BigInt::from(m));
        }
    }

    #[test]
    fn recursion_agrees_with_closed_form() {
        for m in [1, 2, 3] {
            let t = ThetaParam::new(m).unwrap();
            let seq = FibSequence::new(&t, 40);
            for n in 0..=40 {
                assert_eq!(&fib_closed_form(n, &t), seq.value(n), "m={m}, n={n}");
            }
        }
    }

    #[test]
    fn fibonomial_hand_values() {
        let t = ThetaParam::new(1).unwrap();
        // F5*F4/(F1*F2) = 5*3.
        assert_eq!(fibonomial(5, 2, &t), BigInt::from(15));
        assert_eq!(fibonomial(9, 0, &t), BigInt::one());
        assert_eq!(fibonomial(4, -1, &t), BigInt::zero());
        assert_eq!(fibonomial(4, 5, &t), BigInt::zero());
    }

    #[test]
    fn fibonomial_recursion_example() {
        // C_F(5,2) = F_1 C_F(4,2) + F_4 C_F(4,1) = 1*6 + 3*3.
        let t = ThetaParam::new(1).unwrap();
        assert_eq!(fibonomial(4, 2, &t), BigInt::from(6));
        assert_eq!(fibonomial(4, 1, &t), BigInt::from(3));
        assert_eq!(fibonomial(5, 2, &t), BigInt::from(15));
    }

    #[test]
    fn fibonomials_are_integers_and_satisfy_the_recursion() {
        for m in [1, 2, 3] {
            let t = ThetaParam::new(m).unwrap();
            let seq = FibSequence::new(&t, 20);
            // fibonomial_in already asserts integrality on every call.
            for n in 1i64..=15 {
                for k in 1..n {
                    let lhs = fibonomial_in(&seq, n, k);
                    let rhs = seq.value((k - 1) as u32) * fibonomial_in(&seq, n - 1, k)
                        + seq.value((n - k + 1) as u32) * fibonomial_in(&seq, n - 1, k - 1);
                    assert_eq!(lhs, rhs, "m={m}, n={n}, k={k}");
                }
            }
            for n in 0i64..=20 {
                for k in 0..=n {
                    fibonomial_in(&seq, n, k);
                }
            }
        }
    }

    #[test]
    fn quantum_parameter_from_theta_hand_values() {
        // m=1: q = -(3 - sqrt(5))/2.
        let t1 = ThetaParam::new(1).unwrap();
        let p1 = quantum_param_from_theta(&t1);
        let c5 = t1.context();
        assert_eq!(
            p1.q(),
            &c5.from_coords(ratio(-3, 2), ratio(1, 2), ratio(0, 1), ratio(0, 1))
        );
        // m=2: q = -(3 - sqrt(8)).
        let t2 = ThetaParam::new(2).unwrap();
        let p2 = quantum_param_from_theta(&t2);
        let c8 = t2.context();
        assert_eq!(
            p2.q(),
            &c8.from_coords(ratio(-3, 1), ratio(1, 1), ratio(0, 1), ratio(0, 1))
        );
        // s * (-i) = e^(-theta) for every m.
        for m in 1..=4 {
            let t = ThetaParam::new(m).unwrap();
            let p = quantum_param_from_theta(&t);
            let ctx = t.context();
            assert_eq!(&(p.s() * &ctx.i_power(-1)), t.e_minus_theta());
            assert!((&(p.s() * &ctx.i_power(-1)) * t.e_theta()).is_one());
        }
    }

    #[test]
    fn bridge_hand_values() {
        let t = ThetaParam::new(1).unwrap();
        let p = quantum_param_from_theta(&t);
        let ctx = t.context();
        // [3] = (-i)^2 F_3 = -2.
        assert_eq!(quantum_integer(3, &p), ctx.from_integer(-2));
        // C_q(5,2) = (-i)^6 * 15 = -15.
        assert_eq!(quantum_binomial(5, 2, &p).unwrap(), ctx.from_integer(-15));
        // [1] = F_1 = 1 for every m.
        for m in 1..=4 {
            let t = ThetaParam::new(m).unwrap();
            let p = quantum_param_from_theta(&t);
            assert!(quantum_integer(1, &p).is_one());
        }
    }

    #[test]
    fn bridge_holds_across_orders() {
        for m in [1, 2, 3] {
            let t = ThetaParam::new(m).unwrap();
            for n in 0..=20 {
                bridge_check(n, &t).unwrap();
            }
        }
    }

    #[test]
    fn integer_ratio_matches_quantum_ratio() {
        // [alpha]/[l+j+alpha] = i^(l+j) F_alpha/F_{l+j+alpha}.
        for m in [1u32, 2] {
            let t = ThetaParam::new(m).unwrap();
            let p = quantum_param_from_theta(&t);
            let ctx = t.context();
            let seq = FibSequence::new(&t, 12);
            for alpha in 1u32..=4 {
                for l in 0u32..=4 {
                    for j in 0u32..=4 {
                        let lhs = quantum_integer(alpha, &p)
                            .div(&quantum_integer(l + j + alpha, &p))
                            .unwrap();
                        let ratio_f = integer_elem(ctx, seq.value(alpha))
                            .div(&integer_elem(ctx, seq.value(l + j + alpha)))
                            .unwrap();
                        let rhs = &ctx.i_power(i64::from(l + j)) * &ratio_f;
                        assert_eq!(lhs, rhs, "m={m}, alpha={alpha}, l={l}, j={j}");
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn closed_form_tracks_recursion(m in 1u32..=5, n in 0u32..=30) {
            let t = ThetaParam::new(m).unwrap();
            prop_assert_eq!(fib_closed_form(n, &t), fib_theta(n, &t));
        }

        #[test]
        fn fibonomial_symmetry(m in 1u32..=4, n in 0i64..=14, k in 0i64..=14) {
            prop_assume!(k <= n);
            let t = ThetaParam::new(m).unwrap();
            let seq = FibSequence::new(&t, n as u32);
            prop_assert_eq!(fibonomial_in(&seq, n, k), fibonomial_in(&seq, n, n - k));
        }
    }
}
