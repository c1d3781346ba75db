//! Exact arithmetic in the field Q(i, sqrt(d)).
//!
//! Every scalar in this crate is a [`FieldElement`]: four rational coordinates
//! over the basis {1, sqrt(d), i, i*sqrt(d)} for a fixed non-square radicand
//! `d >= 2`. Rationals are arbitrary-precision and always kept in lowest terms
//! with positive denominator, so equality of coordinates is equality of values.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, reduced eagerly with positive denominator.
pub type Rational = BigRational;

/// Parse a rational from `"p/q"` or `"p"` text.
pub fn parse_rational(text: &str) -> Result<Rational> {
    Rational::from_str(text.trim())
        .map_err(|e| Error::InvalidParameter(format!("cannot parse rational {text:?}: {e}")))
}

/// Shorthand for small rational constants.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// The algebraic setting: the radicand `d` of sqrt(d).
///
/// `d` must be at least 2 and not a perfect square, which makes
/// {1, sqrt(d), i, i*sqrt(d)} a basis of Q(i, sqrt(d)) over Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldContext {
    d: u64,
}

impl FieldContext {
    /// Context used for purely rational and Gaussian-rational computation.
    ///
    /// Any valid radicand would do since those values have zero sqrt(d)
    /// coordinates; 5 is chosen so the default shares a context with the
    /// classical Fibonacci setting (m = 1).
    pub const RATIONAL_DEFAULT: FieldContext = FieldContext { d: 5 };

    pub fn new(d: u64) -> Result<Self> {
        let root = d.isqrt();
        if d < 2 || root * root == d {
            return Err(Error::InvalidContext { d });
        }
        Ok(FieldContext { d })
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn zero(&self) -> FieldElement {
        self.from_rational(Rational::zero())
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, value: Rational) -> FieldElement {
        FieldElement {
            ctx: *self,
            a: value,
            b: Rational::zero(),
            c: Rational::zero(),
            e: Rational::zero(),
        }
    }

    pub fn from_integer(&self, value: i64) -> FieldElement {
        self.from_rational(Rational::from_integer(BigInt::from(value)))
    }

    /// The element with the given coordinates (a + b*sqrt(d)) + i*(c + e*sqrt(d)).
    pub fn from_coords(&self, a: Rational, b: Rational, c: Rational, e: Rational) -> FieldElement {
        FieldElement { ctx: *self, a, b, c, e }
    }

    /// The generator sqrt(d).
    pub fn sqrt_d(&self) -> FieldElement {
        self.from_coords(
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    /// The imaginary unit i.
    pub fn imaginary_unit(&self) -> FieldElement {
        self.from_coords(
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
        )
    }

    /// i^k with period 4; negative exponents are allowed since i is a unit.
    pub fn i_power(&self, k: i64) -> FieldElement {
        match k.rem_euclid(4) {
            0 => self.one(),
            1 => self.imaginary_unit(),
            2 => -self.one(),
            _ => -self.imaginary_unit(),
        }
    }
}

/// An element of Q(i, sqrt(d)): the value (a + b*sqrt(d)) + i*(c + e*sqrt(d)).
///
/// Elements interoperate only within one context; coordinates determine the
/// value uniquely because d is not a square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    ctx: FieldContext,
    a: Rational,
    b: Rational,
    c: Rational,
    e: Rational,
}

impl FieldElement {
    pub fn context(&self) -> FieldContext {
        self.ctx
    }

    /// Coordinates (a, b, c, e) over {1, sqrt(d), i, i*sqrt(d)}.
    pub fn coords(&self) -> (&Rational, &Rational, &Rational, &Rational) {
        (&self.a, &self.b, &self.c, &self.e)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.e.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.e.is_zero()
    }

    /// True when the value lies in Q (no sqrt(d) and no imaginary part).
    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.e.is_zero()
    }

    /// True when the value lies in Q(sqrt(d)) (no imaginary part).
    pub fn is_real(&self) -> bool {
        self.c.is_zero() && self.e.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.a)
        } else {
            None
        }
    }

    fn check_context(&self, rhs: &FieldElement) -> Result<()> {
        if self.ctx != rhs.ctx {
            return Err(Error::ContextMismatch {
                left: self.ctx.d,
                right: rhs.ctx.d,
            });
        }
        Ok(())
    }

    /// Complex conjugate: i -> -i.
    pub fn conj_i(&self) -> FieldElement {
        self.ctx
            .from_coords(self.a.clone(), self.b.clone(), -self.c.clone(), -self.e.clone())
    }

    /// Quadratic conjugate: sqrt(d) -> -sqrt(d).
    pub fn conj_sqrt(&self) -> FieldElement {
        self.ctx
            .from_coords(self.a.clone(), -self.b.clone(), self.c.clone(), -self.e.clone())
    }

    /// |x|^2 = x * conj_i(x); a real element of Q(sqrt(d)).
    pub fn abs_squared(&self) -> FieldElement {
        self * &self.conj_i()
    }

    /// Multiply every coordinate by a rational scalar.
    pub fn scale(&self, factor: &Rational) -> FieldElement {
        self.ctx.from_coords(
            &self.a * factor,
            &self.b * factor,
            &self.c * factor,
            &self.e * factor,
        )
    }

    pub fn checked_add(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.check_context(rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_sub(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.check_context(rhs)?;
        Ok(self - rhs)
    }

    pub fn checked_mul(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.check_context(rhs)?;
        Ok(self * rhs)
    }

    pub fn checked_div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.check_context(rhs)?;
        self.div(rhs)
    }

    /// Multiplicative inverse.
    ///
    /// Computed by clearing i with the complex conjugate, then clearing
    /// sqrt(d) with the quadratic conjugate. The remaining denominator
    /// u * conj_sqrt(u) with u = x * conj_i(x) is a positive rational:
    /// both factors are sums of squares of real numbers.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ci = self.conj_i();
        let u = self * &ci;
        debug_assert!(u.is_real());
        let us = u.conj_sqrt();
        let norm = (&u * &us).a.clone();
        debug_assert!(norm.is_positive());
        Ok((&ci * &us).scale(&norm.recip()))
    }

    pub fn div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power by repeated squaring; `x.pow(0) == 1` for every x,
    /// and negative exponents of zero are rejected.
    pub fn pow(&self, k: i64) -> Result<FieldElement> {
        if k >= 0 {
            return Ok(self.powu(k as u64));
        }
        let inv = self.inv()?;
        Ok(inv.powu(k.unsigned_abs()))
    }

    /// Non-negative integer power.
    pub fn powu(&self,
        mut k: u64,
    ) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Sign of a real element (c = e = 0), exactly; `None` if the element
    /// has an imaginary part.
    pub fn real_sign(&self) -> Option<Ordering> {
        if !self.is_real() {
            return None;
        }
        let a_sign = rational_sign(&self.a);
        let b_sign = rational_sign(&self.b);
        Some(match (a_sign, b_sign) {
            (s, Ordering::Equal) => s,
            (Ordering::Equal, s) => s,
            (sa, sb) if sa == sb => sa,
            (sa, _) => {
                // a and b*sqrt(d) pull in opposite directions: compare a^2 vs b^2*d.
                let d = Rational::from_integer(BigInt::from(self.ctx.d));
                match (&self.a * &self.a).cmp(&(&self.b * &self.b * d)) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    // impossible while d is non-square and b != 0
                    Ordering::Equal => Ordering::Equal,
                }
            }
        })
    }
}

fn rational_sign(r: &Rational) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if r.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        assert_eq!(self.ctx, rhs.ctx, "field context mismatch");
        self.ctx.from_coords(
            &self.a + &rhs.a,
            &self.b + &rhs.b,
            &self.c + &rhs.c,
            &self.e + &rhs.e,
        )
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        assert_eq!(self.ctx, rhs.ctx, "field context mismatch");
        self.ctx.from_coords(
            &self.a - &rhs.a,
            &self.b - &rhs.b,
            &self.c - &rhs.c,
            &self.e - &rhs.e,
        )
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        assert_eq!(self.ctx, rhs.ctx, "field context mismatch");
        let d = BigInt::from(self.ctx.d);
        let (a1, b1, c1, e1) = (&self.a, &self.b, &self.c, &self.e);
        let (a2, b2, c2, e2) = (&rhs.a, &rhs.b, &rhs.c, &rhs.e);
        // (A + iC)(B + iD) with A = a + b*sqrt(d), C = c + e*sqrt(d), ...
        let a = a1 * a2 + b1 * b2 * &d - c1 * c2 - e1 * e2 * &d;
        let b = a1 * b2 + b1 * a2 - c1 * e2 - e1 * c2;
        let c = a1 * c2 + c1 * a2 + (b1 * e2 + e1 * b2) * &d;
        let e = a1 * e2 + e1 * a2 + b1 * c2 + c1 * b2;
        self.ctx.from_coords(a, b, c, e)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.ctx
            .from_coords(-self.a.clone(), -self.b.clone(), -self.c.clone(), -self.e.clone())
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let d = self.ctx.d;
        let mut first = true;
        let mut term = |f: &mut fmt::Formatter<'_>, coeff: &Rational, unit: &str| -> fmt::Result {
            if coeff.is_zero() {
                return Ok(());
            }
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if unit.is_empty() {
                write!(f, "{mag}")
            } else if mag.is_one() {
                write!(f, "{unit}")
            } else {
                write!(f, "{mag}*{unit}")
            }
        };
        term(f, &self.a, "")?;
        term(f, &self.b, &format!("sqrt({d})"))?;
        term(f, &self.c, "i")?;
        term(f, &self.e, &format!("i*sqrt({d})"))?;
        Ok(())
    }
}

// JSON encoding: {"d": 5, "re": ["a", "b"], "im": ["c", "e"]} with rationals
// rendered as "p/q" (or "p" when the denominator is 1).
#[derive(Serialize, Deserialize)]
struct FieldElementRepr {
    d: u64,
    re: [String; 2],
    im: [String; 2],
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FieldElementRepr {
            d: self.ctx.d,
            re: [self.a.to_string(), self.b.to_string()],
            im: [self.c.to_string(), self.e.to_string()],
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FieldElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = FieldElementRepr::deserialize(deserializer)?;
        let ctx = FieldContext::new(repr.d).map_err(D::Error::custom)?;
        let parse = |s: &String| parse_rational(s).map_err(D::Error::custom);
        Ok(ctx.from_coords(
            parse(&repr.re[0])?,
            parse(&repr.re[1])?,
            parse(&repr.im[0])?,
            parse(&repr.im[1])?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn ctx() -> FieldContext {
        FieldContext::new(5).unwrap()
    }

    #[test]
    fn rejects_degenerate_radicands() {
        assert_eq!(FieldContext::new(0), Err(Error::InvalidContext { d: 0 }));
        assert_eq!(FieldContext::new(1), Err(Error::InvalidContext { d: 1 }));
        assert_eq!(FieldContext::new(4), Err(Error::InvalidContext { d: 4 }));
        assert_eq!(FieldContext::new(9), Err(Error::InvalidContext { d: 9 }));
        assert!(FieldContext::new(2).is_ok());
        assert!(FieldContext::new(8).is_ok());
    }

    #[test]
    fn one_plus_i_times_conjugate_is_two() {
        let ctx = ctx();
        let x = &ctx.one() + &ctx.imaginary_unit();
        let y = &ctx.one() - &ctx.imaginary_unit();
        assert_eq!(&x * &y, ctx.from_integer(2));
    }

    #[test]
    fn rationalizing_inverse_of_sqrt_five() {
        let ctx = ctx();
        let inv = ctx.sqrt_d().inv().unwrap();
        assert_eq!(inv, ctx.from_coords(ratio(0, 1), ratio(1, 5), ratio(0, 1), ratio(0, 1)));
    }

    #[test]
    fn golden_ratio_conjugate_squared() {
        // ((sqrt(5)-1)/2)^2 = (3 - sqrt(5))/2, expanded by hand from (sqrt(5)-1)^2 = 6 - 2*sqrt(5).
        let ctx = ctx();
        let x = ctx.from_coords(ratio(-1, 2), ratio(1, 2), ratio(0, 1), ratio(0, 1));
        let sq = &x * &x;
        assert_eq!(sq, ctx.from_coords(ratio(3, 2), ratio(-1, 2), ratio(0, 1), ratio(0, 1)));
    }

    #[test]
    fn power_examples() {
        let ctx = ctx();
        assert_eq!(ctx.imaginary_unit().pow(4).unwrap(), ctx.one());
        assert_eq!(
            ctx.from_integer(2).pow(-3).unwrap(),
            ctx.from_rational(ratio(1, 8))
        );
        // (i*(sqrt(5)-1)/2)^2 = -(3 - sqrt(5))/2
        let s = ctx.from_coords(ratio(0, 1), ratio(0, 1), ratio(-1, 2), ratio(1, 2));
        assert_eq!(
            s.pow(2).unwrap(),
            ctx.from_coords(ratio(-3, 2), ratio(1, 2), ratio(0, 1), ratio(0, 1))
        );
        assert_eq!(ctx.zero().pow(0).unwrap(), ctx.one());
        assert_eq!(ctx.zero().pow(-1), Err(Error::DivisionByZero));
    }

    #[test]
    fn i_power_has_period_four() {
        let ctx = ctx();
        assert_eq!(ctx.i_power(0), ctx.one());
        assert_eq!(ctx.i_power(-1), -ctx.imaginary_unit());
        assert_eq!(ctx.i_power(6), -ctx.one());
        for k in -12..=12 {
            assert_eq!(ctx.i_power(k), ctx.imaginary_unit().pow(k).unwrap());
        }
    }

    #[test]
    fn context_mismatch_is_rejected() {
        let c5 = FieldContext::new(5).unwrap();
        let c8 = FieldContext::new(8).unwrap();
        assert_eq!(
            c5.one().checked_add(&c8.one()),
            Err(Error::ContextMismatch { left: 5, right: 8 })
        );
    }

    #[test]
    fn real_sign_compares_mixed_terms_exactly() {
        let ctx = ctx();
        // 9/4 - sqrt(5) > 0 because 81/16 > 5; 2 - sqrt(5) < 0 because 4 < 5.
        let pos = ctx.from_coords(ratio(9, 4), ratio(-1, 1), ratio(0, 1), ratio(0, 1));
        let neg = ctx.from_coords(ratio(2, 1), ratio(-1, 1), ratio(0, 1), ratio(0, 1));
        assert_eq!(pos.real_sign(), Some(Ordering::Greater));
        assert_eq!(neg.real_sign(), Some(Ordering::Less));
        assert_eq!(ctx.zero().real_sign(), Some(Ordering::Equal));
        assert_eq!(ctx.imaginary_unit().real_sign(), None);
    }

    #[test]
    fn json_round_trip() {
        let ctx = ctx();
        let x = ctx.from_coords(ratio(3, 2), ratio(-1, 2), ratio(0, 1), ratio(7, 3));
        let text = serde_json::to_string(&x).unwrap();
        assert_eq!(
            text,
            r#"{"d":5,"re":["3/2","-1/2"],"im":["0","7/3"]}"#
        );
        let back: FieldElement = serde_json::from_str(&text).unwrap();
        assert_eq!(back, x);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=12).prop_map(|(n, d)| ratio(n, d))
    }

    fn element() -> impl Strategy<Value = FieldElement> {
        (small_rational(), small_rational(), small_rational(), small_rational())
            .prop_map(|(a, b, c, e)| ctx().from_coords(a, b, c, e))
    }

    fn lowest_terms(x: &FieldElement) -> bool {
        let (a, b, c, e) = x.coords();
        [a, b, c, e].iter().all(|r| {
            r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
        })
    }

    proptest! {
        #[test]
        fn field_axioms(x in element(), y in element(), z in element()) {
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert!(lowest_terms(&(&x * &y)));
            prop_assert!(lowest_terms(&(&x + &y)));
        }

        #[test]
        fn nonzero_elements_have_exact_inverses(x in element()) {
            prop_assume!(!x.is_zero());
            let inv = x.inv().unwrap();
            prop_assert_eq!(&x * &inv, ctx().one());
            prop_assert!(lowest_terms(&inv));
        }

        #[test]
        fn pow_is_additive_in_the_exponent(x in element(), j in -10i64..=10, k in -10i64..=10) {
            prop_assume!(!x.is_zero());
            let lhs = x.pow(j + k).unwrap();
            let rhs = &x.pow(j).unwrap() * &x.pow(k).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
