//! Exact scalars: the rationals and quadratic extensions Q(sqrt(d)).
//!
//! Every value is kept canonical so that structural equality is field
//! equality: rationals in lowest terms with a positive denominator, and
//! a quadratic element with zero irrational part collapses to a rational.

mod poly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use poly::{deflate, find_roots, root_order_key, UniPoly};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Builds the rational `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// An element of Q or of some Q(sqrt(d)).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    /// `a + b*sqrt(d)` with `b != 0`.
    Quad {
        d: i64,
        a: Rational,
        b: Rational,
    },
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

pub fn is_squarefree(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    let n = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

pub(crate) fn check_quadratic_parameter(d: i64) -> Result<()> {
    if d == 1 || !is_squarefree(d) {
        return Err(Error::InvalidQuadraticField(d));
    }
    Ok(())
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::Rat(ratio(num, den))
    }

    /// `a + b*sqrt(d)`, normalized to a rational when `b == 0`.
    pub fn quad(d: i64, a: Rational, b: Rational) -> Result<Self> {
        check_quadratic_parameter(d)?;
        Ok(Self::quad_unchecked(d, a, b))
    }

    fn quad_unchecked(d: i64, a: Rational, b: Rational) -> Self {
        if b.is_zero() {
            Scalar::Rat(a)
        } else {
            Scalar::Quad { d, a, b }
        }
    }

    /// The square root of `d` in Q(sqrt(d)).
    pub fn sqrt_of(d: i64) -> Result<Self> {
        Self::quad(d, Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Quad { .. } => None,
        }
    }

    /// The `d` of the quadratic field this element needs, if any.
    pub fn field(&self) -> Option<i64> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Quad { d, .. } => Some(*d),
        }
    }

    fn parts(&self) -> (Option<i64>, &Rational, Option<&Rational>) {
        match self {
            Scalar::Rat(r) => (None, r, None),
            Scalar::Quad { d, a, b } => (Some(*d), a, Some(b)),
        }
    }

    fn common_field(&self, other: &Scalar) -> Result<Option<i64>> {
        match (self.field(), other.field()) {
            (Some(d1), Some(d2)) if d1 != d2 => Err(Error::FieldMismatch(d1, d2)),
            (Some(d), _) | (_, Some(d)) => Ok(Some(d)),
            _ => Ok(None),
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        if let (Scalar::Rat(x), Scalar::Rat(y)) = (self, other) {
            return Ok(Scalar::Rat(x + y));
        }
        let d = self.common_field(other)?.expect("one side is quadratic");
        let (_, a1, b1) = self.parts();
        let (_, a2, b2) = other.parts();
        let zero = Rational::zero();
        let b = b1.unwrap_or(&zero) + b2.unwrap_or(&zero);
        Ok(Self::quad_unchecked(d, a1 + a2, b))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        if let (Scalar::Rat(x), Scalar::Rat(y)) = (self, other) {
            return Ok(Scalar::Rat(x * y));
        }
        let d = self.common_field(other)?.expect("one side is quadratic");
        let (_, a1, b1) = self.parts();
        let (_, a2, b2) = other.parts();
        let zero = Rational::zero();
        let (b1, b2) = (b1.unwrap_or(&zero), b2.unwrap_or(&zero));
        let a = a1 * a2 + b1 * b2 * int(d);
        let b = a1 * b2 + a2 * b1;
        Ok(Self::quad_unchecked(d, a, b))
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rat(r) if r.is_zero() => Err(Error::DivisionByZero),
            Scalar::Rat(r) => Ok(Scalar::Rat(r.recip())),
            Scalar::Quad { d, a, b } => {
                // (a - b√d) / (a² - d b²); the norm is nonzero since d is not a square.
                let norm = a * a - b * b * int(*d);
                Ok(Self::quad_unchecked(*d, a / &norm, -(b / &norm)))
            }
        }
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Height `max(|num|, den)` of a rational; quadratic elements use the
    /// larger height of their two coordinates.
    pub fn height(&self) -> BigInt {
        fn h(r: &Rational) -> BigInt {
            std::cmp::max(r.numer().abs(), r.denom().clone())
        }
        match self {
            Scalar::Rat(r) => h(r),
            Scalar::Quad { a, b, .. } => std::cmp::max(h(a), h(b)),
        }
    }

    pub fn is_negative_rational(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_negative())
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rat(r) if r.is_integer() => r.to_integer().to_i64(),
            _ => None,
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

// Operators panic on mixed quadratic fields or division by zero; use the
// `try_*` methods where either can happen.
forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Quad { d, a, b } => Scalar::Quad {
                d: *d,
                a: -a,
                b: -b,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rat(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => f.write_str(&fmt_rational(r)),
            Scalar::Quad { d, a, b } => {
                let mut out = String::new();
                if !a.is_zero() {
                    out.push_str(&fmt_rational(a));
                    out.push(if b.is_negative() { '-' } else { '+' });
                } else if b.is_negative() {
                    out.push('-');
                }
                let mag = b.abs();
                if !mag.is_one() {
                    out.push_str(&fmt_rational(&mag));
                    out.push('*');
                }
                out.push_str(&format!("sqrt({d})"));
                f.write_str(&out)
            }
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse {
        pos: 0,
        msg: format!("invalid rational '{s}'"),
    };
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `3`, `-7/2`, `sqrt(2)`, `-3/2*sqrt(2)` and `1/2+3/2*sqrt(2)`.
    fn from_str(src: &str) -> Result<Self> {
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(idx) = s.find("sqrt(") else {
            return Ok(Scalar::Rat(parse_rational(&s)?));
        };
        let close = s[idx..].find(')').map(|i| idx + i).ok_or(Error::Parse {
            pos: idx,
            msg: "unclosed sqrt(".into(),
        })?;
        if close + 1 != s.len() {
            return Err(Error::Parse {
                pos: close + 1,
                msg: "trailing input after sqrt(..)".into(),
            });
        }
        let d: i64 = s[idx + 5..close].parse().map_err(|_| Error::Parse {
            pos: idx + 5,
            msg: "sqrt argument must be an integer".into(),
        })?;
        let head = s[..idx].strip_suffix('*').unwrap_or(&s[..idx]);
        // Split "a±b" at the last sign that is not the leading one.
        let split = head
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .next_back();
        let (a_str, b_str) = match split {
            Some(i) => (&head[..i], &head[i..]),
            None => ("", head),
        };
        let a = if a_str.is_empty() {
            Rational::zero()
        } else {
            parse_rational(a_str)?
        };
        let b = match b_str {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other))?,
        };
        Scalar::quad(d, a, b)
    }
}

/// Squarefree decomposition of a nonzero integer: `n = s^2 * d` with `d`
/// squarefree (carrying the sign of `n`).
pub(crate) fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut rest = n.abs();
    let mut square = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let pp = &p * &p;
        while (&rest % &pp).is_zero() {
            rest /= &pp;
            square *= &p;
        }
        p += 1;
    }
    (square, rest * sign)
}

pub(crate) fn lcm_of_denominators<'a>(it: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    it.into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sqrt2() -> Scalar {
        Scalar::sqrt_of(2).unwrap()
    }

    #[test]
    fn canonical_rationals() {
        assert_eq!(Scalar::from_ratio(2, -4), Scalar::from_ratio(-1, 2));
        assert_eq!(Scalar::from_ratio(0, 5).to_string(), "0");
        assert_eq!(Scalar::from_ratio(-14, 4).to_string(), "-7/2");
    }

    #[test]
    fn quadratic_arithmetic() {
        let r2 = sqrt2();
        assert_eq!(&r2 * &r2, Scalar::from_int(2));
        let x: Scalar = "1/2+3/2*sqrt(2)".parse().unwrap();
        assert_eq!(x.to_string(), "1/2+3/2*sqrt(2)");
        let inv = x.inv().unwrap();
        assert!((&x * &inv).is_one());
        let y: Scalar = "-sqrt(2)".parse().unwrap();
        assert_eq!(&r2 + &y, Scalar::zero());
        assert!(matches!(r2 + y, Scalar::Rat(_)));
    }

    #[test]
    fn rejects_bad_fields() {
        assert!(Scalar::sqrt_of(4).is_err());
        assert!(Scalar::sqrt_of(1).is_err());
        assert!(Scalar::sqrt_of(0).is_err());
        assert!(Scalar::sqrt_of(-3).is_ok());
        let a = Scalar::sqrt_of(2).unwrap();
        let b = Scalar::sqrt_of(3).unwrap();
        assert!(matches!(a.try_add(&b), Err(Error::FieldMismatch(2, 3))));
        assert!(matches!(Scalar::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn scalar_text_forms() {
        for s in [
            "3",
            "-7/2",
            "sqrt(2)",
            "-sqrt(2)",
            "3/2*sqrt(-3)",
            "1-sqrt(5)",
            "-1/2-1/2*sqrt(-3)",
        ] {
            let v: Scalar = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!(
            "2+0*sqrt(2)".parse::<Scalar>().unwrap(),
            Scalar::from_int(2)
        );
    }

    fn small_scalar() -> impl Strategy<Value = Scalar> {
        (-20i64..20, 1i64..7, -20i64..20, 1i64..7)
            .prop_map(|(a, da, b, db)| Scalar::quad(2, ratio(a, da), ratio(b, db)).unwrap())
    }

    proptest! {
        #[test]
        fn field_axioms(x in small_scalar(), y in small_scalar(), z in small_scalar()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            if !x.is_zero() {
                prop_assert!((&x * &x.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn display_parses_back(x in small_scalar()) {
            prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
        }
    }
}
