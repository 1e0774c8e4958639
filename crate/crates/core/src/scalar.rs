//! Exact arithmetic in ℚ(√3).
//!
//! A [`Scalar`] is a pair of arbitrary-precision rationals `(a, b)` standing for
//! `a + b·√3`. Rationals are [`num_rational::BigRational`], which keeps every
//! value in lowest terms with a positive denominator.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};

/// Arbitrary-precision rational, always canonical (`gcd(num, den) = 1`, `den > 0`).
pub type Rat = BigRational;

/// Element `a + b·√3` of the field ℚ(√3).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    a: Rat,
    b: Rat,
}

fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

impl Scalar {
    pub fn new(a: Rat, b: Rat) -> Self {
        Scalar { a, b }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from(1)
    }

    /// `√3`.
    pub fn sqrt3() -> Self {
        Scalar { a: Rat::zero(), b: Rat::one() }
    }

    /// `p/q` as a rational scalar. Panics if `q == 0`.
    pub fn frac(p: i64, q: i64) -> Self {
        Scalar { a: Rat::new(BigInt::from(p), BigInt::from(q)), b: Rat::zero() }
    }

    /// `a + b·√3` from small integers.
    pub fn from_ints(a: i64, b: i64) -> Self {
        Scalar { a: rat(a), b: rat(b) }
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn sqrt3_part(&self) -> &Rat {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a - b·√3`.
    pub fn galois(&self) -> Self {
        Scalar { a: self.a.clone(), b: -self.b.clone() }
    }

    /// Field norm `a² - 3b²` (a rational).
    pub fn field_norm(&self) -> Rat {
        &self.a * &self.a - rat(3) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.b.is_zero() {
            return Ok(Scalar { a: self.a.recip(), b: Rat::zero() });
        }
        // a² - 3b² ≠ 0 because √3 is irrational.
        let nrm = self.field_norm();
        Ok(Scalar { a: &self.a / &nrm, b: -(&self.b / &nrm) })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn half(&self) -> Self {
        let two = rat(2);
        Scalar { a: &self.a / &two, b: &self.b / &two }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        let k = rat(k);
        Scalar { a: &self.a * &k, b: &self.b * &k }
    }

    /// Rebuilds the value from its parts. Rationals are canonical after every
    /// operation, so this is the identity; it exists to make the canonical-form
    /// idempotence property testable.
    pub fn normalized(&self) -> Self {
        let norm = |r: &Rat| Rat::new(r.numer().clone(), r.denom().clone());
        Scalar { a: norm(&self.a), b: norm(&self.b) }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar { a: rat(n), b: Rat::zero() }
    }
}

impl From<Rat> for Scalar {
    fn from(a: Rat) -> Self {
        Scalar { a, b: Rat::zero() }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        match (self.b.is_zero(), rhs.b.is_zero()) {
            (true, true) => Scalar { a: &self.a * &rhs.a, b: Rat::zero() },
            (true, false) => Scalar { a: &self.a * &rhs.a, b: &self.a * &rhs.b },
            (false, true) => Scalar { a: &self.a * &rhs.a, b: &self.b * &rhs.a },
            (false, false) => {
                Scalar { a: &self.a * &rhs.a + rat(3) * &self.b * &rhs.b, b: &self.a * &rhs.b + &self.b * &rhs.a }
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

/// Panics on division by zero; use [`Scalar::checked_div`] for a fallible version.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

forward_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -self.a, b: -self.b }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -self.a.clone(), b: -self.b.clone() }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

fn fmt_rat(r: &Rat, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Text format: `RAT`, `RAT+RAT*s` or `RAT-RAT*s`, with `s` standing for √3.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rat(&self.a, f)?;
        if !self.b.is_zero() {
            f.write_str(if self.b.is_negative() { "-" } else { "+" })?;
            fmt_rat(&self.b.abs(), f)?;
            f.write_str("*s")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `[-]digits[/digits]` in lowest terms.
fn parse_rat(text: &str, whole: &str) -> Result<Rat> {
    let bad = || AlgebraError::ScalarSyntax(whole.to_string());
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit());
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if !digits(num) || den.is_some_and(|d| !digits(d)) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(bad());
    }
    let value = Rat::new(if neg { -n.clone() } else { n.clone() }, d.clone());
    // Reject anything that would not print back identically.
    let canonical = value.numer().abs() == n && value.denom() == &d && !(neg && n.is_zero());
    if !canonical || (den.is_some() && d.is_one()) {
        return Err(bad());
    }
    Ok(value)
}

impl FromStr for Scalar {
    type Err = AlgebraError;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || AlgebraError::ScalarSyntax(text.to_string());
        let Some(body) = text.strip_suffix("*s") else {
            return Ok(Scalar::from(parse_rat(text, text)?));
        };
        // Split at the sign that separates the two rationals (not a leading '-').
        let split = body.char_indices().skip(1).find(|&(_, c)| c == '+' || c == '-').map(|(i, _)| i).ok_or_else(bad)?;
        let a = parse_rat(&body[..split], text)?;
        let sign = &body[split..split + 1];
        let b_text = &body[split + 1..];
        if b_text.starts_with('-') {
            return Err(bad());
        }
        let b = parse_rat(b_text, text)?;
        if b.is_zero() {
            return Err(bad());
        }
        Ok(Scalar { a, b: if sign == "-" { -b } else { b } })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::Sampler;

    #[test]
    fn sqrt3_squared_is_three() {
        assert_eq!(&Scalar::sqrt3() * &Scalar::sqrt3(), Scalar::from(3));
    }

    #[test]
    fn product_example() {
        let x = Scalar::from_ints(1, 1);
        let y = Scalar::from_ints(2, -1);
        assert_eq!(x * y, Scalar::from_ints(-1, 1));
    }

    #[test]
    fn multiplicative_identity() {
        let mut s = Sampler::new(7);
        for _ in 0..20 {
            let x = s.scalar();
            assert_eq!(&x * &Scalar::one(), x);
        }
    }

    #[test]
    fn inverses() {
        assert_eq!(Scalar::from(2).inv().unwrap(), Scalar::frac(1, 2));
        let x = Scalar::from_ints(1, 1);
        let inv = x.inv().unwrap();
        assert_eq!(inv, Scalar::new(Rat::new((-1).into(), 2.into()), Rat::new(1.into(), 2.into())));
        assert_eq!(&x * &inv, Scalar::one());
        assert_eq!(Scalar::zero().inv(), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn field_axioms_on_random_triples() {
        let mut s = Sampler::new(0x414C42);
        for _ in 0..1000 {
            let (x, y, z) = (s.scalar(), s.scalar(), s.scalar());
            assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            assert_eq!(&x * &y, &y * &x);
            assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            assert_eq!(&x + &y, &y + &x);
            if !x.is_zero() {
                assert_eq!(&x * &x.inv().unwrap(), Scalar::one());
            }
            assert_eq!(x.normalized().normalized(), x.normalized());
        }
    }

    #[test]
    fn text_format() {
        assert_eq!(Scalar::frac(1, 3).to_string(), "1/3");
        assert_eq!((Scalar::from(-1) + Scalar::sqrt3().half()).to_string(), "-1+1/2*s");
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::from_ints(0, -2).to_string(), "0-2*s");
        for text in ["1/3", "-1+1/2*s", "0", "0-2*s", "7/2-3/5*s", "-12"] {
            assert_eq!(text.parse::<Scalar>().unwrap().to_string(), text);
        }
    }

    #[test]
    fn rejects_non_canonical_text() {
        for text in ["2/4", "1/1", "-0", "1/0", "", "s", "1+0*s", "1+-2*s", "1.5", "+1", "0/3"] {
            assert!(text.parse::<Scalar>().is_err(), "{text:?} accepted");
        }
    }
}
