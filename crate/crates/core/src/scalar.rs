//! Numeric coefficients: exact rationals and precision-tagged binary floats.
//!
//! Every coefficient in an operator, polynomial or matrix is a [`Scalar`].
//! Exact values stay exact under `+ - * /`; as soon as a float enters an
//! expression the result is a float at the widest precision involved.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use dashu::float::round::mode::HalfEven;
use dashu::float::FBig;
use dashu::integer::{IBig, UBig};
use dashu::rational::RBig;

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational, always in lowest terms.
pub type Rational = RBig;

type Float = FBig<HalfEven, 2>;

/// Working precision used when none is requested, in decimal digits.
pub const DEFAULT_PRECISION: u32 = 50;
/// Smallest float precision accepted anywhere, in decimal digits.
pub const MIN_PRECISION: u32 = 15;

/// Number of binary digits needed to carry `digits` decimal digits.
pub(crate) fn bits_for_digits(digits: u32) -> usize {
    // log2(10) < 3.3220
    (digits as usize * 33220).div_ceil(10000) + 2
}

pub fn validate_precision(digits: u32) -> Result<u32> {
    if digits < MIN_PRECISION {
        return Err(Error::InvalidPrecision(digits));
    }
    Ok(digits)
}

/// A binary float carrying its working precision in decimal digits.
#[derive(Clone, Debug)]
pub struct Real {
    value: Float,
    digits: u32,
}

impl Real {
    fn from_float(value: Float, digits: u32) -> Self {
        let bits = bits_for_digits(digits);
        let value = if value.precision() == bits {
            value
        } else {
            value.with_precision(bits).value()
        };
        Real { value, digits }
    }

    pub fn from_rational(r: &Rational, digits: u32) -> Self {
        let value = r.to_float::<HalfEven, 2>(bits_for_digits(digits)).value();
        Real { value, digits }
    }

    pub fn from_int(n: i64, digits: u32) -> Self {
        Self::from_rational(&Rational::from(n), digits)
    }

    pub fn zero(digits: u32) -> Self {
        Self::from_int(0, digits)
    }

    /// Euler's number at the requested precision.
    pub fn euler(digits: u32) -> Self {
        Self::from_int(1, digits).exp()
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn exp(&self) -> Self {
        Real {
            value: self.value.exp(),
            digits: self.digits,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value == Float::ZERO
    }

    pub fn is_negative(&self) -> bool {
        self.value < Float::ZERO
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Re-rounds to a different working precision.
    pub fn with_digits(&self, digits: u32) -> Self {
        Self::from_float(self.value.clone(), digits)
    }

    /// Multiplies by 2^k without rounding.
    pub fn mul_pow2(&self, k: isize) -> Self {
        let shifted = self.value.clone() << k;
        Real {
            value: shifted,
            digits: self.digits,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64().value()
    }

    /// Decimal rendering with `sig` significant digits in scientific form.
    pub fn to_scientific(&self, sig: usize) -> String {
        if self.is_zero() {
            return format!("{:.*e}", sig.saturating_sub(1), 0.0);
        }
        let dec = self.value.to_decimal().value();
        let dec = dec.with_precision(sig.max(1)).value();
        let (signif, exp10) = dec.into_repr().into_parts();
        let neg = signif < IBig::ZERO;
        let mut mant = if neg { -signif } else { signif }.to_string();
        // value = mant * 10^exp10; renormalize to d.ddd * 10^e
        let e = exp10 + mant.len() as isize - 1;
        while mant.len() < sig {
            mant.push('0');
        }
        let (head, tail) = mant.split_at(1);
        let sign = if neg { "-" } else { "" };
        if tail.is_empty() {
            format!("{sign}{head}e{e}")
        } else {
            format!("{sign}{head}.{tail}e{e}")
        }
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real {
            value: -self.value.clone(),
            digits: self.digits,
        }
    }
}

macro_rules! real_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let digits = self.digits.max(rhs.digits);
                if self.digits == rhs.digits {
                    Real { value: &self.value $op &rhs.value, digits }
                } else {
                    let a = self.with_digits(digits);
                    let b = rhs.with_digits(digits);
                    Real { value: &a.value $op &b.value, digits }
                }
            }
        }
    };
}
real_binop!(Add, add, +);
real_binop!(Sub, sub, -);
real_binop!(Mul, mul, *);
real_binop!(Div, div, /);

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_scientific(self.digits as usize))
    }
}

/// A coefficient: exact rational or precision-tagged float.
#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(Rational),
    Float(Real),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Exact(Rational::ZERO)
    }

    pub fn one() -> Self {
        Scalar::Exact(Rational::ONE)
    }

    pub fn int(n: i64) -> Self {
        Scalar::Exact(Rational::from(n))
    }

    /// The exact rational `num/den`. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Exact(Rational::from_parts_signed(
            IBig::from(num),
            IBig::from(den),
        ))
    }

    pub fn from_ubig(n: UBig) -> Self {
        Scalar::Exact(Rational::from(n))
    }

    /// Euler's number as a float scalar.
    pub fn euler(digits: u32) -> Self {
        Scalar::Float(Real::euler(digits))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.is_zero(),
            Scalar::Float(f) => f.is_zero(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Float(_) => None,
        }
    }

    /// Float precision in decimal digits, `None` for exact values.
    pub fn precision(&self) -> Option<u32> {
        match self {
            Scalar::Exact(_) => None,
            Scalar::Float(f) => Some(f.digits),
        }
    }

    pub fn to_real(&self, digits: u32) -> Real {
        match self {
            Scalar::Exact(r) => Real::from_rational(r, digits),
            Scalar::Float(f) => f.with_digits(digits),
        }
    }

    pub fn to_float(&self, digits: u32) -> Scalar {
        Scalar::Float(self.to_real(digits))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => r.to_f64().value(),
            Scalar::Float(f) => f.to_f64(),
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(r) => {
                if r.numerator() < &IBig::ZERO {
                    Scalar::Exact(-r.clone())
                } else {
                    Scalar::Exact(r.clone())
                }
            }
            Scalar::Float(f) => Scalar::Float(f.abs()),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Exact(r) => r.numerator() < &IBig::ZERO,
            Scalar::Float(f) => f.is_negative(),
        }
    }

    pub fn pow(&self, k: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `e^self`; exact zero maps to exact one, anything else is a float.
    pub fn exp(&self, digits: u32) -> Scalar {
        if self.is_zero() && self.is_exact() {
            return Scalar::one();
        }
        let d = self.precision().unwrap_or(digits).max(digits);
        Scalar::Float(self.to_real(d).exp())
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn promote(a: &Scalar, b: &Scalar) -> Option<(Real, Real)> {
        let d = match (a.precision(), b.precision()) {
            (None, None) => return None,
            (Some(x), None) | (None, Some(x)) => x,
            (Some(x), Some(y)) => x.max(y),
        };
        Some((a.to_real(d), b.to_real(d)))
    }

    /// Lossless string form: `p/q` (or `p`) for exact values, scientific
    /// notation at full working precision for floats.
    pub fn to_exact_string(&self) -> String {
        self.to_string()
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Exact(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Real> for Scalar {
    fn from(r: Real) -> Self {
        Scalar::Float(r)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => {
                let (a, b) = Scalar::promote(self, other).expect("float operand");
                a == b
            }
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.partial_cmp(b),
            _ => {
                let (a, b) = Scalar::promote(self, other).expect("float operand");
                a.partial_cmp(&b)
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(r) => Scalar::Exact(-r.clone()),
            Scalar::Float(f) => Scalar::Float(-f),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a $op b),
                    (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(a $op b),
                    _ => {
                        let (a, b) = Scalar::promote(self, rhs).expect("float operand");
                        Scalar::Float(&a $op &b)
                    }
                }
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                &self $op &rhs
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                &self $op rhs
            }
        }
    };
}
scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);
scalar_binop!(Div, div, /);

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}

/// Serialized as its string form; only exact values deserialize.
impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses `p`, `-p`, `p/q` or `-p/q`. Decimal fractions are rejected so
    /// that every exact input round-trips.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(format!("expected an exact rational p/q, got {s:?}"));
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let valid_int = |x: &str, signed: bool| {
            let digits = if signed {
                x.strip_prefix(['-', '+']).unwrap_or(x)
            } else {
                x
            };
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid_int(num, true) || !valid_int(den, false) {
            return Err(bad());
        }
        let n = IBig::from_str(num.trim_start_matches('+')).map_err(|_| bad())?;
        let d = UBig::from_str(den).map_err(|_| bad())?;
        if d == UBig::ZERO {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Scalar::Exact(Rational::from_parts(n, d)))
    }
}

/// n! as an exact integer scalar.
pub fn factorial(n: u32) -> Scalar {
    let mut acc = UBig::ONE;
    for k in 2..=n as u64 {
        acc *= UBig::from(k);
    }
    Scalar::from_ubig(acc)
}

/// Falling factorial p (p-1) ... (p-k+1).
pub fn falling(p: u32, k: u32) -> UBig {
    let mut acc = UBig::ONE;
    for t in 0..k {
        acc *= UBig::from(p - t);
    }
    acc
}

pub fn binomial(n: u32, k: u32) -> UBig {
    if k > n {
        return UBig::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = UBig::ONE;
    for t in 0..k {
        acc = acc * UBig::from(n - t) / UBig::from(t + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let s: Scalar = "6/-4".parse().unwrap_or(Scalar::ratio(6, -4));
        assert_eq!(s.to_string(), "-3/2");
        assert_eq!(Scalar::ratio(4, 2).to_string(), "2");
        let p: Scalar = "-10/4".parse().unwrap();
        assert_eq!(p.to_string(), "-5/2");
    }

    #[test]
    fn rejects_decimals_and_zero_denominators() {
        assert!("0.5".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("".parse::<Scalar>().is_err());
        assert!("1/-2".parse::<Scalar>().is_err());
    }

    #[test]
    fn mixing_promotes_to_float() {
        let e = Scalar::euler(30);
        let sum = &Scalar::ratio(1, 2) + &e;
        assert_eq!(sum.precision(), Some(30));
        assert!((sum.to_f64() - (0.5 + std::f64::consts::E)).abs() < 1e-15);
    }

    #[test]
    fn euler_digits() {
        let e = Real::euler(40);
        assert!(e
            .to_scientific(30)
            .starts_with("2.71828182845904523536028747135"));
    }

    #[test]
    fn float_mixed_precision_takes_max() {
        let a = Scalar::Float(Real::from_int(3, 20));
        let b = Scalar::Float(Real::from_int(7, 60));
        assert_eq!((&a / &b).precision(), Some(60));
    }

    #[test]
    fn combinatorics() {
        assert_eq!(binomial(10, 3), UBig::from(120u32));
        assert_eq!(binomial(3, 5), UBig::ZERO);
        assert_eq!(falling(5, 2), UBig::from(20u32));
        assert_eq!(factorial(5), Scalar::int(120));
        assert_eq!(factorial(0), Scalar::one());
    }

    #[test]
    fn scientific_rendering() {
        let x = Real::from_rational(&Rational::from_parts(IBig::from(-1), UBig::from(3u32)), 20);
        assert_eq!(x.to_scientific(4), "-3.333e-1");
        assert_eq!(Real::zero(20).to_scientific(3), "0.00e0");
    }
}
