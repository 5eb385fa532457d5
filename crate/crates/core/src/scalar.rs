//! Scalar backends.
//!
//! Every operator entry is computed over a [`Scalar`]. Two backends exist:
//! [`Rational`] (arbitrary-precision, always reduced, exact) and [`Float`]
//! (`f64` compared under a relative/absolute tolerance policy).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::Error;

/// Relative tolerance of the float backend.
pub const FLOAT_REL_TOL: f64 = 1e-9;
/// Absolute floor of the float backend tolerance.
pub const FLOAT_ABS_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl FromStr for Backend {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "exact" => Ok(Backend::Exact),
            "float" => Ok(Backend::Float),
            other => Err(Error::Config(format!(
                "unknown backend {other:?} (expected exact or float)"
            ))),
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        })
    }
}

/// Field operations shared by both backends.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + serde::Serialize
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    /// `num / den`; panics if `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self;
    /// `None` for non-finite input.
    fn from_f64(v: f64) -> Option<Self>;
    fn to_f64(&self) -> f64;
    /// Exact zero test (no tolerance).
    fn is_zero(&self) -> bool;
    fn abs(&self) -> Self;
    /// Integer power; negative exponents require a nonzero base.
    fn powi(&self, exp: i32) -> Self;
    /// Equality under the backend's comparison policy: exact for
    /// [`Rational`], tolerance-based for [`Float`].
    fn approx_eq(&self, other: &Self) -> bool;
    /// Parses a literal. Both backends accept integers and `p/q`; only the
    /// float backend accepts decimals.
    fn parse(text: &str) -> Result<Self, Error>;

    fn is_one(&self) -> bool {
        self.approx_eq(&Self::one())
    }

    fn max_of(a: Self, b: Self) -> Self {
        if b > a {
            b
        } else {
            a
        }
    }
}

/// Splits `p/q` into trimmed numerator and denominator strings.
fn split_fraction(text: &str) -> (&str, Option<&str>) {
    match text.split_once('/') {
        Some((p, q)) => (p.trim(), Some(q.trim())),
        None => (text.trim(), None),
    }
}

fn parse_err(text: &str, why: &str) -> Error {
    Error::Parse {
        literal: text.to_string(),
        reason: why.to_string(),
    }
}

// ---------------------------------------------------------------------------
// Exact rational backend

/// Reduced rational number with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        // Ratio::new reduces and normalizes the sign onto the numerator.
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Rational(v)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($ty:ident, $trait:ident, $method:ident) => {
        impl $trait for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $ty($trait::$method(self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Rational, Add, add);
forward_binop!(Rational, Sub, sub);
forward_binop!(Rational, Mul, mul);
forward_binop!(Rational, Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Scalar for Rational {
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn from_int(v: i64) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(num, den)
    }

    fn from_f64(v: f64) -> Option<Self> {
        BigRational::from_float(v).map(Rational)
    }

    fn to_f64(&self) -> f64 {
        // Scale down oversized numerators/denominators before dividing so
        // huge but well-conditioned ratios do not collapse to inf/inf.
        let bits = self.0.numer().bits().max(self.0.denom().bits());
        if bits < 1000 {
            return self.0.numer().to_f64().unwrap_or(f64::NAN)
                / self.0.denom().to_f64().unwrap_or(f64::NAN);
        }
        let shift = bits - 900;
        let n = (self.0.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (self.0.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    fn powi(&self, exp: i32) -> Self {
        Rational(self.0.pow(exp))
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn parse(text: &str) -> Result<Self, Error> {
        let (p, q) = split_fraction(text);
        let num: BigInt = p
            .parse()
            .map_err(|_| parse_err(text, "expected an integer or p/q"))?;
        let den: BigInt = match q {
            Some(q) => q
                .parse()
                .map_err(|_| parse_err(text, "denominator is not an integer"))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(parse_err(text, "zero denominator"));
        }
        Ok(Rational::new(num, den))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

// ---------------------------------------------------------------------------
// Float backend

/// `f64` scalar compared with relative tolerance [`FLOAT_REL_TOL`] and
/// absolute floor [`FLOAT_ABS_FLOOR`].
#[derive(Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Float(pub f64);

impl Float {
    pub fn value(self) -> f64 {
        self.0
    }

    /// Tolerance-aware comparison of two raw values.
    pub fn close(a: f64, b: f64) -> bool {
        let scale = a.abs().max(b.abs());
        (a - b).abs() <= FLOAT_ABS_FLOOR.max(FLOAT_REL_TOL * scale)
    }
}

impl fmt::Display for Float {
    /// 17 significant digits, which round-trips every `f64`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.16e}", self.0)
    }
}

impl fmt::Debug for Float {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

forward_binop!(Float, Add, add);
forward_binop!(Float, Sub, sub);
forward_binop!(Float, Mul, mul);
forward_binop!(Float, Div, div);

impl Neg for Float {
    type Output = Float;
    fn neg(self) -> Float {
        Float(-self.0)
    }
}

impl Scalar for Float {
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        Float(0.0)
    }

    fn one() -> Self {
        Float(1.0)
    }

    fn from_int(v: i64) -> Self {
        Float(v as f64)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Float(num as f64 / den as f64)
    }

    fn from_f64(v: f64) -> Option<Self> {
        v.is_finite().then_some(Float(v))
    }

    fn to_f64(&self) -> f64 {
        self.0
    }

    fn is_zero(&self) -> bool {
        self.0 == 0.0
    }

    fn abs(&self) -> Self {
        Float(self.0.abs())
    }

    fn powi(&self, exp: i32) -> Self {
        Float(self.0.powi(exp))
    }

    fn approx_eq(&self, other: &Self) -> bool {
        Float::close(self.0, other.0)
    }

    fn parse(text: &str) -> Result<Self, Error> {
        let (p, q) = split_fraction(text);
        let num: f64 = p
            .parse()
            .map_err(|_| parse_err(text, "expected a number or p/q"))?;
        let den: f64 = match q {
            Some(q) => q
                .parse()
                .map_err(|_| parse_err(text, "denominator is not a number"))?,
            None => 1.0,
        };
        if den == 0.0 {
            return Err(parse_err(text, "zero denominator"));
        }
        let v = num / den;
        if !v.is_finite() {
            return Err(parse_err(text, "not finite"));
        }
        Ok(Float(v))
    }
}

impl Serialize for Float {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Largest element by absolute value; zero for an empty iterator.
pub fn sup_abs<'a, S: Scalar>(values: impl IntoIterator<Item = &'a S>) -> S {
    values
        .into_iter()
        .map(Scalar::abs)
        .fold(S::zero(), S::max_of)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_is_reduced_with_positive_denominator() {
        let q = Rational::new(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(q.to_string(), "-3/2");
    }

    #[test]
    fn rational_parse_forms() {
        assert_eq!(Rational::parse("  7 ").unwrap(), Rational::from_int(7));
        assert_eq!(Rational::parse("-2/6").unwrap(), Rational::new(-1, 3));
        assert_eq!(Rational::parse("3/-9").unwrap().to_string(), "-1/3");
        assert!(Rational::parse("0.5").is_err());
        assert!(Rational::parse("1/0").is_err());
        assert!(Rational::parse("").is_err());
        assert!(Rational::parse("x").is_err());
    }

    #[test]
    fn float_parse_accepts_decimals_and_fractions() {
        assert_eq!(Float::parse("0.25").unwrap().0, 0.25);
        assert_eq!(Float::parse("1/4").unwrap().0, 0.25);
        assert!(Float::parse("1/0").is_err());
        assert!(Float::parse("nope").is_err());
    }

    #[test]
    fn float_display_round_trips() {
        for v in [0.1, 1.0 / 3.0, -2.5e-17, 123456789.12345679] {
            let s = Float(v).to_string();
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
    }

    #[test]
    fn float_tolerance_policy() {
        assert!(Float(1.0).approx_eq(&Float(1.0 + 5e-10)));
        assert!(!Float(1.0).approx_eq(&Float(1.0 + 5e-9)));
        assert!(Float(0.0).approx_eq(&Float(5e-13)));
        assert!(!Float(0.0).approx_eq(&Float(5e-12)));
    }

    #[test]
    fn negative_powers() {
        assert_eq!(Rational::new(2, 3).powi(-2), Rational::new(9, 4));
        assert_eq!(Rational::from_int(-1).powi(3), Rational::from_int(-1));
        assert_eq!(Float(2.0).powi(-1).0, 0.5);
    }

    #[test]
    fn to_f64_handles_huge_ratios() {
        let big = BigInt::from(3).pow(2000);
        let q = Rational::new(big.clone() * 2, big);
        assert_eq!(q.to_f64(), 2.0);
    }

    #[test]
    fn sup_abs_of_empty_is_zero() {
        let empty: Vec<Rational> = vec![];
        assert!(sup_abs(&empty).is_zero());
        let v = vec![Rational::from_int(-3), Rational::from_int(2)];
        assert_eq!(sup_abs(&v), Rational::from_int(3));
    }
}
