use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `(r, s)` of the binomial matrix, with `r + s != 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct BinomialParams<S> {
    r: S,
    s: S,
}

impl<S: Scalar> BinomialParams<S> {
    pub fn new(r: S, s: S) -> Result<Self> {
        if (r.clone() + s.clone()).is_zero() {
            return Err(Error::DegenerateBinomial);
        }
        Ok(BinomialParams { r, s })
    }

    pub fn r(&self) -> &S {
        &self.r
    }

    pub fn s(&self) -> &S {
        &self.s
    }

    pub fn sum(&self) -> S {
        self.r.clone() + self.s.clone()
    }

    /// Inverse operators carry `r^{-n}`.
    pub fn ensure_invertible(&self) -> Result<()> {
        if self.r.is_zero() {
            Err(Error::ZeroR)
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LambdaPreset {
    /// `lambda_k = k + 1`
    Cesaro,
    /// `lambda_k = (k + 1)^2`
    Squares,
    /// `lambda_k = 2^(k + 1)`
    Powers2,
}

impl LambdaPreset {
    pub const ALL: [LambdaPreset; 3] = [
        LambdaPreset::Cesaro,
        LambdaPreset::Squares,
        LambdaPreset::Powers2,
    ];

    fn value<S: Scalar>(self, k: usize) -> S {
        let k = k as i64;
        match self {
            LambdaPreset::Cesaro => S::from_int(k + 1),
            LambdaPreset::Squares => S::from_int((k + 1) * (k + 1)),
            LambdaPreset::Powers2 => S::from_int(2).powi(k as i32 + 1),
        }
    }
}

impl FromStr for LambdaPreset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "cesaro" => Ok(LambdaPreset::Cesaro),
            "squares" => Ok(LambdaPreset::Squares),
            "powers2" => Ok(LambdaPreset::Powers2),
            other => Err(Error::Config(format!(
                "unknown lambda preset {other:?} (expected cesaro, squares or powers2)"
            ))),
        }
    }
}

impl fmt::Display for LambdaPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LambdaPreset::Cesaro => "cesaro",
            LambdaPreset::Squares => "squares",
            LambdaPreset::Powers2 => "powers2",
        })
    }
}

#[derive(Clone)]
enum LambdaSource<S> {
    Preset(LambdaPreset),
    Table(Arc<[S]>),
}

/// Strictly increasing positive sequence `lambda_0 < lambda_1 < ...`, with
/// the convention `lambda_{-1} = 0`.
///
/// Presets are infinite. Tabulated sequences are finite and fully checked
/// when constructed.
#[derive(Clone)]
pub struct LambdaSeq<S> {
    source: LambdaSource<S>,
}

impl<S: Scalar> LambdaSeq<S> {
    pub fn preset(preset: LambdaPreset) -> Self {
        LambdaSeq {
            source: LambdaSource::Preset(preset),
        }
    }

    /// Validates positivity and strict increase; the error names the first
    /// offending index.
    pub fn from_values(values: Vec<S>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyLambda);
        }
        let mut prev = S::zero();
        for (index, v) in values.iter().enumerate() {
            if *v <= prev {
                return Err(Error::LambdaNotIncreasing { index });
            }
            prev = v.clone();
        }
        Ok(LambdaSeq {
            source: LambdaSource::Table(values.into()),
        })
    }

    /// Tabulates `generator(0..len)` and validates it.
    pub fn from_fn(len: usize, generator: impl Fn(usize) -> S) -> Result<Self> {
        LambdaSeq::from_values((0..len).map(generator).collect())
    }

    /// Number of available terms; `None` when infinite.
    pub fn len(&self) -> Option<usize> {
        match &self.source {
            LambdaSource::Preset(_) => None,
            LambdaSource::Table(t) => Some(t.len()),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn preset_kind(&self) -> Option<LambdaPreset> {
        match &self.source {
            LambdaSource::Preset(p) => Some(*p),
            LambdaSource::Table(_) => None,
        }
    }

    /// `lambda_k`. Panics past the end of a tabulated sequence.
    pub fn value(&self, k: usize) -> S {
        match &self.source {
            LambdaSource::Preset(p) => p.value(k),
            LambdaSource::Table(t) => t[k].clone(),
        }
    }

    /// `lambda_{k-1}`, zero for `k = 0`.
    pub fn previous(&self, k: usize) -> S {
        if k == 0 {
            S::zero()
        } else {
            self.value(k - 1)
        }
    }

    /// `lambda_k - lambda_{k-1}`.
    pub fn step(&self, k: usize) -> S {
        self.value(k) - self.previous(k)
    }
}

impl<S: Scalar> fmt::Debug for LambdaSeq<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.source {
            LambdaSource::Preset(p) => write!(f, "LambdaSeq({p})"),
            LambdaSource::Table(t) => write!(f, "LambdaSeq(table of {})", t.len()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn binomial_params_reject_zero_sum() {
        let r = Rational::from_int(2);
        assert_eq!(
            BinomialParams::new(r.clone(), -r).unwrap_err(),
            Error::DegenerateBinomial
        );
        let p = BinomialParams::new(Rational::from_int(0), Rational::from_int(1)).unwrap();
        assert_eq!(p.ensure_invertible().unwrap_err(), Error::ZeroR);
    }

    #[test]
    fn preset_values() {
        let c = LambdaSeq::<Rational>::preset(LambdaPreset::Cesaro);
        let sq = LambdaSeq::<Rational>::preset(LambdaPreset::Squares);
        let p2 = LambdaSeq::<Rational>::preset(LambdaPreset::Powers2);
        assert_eq!(c.value(4), Rational::from_int(5));
        assert_eq!(sq.value(2), Rational::from_int(9));
        assert_eq!(p2.value(2), Rational::from_int(8));
        assert_eq!(c.previous(0), Rational::from_int(0));
        assert_eq!(p2.step(0), Rational::from_int(2));
        assert_eq!(sq.step(3), Rational::from_int(7));
    }

    #[test]
    fn table_validation_reports_first_offender() {
        let vals = |v: &[i64]| v.iter().map(|&x| Rational::from_int(x)).collect::<Vec<_>>();
        assert!(LambdaSeq::from_values(vals(&[1, 2, 5])).is_ok());
        assert_eq!(
            LambdaSeq::from_values(vals(&[1, 3, 3, 2])).unwrap_err(),
            Error::LambdaNotIncreasing { index: 2 }
        );
        assert_eq!(
            LambdaSeq::from_values(vals(&[0, 1])).unwrap_err(),
            Error::LambdaNotIncreasing { index: 0 }
        );
        assert_eq!(
            LambdaSeq::<Rational>::from_values(vec![]).unwrap_err(),
            Error::EmptyLambda
        );
    }

    #[test]
    fn from_fn_tabulates() {
        let l = LambdaSeq::from_fn(5, |k| Rational::from_int(3 * k as i64 + 1)).unwrap();
        assert_eq!(l.len(), Some(5));
        assert_eq!(l.step(4), Rational::from_int(3));
    }

    #[test]
    fn preset_parse() {
        assert_eq!(
            "Cesaro".parse::<LambdaPreset>().unwrap(),
            LambdaPreset::Cesaro
        );
        assert!("fibonacci".parse::<LambdaPreset>().is_err());
    }
}
