//! Sequence transforms, basis sequences, the BK norm, and finite-window
//! membership diagnostics.
//!
//! Every `y_n` with `n < N` depends only on `x_0..=x_n`, so all windowed
//! transforms here are exact; nothing assumes zero extension past the
//! window.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators::{ProductOperator, Triangle};
use crate::scalar::{sup_abs, Scalar};

/// Finite prefix `x_0, ..., x_{N-1}` of a sequence.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct SequenceWindow<S> {
    values: Vec<S>,
}

impl<S: Scalar> SequenceWindow<S> {
    pub fn new(values: Vec<S>) -> Self {
        SequenceWindow { values }
    }

    pub fn zeros(len: usize) -> Self {
        SequenceWindow::new(vec![S::zero(); len])
    }

    pub fn ones(len: usize) -> Self {
        SequenceWindow::new(vec![S::one(); len])
    }

    /// `e^(k)` on a window of length `len`.
    pub fn unit(k: usize, len: usize) -> Self {
        let mut w = SequenceWindow::zeros(len);
        w.values[k] = S::one();
        w
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn into_values(self) -> Vec<S> {
        self.values
    }

    pub fn get(&self, i: usize) -> Option<&S> {
        self.values.get(i)
    }

    /// First `len` terms.
    pub fn prefix(&self, len: usize) -> Self {
        SequenceWindow::new(self.values[..len.min(self.len())].to_vec())
    }

    /// `a * self + b * other`, termwise.
    pub fn linear_combination(&self, a: &S, other: &Self, b: &S) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(SequenceWindow::new(
            self.values
                .iter()
                .zip(&other.values)
                .map(|(x, z)| a.clone() * x.clone() + b.clone() * z.clone())
                .collect(),
        ))
    }

    /// One scalar per line; blank lines and `#` comments are skipped.
    /// Errors carry the 1-based line number.
    pub fn parse_lines(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let v = S::parse(line).map_err(|e| Error::Line {
                line: i + 1,
                message: e.to_string(),
            })?;
            values.push(v);
        }
        Ok(SequenceWindow::new(values))
    }

    /// Inverse of [`parse_lines`](Self::parse_lines): one scalar per line,
    /// newline-terminated.
    pub fn to_lines(&self) -> String {
        self.values.iter().map(|v| format!("{v}\n")).collect()
    }
}

impl<S: Scalar> fmt::Display for SequenceWindow<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_lines())
    }
}

/// `y_n = sum_{k<=n} a_{nk} x_k` for every `n` in the window.
pub fn apply<S: Scalar>(a: &Triangle<S>, x: &SequenceWindow<S>) -> Result<SequenceWindow<S>> {
    if x.is_empty() {
        return Ok(SequenceWindow::new(Vec::new()));
    }
    a.check_order(x.len())?;
    let y = (0..x.len())
        .into_par_iter()
        .map(|n| {
            (0..=n).fold(S::zero(), |acc, k| {
                let xk = &x.values[k];
                if xk.is_zero() {
                    acc
                } else {
                    acc + a.entry(n, k) * xk.clone()
                }
            })
        })
        .collect();
    Ok(SequenceWindow::new(y))
}

/// Recovers `x` from `y = A x` through the closed-form inverse.
pub fn inverse_apply<S: Scalar>(
    op: &ProductOperator<S>,
    y: &SequenceWindow<S>,
) -> Result<SequenceWindow<S>> {
    apply(&op.inverse()?, y)
}

/// Basis sequence `theta^(k)`: column `k` of the inverse, zero above row `k`.
pub fn theta_basis<S: Scalar>(
    op: &ProductOperator<S>,
    k: usize,
    len: usize,
) -> Result<SequenceWindow<S>> {
    if k >= len {
        return Err(Error::IndexOutOfWindow { index: k, len });
    }
    let inv = op.inverse()?;
    inv.check_order(len)?;
    let values = (0..len)
        .into_par_iter()
        .map(|n| if n < k { S::zero() } else { inv.entry(n, k) })
        .collect();
    Ok(SequenceWindow::new(values))
}

/// `eta = A^{-1} 1`, characterized by `A eta = (1, 1, ...)`.
pub fn eta_sequence<S: Scalar>(op: &ProductOperator<S>, len: usize) -> Result<SequenceWindow<S>> {
    inverse_apply(op, &SequenceWindow::ones(len))
}

/// Expansion coefficients `sigma = A x` of `x` in the basis `theta^(k)`.
pub fn sigma_coeffs<S: Scalar>(
    op: &ProductOperator<S>,
    x: &SequenceWindow<S>,
) -> Result<SequenceWindow<S>> {
    apply(&op.forward(), x)
}

/// Norm of `x - sum_{k<=cutoff} sigma_k theta^(k)`, i.e.
/// `sup_{cutoff < m < N} |sigma_m|`.
pub fn reconstruction_residual<S: Scalar>(
    x: &SequenceWindow<S>,
    cutoff: usize,
    op: &ProductOperator<S>,
) -> Result<S> {
    if cutoff >= x.len() {
        return Err(Error::IndexOutOfWindow {
            index: cutoff,
            len: x.len(),
        });
    }
    let sigma = sigma_coeffs(op, x)?;
    Ok(sup_abs(&sigma.values[cutoff + 1..]))
}

/// `sup_{k<N} |(A x)_k|`: a lower bound on the BK norm, exact whenever the
/// transform vanishes past the window.
pub fn bk_norm<S: Scalar>(x: &SequenceWindow<S>, op: &ProductOperator<S>) -> Result<S> {
    Ok(sup_abs(sigma_coeffs(op, x)?.values()))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Space {
    C0,
    C,
    LInf,
    Lp(f64),
}

impl Space {
    pub fn name(&self) -> &'static str {
        match self {
            Space::C0 => "c0",
            Space::C => "c",
            Space::LInf => "linf",
            Space::Lp(_) => "lp",
        }
    }

    /// Parses `c0`, `c`, `linf`; `lp` needs `p`.
    pub fn parse(name: &str, p: Option<f64>) -> Result<Self> {
        match name.trim().to_ascii_lowercase().as_str() {
            "c0" => Ok(Space::C0),
            "c" => Ok(Space::C),
            "linf" | "l_inf" => Ok(Space::LInf),
            "lp" | "l_p" => {
                let p = p.ok_or_else(|| Error::Config("space lp requires p".into()))?;
                if p.is_nan() || p < 1.0 || !p.is_finite() {
                    return Err(Error::InvalidExponent(p));
                }
                Ok(Space::Lp(p))
            }
            other => Err(Error::Config(format!(
                "unknown space {other:?} (expected c0, c, linf or lp)"
            ))),
        }
    }
}

impl Serialize for Space {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Consistent,
    Inconsistent,
    Inconclusive,
}

impl FromStr for Verdict {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "consistent" => Ok(Verdict::Consistent),
            "inconsistent" => Ok(Verdict::Inconsistent),
            "inconclusive" => Ok(Verdict::Inconclusive),
            other => Err(Error::Config(format!("unknown verdict {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MembershipReport<S> {
    pub space: Space,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    pub tail_sup: S,
    pub last_delta: S,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partial_p_sum: Option<S>,
    pub verdict: Verdict,
}

fn pow_abs<S: Scalar>(v: &S, p: f64) -> Result<S> {
    let a = v.abs();
    if p.fract() == 0.0 && p <= i32::MAX as f64 {
        return Ok(a.powi(p as i32));
    }
    S::from_f64(a.to_f64().powf(p)).ok_or_else(|| Error::Config(format!("|{v}|^{p} is not finite")))
}

/// Finite-window evidence about whether `x` lies in the matrix domain of
/// `A` in `space`.
///
/// With `y = A x`, the tail is `k >= N/2`. Verdicts:
/// * `c0`: consistent if the tail vanishes; inconsistent if the tail shows no
///   decay (`|y_{N-1}| >= |y_{N/2}| > 0`); otherwise inconclusive.
/// * `c`: consistent if the tail is constant; inconsistent if successive
///   tail differences do not shrink (`last >= first > 0`); otherwise
///   inconclusive.
/// * `linf`: with a bound, consistent iff `sup |y| <= bound`; without one,
///   consistent if the tail does not exceed the head, otherwise
///   inconclusive.
/// * `lp`: inconsistent if the partial p-sum exceeds the bound or the tail
///   shows no decay; consistent if the tail vanishes or the bound holds;
///   otherwise inconclusive.
pub fn membership_report<S: Scalar>(
    x: &SequenceWindow<S>,
    space: Space,
    op: &ProductOperator<S>,
    bound: Option<&S>,
) -> Result<MembershipReport<S>> {
    if x.is_empty() {
        return Err(Error::EmptyTruncation);
    }
    if let Space::Lp(p) = space {
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidExponent(p));
        }
    }
    let y = sigma_coeffs(op, x)?.into_values();
    let n = y.len();
    let half = n / 2;
    let tail = &y[half..];
    let head = &y[..half];
    let tail_sup = sup_abs(tail);
    let last_delta = if n >= 2 {
        (y[n - 1].clone() - y[n - 2].clone()).abs()
    } else {
        S::zero()
    };
    let tail_vanishes = tail.iter().all(Scalar::is_zero);
    let no_decay = {
        let first = tail[0].abs();
        !first.is_zero() && tail[tail.len() - 1].abs() >= first
    };

    let mut partial_p_sum = None;
    let verdict = match space {
        Space::C0 => {
            if tail_vanishes {
                Verdict::Consistent
            } else if no_decay {
                Verdict::Inconsistent
            } else {
                Verdict::Inconclusive
            }
        }
        Space::C => {
            let start = half.max(1);
            let diffs: Vec<S> = (start..n)
                .map(|k| (y[k].clone() - y[k - 1].clone()).abs())
                .collect();
            if diffs.iter().all(Scalar::is_zero) {
                Verdict::Consistent
            } else if !diffs[0].is_zero() && diffs[diffs.len() - 1] >= diffs[0] {
                Verdict::Inconsistent
            } else {
                Verdict::Inconclusive
            }
        }
        Space::LInf => match bound {
            Some(b) => {
                if sup_abs(&y) > *b {
                    Verdict::Inconsistent
                } else {
                    Verdict::Consistent
                }
            }
            None => {
                if tail_sup <= sup_abs(head) {
                    Verdict::Consistent
                } else {
                    Verdict::Inconclusive
                }
            }
        },
        Space::Lp(p) => {
            let sum = y
                .iter()
                .map(|v| pow_abs(v, p))
                .try_fold(S::zero(), |acc, t| t.map(|t| acc + t))?;
            let exceeded = bound.is_some_and(|b| sum > *b);
            partial_p_sum = Some(sum);
            if exceeded {
                Verdict::Inconsistent
            } else if tail_vanishes {
                Verdict::Consistent
            } else if no_decay {
                Verdict::Inconsistent
            } else if bound.is_some() {
                Verdict::Consistent
            } else {
                Verdict::Inconclusive
            }
        }
    };
    Ok(MembershipReport {
        space,
        p: match space {
            Space::Lp(p) => Some(p),
            _ => None,
        },
        tail_sup,
        last_delta,
        partial_p_sum,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::FractionalOrder;
    use crate::operators::{invert_trunc, BinomialParams, LambdaPreset, LambdaSeq};
    use crate::scalar::Rational;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn op_with(
        alpha: Rational,
        r: Rational,
        s: Rational,
        preset: LambdaPreset,
    ) -> ProductOperator<Rational> {
        ProductOperator::new(
            BinomialParams::new(r, s).unwrap(),
            FractionalOrder::new(alpha),
            LambdaSeq::preset(preset),
        )
    }

    fn half_op() -> ProductOperator<Rational> {
        op_with(q(1, 2), q(1, 1), q(1, 1), LambdaPreset::Cesaro)
    }

    fn window(v: &[(i64, i64)]) -> SequenceWindow<Rational> {
        SequenceWindow::new(v.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn identity_apply_is_noop() {
        let x = window(&[(1, 2), (-3, 1), (0, 1), (7, 5)]);
        assert_eq!(apply(&Triangle::identity(), &x).unwrap(), x);
    }

    #[test]
    fn ones_transform_prefix() {
        let y = sigma_coeffs(&half_op(), &SequenceWindow::ones(3)).unwrap();
        assert_eq!(y.values()[0], q(1, 1));
        assert_eq!(y.values()[1], q(3, 8));
    }

    #[test]
    fn zero_window_inverse() {
        let z = SequenceWindow::zeros(6);
        assert_eq!(inverse_apply(&half_op(), &z).unwrap(), z);
    }

    #[test]
    fn unit_inverse_is_first_column() {
        let op = half_op();
        let x = inverse_apply(&op, &SequenceWindow::unit(0, 6)).unwrap();
        let oracle = invert_trunc(&op.forward(), 6).unwrap();
        assert_eq!(x.values(), oracle.column(0).as_slice());
    }

    #[test]
    fn theta_is_inverse_column_and_maps_to_unit() {
        let op = half_op();
        let oracle = invert_trunc(&op.forward(), 4).unwrap();
        let theta0 = theta_basis(&op, 0, 4).unwrap();
        assert_eq!(theta0.values(), oracle.column(0).as_slice());
        assert_eq!(theta0.values()[0], q(1, 1));
        for k in 0..6 {
            let th = theta_basis(&op, k, 6).unwrap();
            assert_eq!(sigma_coeffs(&op, &th).unwrap(), SequenceWindow::unit(k, 6));
            assert_eq!(bk_norm(&th, &op).unwrap(), q(1, 1));
        }
        assert!(theta_basis(&op, 4, 4).is_err());
    }

    #[test]
    fn eta_maps_to_ones() {
        let op = half_op();
        let eta = eta_sequence(&op, 16).unwrap();
        assert_eq!(eta.values()[0], q(1, 1));
        assert_eq!(sigma_coeffs(&op, &eta).unwrap(), SequenceWindow::ones(16));
        assert_eq!(bk_norm(&eta, &op).unwrap(), q(1, 1));
    }

    #[test]
    fn eta_with_trivial_binomial_and_zero_order() {
        let op = op_with(q(0, 1), q(1, 1), q(0, 1), LambdaPreset::Cesaro);
        // A is diag(1/(n+1)) here.
        let eta = eta_sequence(&op, 5).unwrap();
        let want: Vec<Rational> = (1..=5).map(|v| q(v, 1)).collect();
        assert_eq!(eta, SequenceWindow::new(want));
    }

    #[test]
    fn residual_examples() {
        let op = half_op();
        let th = theta_basis(&op, 2, 8).unwrap();
        for cutoff in 2..8 {
            assert!(reconstruction_residual(&th, cutoff, &op).unwrap().is_zero());
        }
        assert_eq!(reconstruction_residual(&th, 1, &op).unwrap(), q(1, 1));

        // sigma_m = 1/(m+1)  =>  residual at n is 1/(n+2).
        let sigma = SequenceWindow::new((0..10).map(|m| q(1, m + 1)).collect());
        let x = inverse_apply(&op, &sigma).unwrap();
        for cutoff in 0..9 {
            assert_eq!(
                reconstruction_residual(&x, cutoff, &op).unwrap(),
                q(1, cutoff as i64 + 2)
            );
        }
        assert!(reconstruction_residual(&x, 10, &op).is_err());
    }

    #[test]
    fn membership_examples() {
        let op = half_op();
        let th = theta_basis(&op, 3, 10).unwrap();
        let rep = membership_report(&th, Space::C0, &op, None).unwrap();
        assert_eq!(rep.verdict, Verdict::Consistent);
        assert!(rep.tail_sup.is_zero());

        let eta = eta_sequence(&op, 10).unwrap();
        let rep = membership_report(&eta, Space::C, &op, None).unwrap();
        assert_eq!(rep.verdict, Verdict::Consistent);
        assert!(rep.last_delta.is_zero());
        let rep = membership_report(&eta, Space::C0, &op, None).unwrap();
        assert_eq!(rep.verdict, Verdict::Inconsistent);
        assert_eq!(rep.tail_sup, q(1, 1));
    }

    #[test]
    fn membership_lp_and_linf() {
        let op = half_op();
        let sigma = SequenceWindow::new((0..8).map(|m| q(1, m + 1)).collect());
        let x = inverse_apply(&op, &sigma).unwrap();
        let rep = membership_report(&x, Space::Lp(2.0), &op, None).unwrap();
        let expected = (1..=8).fold(q(0, 1), |acc, m| acc + q(1, m * m));
        assert_eq!(rep.partial_p_sum.clone().unwrap(), expected);
        assert_eq!(rep.verdict, Verdict::Inconclusive);
        let rep = membership_report(&x, Space::Lp(2.0), &op, Some(&q(1, 1))).unwrap();
        assert_eq!(rep.verdict, Verdict::Inconsistent);
        let rep = membership_report(&x, Space::Lp(2.0), &op, Some(&q(2, 1))).unwrap();
        assert_eq!(rep.verdict, Verdict::Consistent);

        let rep = membership_report(&x, Space::LInf, &op, None).unwrap();
        assert_eq!(rep.verdict, Verdict::Consistent);
        let growing =
            inverse_apply(&op, &SequenceWindow::new((0..8).map(|m| q(m, 1)).collect())).unwrap();
        let rep = membership_report(&growing, Space::LInf, &op, None).unwrap();
        assert_eq!(rep.verdict, Verdict::Inconclusive);
        let rep = membership_report(&growing, Space::LInf, &op, Some(&q(3, 1))).unwrap();
        assert_eq!(rep.verdict, Verdict::Inconsistent);
        let rep = membership_report(&growing, Space::C, &op, None).unwrap();
        assert_eq!(rep.verdict, Verdict::Inconsistent);
    }

    #[test]
    fn fractional_p_sum() {
        let op = op_with(q(0, 1), q(1, 1), q(0, 1), LambdaPreset::Cesaro);
        // alpha = 0 and (r, s) = (1, 0) leave A = diag(1/(n+1)).
        let x = SequenceWindow::new(vec![q(4, 1), q(2, 1)]);
        let rep = membership_report(&x, Space::Lp(1.5), &op, None).unwrap();
        let got = rep.partial_p_sum.unwrap().to_f64();
        assert!((got - 9.0).abs() < 1e-12);
    }

    #[test]
    fn space_parsing() {
        assert_eq!(Space::parse("lp", Some(2.0)).unwrap(), Space::Lp(2.0));
        assert!(Space::parse("lp", None).is_err());
        assert_eq!(
            Space::parse("lp", Some(0.5)).unwrap_err(),
            Error::InvalidExponent(0.5)
        );
        assert!(Space::parse("l2", None).is_err());
    }

    #[test]
    fn parse_lines_reports_line_numbers() {
        let w = SequenceWindow::<Rational>::parse_lines("1/2\n\n# note\n-3\n").unwrap();
        assert_eq!(w, window(&[(1, 2), (-3, 1)]));
        let err = SequenceWindow::<Rational>::parse_lines("1\n2\n0.5\n").unwrap_err();
        assert!(matches!(err, Error::Line { line: 3, .. }));
        assert_eq!(w.to_lines(), "1/2\n-3\n");
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-40i64..=40, 1i64..=12).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn round_trip_exact(xs in prop::collection::vec(rational(), 1..14),
                            a_num in -4i64..=4) {
            let op = op_with(q(a_num, 2), q(2, 1), q(3, 1), LambdaPreset::Squares);
            let x = SequenceWindow::new(xs);
            let y = sigma_coeffs(&op, &x).unwrap();
            prop_assert_eq!(inverse_apply(&op, &y).unwrap(), x);
        }

        #[test]
        fn linearity(xs in prop::collection::vec(rational(), 10),
                     zs in prop::collection::vec(rational(), 10),
                     a in rational(), b in rational()) {
            let op = half_op();
            let (x, z) = (SequenceWindow::new(xs), SequenceWindow::new(zs));
            let lhs = sigma_coeffs(&op, &x.linear_combination(&a, &z, &b).unwrap()).unwrap();
            let rhs = sigma_coeffs(&op, &x).unwrap()
                .linear_combination(&a, &sigma_coeffs(&op, &z).unwrap(), &b).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn residual_non_increasing(xs in prop::collection::vec(rational(), 12)) {
            let op = half_op();
            let x = SequenceWindow::new(xs);
            let res: Vec<Rational> = (0..12)
                .map(|c| reconstruction_residual(&x, c, &op).unwrap())
                .collect();
            prop_assert!(res.windows(2).all(|w| w[1] <= w[0]));
        }
    }
}
