//! Generalized binomial coefficients and the log-Gamma cross-check.
//!
//! Coefficients are always produced by the multiplicative recurrence
//! `C(a, i) = C(a, i-1) * (a - i + 1) / i`, which is valid for every real
//! order and stays rational for rational orders. The Gamma route is only a
//! float cross-check.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Order of the fractional difference operator.
#[derive(Debug, Clone, PartialEq)]
pub struct FractionalOrder<S> {
    alpha: S,
}

impl<S: Scalar> FractionalOrder<S> {
    pub fn new(alpha: S) -> Self {
        FractionalOrder { alpha }
    }

    pub fn value(&self) -> &S {
        &self.alpha
    }

    pub fn negated(&self) -> Self {
        FractionalOrder {
            alpha: -self.alpha.clone(),
        }
    }

    /// Iterator over `C(alpha, 0), C(alpha, 1), ...`.
    pub fn coefficients(&self) -> BinomialSeries<S> {
        BinomialSeries {
            alpha: self.alpha.clone(),
            next_index: 0,
            current: S::one(),
        }
    }

    /// `C(alpha, 0..len)` collected.
    pub fn coefficient_table(&self, len: usize) -> Vec<S> {
        self.coefficients().take(len).collect()
    }
}

/// Streaming evaluation of `C(alpha, i)` for `i = 0, 1, 2, ...`.
#[derive(Debug, Clone)]
pub struct BinomialSeries<S> {
    alpha: S,
    next_index: i64,
    current: S,
}

impl<S: Scalar> Iterator for BinomialSeries<S> {
    type Item = S;

    fn next(&mut self) -> Option<S> {
        let out = self.current.clone();
        self.next_index += 1;
        let j = self.next_index;
        self.current =
            self.current.clone() * (self.alpha.clone() - S::from_int(j - 1)) / S::from_int(j);
        Some(out)
    }
}

/// `C(alpha, i) = prod_{j=1..i} (alpha - j + 1) / j`.
pub fn gen_binomial<S: Scalar>(alpha: &FractionalOrder<S>, i: usize) -> S {
    let a = alpha.value();
    (1..=i as i64).fold(S::one(), |acc, j| {
        acc * (a.clone() - S::from_int(j - 1)) / S::from_int(j)
    })
}

/// `(-1)^j C(alpha, j)`, the j-th coefficient of the fractional difference.
pub fn signed_delta_coeff<S: Scalar>(alpha: &FractionalOrder<S>, j: usize) -> S {
    let c = gen_binomial(alpha, j);
    if j.is_multiple_of(2) {
        c
    } else {
        -c
    }
}

/// Ordinary binomial coefficient `C(n, k)` as a scalar; zero for `k > n`.
pub fn binomial<S: Scalar>(n: usize, k: usize) -> S {
    if k > n {
        return S::zero();
    }
    let k = k.min(n - k);
    // Running products of C(n, j) are integers, so u128 is exact up to the
    // point where it would overflow; beyond that fall back to the scalar.
    let mut acc: u128 = 1;
    for j in 0..k {
        match acc.checked_mul((n - j) as u128) {
            Some(v) => acc = v / (j as u128 + 1),
            None => {
                let mut s = u128_to_scalar::<S>(acc);
                for jj in j..k {
                    s = s * S::from_int((n - jj) as i64) / S::from_int(jj as i64 + 1);
                }
                return s;
            }
        }
    }
    u128_to_scalar(acc)
}

fn u128_to_scalar<S: Scalar>(v: u128) -> S {
    match i64::try_from(v) {
        Ok(small) => S::from_int(small),
        Err(_) => {
            let hi = (v >> 62) as i64;
            let lo = (v & ((1u128 << 62) - 1)) as i64;
            S::from_int(hi) * S::from_int(1i64 << 62) + S::from_int(lo)
        }
    }
}

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_pole(m: f64) -> bool {
    m <= 0.0 && m.fract() == 0.0
}

/// `(ln|Gamma(m)|, sign(Gamma(m)))`.
pub fn ln_gamma_signed(m: f64) -> Result<(f64, f64)> {
    if !m.is_finite() || is_pole(m) {
        return Err(Error::GammaPole(m));
    }
    if m < 0.5 {
        // Reflection: Gamma(m) Gamma(1 - m) = pi / sin(pi m).
        let sin = (PI * m).sin();
        let (ln_rest, sign_rest) = ln_gamma_signed(1.0 - m)?;
        return Ok((PI.ln() - sin.abs().ln() - ln_rest, sin.signum() * sign_rest));
    }
    let x = m - 1.0;
    let t = x + LANCZOS_G + 0.5;
    let series = LANCZOS_COEFFS[1..]
        .iter()
        .enumerate()
        .fold(LANCZOS_COEFFS[0], |acc, (i, c)| {
            acc + c / (x + i as f64 + 1.0)
        });
    let ln = 0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + series.ln();
    Ok((ln, 1.0))
}

/// `ln|Gamma(m)|`; errors at the poles `m in {0, -1, -2, ...}`.
pub fn gamma_ln(m: f64) -> Result<f64> {
    ln_gamma_signed(m).map(|(ln, _)| ln)
}

/// `C(alpha, i)` evaluated through Gamma functions:
/// `Gamma(alpha + 1) / (i! Gamma(alpha - i + 1))`.
pub fn gen_binomial_via_gamma(alpha: f64, i: usize) -> Result<f64> {
    let (ln_num, sign_num) = ln_gamma_signed(alpha + 1.0)?;
    let (ln_fact, _) = ln_gamma_signed(i as f64 + 1.0)?;
    let (ln_den, sign_den) = ln_gamma_signed(alpha - i as f64 + 1.0)?;
    Ok(sign_num * sign_den * (ln_num - ln_fact - ln_den).exp())
}
