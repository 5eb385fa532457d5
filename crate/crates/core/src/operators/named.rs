//! The named operators and their closed-form inverses.

use crate::coefficients::{binomial, FractionalOrder};
use crate::error::Result;
use crate::operators::params::{BinomialParams, LambdaSeq};
use crate::operators::triangle::Triangle;
use crate::scalar::Scalar;

fn sign<S: Scalar>(exp: usize) -> S {
    if exp.is_multiple_of(2) {
        S::one()
    } else {
        -S::one()
    }
}

/// `r^0, r^1, ..., r^n` (or negative powers when `exp_sign < 0`).
fn powers<S: Scalar>(base: &S, n: usize, exp_sign: i32) -> Vec<S> {
    (0..=n).map(|i| base.powi(exp_sign * i as i32)).collect()
}

/// Fractional difference `(-1)^{n-k} C(alpha, n-k)`.
pub fn delta<S: Scalar>(alpha: &FractionalOrder<S>) -> Triangle<S> {
    let alpha = alpha.clone();
    Triangle::new(format!("delta({})", alpha.value()), move |n, k| {
        let c = alpha.coefficients().nth(n - k).expect("infinite series");
        sign::<S>(n - k) * c
    })
}

/// `(-1)^{n-k} C(-alpha, n-k)`, the inverse of [`delta`].
pub fn delta_inv<S: Scalar>(alpha: &FractionalOrder<S>) -> Triangle<S> {
    let neg = alpha.negated();
    Triangle::new(format!("delta_inv({})", alpha.value()), move |n, k| {
        let c = neg.coefficients().nth(n - k).expect("infinite series");
        sign::<S>(n - k) * c
    })
}

/// Binomial mean `C(n,k) s^{n-k} r^k / (s+r)^n`.
pub fn binomial_mean<S: Scalar>(params: &BinomialParams<S>) -> Triangle<S> {
    let (r, s, sum) = (params.r().clone(), params.s().clone(), params.sum());
    Triangle::new(format!("binomial({r},{s})"), move |n, k| {
        binomial::<S>(n, k) * s.powi((n - k) as i32) * r.powi(k as i32) / sum.powi(n as i32)
    })
}

/// `(-1)^{n-k} (s+r)^k C(n,k) s^{n-k} r^{-n}`, the inverse of
/// [`binomial_mean`]. Requires `r != 0`.
pub fn binomial_inv<S: Scalar>(params: &BinomialParams<S>) -> Result<Triangle<S>> {
    params.ensure_invertible()?;
    let (r, s, sum) = (params.r().clone(), params.s().clone(), params.sum());
    Ok(Triangle::new(
        format!("binomial_inv({r},{s})"),
        move |n, k| {
            sign::<S>(n - k)
                * sum.powi(k as i32)
                * binomial::<S>(n, k)
                * s.powi((n - k) as i32)
                * r.powi(-(n as i32))
        },
    ))
}

/// Weighted mean `(lambda_k - lambda_{k-1}) / lambda_n`.
pub fn lambda_mean<S: Scalar>(lambda: &LambdaSeq<S>) -> Triangle<S> {
    let l = lambda.clone();
    Triangle::new("lambda", move |n, k| l.step(k) / l.value(n)).with_extent(lambda.len())
}

/// Bidiagonal inverse of [`lambda_mean`]:
/// `lambda_n / (lambda_n - lambda_{n-1})` on the diagonal and
/// `-lambda_{n-1} / (lambda_n - lambda_{n-1})` just below it.
pub fn lambda_inv<S: Scalar>(lambda: &LambdaSeq<S>) -> Triangle<S> {
    let l = lambda.clone();
    Triangle::new("lambda_inv", move |n, k| {
        if k == n {
            l.value(n) / l.step(n)
        } else if k + 1 == n {
            -l.previous(n) / l.step(n)
        } else {
            S::zero()
        }
    })
    .with_extent(lambda.len())
}

/// The fractional binomial difference operator together with everything
/// needed to build it and its inverse.
#[derive(Clone)]
pub struct ProductOperator<S> {
    params: BinomialParams<S>,
    alpha: FractionalOrder<S>,
    lambda: LambdaSeq<S>,
}

impl<S: Scalar> std::fmt::Debug for ProductOperator<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ProductOperator")
            .field("params", &self.params)
            .field("alpha", &self.alpha)
            .field("lambda", &self.lambda)
            .finish()
    }
}

impl<S: Scalar> ProductOperator<S> {
    pub fn new(params: BinomialParams<S>, alpha: FractionalOrder<S>, lambda: LambdaSeq<S>) -> Self {
        ProductOperator {
            params,
            alpha,
            lambda,
        }
    }

    pub fn params(&self) -> &BinomialParams<S> {
        &self.params
    }

    pub fn alpha(&self) -> &FractionalOrder<S> {
        &self.alpha
    }

    pub fn lambda(&self) -> &LambdaSeq<S> {
        &self.lambda
    }

    /// Largest admissible truncation order, if the lambda table is finite.
    pub fn extent(&self) -> Option<usize> {
        self.lambda.len()
    }

    /// `a_{nk} = ((lambda_k - lambda_{k-1}) / lambda_n)
    ///   * sum_{i=k..n} (-1)^{i-k} C(n,i) C(alpha,i-k) r^i s^{n-i} / (s+r)^n`.
    pub fn forward(&self) -> Triangle<S> {
        let (r, s, sum) = (
            self.params.r().clone(),
            self.params.s().clone(),
            self.params.sum(),
        );
        let alpha = self.alpha.clone();
        let l = self.lambda.clone();
        Triangle::new("composed", move |n, k| {
            let r_pow = powers(&r, n, 1);
            let s_pow = powers(&s, n, 1);
            let inner = alpha
                .coefficients()
                .zip(k..=n)
                .fold(S::zero(), |acc, (c_alpha, i)| {
                    acc + sign::<S>(i - k)
                        * binomial::<S>(n, i)
                        * c_alpha
                        * r_pow[i].clone()
                        * s_pow[n - i].clone()
                });
            l.step(k) / l.value(n) * inner / sum.powi(n as i32)
        })
        .with_extent(self.lambda.len())
    }

    /// Closed-form inverse of [`forward`](Self::forward):
    /// `(lambda_k / (lambda_n - lambda_{n-1})) (s+r)^k
    ///   sum_{j=k..n} (-1)^{n-k} C(-alpha, n-j) C(j,k) s^{j-k} r^{-j}`.
    pub fn inverse(&self) -> Result<Triangle<S>> {
        self.params.ensure_invertible()?;
        let core = inverse_core(&self.params, &self.alpha);
        let l = self.lambda.clone();
        Ok(Triangle::new("composed_inv", move |n, k| {
            l.value(k) / l.step(n) * core(n, k)
        })
        .with_extent(self.lambda.len()))
    }
}

/// `(Delta^{-alpha} B^{-1})_{nk} =
///   (s+r)^k (-1)^{n-k} sum_{j=k..n} C(-alpha, n-j) C(j,k) s^{j-k} r^{-j}`,
/// the lambda-free part shared by the inverse and its printed variants.
/// Callers must have checked `r != 0`.
pub(crate) fn inverse_core<S: Scalar>(
    params: &BinomialParams<S>,
    alpha: &FractionalOrder<S>,
) -> impl Fn(usize, usize) -> S + Send + Sync + Clone + 'static {
    let (r, s, sum) = (params.r().clone(), params.s().clone(), params.sum());
    let neg = alpha.negated();
    move |n: usize, k: usize| {
        let neg_coeffs = neg.coefficient_table(n - k + 1);
        let r_inv = powers(&r, n, -1);
        let inner = (k..=n).fold(S::zero(), |acc, j| {
            acc + neg_coeffs[n - j].clone()
                * binomial::<S>(j, k)
                * s.powi((j - k) as i32)
                * r_inv[j].clone()
        });
        sum.powi(k as i32) * sign::<S>(n - k) * inner
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::params::LambdaPreset;
    use crate::operators::triangle::{compose_trunc, invert_trunc, TruncatedMatrix};
    use crate::scalar::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn order(n: i64, d: i64) -> FractionalOrder<Rational> {
        FractionalOrder::new(q(n, d))
    }

    fn params(r: Rational, s: Rational) -> BinomialParams<Rational> {
        BinomialParams::new(r, s).unwrap()
    }

    fn cesaro() -> LambdaSeq<Rational> {
        LambdaSeq::preset(LambdaPreset::Cesaro)
    }

    fn half_op() -> ProductOperator<Rational> {
        ProductOperator::new(params(q(1, 1), q(1, 1)), order(1, 2), cesaro())
    }

    #[test]
    fn delta_examples() {
        let d = delta(&order(1, 2));
        for n in 0..6 {
            assert_eq!(d.entry(n, n), q(1, 1));
        }
        assert_eq!(d.entry(1, 0), q(-1, 2));
        assert_eq!(d.entry(2, 0), q(-1, 8));
        assert_eq!(delta(&order(2, 1)).row(2), vec![q(1, 1), q(-2, 1), q(1, 1)]);
    }

    #[test]
    fn delta_inv_examples() {
        let di = delta_inv(&order(1, 2));
        assert_eq!(di.entry(4, 4), q(1, 1));
        assert_eq!(di.entry(1, 0), q(1, 2));
        let p = compose_trunc(&delta(&order(1, 2)), &di, 8).unwrap();
        assert!(p.is_identity());
    }

    #[test]
    fn binomial_examples() {
        let b = binomial_mean(&params(q(1, 1), q(1, 1)));
        assert_eq!(b.entry(0, 0), q(1, 1));
        assert_eq!(b.entry(2, 1), q(1, 2));
        let bi = binomial_inv(&params(q(1, 1), q(1, 1))).unwrap();
        assert_eq!(bi.entry(0, 0), q(1, 1));
        assert_eq!(
            bi.truncate(2).unwrap(),
            TruncatedMatrix::from_rows(vec![vec![q(1, 1), q(0, 1)], vec![q(-1, 1), q(2, 1)]])
        );
        let p = params(q(2, 1), q(3, 1));
        assert!(
            compose_trunc(&binomial_mean(&p), &binomial_inv(&p).unwrap(), 8)
                .unwrap()
                .is_identity()
        );
    }

    #[test]
    fn binomial_inv_requires_nonzero_r() {
        let p = params(q(0, 1), q(1, 1));
        assert!(binomial_inv(&p).is_err());
        // The forward matrix is fine with r = 0: it is e_{n0}.
        assert_eq!(binomial_mean(&p).entry(3, 0), q(1, 1));
    }

    #[test]
    fn lambda_examples() {
        let l = lambda_mean(&cesaro());
        for n in 0..5 {
            for k in 0..=n {
                assert_eq!(l.entry(n, k), q(1, n as i64 + 1));
            }
        }
        let p2: Triangle<Rational> = lambda_mean(&LambdaSeq::preset(LambdaPreset::Powers2));
        assert_eq!(p2.entry(2, 1), q(1, 4));
        assert_eq!(p2.entry(0, 0), q(1, 1));
        assert_eq!(
            lambda_inv(&cesaro()).row(2),
            vec![q(0, 1), q(-2, 1), q(3, 1)]
        );
        assert_eq!(lambda_inv(&cesaro()).entry(0, 0), q(1, 1));
        let sq: LambdaSeq<Rational> = LambdaSeq::preset(LambdaPreset::Squares);
        assert!(compose_trunc(&lambda_mean(&sq), &lambda_inv(&sq), 12)
            .unwrap()
            .is_identity());
    }

    #[test]
    fn composed_examples() {
        let a = half_op().forward();
        assert_eq!(a.entry(0, 0), q(1, 1));
        assert_eq!(a.entry(1, 0), q(1, 8));
        assert_eq!(a.entry(1, 1), q(1, 4));
        assert_eq!(a.entry(2, 0), q(-1, 96));
        assert_eq!(a.entry(2, 2), q(1, 12));
    }

    #[test]
    fn composed_matches_display_entries_symbolically() {
        // Row 2 of the displayed product for generic parameters.
        let (r, s, a) = (q(2, 1), q(3, 1), q(1, 3));
        let lam = LambdaSeq::preset(LambdaPreset::Squares);
        let op = ProductOperator::new(
            params(r.clone(), s.clone()),
            FractionalOrder::new(a.clone()),
            lam.clone(),
        );
        let t = op.forward();
        let sum2 = (r.clone() + s.clone()).powi(2);
        let l = |k: usize| lam.value(k);
        let two = q(2, 1);
        let e20 = l(0) / l(2) / sum2.clone()
            * (s.clone() * s.clone() - two.clone() * a.clone() * s.clone() * r.clone()
                + a.clone() * (a.clone() - q(1, 1)) / two.clone() * r.clone() * r.clone());
        let e21 = (l(1) - l(0)) / l(2) / sum2.clone()
            * (two * s.clone() * r.clone() - a.clone() * r.clone() * r.clone());
        let e22 = (l(2) - l(1)) / l(2) / sum2 * r.clone() * r.clone();
        assert_eq!(t.entry(2, 0), e20);
        assert_eq!(t.entry(2, 1), e21);
        assert_eq!(t.entry(2, 2), e22);
    }

    #[test]
    fn composed_inverse_examples() {
        let op = half_op();
        let inv = op.inverse().unwrap();
        assert_eq!(inv.entry(0, 0), q(1, 1));
        assert_eq!(
            inv.truncate(4).unwrap(),
            invert_trunc(&op.forward(), 4).unwrap()
        );
        // Row 3 of the oracle inverse, frozen from an independent
        // fraction-arithmetic computation.
        assert_eq!(inv.row(3), vec![q(-9, 16), q(19, 2), q(-30, 1), q(32, 1)]);
    }

    #[test]
    fn zero_order_inverse_is_conjugated_binomial_inverse() {
        let p = params(q(2, 1), q(-1, 3));
        let op = ProductOperator::new(p.clone(), order(0, 1), cesaro());
        let inv = op.inverse().unwrap();
        let bi = binomial_inv(&p).unwrap();
        let l = cesaro();
        for n in 0..8 {
            for k in 0..=n {
                assert_eq!(inv.entry(n, k), l.value(k) / l.step(n) * bi.entry(n, k));
            }
        }
    }

    #[test]
    fn finite_lambda_bounds_extent() {
        let lam = LambdaSeq::from_fn(5, |k| q(k as i64 + 2, 1)).unwrap();
        let op = ProductOperator::new(params(q(1, 1), q(1, 1)), order(1, 2), lam);
        assert_eq!(op.forward().extent(), Some(5));
        assert!(op.forward().truncate(6).is_err());
        assert!(op.inverse().unwrap().truncate(5).is_ok());
    }
}
