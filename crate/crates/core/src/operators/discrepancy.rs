//! Literal transcriptions of the published closed forms, checked against
//! the forward-substitution oracle or the canonical operator.
//!
//! Mismatches are data: a report is produced whether or not the printed
//! formula agrees.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coefficients::binomial;
use crate::error::{Error, Result};
use crate::operators::named::{binomial_mean, delta, inverse_core, lambda_mean, ProductOperator};
use crate::operators::triangle::{invert_trunc, Triangle, TruncatedMatrix};
use crate::scalar::Scalar;

/// Exact suites stop at this order.
pub const MAX_EXACT_ORDER: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PrintedForm {
    /// Full lower triangle `(-1)^{n-k} lambda_n / (lambda_k - lambda_{k-1})`
    /// offered as the inverse of the lambda mean.
    Lemma3AsPrinted,
    /// Product inverse with the lambda factor `lambda_n / (lambda_k - lambda_{k-1})`.
    Theorem4AsPrinted,
    /// Product matrix with the weight indexed by the summation variable and
    /// no alternating sign.
    Eq21AsPrinted,
    /// Basis sequences carrying the factor `(lambda_k - lambda_{k-1}) / lambda_k`.
    ThetaAsPrinted,
}

impl PrintedForm {
    pub const ALL: [PrintedForm; 4] = [
        PrintedForm::Lemma3AsPrinted,
        PrintedForm::Theorem4AsPrinted,
        PrintedForm::Eq21AsPrinted,
        PrintedForm::ThetaAsPrinted,
    ];
}

impl FromStr for PrintedForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lemma3" | "lemma3_as_printed" => Ok(PrintedForm::Lemma3AsPrinted),
            "theorem4" | "theorem4_as_printed" => Ok(PrintedForm::Theorem4AsPrinted),
            "eq21" | "eq21_as_printed" => Ok(PrintedForm::Eq21AsPrinted),
            "theta" | "theta_as_printed" => Ok(PrintedForm::ThetaAsPrinted),
            other => Err(Error::Config(format!(
                "unknown variant {other:?} (expected lemma3, theorem4, eq21 or theta)"
            ))),
        }
    }
}

impl fmt::Display for PrintedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PrintedForm::Lemma3AsPrinted => "lemma3_as_printed",
            PrintedForm::Theorem4AsPrinted => "theorem4_as_printed",
            PrintedForm::Eq21AsPrinted => "eq21_as_printed",
            PrintedForm::ThetaAsPrinted => "theta_as_printed",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mismatch<S> {
    pub row: usize,
    pub col: usize,
    pub printed: S,
    pub reference: S,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiscrepancyReport<S> {
    pub variant: PrintedForm,
    /// What the printed form was compared against.
    pub reference: &'static str,
    pub order: usize,
    pub max_abs_deviation: S,
    /// First mismatch in row-major order.
    pub first_mismatch: Option<Mismatch<S>>,
    pub mismatches: Vec<Mismatch<S>>,
    pub agrees: bool,
    /// `eq21` only: max deviation between the canonical operator and the
    /// literal product `Lambda * B * Delta` of the three truncations.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub literal_product_deviation: Option<S>,
}

fn sign<S: Scalar>(exp: usize) -> S {
    if exp.is_multiple_of(2) {
        S::one()
    } else {
        -S::one()
    }
}

/// The printed formula of `variant` as a triangle.
pub fn printed_triangle<S: Scalar>(
    variant: PrintedForm,
    op: &ProductOperator<S>,
) -> Result<Triangle<S>> {
    let l = op.lambda().clone();
    let extent = l.len();
    let t = match variant {
        PrintedForm::Lemma3AsPrinted => Triangle::new("lemma3_as_printed", move |n, k| {
            sign::<S>(n - k) * l.value(n) / l.step(k)
        }),
        PrintedForm::Theorem4AsPrinted => {
            op.params().ensure_invertible()?;
            let core = inverse_core(op.params(), op.alpha());
            Triangle::new("theorem4_as_printed", move |n, k| {
                l.value(n) / l.step(k) * core(n, k)
            })
        }
        PrintedForm::ThetaAsPrinted => {
            op.params().ensure_invertible()?;
            let core = inverse_core(op.params(), op.alpha());
            Triangle::new("theta_as_printed", move |n, k| {
                l.step(k) / l.value(k) * core(n, k)
            })
        }
        PrintedForm::Eq21AsPrinted => {
            let (r, s, sum) = (
                op.params().r().clone(),
                op.params().s().clone(),
                op.params().sum(),
            );
            let alpha = op.alpha().clone();
            Triangle::new("eq21_as_printed", move |n, k| {
                alpha
                    .coefficients()
                    .zip(k..=n)
                    .fold(S::zero(), |acc, (c_alpha, i)| {
                        acc + l.step(i) / l.value(n) / sum.powi(n as i32)
                            * binomial::<S>(n, n - i)
                            * c_alpha
                            * r.powi(i as i32)
                            * s.powi((n - i) as i32)
                    })
            })
        }
    };
    Ok(t.with_extent(extent))
}

fn reference_matrix<S: Scalar>(
    variant: PrintedForm,
    op: &ProductOperator<S>,
    order: usize,
) -> Result<(&'static str, TruncatedMatrix<S>)> {
    Ok(match variant {
        PrintedForm::Lemma3AsPrinted => (
            "oracle inverse of the lambda mean",
            invert_trunc(&lambda_mean(op.lambda()), order)?,
        ),
        PrintedForm::Theorem4AsPrinted | PrintedForm::ThetaAsPrinted => (
            "oracle inverse of the product operator",
            invert_trunc(&op.forward(), order)?,
        ),
        PrintedForm::Eq21AsPrinted => ("canonical product operator", op.forward().truncate(order)?),
    })
}

/// Compares the printed form of `variant` with its reference at `order`.
pub fn discrepancy_report<S: Scalar>(
    variant: PrintedForm,
    op: &ProductOperator<S>,
    order: usize,
) -> Result<DiscrepancyReport<S>> {
    if order > MAX_EXACT_ORDER {
        return Err(Error::TruncationCap {
            requested: order,
            cap: MAX_EXACT_ORDER,
        });
    }
    let printed = printed_triangle(variant, op)?.truncate(order)?;
    let (reference, expected) = reference_matrix(variant, op, order)?;
    let mismatches: Vec<Mismatch<S>> = printed
        .mismatches(&expected)
        .into_iter()
        .map(|(row, col)| Mismatch {
            row,
            col,
            printed: printed.get(row, col).clone(),
            reference: expected.get(row, col).clone(),
        })
        .collect();
    let literal_product_deviation = match variant {
        PrintedForm::Eq21AsPrinted => {
            let product = lambda_mean(op.lambda())
                .truncate(order)?
                .mul(&binomial_mean(op.params()).truncate(order)?)
                .mul(&delta(op.alpha()).truncate(order)?);
            Some(product.max_abs_deviation(&expected))
        }
        _ => None,
    };
    Ok(DiscrepancyReport {
        variant,
        reference,
        order,
        max_abs_deviation: printed.max_abs_deviation(&expected),
        first_mismatch: mismatches.first().cloned(),
        agrees: mismatches.is_empty(),
        mismatches,
        literal_product_deviation,
    })
}
