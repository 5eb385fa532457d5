//! Named-matrix lookup and the inverse-identity / oracle checks shared by
//! the CLI and the C ABI.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators::named::{
    binomial_inv, binomial_mean, delta, delta_inv, lambda_inv, lambda_mean, ProductOperator,
};
use crate::operators::triangle::{compose_trunc, invert_trunc, Triangle};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedMatrix {
    Delta,
    DeltaInv,
    Binomial,
    BinomialInv,
    Lambda,
    LambdaInv,
    Composed,
    ComposedInv,
}

impl NamedMatrix {
    pub const ALL: [NamedMatrix; 8] = [
        NamedMatrix::Delta,
        NamedMatrix::DeltaInv,
        NamedMatrix::Binomial,
        NamedMatrix::BinomialInv,
        NamedMatrix::Lambda,
        NamedMatrix::LambdaInv,
        NamedMatrix::Composed,
        NamedMatrix::ComposedInv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedMatrix::Delta => "delta",
            NamedMatrix::DeltaInv => "delta-inv",
            NamedMatrix::Binomial => "binomial",
            NamedMatrix::BinomialInv => "binomial-inv",
            NamedMatrix::Lambda => "lambda",
            NamedMatrix::LambdaInv => "lambda-inv",
            NamedMatrix::Composed => "composed",
            NamedMatrix::ComposedInv => "composed-inv",
        }
    }

    pub fn build<S: Scalar>(self, op: &ProductOperator<S>) -> Result<Triangle<S>> {
        Ok(match self {
            NamedMatrix::Delta => delta(op.alpha()),
            NamedMatrix::DeltaInv => delta_inv(op.alpha()),
            NamedMatrix::Binomial => binomial_mean(op.params()),
            NamedMatrix::BinomialInv => binomial_inv(op.params())?,
            NamedMatrix::Lambda => lambda_mean(op.lambda()),
            NamedMatrix::LambdaInv => lambda_inv(op.lambda()),
            NamedMatrix::Composed => op.forward(),
            NamedMatrix::ComposedInv => op.inverse()?,
        })
    }
}

impl fmt::Display for NamedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        NamedMatrix::ALL
            .into_iter()
            .find(|m| m.name() == norm)
            .ok_or_else(|| {
                let names: Vec<_> = NamedMatrix::ALL.iter().map(|m| m.name()).collect();
                Error::Config(format!(
                    "unknown matrix {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// Outcome of one identity or oracle check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteResult<S> {
    pub suite: String,
    pub max_residual: S,
    pub pass: bool,
}

/// `T T^{-1} = T^{-1} T = I` for the four operator pairs, then agreement
/// of each closed-form inverse with forward substitution, all at `order`.
pub fn verification_suites<S: Scalar>(
    op: &ProductOperator<S>,
    order: usize,
) -> Result<Vec<SuiteResult<S>>> {
    let pairs = [
        ("delta", NamedMatrix::Delta, NamedMatrix::DeltaInv),
        ("binomial", NamedMatrix::Binomial, NamedMatrix::BinomialInv),
        ("lambda", NamedMatrix::Lambda, NamedMatrix::LambdaInv),
        ("composed", NamedMatrix::Composed, NamedMatrix::ComposedInv),
    ]
    .into_iter()
    .map(|(name, f, i)| Ok((name, f.build(op)?, i.build(op)?)))
    .collect::<Result<Vec<_>>>()?;

    let mut out = Vec::with_capacity(2 * pairs.len());
    for (name, fwd, inv) in &pairs {
        let left = compose_trunc(fwd, inv, order)?;
        let right = compose_trunc(inv, fwd, order)?;
        out.push(SuiteResult {
            suite: format!("{name}_identity"),
            max_residual: S::max_of(left.identity_residual(), right.identity_residual()),
            pass: left.is_identity() && right.is_identity(),
        });
    }
    for (name, fwd, inv) in &pairs {
        let oracle = invert_trunc(fwd, order)?;
        let closed = inv.truncate(order)?;
        out.push(SuiteResult {
            suite: format!("{name}_oracle"),
            max_residual: closed.max_abs_deviation(&oracle),
            pass: closed.approx_eq(&oracle),
        });
    }
    Ok(out)
}
