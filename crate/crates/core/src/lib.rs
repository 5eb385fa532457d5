//! Fractional-order binomial difference operators on sequence spaces.
//!
//! The central object is the triangle
//! `A = D(1/lambda_n) * (B(r,s) * Delta^alpha) * D(lambda_k - lambda_{k-1})`
//! together with its closed-form inverse. Everything is computed on finite
//! truncations; because the operators are lower triangular, every windowed
//! result is exact, not an approximation.

pub mod cli;
pub mod coefficients;
pub mod config;
pub mod duals;
pub mod error;
pub mod operators;
pub mod scalar;
pub mod transforms;

pub use coefficients::FractionalOrder;
pub use error::{Error, Result};
pub use operators::{BinomialParams, LambdaPreset, LambdaSeq, ProductOperator, Triangle};
pub use scalar::{Backend, Float, Rational, Scalar};
pub use transforms::SequenceWindow;
