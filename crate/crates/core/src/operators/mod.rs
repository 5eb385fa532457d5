//! Triangular operators: construction, truncation, composition, and the
//! forward-substitution oracle.

mod discrepancy;
mod named;
mod params;
mod triangle;
mod verify;

pub use discrepancy::{
    discrepancy_report, printed_triangle, DiscrepancyReport, Mismatch, PrintedForm, MAX_EXACT_ORDER,
};
pub use named::{
    binomial_inv, binomial_mean, delta, delta_inv, lambda_inv, lambda_mean, ProductOperator,
};
pub use params::{BinomialParams, LambdaPreset, LambdaSeq};
pub use triangle::{compose_trunc, invert_lower, invert_trunc, Triangle, TruncatedMatrix};
pub use verify::{verification_suites, NamedMatrix, SuiteResult};
