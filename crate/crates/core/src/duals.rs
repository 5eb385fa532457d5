//! Multiplier matrices for the alpha-, beta- and gamma-duals and the
//! finite-window evaluation of the matrix-class conditions with ids 4.1 to 4.5.
//!
//! For `x` with `y = A x`, `d_n x_n = (D y)_n` and
//! `sum_{k<=n} d_k x_k = (T y)_n`, so the duals reduce to asking which
//! matrix classes `D` and `T` fall into.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators::{ProductOperator, Triangle, TruncatedMatrix, MAX_EXACT_ORDER};
use crate::scalar::{sup_abs, Scalar};
use crate::transforms::SequenceWindow;

/// Subset enumeration for 4.1 is exhaustive, so it is capped here.
pub const MAX_SUBSET_ORDER: usize = 15;

/// Candidate multiplier sequence `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct DualCandidate<S> {
    d: SequenceWindow<S>,
}

impl<S: Scalar> DualCandidate<S> {
    pub fn new(d: SequenceWindow<S>) -> Self {
        DualCandidate { d }
    }

    pub fn window(&self) -> &SequenceWindow<S> {
        &self.d
    }

    pub fn len(&self) -> usize {
        self.d.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.is_empty()
    }
}

/// `d_{nk} = (A^{-1})_{nk} d_n`.
pub fn alpha_dual_matrix<S: Scalar>(
    d: &DualCandidate<S>,
    op: &ProductOperator<S>,
) -> Result<Triangle<S>> {
    let inv = op.inverse()?;
    let dv = d.d.values().to_vec();
    Ok(Triangle::new("alpha_dual", move |n, k| {
        if dv[n].is_zero() {
            S::zero()
        } else {
            inv.entry(n, k) * dv[n].clone()
        }
    })
    .with_extent(op.extent())
    .with_extent(Some(d.len())))
}

/// `t_{nk} = sum_{i=k..n} (A^{-1})_{ik} d_i`.
pub fn beta_dual_matrix<S: Scalar>(
    d: &DualCandidate<S>,
    op: &ProductOperator<S>,
) -> Result<Triangle<S>> {
    let inv = op.inverse()?;
    let dv = d.d.values().to_vec();
    Ok(Triangle::new("beta_dual", move |n, k| {
        (k..=n).fold(S::zero(), |acc, i| {
            if dv[i].is_zero() {
                acc
            } else {
                acc + inv.entry(i, k) * dv[i].clone()
            }
        })
    })
    .with_extent(op.extent())
    .with_extent(Some(d.len())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// `sup_K sum_n |sum_{k in K} a_nk| < inf`
    C41,
    /// `sup_n sum_k |a_nk| < inf`
    C42,
    /// `lim_n a_nk` exists for each `k`
    C43,
    /// `lim_n sum_k a_nk` exists
    C44,
    /// `lim_n sum_k |a_nk| = sum_k |lim_n a_nk|`
    C45,
}

impl Condition {
    pub const ALL: [Condition; 5] = [
        Condition::C41,
        Condition::C42,
        Condition::C43,
        Condition::C44,
        Condition::C45,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Condition::C41 => "4.1",
            Condition::C42 => "4.2",
            Condition::C43 => "4.3",
            Condition::C44 => "4.4",
            Condition::C45 => "4.5",
        }
    }

    /// Sup-type conditions ask for boundedness; the rest ask for a limit.
    fn is_sup(self) -> bool {
        matches!(self, Condition::C41 | Condition::C42)
    }

    fn min_order(self) -> usize {
        match self {
            Condition::C43 | Condition::C44 => 2,
            _ => 1,
        }
    }
}

impl FromStr for Condition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Condition::ALL
            .into_iter()
            .find(|c| c.id() == s.trim())
            .ok_or_else(|| Error::Config(format!("unknown condition {s:?}")))
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Condition {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        s.serialize_str(self.id())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionVerdict {
    ConvergedSoFar,
    BoundedSoFar,
    Growing,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionReport<S> {
    #[serde(rename = "id")]
    pub condition: Condition,
    #[serde(rename = "value")]
    pub value_at_n: S,
    /// `value_at_n` for each truncation order from the condition's minimum
    /// up to `N`.
    pub trend: Vec<S>,
    /// 4.3: per-column deltas `|a_{N-1,k} - a_{N-2,k}|`; 4.4: row sums.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sequence: Vec<S>,
    pub verdict: ConditionVerdict,
}

/// Columns whose limits are estimated from a window of `order` rows:
/// the first half, which has had at least half the window to settle.
fn settled_columns(order: usize) -> usize {
    order.div_ceil(2)
}

/// 4.1 at order `n`: Gray-code walk over all nonempty `K`, keeping the
/// per-row partial sums `sum_{k in K} a_rk` up to date incrementally.
fn subset_sup<S: Scalar>(m: &TruncatedMatrix<S>, n: usize) -> S {
    let mut row_sums = vec![S::zero(); n];
    let mut in_k = vec![false; n];
    let mut best = S::zero();
    for step in 1u64..(1u64 << n) {
        let col = step.trailing_zeros() as usize;
        in_k[col] = !in_k[col];
        for (r, acc) in row_sums.iter_mut().enumerate() {
            let a = m.get(r, col);
            if a.is_zero() {
                continue;
            }
            let prev = std::mem::replace(acc, S::zero());
            *acc = if in_k[col] {
                prev + a.clone()
            } else {
                prev - a.clone()
            };
        }
        let total = row_sums.iter().fold(S::zero(), |acc, v| acc + v.abs());
        best = S::max_of(best, total);
    }
    best
}

fn row_abs_sum<S: Scalar>(m: &TruncatedMatrix<S>, row: usize, upto: usize) -> S {
    m.row(row)[..upto]
        .iter()
        .fold(S::zero(), |acc, v| acc + v.abs())
}

fn value_at<S: Scalar>(which: Condition, m: &TruncatedMatrix<S>, n: usize) -> S {
    match which {
        Condition::C41 => subset_sup(m, n),
        Condition::C42 => (0..n)
            .map(|r| row_abs_sum(m, r, n))
            .fold(S::zero(), S::max_of),
        Condition::C43 => {
            let deltas: Vec<S> = (0..settled_columns(n))
                .map(|k| m.get(n - 1, k).clone() - m.get(n - 2, k).clone())
                .collect();
            sup_abs(&deltas)
        }
        Condition::C44 => {
            let sum = |r: usize| m.row(r)[..n].iter().fold(S::zero(), |a, v| a + v.clone());
            (sum(n - 1) - sum(n - 2)).abs()
        }
        Condition::C45 => {
            // Unsettled columns are estimated to have limit zero, so this
            // is the absolute mass the last row carries outside them.
            let settled = settled_columns(n);
            (row_abs_sum(m, n - 1, n) - row_abs_sum(m, n - 1, settled)).abs()
        }
    }
}

fn verdict_for<S: Scalar>(which: Condition, trend: &[S]) -> ConditionVerdict {
    let last = trend.last().cloned().unwrap_or_else(S::zero);
    let mid = trend[trend.len() / 2].clone();
    if which.is_sup() {
        // Per-step rise in the second half at least that of the first.
        let half = trend.len() / 2;
        let first_rise =
            (mid.clone() - trend[0].clone()) * S::from_int((trend.len() - 1 - half) as i64);
        let second_rise = (last - mid) * S::from_int(half as i64);
        if !second_rise.is_zero() && second_rise >= first_rise {
            ConditionVerdict::Growing
        } else {
            ConditionVerdict::BoundedSoFar
        }
    } else if last.is_zero() {
        ConditionVerdict::ConvergedSoFar
    } else if last >= mid {
        ConditionVerdict::Growing
    } else {
        ConditionVerdict::BoundedSoFar
    }
}

/// Evaluates one condition on the `order x order` truncation of `a`,
/// recording its value at every smaller order as the trend.
pub fn check_condition<S: Scalar>(
    a: &Triangle<S>,
    which: Condition,
    order: usize,
) -> Result<ConditionReport<S>> {
    let cap = if which == Condition::C41 {
        MAX_SUBSET_ORDER
    } else {
        MAX_EXACT_ORDER
    };
    if order > cap {
        return Err(Error::TruncationCap {
            requested: order,
            cap,
        });
    }
    let m = a.truncate(order)?;
    let lo = which.min_order();
    if order < lo {
        return Err(Error::Config(format!(
            "condition {which} needs at least {lo} rows, got {order}"
        )));
    }
    let trend: Vec<S> = (lo..=order).map(|n| value_at(which, &m, n)).collect();
    let sequence = match which {
        Condition::C43 => (0..order)
            .map(|k| (m.get(order - 1, k).clone() - m.get(order - 2, k).clone()).abs())
            .collect(),
        Condition::C44 => (0..order)
            .map(|r| m.row(r).iter().fold(S::zero(), |a, v| a + v.clone()))
            .collect(),
        _ => Vec::new(),
    };
    Ok(ConditionReport {
        condition: which,
        value_at_n: trend.last().cloned().unwrap_or_else(S::zero),
        verdict: verdict_for(which, &trend),
        trend,
        sequence,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DualKind {
    Alpha,
    Beta,
    Gamma,
}

impl FromStr for DualKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "alpha" => Ok(DualKind::Alpha),
            "beta" => Ok(DualKind::Beta),
            "gamma" => Ok(DualKind::Gamma),
            other => Err(Error::Config(format!(
                "unknown dual {other:?} (expected alpha, beta or gamma)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SourceSpace {
    C0,
    C,
    Linf,
}

impl FromStr for SourceSpace {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "c0" => Ok(SourceSpace::C0),
            "c" => Ok(SourceSpace::C),
            "linf" | "l_inf" => Ok(SourceSpace::Linf),
            other => Err(Error::Config(format!(
                "unknown source space {other:?} (expected c0, c or linf)"
            ))),
        }
    }
}

/// Conditions that characterize the class the multiplier matrix must be in.
pub fn required_conditions(dual: DualKind, source: SourceSpace) -> &'static [Condition] {
    use Condition::*;
    match (dual, source) {
        (DualKind::Alpha, _) => &[C41],
        (DualKind::Beta, SourceSpace::C0) => &[C42, C43],
        (DualKind::Beta, SourceSpace::C) => &[C42, C43, C44],
        (DualKind::Beta, SourceSpace::Linf) => &[C43, C45],
        (DualKind::Gamma, _) => &[C42],
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DualReport<S> {
    pub dual: DualKind,
    pub source_space: SourceSpace,
    pub order: usize,
    pub conditions: Vec<ConditionReport<S>>,
    pub aggregate: ConditionVerdict,
}

/// Builds `D` (alpha) or `T` (beta, gamma) for `d` and evaluates the
/// conditions required for `source -> target`.
///
/// The aggregate is `growing` if any condition is, `converged-so-far` if
/// all are, and `bounded-so-far` otherwise.
pub fn dual_report<S: Scalar>(
    d: &DualCandidate<S>,
    dual: DualKind,
    source: SourceSpace,
    op: &ProductOperator<S>,
    order: usize,
) -> Result<DualReport<S>> {
    let matrix = match dual {
        DualKind::Alpha => alpha_dual_matrix(d, op)?,
        DualKind::Beta | DualKind::Gamma => beta_dual_matrix(d, op)?,
    };
    let conditions = required_conditions(dual, source)
        .iter()
        .map(|&c| check_condition(&matrix, c, order))
        .collect::<Result<Vec<_>>>()?;
    let aggregate = if conditions
        .iter()
        .any(|c| c.verdict == ConditionVerdict::Growing)
    {
        ConditionVerdict::Growing
    } else if conditions
        .iter()
        .all(|c| c.verdict == ConditionVerdict::ConvergedSoFar)
    {
        ConditionVerdict::ConvergedSoFar
    } else {
        ConditionVerdict::BoundedSoFar
    };
    Ok(DualReport {
        dual,
        source_space: source,
        order,
        conditions,
        aggregate,
    })
}
