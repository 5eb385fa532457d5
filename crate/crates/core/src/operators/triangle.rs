use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::{sup_abs, Scalar};

type EntryRule<S> = dyn Fn(usize, usize) -> S + Send + Sync;

/// Lower-triangular infinite matrix given by an entry rule on `k <= n`.
///
/// Triangles built from a finite lambda table have a finite `extent`: rows
/// at or beyond it cannot be evaluated.
#[derive(Clone)]
pub struct Triangle<S> {
    name: String,
    extent: Option<usize>,
    rule: Arc<EntryRule<S>>,
}

impl<S: Scalar> Triangle<S> {
    pub fn new(
        name: impl Into<String>,
        rule: impl Fn(usize, usize) -> S + Send + Sync + 'static,
    ) -> Self {
        Triangle {
            name: name.into(),
            extent: None,
            rule: Arc::new(rule),
        }
    }

    pub fn with_extent(mut self, extent: Option<usize>) -> Self {
        self.extent = match (self.extent, extent) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self
    }

    pub fn identity() -> Self {
        Triangle::new("identity", |n, k| if n == k { S::one() } else { S::zero() })
    }

    pub fn zero() -> Self {
        Triangle::new("zero", |_, _| S::zero())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn extent(&self) -> Option<usize> {
        self.extent
    }

    /// Entry `(n, k)`; identically zero above the diagonal.
    ///
    /// Panics if `n` is at or beyond a finite extent.
    pub fn entry(&self, n: usize, k: usize) -> S {
        if let Some(extent) = self.extent {
            assert!(
                n < extent,
                "row {n} requested from {} with extent {extent}",
                self.name
            );
        }
        if k > n {
            S::zero()
        } else {
            (self.rule)(n, k)
        }
    }

    pub fn check_order(&self, order: usize) -> Result<()> {
        if order == 0 {
            return Err(Error::EmptyTruncation);
        }
        match self.extent {
            Some(extent) if order > extent => Err(Error::ExtentExceeded {
                requested: order,
                extent,
            }),
            _ => Ok(()),
        }
    }

    /// Leading `order x order` block. Rows are evaluated in parallel.
    pub fn truncate(&self, order: usize) -> Result<TruncatedMatrix<S>> {
        self.check_order(order)?;
        let rows: Vec<Vec<S>> = (0..order)
            .into_par_iter()
            .map(|n| (0..order).map(|k| self.entry(n, k)).collect())
            .collect();
        Ok(TruncatedMatrix {
            order,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Row `n` restricted to columns `0..=n`.
    pub fn row(&self, n: usize) -> Vec<S> {
        (0..=n).map(|k| self.entry(n, k)).collect()
    }
}

impl<S> fmt::Debug for Triangle<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Triangle")
            .field("name", &self.name)
            .field("extent", &self.extent)
            .finish_non_exhaustive()
    }
}

/// Dense `order x order` block, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedMatrix<S> {
    order: usize,
    entries: Vec<S>,
}

impl<S: Scalar> TruncatedMatrix<S> {
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let order = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == order),
            "matrix must be square"
        );
        TruncatedMatrix {
            order,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(order: usize) -> Self {
        let entries = (0..order * order)
            .map(|idx| {
                if idx / order == idx % order {
                    S::one()
                } else {
                    S::zero()
                }
            })
            .collect();
        TruncatedMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.order).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.order.max(1))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.order).all(|i| (i + 1..self.order).all(|j| self.get(i, j).is_zero()))
    }

    /// Matrix product; panics on order mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "order mismatch");
        let n = self.order;
        let rows: Vec<Vec<S>> = (0..n)
            .into_par_iter()
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(S::zero(), |acc, m| {
                            let a = self.get(i, m);
                            let b = other.get(m, j);
                            if a.is_zero() || b.is_zero() {
                                acc
                            } else {
                                acc + a.clone() * b.clone()
                            }
                        })
                    })
                    .collect()
            })
            .collect();
        TruncatedMatrix::from_rows(rows)
    }

    pub fn mul_vec(&self, x: &[S]) -> Vec<S> {
        assert_eq!(self.order, x.len(), "length mismatch");
        self.rows()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// `max |self - other|` over all entries.
    pub fn max_abs_deviation(&self, other: &Self) -> S {
        assert_eq!(self.order, other.order, "order mismatch");
        let diffs: Vec<S> = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        sup_abs(&diffs)
    }

    /// Residual against the identity: `max |self - I|`.
    pub fn identity_residual(&self) -> S {
        self.max_abs_deviation(&TruncatedMatrix::identity(self.order))
    }

    /// Positions `(i, j)` in row-major order where the entries disagree
    /// under the backend's comparison policy.
    pub fn mismatches(&self, other: &Self) -> Vec<(usize, usize)> {
        assert_eq!(self.order, other.order, "order mismatch");
        let n = self.order;
        (0..n * n)
            .filter(|&idx| !self.entries[idx].approx_eq(&other.entries[idx]))
            .map(|idx| (idx / n, idx % n))
            .collect()
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mismatches(other).is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.approx_eq(&TruncatedMatrix::identity(self.order))
    }
}

impl<S: Scalar> fmt::Display for TruncatedMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "{}", cells.join("\t"))?;
        }
        Ok(())
    }
}

/// Product of the two `order x order` truncations. For triangles this is
/// also the truncation of the infinite product.
pub fn compose_trunc<S: Scalar>(
    a: &Triangle<S>,
    b: &Triangle<S>,
    order: usize,
) -> Result<TruncatedMatrix<S>> {
    let ta = a.truncate(order)?;
    let tb = b.truncate(order)?;
    let rows: Vec<Vec<S>> = (0..order)
        .into_par_iter()
        .map(|i| {
            (0..order)
                .map(|j| {
                    if j > i {
                        return S::zero();
                    }
                    (j..=i).fold(S::zero(), |acc, m| {
                        acc + ta.get(i, m).clone() * tb.get(m, j).clone()
                    })
                })
                .collect()
        })
        .collect();
    Ok(TruncatedMatrix::from_rows(rows))
}

/// Exact inverse of the `order x order` truncation by forward substitution.
///
/// For a triangle the truncation of the inverse equals the inverse of the
/// truncation, so this is the reference every closed-form inverse is
/// checked against.
pub fn invert_trunc<S: Scalar>(a: &Triangle<S>, order: usize) -> Result<TruncatedMatrix<S>> {
    let t = a.truncate(order)?;
    invert_lower(&t)
}

/// Forward-substitution inverse of a lower-triangular block.
pub fn invert_lower<S: Scalar>(t: &TruncatedMatrix<S>) -> Result<TruncatedMatrix<S>> {
    let order = t.order();
    if let Some(i) = (0..order).find(|&i| t.get(i, i).is_zero()) {
        return Err(Error::SingularDiagonal(i));
    }
    // Column j of the inverse solves L x = e_j; columns are independent.
    let columns: Vec<Vec<S>> = (0..order)
        .into_par_iter()
        .map(|j| {
            let mut x = vec![S::zero(); order];
            for i in j..order {
                let rhs = if i == j { S::one() } else { S::zero() };
                let acc = (j..i).fold(rhs, |acc, m| acc - t.get(i, m).clone() * x[m].clone());
                x[i] = acc / t.get(i, i).clone();
            }
            x
        })
        .collect();
    let rows = (0..order)
        .map(|i| (0..order).map(|j| columns[j][i].clone()).collect())
        .collect();
    Ok(TruncatedMatrix::from_rows(rows))
}
