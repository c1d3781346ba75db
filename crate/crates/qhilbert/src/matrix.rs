//! Dense square matrices of exact field elements.
//!
//! Sizes here are tiny (a few dozen rows at most), so everything is a flat
//! row-major vector and products are the naive cubic algorithm; exactness is
//! the point, not speed.

use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};

/// Square matrix indexed 0..=n (size (n+1) x (n+1)); all entries share one
/// field context.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix {
    ctx: FieldContext,
    n: usize,
    entries: Vec<FieldElement>,
}

impl ExactMatrix {
    /// Build from an entry function over indices 0..=n.
    pub fn from_fn(
        ctx: FieldContext,
        n: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Self {
        let size = n + 1;
        let mut entries = Vec::with_capacity(size * size);
        for l in 0..size {
            for j in 0..size {
                let value = f(l, j);
                assert_eq!(value.context(), ctx, "entry context mismatch");
                entries.push(value);
            }
        }
        ExactMatrix { ctx, n, entries }
    }

    pub fn identity(ctx: FieldContext, n: usize) -> Self {
        Self::from_fn(ctx, n, |l, j| if l == j { ctx.one() } else { ctx.zero() })
    }

    pub fn context(&self) -> FieldContext {
        self.ctx
    }

    /// Largest row/column index.
    pub fn index_bound(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.n + 1
    }

    pub fn entry(&self, l: usize, j: usize) -> &FieldElement {
        &self.entries[l * self.size() + j]
    }

    pub fn map_entries(&self, mut f: impl FnMut(usize, usize, &FieldElement) -> FieldElement) -> Self {
        Self::from_fn(self.ctx, self.n, |l, j| f(l, j, self.entry(l, j)))
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.ctx != rhs.ctx {
            return Err(Error::ContextMismatch {
                left: self.ctx.radicand(),
                right: rhs.ctx.radicand(),
            });
        }
        if self.n != rhs.n {
            return Err(Error::InvalidParameter(format!(
                "cannot multiply matrices of sizes {} and {}",
                self.size(),
                rhs.size()
            )));
        }
        Ok(Self::from_fn(self.ctx, self.n, |l, j| {
            let mut acc = self.ctx.zero();
            for k in 0..self.size() {
                acc = &acc + &(self.entry(l, k) * rhs.entry(k, j));
            }
            acc
        }))
    }

    pub fn is_identity(&self) -> bool {
        (0..self.size()).all(|l| {
            (0..self.size()).all(|j| {
                let e = self.entry(l, j);
                if l == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size()).all(|l| (l + 1..self.size()).all(|j| self.entry(l, j) == self.entry(j, l)))
    }

    /// CSV of "p/q" cells; refuses matrices with entries outside Q.
    pub fn to_csv(&self) -> Result<String> {
        let mut out = String::new();
        for l in 0..self.size() {
            for j in 0..self.size() {
                let value = self.entry(l, j).as_rational().ok_or(Error::NonRationalEntry {
                    row: l,
                    col: j,
                })?;
                if j > 0 {
                    out.push(',');
                }
                out.push_str(&value.to_string());
            }
            out.push('\n');
        }
        Ok(out)
    }

    /// Human-readable aligned grid.
    pub fn to_pretty(&self) -> String {
        let size = self.size();
        let cells: Vec<Vec<String>> = (0..size)
            .map(|l| (0..size).map(|j| self.entry(l, j).to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..size)
            .map(|j| cells.iter().map(|row| row[j].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in &cells {
            out.push('[');
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    out.push_str("  ");
                }
                out.push_str(&" ".repeat(widths[j] - cell.len()));
                out.push_str(cell);
            }
            out.push_str("]\n");
        }
        out
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut rows = serializer.serialize_seq(Some(self.size()))?;
        for l in 0..self.size() {
            let row: Vec<&FieldElement> = (0..self.size()).map(|j| self.entry(l, j)).collect();
            rows.serialize_element(&row)?;
        }
        rows.end()
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<FieldElement>> = Vec::deserialize(deserializer)?;
        if rows.is_empty() {
            return Err(D::Error::custom("matrix must have at least one row"));
        }
        let size = rows.len();
        if rows.iter().any(|row| row.len() != size) {
            return Err(D::Error::custom("matrix must be square"));
        }
        let ctx = rows[0][0].context();
        if rows.iter().flatten().any(|e| e.context() != ctx) {
            return Err(D::Error::custom("matrix entries must share one context"));
        }
        let entries: Vec<FieldElement> = rows.into_iter().flatten().collect();
        Ok(ExactMatrix {
            ctx,
            n: size - 1,
            entries,
        })
    }
}
