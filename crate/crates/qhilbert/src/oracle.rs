//! Independent exact linear algebra used to certify closed-form results.
//!
//! Nothing here knows any matrix family or closed formula: determinants come
//! from fraction-free elimination and inverses from Gauss-Jordan, both over
//! exact field arithmetic. Agreement between this module and the formula
//! modules is therefore a genuine two-sided check.

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::matrix::ExactMatrix;

/// Exact determinant by Bareiss' fraction-free elimination.
///
/// Each step divides by the previous pivot; over a field the division is
/// always exact, and the fraction-free form keeps intermediate values as
/// minors of the original matrix rather than ratios. Pivoting takes the
/// first nonzero entry scanning down the column, so the output is
/// deterministic; singular matrices return 0.
pub fn bareiss_det(matrix: &ExactMatrix) -> FieldElement {
    let ctx = matrix.context();
    let size = matrix.size();
    let mut m: Vec<Vec<FieldElement>> = (0..size)
        .map(|l| (0..size).map(|j| matrix.entry(l, j).clone()).collect())
        .collect();
    let mut negate = false;
    let mut prev_pivot = ctx.one();
    for k in 0..size - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..size).find(|&r| !m[r][k].is_zero()) else {
                return ctx.zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let numer = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = numer.div(&prev_pivot).expect("previous pivot is nonzero");
            }
            m[i][k] = ctx.zero();
        }
        prev_pivot = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Exact inverse by Gauss-Jordan elimination on the augmented identity.
///
/// The product matrix * inverse = identity is verified before returning, so
/// a successful result is self-certifying.
pub fn exact_inverse(matrix: &ExactMatrix) -> Result<ExactMatrix> {
    let ctx = matrix.context();
    let size = matrix.size();
    let mut work: Vec<Vec<FieldElement>> = (0..size)
        .map(|l| {
            (0..size)
                .map(|j| matrix.entry(l, j).clone())
                .chain((0..size).map(|j| if l == j { ctx.one() } else { ctx.zero() }))
                .collect()
        })
        .collect();

    for col in 0..size {
        let Some(pivot_row) = (col..size).find(|&r| !work[r][col].is_zero()) else {
            return Err(Error::SingularMatrix);
        };
        work.swap(col, pivot_row);
        let pivot_inv = work[col][col].inv().expect("pivot is nonzero");
        for j in col..2 * size {
            work[col][j] = &work[col][j] * &pivot_inv;
        }
        for row in 0..size {
            if row == col || work[row][col].is_zero() {
                continue;
            }
            let factor = work[row][col].clone();
            for j in col..2 * size {
                work[row][j] = &work[row][j] - &(&factor * &work[col][j]);
            }
        }
    }

    let inverse = ExactMatrix::from_fn(ctx, size - 1, |l, j| work[l][size + j].clone());
    if !matrix.mul(&inverse)?.is_identity() {
        return Err(Error::CertificationFailed(
            "elimination produced a non-inverse".into(),
        ));
    }
    Ok(inverse)
}
