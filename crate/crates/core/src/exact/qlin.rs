//! Dense linear algebra over ℚ, used internally by the scalar field code.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Solves `cols · y = rhs` where `cols[j]` is the j-th column. Returns `None` if inconsistent.
pub(crate) fn solve_columns(cols: &[Vec<BigRational>], rhs: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = rhs.len();
    let ncols = cols.len();
    let mut a: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            let mut r: Vec<BigRational> = cols.iter().map(|c| c[i].clone()).collect();
            r.push(rhs[i].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = BigRational::one() / &a[row][col];
        for v in a[row].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=ncols {
                    let t = &a[row][c] * &f;
                    a[r][c] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if a[row..].iter().any(|r| !r[ncols].is_zero()) {
        return None;
    }
    let mut y = vec![BigRational::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        y[c] = a[i][ncols].clone();
    }
    Some(y)
}
