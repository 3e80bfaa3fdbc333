//! Gaussian elimination over exact rationals.

use alloc::vec::Vec;

use crate::scalar::Scalar;

/// Solves the square system `a · x = b`. `None` when `a` is singular.
pub(crate) fn solve(mut a: Vec<Vec<Scalar>>, mut b: Vec<Scalar>) -> Option<Vec<Scalar>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip()?;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            let pivot_row = a[col].clone();
            for (target, p) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *target -= &(&factor * p);
            }
            let delta = &factor * &b[col];
            b[r] -= &delta;
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Determinant of a square matrix given by rows.
pub(crate) fn determinant(mut a: Vec<Vec<Scalar>>) -> Scalar {
    let n = a.len();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Scalar::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        det *= &a[col][col];
        let inv = a[col][col].recip().expect("nonzero pivot");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            let pivot_row = a[col].clone();
            for (target, p) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *target -= &(&factor * p);
            }
        }
    }
    det
}
