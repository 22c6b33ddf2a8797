//! Fraction-free (Bareiss) elimination over exact integers.
//!
//! Every intermediate entry is a minor of the input, so for the small
//! intersection matrices met in practice `i128` never overflows. The
//! `i128` pass uses checked arithmetic and the caller reruns over `BigInt`
//! when it reports overflow.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub(crate) trait ExactInt: Clone + PartialEq + std::fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `(a*b - c*d) / e`, the division being exact; `None` on overflow.
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl ExactInt for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let x = a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)?;
        debug_assert_eq!(x % e, 0, "Bareiss division must be exact");
        Some(x / e)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ExactInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        Some((a * b - c * d) / e)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Leading principal minors `D_1, ..., D_k` of a square matrix, stopping
/// after the first zero minor (elimination without pivoting cannot proceed
/// past it). `None` on overflow.
pub(crate) fn leading_minors<T: ExactInt>(rows: &[Vec<i64>]) -> Option<Vec<T>> {
    let n = rows.len();
    let mut m: Vec<Vec<T>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| T::from_i64(v)).collect())
        .collect();
    let mut minors = Vec::with_capacity(n);
    let mut prev = T::from_i64(1);
    for k in 0..n {
        let pivot = m[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = T::cross_div(&pivot, &m[i][j], &m[i][k], &m[k][j], &prev)?;
            }
            m[i][k] = T::from_i64(0);
        }
        prev = pivot;
    }
    Some(minors)
}

/// Solves `M x = rhs` for a matrix whose leading principal minors are all
/// nonzero. Returns `(det, y)` with `x = y / det` and `y` integral.
/// `None` on overflow or when a leading minor vanishes.
pub(crate) fn solve_scaled<T: ExactInt>(rows: &[Vec<i64>], rhs: &[i64]) -> Option<(T, Vec<T>)> {
    let n = rows.len();
    let mut m: Vec<Vec<T>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            r.iter()
                .chain(std::iter::once(&b))
                .map(|&v| T::from_i64(v))
                .collect()
        })
        .collect();
    let mut prev = T::from_i64(1);
    for k in 0..n {
        let pivot = m[k][k].clone();
        if pivot.is_zero() {
            return None;
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                m[i][j] = T::cross_div(&pivot, &m[i][j], &m[i][k], &m[k][j], &prev)?;
            }
            m[i][k] = T::from_i64(0);
        }
        prev = pivot;
    }
    // After elimination row k holds minors of order k+1 and m[n-1][n-1] = det.
    let det = m[n - 1][n - 1].clone();
    let zero = T::from_i64(0);
    let mut y = vec![zero.clone(); n];
    for i in (0..n).rev() {
        // y_i = (det * c_i - sum_{j>i} m_ij y_j) / m_ii
        let mut acc = T::cross_div(&det, &m[i][n], &zero, &zero, &T::from_i64(1))?;
        for j in i + 1..n {
            acc = T::cross_div(&acc, &T::from_i64(1), &m[i][j], &y[j], &T::from_i64(1))?;
        }
        y[i] = T::cross_div(&acc, &T::from_i64(1), &zero, &zero, &m[i][i])?;
    }
    Some((det, y))
}

pub(crate) fn leading_minors_exact(rows: &[Vec<i64>]) -> Vec<BigInt> {
    match leading_minors::<i128>(rows) {
        Some(v) => v.iter().map(ExactInt::to_big).collect(),
        None => leading_minors::<BigInt>(rows).expect("BigInt arithmetic cannot overflow"),
    }
}

pub(crate) fn solve_scaled_exact(rows: &[Vec<i64>], rhs: &[i64]) -> Option<(BigInt, Vec<BigInt>)> {
    match solve_scaled::<i128>(rows, rhs) {
        Some((d, y)) => Some((d.to_big(), y.iter().map(ExactInt::to_big).collect())),
        None => {
            let (d, y) = solve_scaled::<BigInt>(rows, rhs)?;
            Some((d, y))
        }
    }
}

/// Sign pattern test on `i128` minors, falling back to `BigInt` on
/// overflow.
pub(crate) fn is_negative_definite_fast(rows: &[Vec<i64>]) -> bool {
    match leading_minors::<i128>(rows) {
        Some(minors) => {
            minors.len() == rows.len()
                && minors
                    .iter()
                    .enumerate()
                    .all(|(k, &d)| if k % 2 == 0 { d < 0 } else { d > 0 })
        }
        None => minors_negative_definite(&leading_minors_exact(rows), rows.len()),
    }
}

/// `(-1)^k D_k > 0` for every leading minor `D_k`.
pub(crate) fn minors_negative_definite(minors: &[BigInt], n: usize) -> bool {
    minors.len() == n
        && minors.iter().enumerate().all(|(k, d)| {
            if k % 2 == 0 {
                d.is_negative()
            } else {
                d.is_positive()
            }
        })
}
