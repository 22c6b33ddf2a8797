//! The intersection pairing on exceptional cycles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::cycle::{Cycle, QCycle};
use crate::error::{Error, Result};
use crate::exact;
use crate::graph::WeightedDualGraph;

/// Symmetric integer matrix `M_ij = E_i . E_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionForm {
    rows: Vec<Vec<i64>>,
}

impl IntersectionForm {
    pub fn from_graph(g: &WeightedDualGraph) -> Self {
        let n = g.len();
        let mut rows = vec![vec![0; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = -g.weight(i);
        }
        for &(a, b) in g.edges() {
            rows[a][b] = 1;
            rows[b][a] = 1;
        }
        IntersectionForm { rows }
    }

    /// Wraps an arbitrary square matrix (not necessarily from a graph).
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(IntersectionForm { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    /// Leading principal minors, computed exactly. Stops after the first
    /// vanishing minor.
    pub fn leading_minors(&self) -> Vec<BigInt> {
        exact::leading_minors_exact(&self.rows)
    }

    /// Sylvester's criterion: `(-1)^k D_k > 0` for all `k`.
    pub fn is_negative_definite(&self) -> bool {
        exact::minors_negative_definite(&self.leading_minors(), self.dim())
    }

    pub fn determinant(&self) -> BigInt {
        let minors = self.leading_minors();
        if minors.len() < self.dim() {
            BigInt::zero()
        } else {
            minors.last().cloned().unwrap_or_else(|| BigInt::from(1))
        }
    }

    /// `C^T M D` over the rationals.
    pub fn pairing(&self, c: &QCycle, d: &QCycle) -> Result<BigRational> {
        self.check_len(c.len())?;
        self.check_len(d.len())?;
        let mut total = BigRational::zero();
        for (i, row) in self.rows.iter().enumerate() {
            if c[i].is_zero() {
                continue;
            }
            let mut inner = BigRational::zero();
            for (j, &m) in row.iter().enumerate() {
                if m != 0 {
                    inner += &d[j] * BigRational::from_integer(BigInt::from(m));
                }
            }
            total += &c[i] * inner;
        }
        Ok(total)
    }

    /// `C^T M D` for integral cycles.
    pub fn pair(&self, c: &Cycle, d: &Cycle) -> Result<i64> {
        self.check_len(c.len())?;
        self.check_len(d.len())?;
        Ok(self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| c[i] * row.iter().zip(d.coefficients()).map(|(m, x)| m * x).sum::<i64>())
            .sum())
    }

    /// Unique rational solution of `M x = rhs`.
    pub fn solve(&self, rhs: &[i64]) -> Result<QCycle> {
        self.check_len(rhs.len())?;
        if !self.is_negative_definite() {
            return Err(Error::NotNegativeDefinite);
        }
        let (det, y) = exact::solve_scaled_exact(&self.rows, rhs).ok_or(Error::NotNegativeDefinite)?;
        Ok(QCycle::new(
            y.into_iter().map(|v| BigRational::new(v, det.clone())).collect(),
        ))
    }

    fn check_len(&self, found: usize) -> Result<()> {
        if found == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found,
            })
        }
    }
}

/// `E_j^*`: the rational cycle with `E_j^* . E_i = -delta_ij`.
pub fn dual_cycle(g: &WeightedDualGraph, j: usize) -> Result<QCycle> {
    if j >= g.len() {
        return Err(Error::VertexOutOfRange(j));
    }
    let mut rhs = vec![0; g.len()];
    rhs[j] = -1;
    g.intersection_form().solve(&rhs)
}

/// Rational cycle `a` with `a . E_i = K_X . E_i` for every curve, i.e. the
/// numerical class of `K_X` supported on the exceptional set.
pub fn discrepancies(g: &WeightedDualGraph) -> Result<QCycle> {
    let k = g.canonical_intersections();
    g.intersection_form().solve(k.as_slice())
}

/// Sign-only negative definiteness test used on hot paths; identical to
/// [`IntersectionForm::is_negative_definite`].
pub(crate) fn graph_is_negative_definite(g: &WeightedDualGraph) -> bool {
    exact::is_negative_definite_fast(g.intersection_form().rows())
}

/// Whether every discrepancy exceeds `-1`, decided on the scaled integral
/// solution `a = y / det` without forming rationals.
pub(crate) fn discrepancies_exceed_minus_one(g: &WeightedDualGraph) -> Result<bool> {
    if !graph_is_negative_definite(g) {
        return Err(Error::NotNegativeDefinite);
    }
    let k = g.canonical_intersections();
    let rows = g.intersection_form();
    let (det, y) = exact::solve_scaled_exact(rows.rows(), k.as_slice()).ok_or(Error::NotNegativeDefinite)?;
    let neg_det = -&det;
    // a_i > -1  <=>  y_i > -det when det > 0, y_i < -det when det < 0
    Ok(y.iter().all(|v| {
        if det.is_positive() {
            *v > neg_det
        } else {
            *v < neg_det
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn matrices() {
        let g = WeightedDualGraph::chain(&[3]).unwrap();
        assert_eq!(g.intersection_form().rows(), &[vec![-3]]);
        let a2 = fixtures::a_n(2);
        assert_eq!(a2.intersection_form().rows(), &[vec![-2, 1], vec![1, -2]]);
        let d4 = fixtures::d_n(4);
        let m = d4.intersection_form();
        assert!(m.is_symmetric());
        assert!((0..4).all(|i| m.get(i, i) == -2));
        let center = (0..4).find(|&i| d4.degree(i) == 3).unwrap();
        assert_eq!(m.rows()[center].iter().filter(|&&x| x == 1).count(), 3);
    }

    #[test]
    fn definiteness() {
        assert!(fixtures::a_n(2).intersection_form().is_negative_definite());
        let flat = IntersectionForm::from_rows(vec![vec![-1, 1], vec![1, -1]]).unwrap();
        assert!(!flat.is_negative_definite());
        let e8 = fixtures::e8().intersection_form();
        assert!(e8.is_negative_definite());
        assert_eq!(e8.determinant(), BigInt::from(1));
        // affine D4 is semidefinite
        let d4_affine = WeightedDualGraph::star(2, &[vec![2], vec![2], vec![2], vec![2]]).unwrap();
        assert!(!d4_affine.intersection_form().is_negative_definite());
    }

    #[test]
    fn pairings() {
        let m = fixtures::a_n(2).intersection_form();
        let e1 = QCycle::from_integers(&[1, 0]);
        let e = QCycle::from_integers(&[1, 1]);
        assert_eq!(m.pairing(&e1, &e1).unwrap(), q(-2, 1));
        assert_eq!(m.pairing(&e, &e).unwrap(), q(-2, 1));
        assert!(matches!(
            m.pairing(&e, &QCycle::from_integers(&[1])),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn dual_cycles() {
        for b in 2..7 {
            let g = WeightedDualGraph::chain(&[b]).unwrap();
            assert_eq!(dual_cycle(&g, 0).unwrap()[0], q(1, b));
        }
        let a2 = fixtures::a_n(2);
        let x = dual_cycle(&a2, 0).unwrap();
        assert_eq!(x.coefficients(), &[q(2, 3), q(1, 3)]);
        let flat = WeightedDualGraph::star(2, &[vec![2], vec![2], vec![2], vec![2]]).unwrap();
        assert_eq!(dual_cycle(&flat, 0), Err(Error::NotNegativeDefinite));
    }

    #[test]
    fn discrepancy_values() {
        assert!(discrepancies(&fixtures::e8()).unwrap().is_zero());
        let g = WeightedDualGraph::chain(&[3]).unwrap();
        assert_eq!(discrepancies(&g).unwrap()[0], q(-1, 3));
        let star = fixtures::heavy_center_star(5);
        assert_eq!(discrepancies(&star).unwrap()[0], q(-1, 1));
    }
}
