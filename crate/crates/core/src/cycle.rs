use std::fmt;
use std::ops::{Add, Index, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Integral combination `sum c_i E_i` of exceptional curves.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(Vec<i64>);

/// Rational combination of exceptional curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QCycle(Vec<BigRational>);

impl Cycle {
    pub fn new(coefficients: Vec<i64>) -> Self {
        Cycle(coefficients)
    }

    pub fn zero(n: usize) -> Self {
        Cycle(vec![0; n])
    }

    /// The curve `E_i` as a cycle.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut c = vec![0; n];
        c[i] = 1;
        Cycle(c)
    }

    /// The reduced cycle `E = sum E_i`.
    pub fn reduced(n: usize) -> Self {
        Cycle(vec![1; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coefficients(self) -> Vec<i64> {
        self.0
    }

    /// `cff_{E_i}(C)`.
    pub fn cff(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Coefficientwise `self <= other`.
    pub fn le(&self, other: &Cycle) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] != 0).collect()
    }

    pub fn add_curve(&mut self, i: usize) {
        self.0[i] += 1;
    }

    pub fn to_rational(&self) -> QCycle {
        QCycle(
            self.0
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// Coefficients permuted so that entry `k` is the old entry `order[k]`.
    pub fn reordered(&self, order: &[usize]) -> Cycle {
        Cycle(order.iter().map(|&o| self.0[o]).collect())
    }
}

impl Index<usize> for Cycle {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &Cycle {
    type Output = Cycle;
    fn add(self, rhs: &Cycle) -> Cycle {
        assert_eq!(self.len(), rhs.len(), "cycle length mismatch");
        Cycle(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Cycle {
    type Output = Cycle;
    fn sub(self, rhs: &Cycle) -> Cycle {
        assert_eq!(self.len(), rhs.len(), "cycle length mismatch");
        Cycle(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl From<Vec<i64>> for Cycle {
    fn from(v: Vec<i64>) -> Self {
        Cycle(v)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl QCycle {
    pub fn new(coefficients: Vec<BigRational>) -> Self {
        QCycle(coefficients)
    }

    pub fn from_integers(coefficients: &[i64]) -> Self {
        Cycle::new(coefficients.to_vec()).to_rational()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.0
    }

    pub fn cff(&self, i: usize) -> &BigRational {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn all_positive(&self) -> bool {
        self.0.iter().all(Signed::is_positive)
    }
}

impl Index<usize> for QCycle {
    type Output = BigRational;
    fn index(&self, i: usize) -> &BigRational {
        &self.0[i]
    }
}

/// `num/den` rendering used throughout the JSON output.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        format!("{}/1", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
