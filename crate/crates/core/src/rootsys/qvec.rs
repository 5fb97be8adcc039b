use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An element of the root lattice Q, in coordinates over the simple roots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QVec(Vec<i64>);

impl QVec {
    pub fn new(coords: Vec<i64>) -> Self {
        QVec(coords)
    }

    pub fn zero(n: usize) -> Self {
        QVec(vec![0; n])
    }

    /// The simple root `alpha_i` (0-based `i`).
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        QVec(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Membership in Q+ (all coordinates nonnegative).
    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_nonpos(&self) -> bool {
        self.0.iter().all(|&x| x <= 0)
    }

    /// Coordinate sum (defined on all of Q; `height` checks positivity).
    pub fn coord_sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn scale(&self, c: i64) -> QVec {
        QVec(self.0.iter().map(|x| x * c).collect())
    }
}

impl Deref for QVec {
    type Target = [i64];
    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl AsRef<[i64]> for QVec {
    fn as_ref(&self) -> &[i64] {
        &self.0
    }
}

impl Add for &QVec {
    type Output = QVec;
    fn add(self, rhs: &QVec) -> QVec {
        QVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &QVec {
    type Output = QVec;
    fn sub(self, rhs: &QVec) -> QVec {
        QVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &QVec {
    type Output = QVec;
    fn neg(self) -> QVec {
        QVec(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&QVec> for i64 {
    type Output = QVec;
    fn mul(self, rhs: &QVec) -> QVec {
        rhs.scale(self)
    }
}

impl fmt::Debug for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for QVec {
    /// Renders as `a1+a2`, `2a1+3a2`, `-a1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
