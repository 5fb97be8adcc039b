//! Subgroups of the root lattice Q = Z^n, kept in row Hermite normal form.

use std::fmt;

use serde::Serialize;

use super::QVec;

/// A subgroup of Z^n given by the rows of its Hermite normal form: rows
/// are in echelon form, every pivot is positive, and entries above a pivot
/// lie in `[0, pivot)`. Two subgroups are equal iff their bases are equal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LatticeSubgroup {
    dim: usize,
    basis: Vec<Vec<i64>>,
}

impl LatticeSubgroup {
    pub fn zero(dim: usize) -> Self {
        LatticeSubgroup { dim, basis: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        let basis = (0..dim).map(|i| (0..dim).map(|j| i64::from(i == j)).collect()).collect();
        LatticeSubgroup { dim, basis }
    }

    pub fn from_generators<I, V>(dim: usize, gens: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[i64]>,
    {
        let rows: Vec<Vec<i128>> = gens
            .into_iter()
            .map(|g| {
                let g = g.as_ref();
                assert_eq!(g.len(), dim, "generator has wrong length");
                g.iter().map(|&x| x as i128).collect()
            })
            .collect();
        let basis = hermite_rows(rows, dim)
            .into_iter()
            .map(|r| r.into_iter().map(|x| i64::try_from(x).expect("lattice entry overflow")).collect())
            .collect();
        LatticeSubgroup { dim, basis }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for row in &self.basis {
            let p = row.iter().position(|&x| x != 0).unwrap();
            let piv = row[p] as i128;
            if v[p] % piv != 0 {
                return false;
            }
            let f = v[p] / piv;
            if f != 0 {
                for (a, &b) in v.iter_mut().zip(row) {
                    *a -= f * b as i128;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// Canonical representative of `v + self`: each pivot coordinate is
    /// brought into `[0, pivot)`.
    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let mut v = v.to_vec();
        for row in &self.basis {
            let p = row.iter().position(|&x| x != 0).unwrap();
            let f = v[p].div_euclid(row[p]);
            if f != 0 {
                for (a, &b) in v.iter_mut().zip(row) {
                    *a -= f * b;
                }
            }
        }
        v
    }

    /// `self ⊆ other`.
    pub fn is_subgroup_of(&self, other: &LatticeSubgroup) -> bool {
        self.dim == other.dim && self.basis.iter().all(|g| other.contains(g))
    }
}

impl fmt::Debug for LatticeSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice{:?}", self.basis)
    }
}

/// Inclusion test `L1 ⊆ L2`.
pub fn lattice_leq(l1: &LatticeSubgroup, l2: &LatticeSubgroup) -> bool {
    l1.is_subgroup_of(l2)
}

/// Integer kernel `{x in Z^n : M x = 0}` for `M` given by its rows.
pub fn integer_kernel(rows: &[Vec<i64>], n: usize) -> LatticeSubgroup {
    if rows.is_empty() {
        return LatticeSubgroup::full(n);
    }
    let s = rows.len();
    // Augmented rows (column k of M | e_k); unimodular row operations on the
    // left block leave the kernel in the right block of the zero rows.
    let mut aug: Vec<Vec<i128>> = (0..n)
        .map(|k| {
            let mut r: Vec<i128> = rows.iter().map(|row| row[k] as i128).collect();
            r.extend((0..n).map(|j| i128::from(j == k)));
            r
        })
        .collect();
    let mut top = 0;
    for c in 0..s {
        loop {
            // Pick the row (at or below `top`) with the smallest nonzero entry.
            let Some(best) = (top..n).filter(|&r| aug[r][c] != 0).min_by_key(|&r| aug[r][c].abs()) else {
                break;
            };
            aug.swap(top, best);
            let mut done = true;
            for r in top + 1..n {
                if aug[r][c] != 0 {
                    let f = aug[r][c] / aug[top][c];
                    let pivot_row = aug[top].clone();
                    for (a, b) in aug[r].iter_mut().zip(&pivot_row) {
                        *a -= f * b;
                    }
                    if aug[r][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                top += 1;
                break;
            }
        }
    }
    let kernel: Vec<Vec<i64>> = aug[top..]
        .iter()
        .map(|r| r[s..].iter().map(|&x| i64::try_from(x).expect("kernel entry overflow")).collect())
        .collect();
    LatticeSubgroup::from_generators(n, kernel)
}

/// Row Hermite normal form of the lattice generated by `rows`.
fn hermite_rows(mut rows: Vec<Vec<i128>>, n: usize) -> Vec<Vec<i128>> {
    rows.retain(|r| r.iter().any(|&x| x != 0));
    let mut top = 0;
    for c in 0..n {
        if top == rows.len() {
            break;
        }
        loop {
            let Some(best) = (top..rows.len()).filter(|&r| rows[r][c] != 0).min_by_key(|&r| rows[r][c].abs()) else {
                break;
            };
            rows.swap(top, best);
            let mut done = true;
            for r in top + 1..rows.len() {
                if rows[r][c] != 0 {
                    let f = rows[r][c] / rows[top][c];
                    let pivot_row = rows[top].clone();
                    for (a, b) in rows[r].iter_mut().zip(&pivot_row) {
                        *a -= f * b;
                    }
                    if rows[r][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                if rows[top][c] < 0 {
                    for x in rows[top].iter_mut() {
                        *x = -*x;
                    }
                }
                let piv = rows[top][c];
                for r in 0..top {
                    let f = rows[r][c].div_euclid(piv);
                    if f != 0 {
                        let pivot_row = rows[top].clone();
                        for (a, b) in rows[r].iter_mut().zip(&pivot_row) {
                            *a -= f * b;
                        }
                    }
                }
                top += 1;
                break;
            }
        }
    }
    rows.truncate(top);
    rows
}

impl From<&LatticeSubgroup> for Vec<QVec> {
    fn from(l: &LatticeSubgroup) -> Self {
        l.basis.iter().map(|r| QVec::new(r.clone())).collect()
    }
}
