//! Weyl group elements as integer matrices acting on the root lattice.

mod bruhat;
mod chains;
mod word;

use std::collections::BTreeSet;
use std::fmt;

pub use bruhat::{bruhat_le, bruhat_le_by_chains};
pub use chains::{
    chain_is_valid, lemma12_step, normalize_reflection_sequence, weyl_bruhat_equiv, weyl_bruhat_equiv_at,
};
pub use word::{roots_of_word, ReducedWord};

use crate::coeffs::Rat;
use crate::error::{Error, Result};
use crate::rootsys::{QVec, RootSystem};

/// An element of W stored as its action on Q: column `j` of the matrix is
/// the image of `α_j`. The length is computed once at construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElt {
    n: usize,
    mat: Vec<i64>,
    length: usize,
}

impl WeylElt {
    fn from_matrix(rs: &RootSystem, n: usize, mat: Vec<i64>) -> Self {
        let mut w = WeylElt { n, mat, length: 0 };
        w.length = rs.positive_roots().iter().filter(|b| w.apply(b).is_nonpos()).count();
        w
    }

    pub fn identity(rs: &RootSystem) -> Self {
        let n = rs.rank();
        let mat = (0..n * n).map(|k| i64::from(k / n == k % n)).collect();
        WeylElt { n, mat, length: 0 }
    }

    /// The simple reflection `s_i` (0-based).
    pub fn simple(rs: &RootSystem, i: usize) -> Self {
        let n = rs.rank();
        let mut mat = vec![0; n * n];
        for j in 0..n {
            mat[j * n + j] = 1;
            // s_i(α_j) = α_j - a_ij α_i
            mat[i * n + j] -= rs.cartan_entry(i, j);
        }
        WeylElt { n, mat, length: 1 }
    }

    /// `s_{a_1} s_{a_2} ⋯ s_{a_t}` for 0-based letters (not required reduced).
    pub fn from_word(rs: &RootSystem, letters: &[usize]) -> Result<Self> {
        let mut w = WeylElt::identity(rs);
        for &a in letters {
            if a >= rs.rank() {
                return Err(Error::BadLetter(a + 1));
            }
            w = w.mul(rs, &WeylElt::simple(rs, a));
        }
        Ok(w)
    }

    /// The reflection `s_β` for a root `β`.
    pub fn reflection(rs: &RootSystem, beta: &QVec) -> Result<Self> {
        if !rs.is_root(beta) {
            return Err(Error::NotAPositiveRoot);
        }
        let n = rs.rank();
        let mut mat = vec![0; n * n];
        for j in 0..n {
            let img = rs.reflect(beta, &QVec::simple(n, j));
            for i in 0..n {
                mat[i * n + j] = img[i];
            }
        }
        Ok(WeylElt::from_matrix(rs, n, mat))
    }

    pub fn longest(rs: &RootSystem) -> Self {
        let mut w = WeylElt::identity(rs);
        'grow: loop {
            for i in 0..rs.rank() {
                if !w.is_right_descent(rs, i) {
                    w = w.mul(rs, &WeylElt::simple(rs, i));
                    continue 'grow;
                }
            }
            return w;
        }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.mat[i * self.n..(i + 1) * self.n].to_vec()).collect()
    }

    pub fn apply(&self, x: &[i64]) -> QVec {
        let n = self.n;
        QVec::new((0..n).map(|i| (0..n).map(|j| self.mat[i * n + j] * x[j]).sum()).collect())
    }

    pub fn apply_rat(&self, x: &[Rat]) -> Vec<Rat> {
        let n = self.n;
        (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| self.mat[i * n + j] != 0)
                    .map(|j| Rat::from_integer(self.mat[i * n + j].into()) * &x[j])
                    .sum()
            })
            .collect()
    }

    /// `self · other`.
    pub fn mul(&self, rs: &RootSystem, other: &WeylElt) -> WeylElt {
        let n = self.n;
        let mut mat = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.mat[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    mat[i * n + j] += a * other.mat[k * n + j];
                }
            }
        }
        WeylElt::from_matrix(rs, n, mat)
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElt {
        let mut letters = self.reduced_word(rs).letters().to_vec();
        letters.reverse();
        WeylElt::from_word(rs, &letters).expect("letters in range")
    }

    /// `w s_i < w`, i.e. `w α_i ∈ Φ⁻`.
    pub fn is_right_descent(&self, _rs: &RootSystem, i: usize) -> bool {
        let n = self.n;
        (0..n).all(|k| self.mat[k * n + i] <= 0)
    }

    /// `s_i w < w`, i.e. `w⁻¹ α_i ∈ Φ⁻`.
    pub fn is_left_descent(&self, rs: &RootSystem, i: usize) -> bool {
        WeylElt::simple(rs, i).mul(rs, self).length < self.length
    }

    /// Reduced word obtained greedily from the right, always stripping the
    /// smallest right descent.
    pub fn reduced_word(&self, rs: &RootSystem) -> ReducedWord {
        let mut letters = Vec::with_capacity(self.length);
        let mut w = self.clone();
        while w.length > 0 {
            let i = (0..rs.rank()).find(|&i| w.is_right_descent(rs, i)).unwrap();
            letters.push(i);
            w = w.mul(rs, &WeylElt::simple(rs, i));
        }
        letters.reverse();
        ReducedWord::new_unchecked(letters)
    }

    /// All reduced words, sorted lexicographically.
    pub fn all_reduced_words(&self, rs: &RootSystem) -> Vec<ReducedWord> {
        fn go(rs: &RootSystem, w: &WeylElt, suffix: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
            if w.length == 0 {
                let mut word = suffix.clone();
                word.reverse();
                out.insert(word);
                return;
            }
            for i in 0..rs.rank() {
                if w.is_right_descent(rs, i) {
                    suffix.push(i);
                    go(rs, &w.mul(rs, &WeylElt::simple(rs, i)), suffix, out);
                    suffix.pop();
                }
            }
        }
        let mut out = BTreeSet::new();
        go(rs, self, &mut Vec::new(), &mut out);
        out.into_iter().map(ReducedWord::new_unchecked).collect()
    }

    /// `Φ_w⁺ = {β ∈ Φ⁺ : w⁻¹β ∈ Φ⁻}` in root-table order.
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<QVec> {
        let inv = self.inverse(rs);
        rs.positive_roots().iter().filter(|b| inv.apply(b).is_nonpos()).cloned().collect()
    }

    /// Rendering as a reduced word `s1s2s1` (or `e`).
    pub fn display(&self, rs: &RootSystem) -> String {
        self.reduced_word(rs).to_string()
    }
}

impl fmt::Debug for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElt(len={}, {:?})", self.length, self.matrix())
    }
}

/// Elements of W layer by layer in increasing length. Each layer is sorted
/// by reduced word.
pub struct ElementsByLength<'a> {
    rs: &'a RootSystem,
    layer: Vec<WeylElt>,
}

impl<'a> ElementsByLength<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        ElementsByLength { rs, layer: vec![WeylElt::identity(rs)] }
    }
}

impl Iterator for ElementsByLength<'_> {
    type Item = Vec<WeylElt>;

    fn next(&mut self) -> Option<Vec<WeylElt>> {
        if self.layer.is_empty() {
            return None;
        }
        let rs = self.rs;
        let mut next: BTreeSet<(Vec<usize>, WeylElt)> = BTreeSet::new();
        for w in &self.layer {
            for i in 0..rs.rank() {
                if !w.is_right_descent(rs, i) {
                    let v = w.mul(rs, &WeylElt::simple(rs, i));
                    next.insert((v.reduced_word(rs).letters().to_vec(), v));
                }
            }
        }
        let next: Vec<WeylElt> = next.into_iter().map(|(_, v)| v).collect();
        Some(std::mem::replace(&mut self.layer, next))
    }
}

/// All of W, ordered by length and then reduced word.
pub fn all_elements(rs: &RootSystem) -> Vec<WeylElt> {
    ElementsByLength::new(rs).flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn rs(t: &str) -> RootSystem {
        RootSystem::from_type(t).unwrap()
    }

    #[test]
    fn group_orders_and_longest_elements() {
        for (t, order, top) in [("A1", 2, 1), ("A2", 6, 3), ("B2", 8, 4), ("G2", 12, 6), ("A3", 24, 6), ("B3", 48, 9)] {
            let r = rs(t);
            let all = all_elements(&r);
            assert_eq!(all.len(), order, "{t}");
            let w0 = WeylElt::longest(&r);
            assert_eq!(w0.length(), top);
            assert_eq!(all.last().unwrap(), &w0);
            // w0 sends every positive root negative
            assert!(r.positive_roots().iter().all(|b| w0.apply(b).is_nonpos()));
        }
    }

    #[test]
    fn inversion_sets() {
        let r = rs("A2");
        assert!(WeylElt::identity(&r).inversion_set(&r).is_empty());
        assert_eq!(WeylElt::longest(&r).inversion_set(&r).len(), 3);
        let s1 = WeylElt::simple(&r, 0);
        assert_eq!(s1.inversion_set(&r), vec![QVec::new(vec![1, 0])]);
    }

    #[test]
    fn length_is_inversion_count() {
        for t in ["A2", "B2", "G2"] {
            let r = rs(t);
            for w in all_elements(&r) {
                assert_eq!(w.length(), w.inversion_set(&r).len());
                assert_eq!(w.reduced_word(&r).len(), w.length());
            }
        }
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for t in ["A3", "B3"] {
            let r = rs(t);
            for _ in 0..200 {
                let letters: Vec<usize> = (0..rng.gen_range(0..12)).map(|_| rng.gen_range(0..3)).collect();
                let w = WeylElt::from_word(&r, &letters).unwrap();
                assert_eq!(w.length(), w.inversion_set(&r).len());
                assert_eq!(w.inverse(&r).mul(&r, &w), WeylElt::identity(&r));
            }
        }
    }

    #[test]
    fn reflections_of_roots() {
        let r = rs("A2");
        let s1 = WeylElt::reflection(&r, &QVec::new(vec![1, 0])).unwrap();
        assert_eq!(s1, WeylElt::simple(&r, 0));
        let s = WeylElt::reflection(&r, &QVec::new(vec![1, 1])).unwrap();
        assert_eq!(s, WeylElt::from_word(&r, &[0, 1, 0]).unwrap());
        for t in ["B2", "G2", "B3"] {
            let r = rs(t);
            for b in r.positive_roots() {
                let s = WeylElt::reflection(&r, b).unwrap();
                assert!(s.mul(&r, &s).is_identity());
                assert_eq!(s.apply(b), -b);
            }
        }
        assert_eq!(WeylElt::reflection(&r, &QVec::new(vec![2, 0])), Err(Error::NotAPositiveRoot));
    }

    #[test]
    fn elements_permute_roots() {
        let r = rs("G2");
        for w in all_elements(&r) {
            for b in r.positive_roots() {
                assert!(r.is_root(&w.apply(b)));
            }
        }
    }
}
