use std::fmt;

use super::linalg::{add_term, axpy, Lin};
use crate::coeffs::{q_binomial, QRat};
use crate::error::{Error, Result};
use crate::rootsys::{QVec, RootSystem};

/// A word in the generators, 0-based letters.
pub type Word = Vec<u8>;

pub fn word_weight(n: usize, w: &[u8]) -> QVec {
    let mut v = vec![0; n];
    for &a in w {
        v[a as usize] += 1;
    }
    QVec::new(v)
}

/// All words of weight `mu`, in lexicographic order.
pub fn words_of_weight(mu: &[i64]) -> Vec<Word> {
    fn go(rest: &mut Vec<i64>, cur: &mut Word, out: &mut Vec<Word>, left: i64) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for a in 0..rest.len() {
            if rest[a] > 0 {
                rest[a] -= 1;
                cur.push(a as u8);
                go(rest, cur, out, left - 1);
                cur.pop();
                rest[a] += 1;
            }
        }
    }
    let mut out = Vec::new();
    if mu.iter().any(|&x| x < 0) {
        return out;
    }
    go(&mut mu.to_vec(), &mut Vec::new(), &mut out, mu.iter().sum());
    out
}

/// An element of the free algebra on `E_1, …, E_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeElt {
    pub terms: Lin<Word>,
}

impl FreeElt {
    pub fn zero() -> Self {
        FreeElt::default()
    }

    pub fn one() -> Self {
        FreeElt::word(vec![], QRat::one())
    }

    pub fn word(w: Word, c: QRat) -> Self {
        let mut terms = Lin::new();
        add_term(&mut terms, w, c);
        FreeElt { terms }
    }

    pub fn gen(i: usize) -> Self {
        FreeElt::word(vec![i as u8], QRat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &FreeElt) -> FreeElt {
        let mut t = self.terms.clone();
        axpy(&mut t, &QRat::one(), &other.terms);
        FreeElt { terms: t }
    }

    pub fn scale(&self, c: &QRat) -> FreeElt {
        let mut t = Lin::new();
        axpy(&mut t, c, &self.terms);
        FreeElt { terms: t }
    }

    pub fn mul(&self, other: &FreeElt) -> FreeElt {
        let mut t = Lin::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                add_term(&mut t, w, x * y);
            }
        }
        FreeElt { terms: t }
    }

    /// The weight if all words share one.
    pub fn weight(&self, n: usize) -> Result<QVec> {
        let mut it = self.terms.keys().map(|w| word_weight(n, w));
        let first = it.next().unwrap_or_else(|| QVec::zero(n));
        if it.any(|w| w != first) {
            return Err(Error::NotHomogeneous);
        }
        Ok(first)
    }
}

/// `Σ_{s=0}^{1−a_ij} (−1)^s [1−a_ij choose s]_{d_i} E_i^{1−a_ij−s} E_j E_i^s`.
pub fn serre_relation(rs: &RootSystem, i: usize, j: usize) -> Result<FreeElt> {
    if i == j {
        return Err(Error::InvalidPair(i + 1));
    }
    let m = (1 - rs.cartan_entry(i, j)) as u32;
    let d = rs.d(i) as u32;
    let mut terms = Lin::new();
    for s in 0..=m {
        let mut w = vec![i as u8; (m - s) as usize];
        w.push(j as u8);
        w.extend(std::iter::repeat_n(i as u8, s as usize));
        let c = q_binomial(m, s, d);
        add_term(&mut terms, w, if s % 2 == 0 { c } else { -c });
    }
    Ok(FreeElt { terms })
}

pub(crate) fn fmt_word(f: &mut fmt::Formatter<'_>, sym: char, w: &[u8]) -> fmt::Result {
    let mut k = 0;
    while k < w.len() {
        let a = w[k];
        let mut r = 1;
        while k + r < w.len() && w[k + r] == a {
            r += 1;
        }
        if r == 1 {
            write!(f, "{sym}{}", a + 1)?;
        } else {
            write!(f, "{sym}{}^{r}", a + 1)?;
        }
        k += r;
    }
    Ok(())
}

impl fmt::Display for FreeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::fmt_sum(f, self.terms.iter(), |f, w| fmt_word(f, 'E', w))
    }
}
