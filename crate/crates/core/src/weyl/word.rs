use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::WeylElt;
use crate::error::{Error, Result};
use crate::rootsys::{QVec, RootSystem};

/// A reduced expression `s_{a_1} ⋯ s_{a_t}`. Letters are 0-based in memory
/// and 1-based in every external form (JSON arrays, `"1,2,1"`, `s1s2s1`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord {
    letters: Vec<usize>,
}

impl ReducedWord {
    /// Checks that every letter is in range and the word is reduced.
    pub fn new(rs: &RootSystem, letters: Vec<usize>) -> Result<Self> {
        roots_of_word(rs, &letters)?;
        Ok(ReducedWord { letters })
    }

    /// Parses 1-based letters such as `"1,2,1"` and validates them.
    pub fn parse(rs: &RootSystem, s: &str) -> Result<Self> {
        let letters = parse_letters(s)?;
        ReducedWord::new(rs, letters)
    }

    pub(crate) fn new_unchecked(letters: Vec<usize>) -> Self {
        ReducedWord { letters }
    }

    pub fn empty() -> Self {
        ReducedWord { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn element(&self, rs: &RootSystem) -> WeylElt {
        WeylElt::from_word(rs, &self.letters).expect("validated word")
    }

    /// `β_i = s_{a_1} ⋯ s_{a_{i-1}} α_{a_i}` for `i = 1..t`.
    pub fn roots(&self, rs: &RootSystem) -> Vec<QVec> {
        roots_of_word(rs, &self.letters).expect("validated word")
    }

    /// 1-based letters.
    pub fn one_based(&self) -> Vec<usize> {
        self.letters.iter().map(|a| a + 1).collect()
    }

    /// `"1,2,1"`.
    pub fn to_csv(&self) -> String {
        self.one_based().iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn parse_letters(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split([',', ' '])
        .filter(|p| !p.is_empty())
        .map(|p| match p.trim().parse::<usize>() {
            Ok(0) | Err(_) => Err(Error::Parse(format!("bad letter {p:?} (letters are 1-based)"))),
            Ok(a) => Ok(a - 1),
        })
        .collect()
}

/// The roots `β_1, …, β_t` of a word; fails with `NotReduced` if some `β_i`
/// is negative (equivalently, the word is not reduced).
pub fn roots_of_word(rs: &RootSystem, letters: &[usize]) -> Result<Vec<QVec>> {
    let n = rs.rank();
    let mut prefix = WeylElt::identity(rs);
    let mut out = Vec::with_capacity(letters.len());
    for &a in letters {
        if a >= n {
            return Err(Error::BadLetter(a + 1));
        }
        let beta = prefix.apply(&QVec::simple(n, a));
        if !beta.is_nonneg() {
            return Err(Error::NotReduced);
        }
        out.push(beta);
        prefix = prefix.mul(rs, &WeylElt::simple(rs, a));
    }
    Ok(out)
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for a in &self.letters {
            write!(f, "s{}", a + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReducedWord[{}]", self.to_csv())
    }
}

impl Serialize for ReducedWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ReducedWord {
    /// Deserializes 1-based letters without the reducedness check (no root
    /// system is available here); validate with [`ReducedWord::new`].
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if v.contains(&0) {
            return Err(serde::de::Error::custom("letters are 1-based"));
        }
        Ok(ReducedWord { letters: v.into_iter().map(|a| a - 1).collect() })
    }
}

impl FromStr for ReducedWord {
    type Err = Error;
    /// Parses 1-based letters without validation.
    fn from_str(s: &str) -> Result<Self> {
        Ok(ReducedWord { letters: parse_letters(s)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn roots_along_a2_word() {
        let rs = RootSystem::from_type("A2").unwrap();
        let roots = roots_of_word(&rs, &[0, 1, 0]).unwrap();
        let v: Vec<Vec<i64>> = roots.iter().map(|r| r.to_vec()).collect();
        assert_eq!(v, vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
        assert_eq!(roots_of_word(&rs, &[0]).unwrap(), vec![QVec::new(vec![1, 0])]);
        assert_eq!(roots_of_word(&rs, &[0, 0]), Err(Error::NotReduced));
        assert_eq!(roots_of_word(&rs, &[0, 5]), Err(Error::BadLetter(6)));
    }

    #[test]
    fn word_roots_are_the_inversion_set() {
        for t in ["A2", "B2", "G2", "A3"] {
            let rs = RootSystem::from_type(t).unwrap();
            for w in super::super::all_elements(&rs) {
                let inv: BTreeSet<QVec> = w.inversion_set(&rs).into_iter().collect();
                for word in w.all_reduced_words(&rs) {
                    assert_eq!(word.element(&rs), w);
                    let got: BTreeSet<QVec> = word.roots(&rs).into_iter().collect();
                    assert_eq!(got, inv, "{t} {word}");
                }
            }
        }
    }

    #[test]
    fn parsing_and_serialization() {
        let rs = RootSystem::from_type("A2").unwrap();
        let w = ReducedWord::parse(&rs, "1,2,1").unwrap();
        assert_eq!(w.letters(), &[0, 1, 0]);
        assert_eq!(w.to_string(), "s1s2s1");
        assert_eq!(serde_json::to_string(&w).unwrap(), "[1,2,1]");
        let back: ReducedWord = serde_json::from_str("[1,2,1]").unwrap();
        assert_eq!(back, w);
        assert_eq!(ReducedWord::parse(&rs, "1,1"), Err(Error::NotReduced));
        assert!(ReducedWord::parse(&rs, "0").is_err());
        assert!(ReducedWord::parse(&rs, "e").unwrap().is_empty());
    }
}
