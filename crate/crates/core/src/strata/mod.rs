//! T^w, the map κ^w onto W^w, character strata and admissible lattices.

mod report;

use serde::Serialize;

pub use report::{classify, ClassificationReport, ReportRow, Totals};

use crate::coeffs::QRat;
use crate::error::{Error, Result};
use crate::rootsys::{lattice_leq, LatticeSubgroup, QVec, RootSystem};
use crate::weyl::{bruhat_le, roots_of_word, ReducedWord, WeylElt};

/// A subset `Θ ⊆ Φ_w⁺`, addressed by positions in a fixed reduced word.
/// Indices are 0-based and sorted; `roots[k]` is `β_{indices[k]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaSet {
    pub w: WeylElt,
    pub word: ReducedWord,
    pub indices: Vec<usize>,
    pub roots: Vec<QVec>,
}

impl ThetaSet {
    /// Selects positions of `word` without checking membership in T^w.
    pub fn from_indices(rs: &RootSystem, word: &ReducedWord, indices: &[usize]) -> Result<Self> {
        let betas = word.roots(rs);
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if let Some(&k) = idx.iter().find(|&&k| k >= betas.len()) {
            return Err(Error::InvalidInput(format!("index {} out of range 1..={}", k + 1, betas.len())));
        }
        Ok(ThetaSet {
            w: word.element(rs),
            word: word.clone(),
            roots: idx.iter().map(|&k| betas[k].clone()).collect(),
            indices: idx,
        })
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// The roots as a sorted set, independent of the word.
    pub fn root_set(&self) -> Vec<QVec> {
        let mut r = self.roots.clone();
        r.sort();
        r
    }

    pub fn is_orthogonal(&self, rs: &RootSystem) -> bool {
        pairwise_orthogonal(rs, &self.roots)
    }

    /// Both defining conditions of T^w.
    pub fn is_in_tw(&self, rs: &RootSystem) -> bool {
        self.is_orthogonal(rs)
            && w_theta(rs, &self.w, &self.roots).map(|y| y.length() + self.len() == self.w.length()) == Ok(true)
    }
}

fn pairwise_orthogonal(rs: &RootSystem, roots: &[QVec]) -> bool {
    roots.iter().enumerate().all(|(a, x)| roots[a + 1..].iter().all(|y| rs.bilinear(x, y) == 0))
}

/// `w_Θ = (Π_{β∈Θ} s_β) w`.
pub fn w_theta(rs: &RootSystem, w: &WeylElt, roots: &[QVec]) -> Result<WeylElt> {
    if !pairwise_orthogonal(rs, roots) {
        return Err(Error::NotOrthogonal);
    }
    let mut y = w.clone();
    for b in roots {
        y = WeylElt::reflection(rs, b)?.mul(rs, &y);
    }
    Ok(y)
}

fn check_word(rs: &RootSystem, w: &WeylElt, word: &ReducedWord) -> Result<()> {
    roots_of_word(rs, word.letters())?;
    if &word.element(rs) != w {
        return Err(Error::InvalidInput(format!("{word} is not a reduced word of the given element")));
    }
    Ok(())
}

/// All of T^w, sorted by size and then by indices.
///
/// Grows Θ one index at a time in increasing order, extending only members
/// of T^w; subset closure of T^w makes this complete.
pub fn enumerate_tw(rs: &RootSystem, w: &WeylElt, word: &ReducedWord) -> Result<Vec<ThetaSet>> {
    check_word(rs, w, word)?;
    let betas = word.roots(rs);
    let t = betas.len();
    let mut out = vec![ThetaSet { w: w.clone(), word: word.clone(), indices: vec![], roots: vec![] }];
    let mut frontier = vec![(Vec::<usize>::new(), w.clone())];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (idx, y) in &frontier {
            let start = idx.last().map_or(0, |&k| k + 1);
            for k in start..t {
                let b = &betas[k];
                if idx.iter().any(|&i| rs.bilinear(&betas[i], b) != 0) {
                    continue;
                }
                let y2 = WeylElt::reflection(rs, b)?.mul(rs, y);
                if y2.length() + idx.len() + 1 != w.length() {
                    continue;
                }
                let mut i2 = idx.clone();
                i2.push(k);
                next.push((i2, y2));
            }
        }
        for (idx, _) in &next {
            out.push(ThetaSet {
                w: w.clone(),
                word: word.clone(),
                roots: idx.iter().map(|&k| betas[k].clone()).collect(),
                indices: idx.clone(),
            });
        }
        frontier = next;
    }
    Ok(out)
}

/// `κ^w(Θ) = w_Θ`.
pub fn kappa(rs: &RootSystem, theta: &ThetaSet) -> WeylElt {
    w_theta(rs, &theta.w, &theta.roots).expect("members of T^w are orthogonal")
}

/// The unique Θ ∈ T^w with `w_Θ = y`.
pub fn kappa_inverse(rs: &RootSystem, w: &WeylElt, word: &ReducedWord, y: &WeylElt) -> Result<ThetaSet> {
    enumerate_tw(rs, w, word)?.into_iter().find(|th| &kappa(rs, th) == y).ok_or(Error::NotInWw)
}

/// One stratum of characters of U⁺[w]: those vanishing exactly off Θ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub y: WeylElt,
    pub theta: ThetaSet,
    pub dim: usize,
}

pub fn enumerate_strata(rs: &RootSystem, w: &WeylElt, word: &ReducedWord) -> Result<Vec<Stratum>> {
    Ok(enumerate_tw(rs, w, word)?
        .into_iter()
        .map(|th| Stratum { y: kappa(rs, &th), dim: th.len(), theta: th })
        .collect())
}

/// A point of a stratum: nonzero values `f(β)` for `β ∈ Θ`, aligned with
/// `stratum.theta.roots`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterData {
    pub stratum: Stratum,
    pub f: Vec<QRat>,
}

impl CharacterData {
    pub fn new(stratum: Stratum, f: Vec<QRat>) -> Result<Self> {
        if f.len() != stratum.theta.len() {
            return Err(Error::InvalidInput(format!("{} values given for {} roots", f.len(), stratum.theta.len())));
        }
        if f.iter().any(QRat::is_zero) {
            return Err(Error::InvalidInput("character values must be nonzero".into()));
        }
        Ok(CharacterData { stratum, f })
    }

    /// `f ≡ 1`.
    pub fn ones(stratum: Stratum) -> Self {
        let f = vec![QRat::one(); stratum.theta.len()];
        CharacterData { stratum, f }
    }

    /// The counit of U⁺[w].
    pub fn counit(rs: &RootSystem, w: &WeylElt, word: &ReducedWord) -> Result<Self> {
        check_word(rs, w, word)?;
        let theta = ThetaSet { w: w.clone(), word: word.clone(), indices: vec![], roots: vec![] };
        Ok(CharacterData::ones(Stratum { y: w.clone(), theta, dim: 0 }))
    }

    /// `φ(E_{β_k})` for a 0-based word position `k`.
    pub fn value_at(&self, k: usize) -> QRat {
        match self.stratum.theta.indices.iter().position(|&i| i == k) {
            Some(p) => self.f[p].clone(),
            None => QRat::zero(),
        }
    }
}

/// ℕ₀-generators of `supp φ`, namely Θ.
pub fn support_of(ch: &CharacterData) -> Vec<QVec> {
    ch.stratum.theta.roots.clone()
}

/// `(supp φ)^⊥ ∩ Q`.
pub fn max_admissible_lattice(rs: &RootSystem, ch: &CharacterData) -> LatticeSubgroup {
    rs.orthogonal_complement_lattice(&ch.stratum.theta.roots)
}

/// A triple `(w, φ, L)` indexing a right coideal subalgebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoidealTriple {
    pub w: WeylElt,
    pub word: ReducedWord,
    pub ch: CharacterData,
    pub lattice: LatticeSubgroup,
}

impl CoidealTriple {
    pub fn new(ch: CharacterData, lattice: LatticeSubgroup) -> Self {
        let th = &ch.stratum.theta;
        CoidealTriple { w: th.w.clone(), word: th.word.clone(), ch, lattice }
    }

    /// Why the triple is invalid, or `None`.
    pub fn defect(&self, rs: &RootSystem) -> Option<String> {
        let st = &self.ch.stratum;
        let th = &st.theta;
        if check_word(rs, &self.w, &self.word).is_err() || th.w != self.w || th.word != self.word {
            return Some("word and element do not match".into());
        }
        match ThetaSet::from_indices(rs, &self.word, &th.indices) {
            Ok(fresh) if fresh.roots == th.roots => {}
            _ => return Some("Θ roots do not match the word".into()),
        }
        if !th.is_in_tw(rs) {
            return Some("Θ is not in T^w".into());
        }
        if st.y != kappa(rs, th) || st.dim != th.len() || !bruhat_le(rs, &st.y, &self.w) {
            return Some("stratum data inconsistent with Θ".into());
        }
        if self.ch.f.len() != th.len() || self.ch.f.iter().any(QRat::is_zero) {
            return Some("character values must be nonzero on exactly Θ".into());
        }
        if self.lattice.dim() != rs.rank() {
            return Some("lattice has the wrong ambient rank".into());
        }
        if !lattice_leq(&self.lattice, &max_admissible_lattice(rs, &self.ch)) {
            return Some("L is not contained in (supp φ)^⊥".into());
        }
        None
    }
}

pub fn validate_triple(rs: &RootSystem, t: &CoidealTriple) -> bool {
    t.defect(rs).is_none()
}

/// JSON form of a Θ: 1-based indices and roots.
#[derive(Serialize)]
pub struct ThetaJson {
    pub indices: Vec<usize>,
    pub roots: Vec<QVec>,
}

impl From<&ThetaSet> for ThetaJson {
    fn from(t: &ThetaSet) -> Self {
        ThetaJson { indices: t.indices.iter().map(|k| k + 1).collect(), roots: t.roots.clone() }
    }
}
