//! PBW bases of U⁺[w] and Levendorskiĭ–Soibelman relations.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use super::free::Word;
use super::linalg::{add_term, axpy, Echelon, Lin};
use super::lusztig::root_vectors;
use super::nf::{NfContext, UPlusElt};
use crate::coeffs::QRat;
use crate::error::{Error, Result};
use crate::rootsys::QVec;
use crate::weyl::ReducedWord;

/// Exponent vector `a`, standing for `E_{β_t}^{a_t} ⋯ E_{β_1}^{a_1}`.
pub type Exponents = Vec<u32>;

struct WeightPbw {
    exps: Vec<Exponents>,
    /// Tracking echelon of the monomials, tags index `exps`.
    span: Echelon<Word>,
}

/// Root vectors of a reduced word plus cached PBW monomials.
pub struct PbwBasis {
    word: ReducedWord,
    betas: Vec<QVec>,
    vectors: Vec<UPlusElt>,
    monomials: Mutex<HashMap<Exponents, Arc<UPlusElt>>>,
    weights: Mutex<HashMap<QVec, Arc<WeightPbw>>>,
    ls: Mutex<HashMap<(usize, usize), PbwVec>>,
}

impl PbwBasis {
    pub fn new(ctx: &NfContext, word: &ReducedWord) -> Result<Self> {
        let betas = word.roots(ctx.rs());
        let vectors = root_vectors(ctx, word)?;
        Ok(PbwBasis {
            word: word.clone(),
            betas,
            vectors,
            monomials: Mutex::new(HashMap::new()),
            weights: Mutex::new(HashMap::new()),
            ls: Mutex::new(HashMap::new()),
        })
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.betas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.betas.is_empty()
    }

    pub fn betas(&self) -> &[QVec] {
        &self.betas
    }

    pub fn root_vector(&self, k: usize) -> &UPlusElt {
        &self.vectors[k]
    }

    pub fn weight_of(&self, a: &[u32]) -> QVec {
        let n = self.betas.first().map_or(0, |b| b.len());
        let mut v = QVec::zero(n);
        for (k, &e) in a.iter().enumerate() {
            if e > 0 {
                v = &v + &self.betas[k].scale(e as i64);
            }
        }
        v
    }

    /// All `a` with `Σ a_k β_k = mu`, in lexicographic order.
    pub fn exponents_of_weight(&self, mu: &QVec) -> Vec<Exponents> {
        fn go(betas: &[QVec], k: usize, rest: &QVec, cur: &mut Exponents, out: &mut Vec<Exponents>) {
            if k == betas.len() {
                if rest.is_zero() {
                    out.push(cur.clone());
                }
                return;
            }
            let mut r = rest.clone();
            let mut e = 0;
            while r.is_nonneg() {
                cur[k] = e;
                go(betas, k + 1, &r, cur, out);
                r = &r - &betas[k];
                e += 1;
            }
            cur[k] = 0;
        }
        let mut out = Vec::new();
        go(&self.betas, 0, mu, &mut vec![0; self.len()], &mut out);
        out
    }

    /// `E_{β_t}^{a_t} ⋯ E_{β_1}^{a_1}` in normal form.
    pub fn monomial(&self, ctx: &NfContext, a: &[u32]) -> Result<Arc<UPlusElt>> {
        if let Some(m) = self.monomials.lock().unwrap().get(a) {
            return Ok(m.clone());
        }
        let m = match a.iter().rposition(|&e| e > 0) {
            None => UPlusElt::one(),
            Some(k) => {
                let mut rest = a.to_vec();
                rest[k] -= 1;
                self.vectors[k].mul(ctx, &*self.monomial(ctx, &rest)?)?
            }
        };
        let m = Arc::new(m);
        self.monomials.lock().unwrap().insert(a.to_vec(), m.clone());
        Ok(m)
    }

    fn weight_pbw(&self, ctx: &NfContext, mu: &QVec) -> Result<Arc<WeightPbw>> {
        ctx.check_height(mu)?;
        if let Some(w) = self.weights.lock().unwrap().get(mu) {
            return Ok(w.clone());
        }
        let exps = self.exponents_of_weight(mu);
        let mut span = Echelon::tracking();
        for a in &exps {
            if !span.insert(&self.monomial(ctx, a)?.terms) {
                return Err(Error::InternalContradiction(format!(
                    "PBW monomials of weight {mu} are linearly dependent"
                )));
            }
        }
        let w = Arc::new(WeightPbw { exps, span });
        self.weights.lock().unwrap().insert(mu.clone(), w.clone());
        Ok(w)
    }

    /// Number of PBW monomials of weight `mu`, after checking that they are
    /// linearly independent in U⁺.
    pub fn weight_rank(&self, ctx: &NfContext, mu: &QVec) -> Result<usize> {
        Ok(self.weight_pbw(ctx, mu)?.span.rank())
    }

    /// Unique PBW coordinates of `x`.
    pub fn expand(&self, ctx: &NfContext, x: &UPlusElt) -> Result<PbwVec> {
        let mut terms = Lin::new();
        for (mu, comp) in x.components(ctx.rank()) {
            let wp = self.weight_pbw(ctx, &mu)?;
            let combo = wp.span.solve(&comp.terms).ok_or(Error::NotInSubalgebra)?;
            for (tag, c) in combo {
                add_term(&mut terms, wp.exps[tag].clone(), c);
            }
        }
        Ok(PbwVec { word: self.word.clone(), terms })
    }

    /// Multiplies out a PBW vector.
    pub fn to_plus(&self, ctx: &NfContext, v: &PbwVec) -> Result<UPlusElt> {
        let mut out = Lin::new();
        for (a, c) in &v.terms {
            axpy(&mut out, c, &self.monomial(ctx, a)?.terms);
        }
        Ok(UPlusElt { terms: out })
    }

    pub fn mul(&self, ctx: &NfContext, x: &PbwVec, y: &PbwVec) -> Result<PbwVec> {
        let p = self.to_plus(ctx, x)?.mul(ctx, &self.to_plus(ctx, y)?)?;
        self.expand(ctx, &p)
    }

    /// `E_{β_i} E_{β_j} − q^{(β_i,β_j)} E_{β_j} E_{β_i}` in PBW coordinates,
    /// 0-based `i < j`.
    pub fn ls_relation(&self, ctx: &NfContext, i: usize, j: usize) -> Result<PbwVec> {
        let t = self.len();
        if i >= j || j >= t {
            return Err(Error::BadIndex { i: i + 1, j: j + 1, len: t });
        }
        if let Some(v) = self.ls.lock().unwrap().get(&(i, j)) {
            return Ok(v.clone());
        }
        let (bi, bj) = (&self.vectors[i], &self.vectors[j]);
        let c = QRat::q_pow(ctx.rs().bilinear(&self.betas[i], &self.betas[j]));
        let x = bi.mul(ctx, bj)?.sub(&bj.mul(ctx, bi)?.scale(&c));
        let v = self.expand(ctx, &x)?;
        self.ls.lock().unwrap().insert((i, j), v.clone());
        Ok(v)
    }
}

/// `pbw_expand` as a free function.
pub fn pbw_expand(ctx: &NfContext, basis: &PbwBasis, x: &UPlusElt) -> Result<PbwVec> {
    basis.expand(ctx, x)
}

/// `Σ c_a E_{β_t}^{a_t} ⋯ E_{β_1}^{a_1}` over a fixed reduced word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwVec {
    pub word: ReducedWord,
    pub terms: Lin<Exponents>,
}

impl PbwVec {
    pub fn zero(word: &ReducedWord) -> Self {
        PbwVec { word: word.clone(), terms: Lin::new() }
    }

    /// The single monomial with exponents `a`.
    pub fn monomial(word: &ReducedWord, a: Exponents, c: QRat) -> Self {
        let mut terms = Lin::new();
        add_term(&mut terms, a, c);
        PbwVec { word: word.clone(), terms }
    }

    /// `E_{β_k}`, 0-based.
    pub fn root(word: &ReducedWord, k: usize) -> Self {
        let mut a = vec![0; word.len()];
        a[k] = 1;
        PbwVec::monomial(word, a, QRat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
struct PbwTermJson {
    exponents: Exponents,
    coeff: QRat,
}

#[derive(Serialize, Deserialize)]
struct PbwVecJson {
    word: ReducedWord,
    terms: Vec<PbwTermJson>,
}

impl Serialize for PbwVec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PbwVecJson {
            word: self.word.clone(),
            terms: self.terms.iter().map(|(a, c)| PbwTermJson { exponents: a.clone(), coeff: c.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PbwVec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PbwVecJson::deserialize(d)?;
        let mut terms = Lin::new();
        for t in j.terms {
            if t.exponents.len() != j.word.len() {
                return Err(serde::de::Error::custom("exponent vector has wrong length"));
            }
            add_term(&mut terms, t.exponents, t.coeff);
        }
        Ok(PbwVec { word: j.word, terms })
    }
}

impl fmt::Display for PbwVec {
    /// Root vectors print as `B1, B2, …` in PBW order, e.g. `B3B1^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::fmt_sum(f, self.terms.iter(), |f, a| {
            for k in (0..a.len()).rev() {
                match a[k] {
                    0 => {}
                    1 => write!(f, "B{}", k + 1)?,
                    e => write!(f, "B{}^{e}", k + 1)?,
                }
            }
            Ok(())
        })
    }
}
