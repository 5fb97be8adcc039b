use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::free::{fmt_word, word_weight, Word};
use super::linalg::{add_term, axpy, Lin};
use super::nf::{NfContext, UPlusElt};
use crate::coeffs::{q_integer, QRat};
use crate::error::{Error, Result};
use crate::rootsys::QVec;

/// `F_f K_μ E_e` with standard (normal form) words `f` and `e`.
pub type UKey = (Word, QVec, Word);

/// A term before word reduction.
pub type RawTerm = (Word, QVec, Word, QRat);

/// An element of U in triangular normal form `Σ c · F_f K_μ E_e`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UElt {
    pub terms: Lin<UKey>,
}

/// A generator of U.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gen {
    E(usize),
    F(usize),
    K(QVec),
}

/// A noncommutative polynomial in the generators, not yet normalized.
pub type UExpr = Vec<(QRat, Vec<Gen>)>;

fn kq(ctx: &NfContext, mu: &QVec, nu: &QVec) -> QRat {
    QRat::q_pow(ctx.rs().bilinear(mu, nu))
}

impl UElt {
    pub fn zero() -> Self {
        UElt::default()
    }

    pub fn scalar(n: usize, c: QRat) -> Self {
        let mut terms = Lin::new();
        add_term(&mut terms, (vec![], QVec::zero(n), vec![]), c);
        UElt { terms }
    }

    pub fn one(n: usize) -> Self {
        UElt::scalar(n, QRat::one())
    }

    pub fn e(n: usize, i: usize) -> Self {
        UElt::from_key((vec![], QVec::zero(n), vec![i as u8]), QRat::one())
    }

    pub fn f(n: usize, i: usize) -> Self {
        UElt::from_key((vec![i as u8], QVec::zero(n), vec![]), QRat::one())
    }

    pub fn k(mu: QVec) -> Self {
        UElt::from_key((vec![], mu, vec![]), QRat::one())
    }

    pub fn from_key(k: UKey, c: QRat) -> Self {
        let mut terms = Lin::new();
        add_term(&mut terms, k, c);
        UElt { terms }
    }

    pub fn gen(n: usize, g: &Gen) -> Self {
        match g {
            Gen::E(i) => UElt::e(n, *i),
            Gen::F(i) => UElt::f(n, *i),
            Gen::K(mu) => UElt::k(mu.clone()),
        }
    }

    /// `K_μ x` for `x ∈ U⁺`.
    pub fn from_plus(mu: &QVec, x: &UPlusElt) -> Self {
        UElt { terms: x.terms.iter().map(|(w, c)| ((vec![], mu.clone(), w.clone()), c.clone())).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &UElt) -> UElt {
        let mut t = self.terms.clone();
        axpy(&mut t, &QRat::one(), &other.terms);
        UElt { terms: t }
    }

    pub fn sub(&self, other: &UElt) -> UElt {
        let mut t = self.terms.clone();
        axpy(&mut t, &-QRat::one(), &other.terms);
        UElt { terms: t }
    }

    pub fn scale(&self, c: &QRat) -> UElt {
        let mut t = Lin::new();
        axpy(&mut t, c, &self.terms);
        UElt { terms: t }
    }

    /// True iff there are no F-letters (an element of `U^{≥0}`).
    pub fn is_borel(&self) -> bool {
        self.terms.keys().all(|(f, _, _)| f.is_empty())
    }

    /// The U⁺ part if `self` has no F-letters and only `K_0`.
    pub fn as_plus(&self) -> Option<UPlusElt> {
        let mut out = Lin::new();
        for ((f, k, e), c) in &self.terms {
            if !f.is_empty() || !k.is_zero() {
                return None;
            }
            add_term(&mut out, e.clone(), c.clone());
        }
        Some(UPlusElt { terms: out })
    }

    pub fn mul(&self, ctx: &NfContext, other: &UElt) -> Result<UElt> {
        let mut raw: Lin<UKey> = Lin::new();
        for ((f1, m1, e1), c1) in &self.terms {
            for ((f2, m2, e2), c2) in &other.terms {
                let c12 = c1 * c2;
                for (fw, nu, ew, c) in ef_straighten(ctx, e1, f2)?.iter() {
                    // F_{f1} K_{m1} F_{fw} K_ν E_{ew} K_{m2} E_{e2}
                    let fwt = word_weight(ctx.rank(), fw);
                    let ewt = word_weight(ctx.rank(), ew);
                    let coef = &(&c12 * c) * &(&kq(ctx, m1, &fwt).inv()? * &kq(ctx, m2, &ewt).inv()?);
                    let mut f = f1.clone();
                    f.extend_from_slice(fw);
                    let mut e = ew.clone();
                    e.extend_from_slice(e2);
                    let k = &(m1 + nu) + m2;
                    add_term(&mut raw, (f, k, e), coef);
                }
            }
        }
        reduce_words(ctx, &raw)
    }

    pub fn pow(&self, ctx: &NfContext, k: u32) -> Result<UElt> {
        let mut acc = UElt::one(ctx.rank());
        for _ in 0..k {
            acc = acc.mul(ctx, self)?;
        }
        Ok(acc)
    }

    pub fn product(ctx: &NfContext, xs: &[UElt]) -> Result<UElt> {
        let mut acc = UElt::one(ctx.rank());
        for x in xs {
            acc = acc.mul(ctx, x)?;
        }
        Ok(acc)
    }
}

/// Rewrites the F- and E-words of every term into normal form.
pub(super) fn reduce_words(ctx: &NfContext, raw: &Lin<UKey>) -> Result<UElt> {
    let mut out = Lin::new();
    for ((f, k, e), c) in raw {
        let fs = ctx.nf_word(f)?;
        let es = ctx.nf_word(e)?;
        for (fw, a) in &fs {
            for (ew, b) in &es {
                add_term(&mut out, (fw.clone(), k.clone(), ew.clone()), &(c * a) * b);
            }
        }
    }
    Ok(UElt { terms: out })
}

/// `E_e · F_f` as raw terms `F_{f'} K_ν E_{e'}`, using
/// `E_i F_j = F_j E_i + δ_ij (K_i − K_i⁻¹)/(q_i − q_i⁻¹)`.
pub(super) fn ef_straighten(ctx: &NfContext, e: &[u8], f: &[u8]) -> Result<Arc<Vec<RawTerm>>> {
    let n = ctx.rank();
    if e.is_empty() || f.is_empty() {
        return Ok(Arc::new(vec![(f.to_vec(), QVec::zero(n), e.to_vec(), QRat::one())]));
    }
    let key = (e.to_vec(), f.to_vec());
    if let Some(v) = ctx.ef_cache.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let rs = ctx.rs();
    let i = *e.last().unwrap() as usize;
    let head = &e[..e.len() - 1];
    let mut acc: Lin<UKey> = Lin::new();
    // E_{head} F_f E_i
    for (fw, nu, ew, c) in ef_straighten(ctx, head, f)?.iter() {
        let mut ew2 = ew.clone();
        ew2.push(i as u8);
        add_term(&mut acc, (fw.clone(), nu.clone(), ew2), c.clone());
    }
    // E_{head} F_{f∖k} (q^{−c} K_i − q^{c} K_i⁻¹)/(q_i − q_i⁻¹), c = (α_i, wt f_{>k})
    let ai = QVec::simple(n, i);
    let di = rs.d(i);
    let denom = (QRat::q_pow(di) - QRat::q_pow(-di)).inv()?;
    for k in 0..f.len() {
        if f[k] as usize != i {
            continue;
        }
        let tail = word_weight(n, &f[k + 1..]);
        let c = rs.bilinear(&ai, &tail);
        let mut rest = f[..k].to_vec();
        rest.extend_from_slice(&f[k + 1..]);
        for (sign, kexp, qp) in [(1, ai.clone(), -c), (-1, -&ai, c)] {
            let base = &denom * &QRat::q_pow(qp);
            let base = if sign > 0 { base } else { -base };
            for (fw, nu, ew, c2) in ef_straighten(ctx, head, &rest)?.iter() {
                // E_{ew} K_{kexp} = q^{−(kexp, wt ew)} K_{kexp} E_{ew}
                let ewt = word_weight(n, ew);
                let coef = &(&base * c2) * &QRat::q_pow(-rs.bilinear(&kexp, &ewt));
                add_term(&mut acc, (fw.clone(), nu + &kexp, ew.clone()), coef);
            }
        }
    }
    let out: Arc<Vec<RawTerm>> = Arc::new(acc.into_iter().map(|((f, k, e), c)| (f, k, e, c)).collect());
    ctx.ef_cache.lock().unwrap().insert(key, out.clone());
    Ok(out)
}

/// Multiplies out an expression in the generators.
pub fn u_normal_form(ctx: &NfContext, x: &UExpr) -> Result<UElt> {
    eval_expr(ctx, x, &mut |g| Ok(UElt::gen(ctx.rank(), g)))
}

/// Evaluates an expression with each generator replaced by its image.
pub fn eval_expr(ctx: &NfContext, x: &UExpr, image: &mut dyn FnMut(&Gen) -> Result<UElt>) -> Result<UElt> {
    let mut out = UElt::zero();
    for (c, gens) in x {
        let mut acc = UElt::scalar(ctx.rank(), c.clone());
        for g in gens {
            acc = acc.mul(ctx, &image(g)?)?;
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// `(K_i − K_i⁻¹)/(q_i − q_i⁻¹)`.
pub fn k_bracket(ctx: &NfContext, i: usize) -> UElt {
    let n = ctx.rank();
    let d = ctx.rs().d(i);
    let ai = QVec::simple(n, i);
    let denom = (QRat::q_pow(d) - QRat::q_pow(-d)).inv().expect("nonzero");
    UElt::k(ai.clone()).sub(&UElt::k(-&ai)).scale(&denom)
}

/// `X^n / [n]_{q_i}!`.
pub fn divided_power(ctx: &NfContext, x: &UElt, i: usize, k: u32) -> Result<UElt> {
    let d = ctx.rs().d(i) as u32;
    let mut fact = QRat::one();
    for m in 1..=k {
        fact *= &q_integer(m, d);
    }
    Ok(x.pow(ctx, k)?.scale(&fact.inv().map_err(|_| Error::DivisionByZero)?))
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    fword: Vec<usize>,
    kexp: Vec<i64>,
    eword: Vec<usize>,
    coeff: QRat,
}

fn one_based(w: &[u8]) -> Vec<usize> {
    w.iter().map(|&a| a as usize + 1).collect()
}

fn zero_based(w: &[usize]) -> std::result::Result<Word, String> {
    w.iter().map(|&a| if a == 0 { Err("letters are 1-based".to_string()) } else { Ok((a - 1) as u8) }).collect()
}

impl Serialize for UElt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermJson> = self
            .terms
            .iter()
            .map(|((f, k, e), c)| TermJson {
                fword: one_based(f),
                kexp: k.to_vec(),
                eword: one_based(e),
                coeff: c.clone(),
            })
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for UElt {
    /// Reads terms as given; words are assumed to be in normal form already.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<TermJson>::deserialize(d)?;
        let mut terms = Lin::new();
        for t in v {
            let f = zero_based(&t.fword).map_err(serde::de::Error::custom)?;
            let e = zero_based(&t.eword).map_err(serde::de::Error::custom)?;
            add_term(&mut terms, (f, QVec::new(t.kexp), e), t.coeff);
        }
        Ok(UElt { terms })
    }
}

impl fmt::Display for UElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::fmt_sum(f, self.terms.iter(), |f, (fw, k, ew)| {
            fmt_word(f, 'F', fw)?;
            if !k.is_zero() {
                write!(f, "K[{}]", k.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))?;
            }
            fmt_word(f, 'E', ew)
        })
    }
}
