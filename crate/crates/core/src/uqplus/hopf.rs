//! Coproduct and counit on `U^{≥0}`, and the map ψ.
//!
//! `Δ(E_α) = E_α ⊗ 1 + K_α ⊗ E_α`, `Δ(K_μ) = K_μ ⊗ K_μ`. Both legs are kept
//! in the basis `K_μ E_e` with standard words `e`, so a tensor is canonical.

use std::collections::BTreeMap;

use super::free::{word_weight, Word};
use super::linalg::{add_term, axpy, Lin};
use super::nf::{NfContext, UPlusElt};
use super::uelt::UElt;
use crate::coeffs::QRat;
use crate::error::{Error, Result};
use crate::rootsys::QVec;

/// The basis element `K_μ E_e` of `U^{≥0}`.
pub type BKey = (QVec, Word);

fn borel_terms(x: &UElt) -> Result<Vec<(BKey, QRat)>> {
    x.terms
        .iter()
        .map(|((f, k, e), c)| {
            if f.is_empty() {
                Ok(((k.clone(), e.clone()), c.clone()))
            } else {
                Err(Error::InvalidInput("element has F-letters".into()))
            }
        })
        .collect()
}

pub fn borel_elt(k: &BKey, c: QRat) -> UElt {
    UElt::from_key((vec![], k.0.clone(), k.1.clone()), c)
}

/// `K_μ E_e` for an arbitrary word `e`, expanded over standard words.
fn borel_word(ctx: &NfContext, mu: &QVec, e: &[u8]) -> Result<Lin<BKey>> {
    Ok(ctx.nf_word(e)?.into_iter().map(|(w, c)| ((mu.clone(), w), c)).collect())
}

/// `(K_μ E_e)(K_ν E_f) = q^{−(ν, wt e)} K_{μ+ν} E_e E_f`.
fn borel_mul(ctx: &NfContext, a: &BKey, b: &BKey) -> Result<Lin<BKey>> {
    let n = ctx.rank();
    let c = QRat::q_pow(-ctx.rs().bilinear(&b.0, &word_weight(n, &a.1)));
    let mut w = a.1.clone();
    w.extend_from_slice(&b.1);
    let mut out = Lin::new();
    axpy(&mut out, &c, &borel_word(ctx, &(&a.0 + &b.0), &w)?);
    Ok(out)
}

/// A finite sum of `K_μ E_e ⊗ K_ν E_f`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElt {
    pub terms: Lin<(BKey, BKey)>,
}

impl TensorElt {
    pub fn zero() -> Self {
        TensorElt::default()
    }

    pub fn pure(a: &UElt, b: &UElt) -> Result<Self> {
        let mut terms = Lin::new();
        for (ka, ca) in borel_terms(a)? {
            for (kb, cb) in borel_terms(b)? {
                add_term(&mut terms, (ka.clone(), kb), &ca * &cb);
            }
        }
        Ok(TensorElt { terms })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &TensorElt) -> TensorElt {
        let mut t = self.terms.clone();
        axpy(&mut t, &QRat::one(), &other.terms);
        TensorElt { terms: t }
    }

    pub fn sub(&self, other: &TensorElt) -> TensorElt {
        let mut t = self.terms.clone();
        axpy(&mut t, &-QRat::one(), &other.terms);
        TensorElt { terms: t }
    }

    pub fn mul(&self, ctx: &NfContext, other: &TensorElt) -> Result<TensorElt> {
        let mut terms = Lin::new();
        for ((a1, a2), x) in &self.terms {
            for ((b1, b2), y) in &other.terms {
                let left = borel_mul(ctx, a1, b1)?;
                let right = borel_mul(ctx, a2, b2)?;
                let xy = x * y;
                for (l, cl) in &left {
                    for (r, cr) in &right {
                        add_term(&mut terms, (l.clone(), r.clone()), &xy * &(cl * cr));
                    }
                }
            }
        }
        Ok(TensorElt { terms })
    }

    /// Left legs collected per right basis element: `Σ_r l_r ⊗ r`.
    pub fn by_right(&self) -> BTreeMap<BKey, UElt> {
        let mut out: BTreeMap<BKey, UElt> = BTreeMap::new();
        for ((l, r), c) in &self.terms {
            let e = out.entry(r.clone()).or_default();
            *e = e.add(&borel_elt(l, c.clone()));
        }
        out
    }
}

/// `Δ(x)` for `x ∈ U^{≥0}`.
pub fn coproduct(ctx: &NfContext, x: &UElt) -> Result<TensorElt> {
    let rs = ctx.rs();
    let n = ctx.rank();
    let mut terms = Lin::new();
    for ((mu, e), c) in borel_terms(x)? {
        let m = e.len();
        for mask in 0u32..(1 << m) {
            let chosen = |p: usize| mask >> p & 1 == 1;
            // K_{α_p} for chosen p moves left past the unchosen E's before it.
            let mut shift = 0;
            let mut k_left = mu.clone();
            let (mut left_word, mut right_word) = (Word::new(), Word::new());
            for p in 0..m {
                let ap = QVec::simple(n, e[p] as usize);
                if chosen(p) {
                    for &b in &left_word {
                        shift -= rs.bilinear(&ap, &QVec::simple(n, b as usize));
                    }
                    k_left = &k_left + &ap;
                    right_word.push(e[p]);
                } else {
                    left_word.push(e[p]);
                }
            }
            let coeff = &c * &QRat::q_pow(shift);
            let left = borel_word(ctx, &k_left, &left_word)?;
            let right = borel_word(ctx, &mu, &right_word)?;
            for (l, cl) in &left {
                for (r, cr) in &right {
                    add_term(&mut terms, (l.clone(), r.clone()), &coeff * &(cl * cr));
                }
            }
        }
    }
    Ok(TensorElt { terms })
}

/// `ε(x)`: `K_μ ↦ 1`, `E_α ↦ 0`.
pub fn counit(x: &UElt) -> QRat {
    x.terms.iter().filter(|((f, _, e), _)| f.is_empty() && e.is_empty()).map(|(_, c)| c.clone()).sum()
}

/// `(Δ ⊗ id)Δ(x) = (id ⊗ Δ)Δ(x)`.
pub fn is_coassociative_at(ctx: &NfContext, x: &UElt) -> Result<bool> {
    let d = coproduct(ctx, x)?;
    let mut lhs: Lin<(BKey, BKey, BKey)> = Lin::new();
    let mut rhs: Lin<(BKey, BKey, BKey)> = Lin::new();
    for ((l, r), c) in &d.terms {
        for ((a, b), x) in &coproduct(ctx, &borel_elt(l, c.clone()))?.terms {
            add_term(&mut lhs, (a.clone(), b.clone(), r.clone()), x.clone());
        }
        for ((a, b), x) in &coproduct(ctx, &borel_elt(r, c.clone()))?.terms {
            add_term(&mut rhs, (l.clone(), a.clone(), b.clone()), x.clone());
        }
    }
    Ok(lhs == rhs)
}

/// `(ε ⊗ id)Δ(x) = x = (id ⊗ ε)Δ(x)`.
pub fn satisfies_counit_law(ctx: &NfContext, x: &UElt) -> Result<bool> {
    let d = coproduct(ctx, x)?;
    let (mut left, mut right) = (UElt::zero(), UElt::zero());
    for ((l, r), c) in &d.terms {
        if l.1.is_empty() {
            left = left.add(&borel_elt(r, c.clone()));
        }
        if r.1.is_empty() {
            right = right.add(&borel_elt(l, c.clone()));
        }
    }
    Ok(&left == x && &right == x)
}

/// For `x = K_β · (element of U⁺_α)`: every term of `Δ(x) − x ⊗ K_β` lies in
/// `K_{α+β−γ} U⁺_γ ⊗ K_β U⁺_{α−γ}` with `α − γ ∈ Q₊ ∖ {0}`.
pub fn is_q2_compatible(ctx: &NfContext, x: &UElt) -> Result<bool> {
    let n = ctx.rank();
    let terms = borel_terms(x)?;
    let Some(((beta, e0), _)) = terms.first() else { return Ok(true) };
    let alpha = word_weight(n, e0);
    if terms.iter().any(|((k, e), _)| k != beta || word_weight(n, e) != alpha) {
        return Err(Error::NotHomogeneous);
    }
    let kb = UElt::k(beta.clone());
    let rest = coproduct(ctx, x)?.sub(&TensorElt::pure(x, &kb)?);
    Ok(rest.terms.keys().all(|((k1, e1), (k2, e2))| {
        let gamma = word_weight(n, e1);
        let delta = &alpha - &gamma;
        k2 == beta
            && word_weight(n, e2) == delta
            && delta.is_nonneg()
            && !delta.is_zero()
            && *k1 == &(&alpha + beta) - &gamma
    }))
}

/// `ψ(x_γ) = q^{−(γ,γ)/2} x_γ K_γ⁻¹ = q^{(γ,γ)/2} K_{−γ} x_γ`, extended over
/// homogeneous components.
pub fn psi_apply(ctx: &NfContext, x: &UPlusElt) -> UElt {
    let n = ctx.rank();
    let mut out = UElt::zero();
    for (gamma, comp) in x.components(n) {
        let c = QRat::q_pow(ctx.rs().bilinear(&gamma, &gamma) / 2);
        out = out.add(&UElt::from_plus(&-&gamma, &comp).scale(&c));
    }
    out
}

/// Inverse of [`psi_apply`] on its image.
pub fn psi_inverse(ctx: &NfContext, y: &UElt) -> Result<UPlusElt> {
    let n = ctx.rank();
    let mut out = Lin::new();
    for ((f, k, e), c) in &y.terms {
        let gamma = word_weight(n, e);
        if !f.is_empty() || *k != -&gamma {
            return Err(Error::InvalidInput("element is not in the image of psi".into()));
        }
        add_term(&mut out, e.clone(), c * &QRat::q_pow(-ctx.rs().bilinear(&gamma, &gamma) / 2));
    }
    Ok(UPlusElt { terms: out })
}
