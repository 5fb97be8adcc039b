//! Lusztig's braid automorphisms `T_α` and root vectors.
//!
//! Generator images:
//! `T_α(K_μ) = K_{s_α μ}`, `T_α(E_α) = −F_α K_α`, `T_α(F_α) = −K_α⁻¹ E_α`,
//! and for `β ≠ α` with `r = −a_{αβ}`
//! `T_α(E_β) = Σ_i (−1)^i q_α^{−i} E_α^{(r−i)} E_β E_α^{(i)}`,
//! `T_α(F_β) = Σ_i (−1)^i q_α^{i} F_α^{(i)} F_β F_α^{(r−i)}`.
//! The inverse swaps the roles of the outer divided powers:
//! `T_α⁻¹(E_α) = −K_α⁻¹ F_α`, `T_α⁻¹(F_α) = −E_α K_α`,
//! `T_α⁻¹(E_β) = Σ_i (−1)^i q_α^{−i} E_α^{(i)} E_β E_α^{(r−i)}`,
//! `T_α⁻¹(F_β) = Σ_i (−1)^i q_α^{i} F_α^{(r−i)} F_β F_α^{(i)}`.

use super::free::serre_relation;
use super::nf::{NfContext, UPlusElt};
use super::uelt::{divided_power, eval_expr, Gen, UElt, UExpr};
use crate::coeffs::QRat;
use crate::error::{Error, Result};
use crate::rootsys::QVec;
use crate::weyl::ReducedWord;

fn sign(i: u32) -> QRat {
    if i % 2 == 0 {
        QRat::one()
    } else {
        -QRat::one()
    }
}

/// Image of a generator under `T_α` (`inverse = false`) or `T_α⁻¹`.
pub fn lusztig_gen(ctx: &NfContext, a: usize, g: &Gen, inverse: bool) -> Result<UElt> {
    let rs = ctx.rs();
    let n = ctx.rank();
    let alpha = QVec::simple(n, a);
    let ka = UElt::k(alpha.clone());
    let ka_inv = UElt::k(-&alpha);
    let da = rs.d(a);
    Ok(match g {
        Gen::K(mu) => UElt::k(rs.reflect(&alpha, mu)),
        Gen::E(b) if *b == a => {
            let f = UElt::f(n, a);
            if inverse { ka_inv.mul(ctx, &f)? } else { f.mul(ctx, &ka)? }.scale(&-QRat::one())
        }
        Gen::F(b) if *b == a => {
            let e = UElt::e(n, a);
            if inverse { e.mul(ctx, &ka)? } else { ka_inv.mul(ctx, &e)? }.scale(&-QRat::one())
        }
        Gen::E(b) => {
            let r = (-rs.cartan_entry(a, *b)) as u32;
            let (x, y) = (UElt::e(n, a), UElt::e(n, *b));
            let mut out = UElt::zero();
            for i in 0..=r {
                let (left, right) = if inverse { (i, r - i) } else { (r - i, i) };
                let t = UElt::product(
                    ctx,
                    &[divided_power(ctx, &x, a, left)?, y.clone(), divided_power(ctx, &x, a, right)?],
                )?;
                out = out.add(&t.scale(&(&sign(i) * &QRat::q_pow(-da * i as i64))));
            }
            out
        }
        Gen::F(b) => {
            let r = (-rs.cartan_entry(a, *b)) as u32;
            let (x, y) = (UElt::f(n, a), UElt::f(n, *b));
            let mut out = UElt::zero();
            for i in 0..=r {
                let (left, right) = if inverse { (r - i, i) } else { (i, r - i) };
                let t = UElt::product(
                    ctx,
                    &[divided_power(ctx, &x, a, left)?, y.clone(), divided_power(ctx, &x, a, right)?],
                )?;
                out = out.add(&t.scale(&(&sign(i) * &QRat::q_pow(da * i as i64))));
            }
            out
        }
    })
}

/// Generator images of `T_α` (or its inverse), cached for reuse.
pub struct Braid {
    a: usize,
    e: Vec<UElt>,
    f: Vec<UElt>,
    inverse: bool,
}

impl Braid {
    pub fn new(ctx: &NfContext, a: usize, inverse: bool) -> Result<Self> {
        let n = ctx.rank();
        let e = (0..n).map(|b| lusztig_gen(ctx, a, &Gen::E(b), inverse)).collect::<Result<_>>()?;
        let f = (0..n).map(|b| lusztig_gen(ctx, a, &Gen::F(b), inverse)).collect::<Result<_>>()?;
        Ok(Braid { a, e, f, inverse })
    }

    pub fn image(&self, ctx: &NfContext, g: &Gen) -> Result<UElt> {
        Ok(match g {
            Gen::E(b) => self.e[*b].clone(),
            Gen::F(b) => self.f[*b].clone(),
            Gen::K(_) => lusztig_gen(ctx, self.a, g, self.inverse)?,
        })
    }

    /// Applies the automorphism to an element in normal form.
    pub fn apply(&self, ctx: &NfContext, x: &UElt) -> Result<UElt> {
        let mut out = UElt::zero();
        for ((f, k, e), c) in &x.terms {
            let mut factors: Vec<UElt> = f.iter().map(|&b| self.f[b as usize].clone()).collect();
            factors.push(self.image(ctx, &Gen::K(k.clone()))?);
            factors.extend(e.iter().map(|&b| self.e[b as usize].clone()));
            out = out.add(&UElt::product(ctx, &factors)?.scale(c));
        }
        Ok(out)
    }

    pub fn apply_expr(&self, ctx: &NfContext, x: &UExpr) -> Result<UElt> {
        eval_expr(ctx, x, &mut |g| self.image(ctx, g))
    }
}

/// `T_α(x)`.
pub fn lusztig_t(ctx: &NfContext, a: usize, x: &UElt) -> Result<UElt> {
    Braid::new(ctx, a, false)?.apply(ctx, x)
}

/// `T_α⁻¹(x)`.
pub fn lusztig_t_inv(ctx: &NfContext, a: usize, x: &UElt) -> Result<UElt> {
    Braid::new(ctx, a, true)?.apply(ctx, x)
}

/// `E_{β_i} = T_{a_1} ⋯ T_{a_{i−1}} E_{a_i}`, computed from the inside out;
/// every intermediate value lies in U⁺.
pub fn root_vectors(ctx: &NfContext, word: &ReducedWord) -> Result<Vec<UPlusElt>> {
    let n = ctx.rank();
    let letters = word.letters();
    let braids: Vec<Braid> = (0..n).map(|a| Braid::new(ctx, a, false)).collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(letters.len());
    for k in 0..letters.len() {
        let mut x = UElt::e(n, letters[k]);
        for j in (0..k).rev() {
            x = braids[letters[j]].apply(ctx, &x)?;
        }
        let p =
            x.as_plus().ok_or_else(|| Error::InternalContradiction(format!("root vector {} is not in U+", k + 1)))?;
        out.push(p);
    }
    Ok(out)
}

/// The defining relations of U as unnormalized expressions: quantum Serre
/// relations in E and F, `E_i F_j − F_j E_i − δ_ij (K_i − K_i⁻¹)/(q_i − q_i⁻¹)`,
/// `K_i E_j K_i⁻¹ − q^{(α_i,α_j)} E_j`, the same for F, and `K_i K_i⁻¹ − 1`.
pub fn defining_relations(ctx: &NfContext) -> Vec<(String, UExpr)> {
    let rs = ctx.rs();
    let n = ctx.rank();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let s = serre_relation(rs, i, j).expect("distinct indices");
                let as_e: UExpr =
                    s.terms.iter().map(|(w, c)| (c.clone(), w.iter().map(|&a| Gen::E(a as usize)).collect())).collect();
                let as_f: UExpr =
                    s.terms.iter().map(|(w, c)| (c.clone(), w.iter().map(|&a| Gen::F(a as usize)).collect())).collect();
                out.push((format!("serre E {} {}", i + 1, j + 1), as_e));
                out.push((format!("serre F {} {}", i + 1, j + 1), as_f));
            }
            let mut ef: UExpr =
                vec![(QRat::one(), vec![Gen::E(i), Gen::F(j)]), (-QRat::one(), vec![Gen::F(j), Gen::E(i)])];
            if i == j {
                let d = rs.d(i);
                let c = (QRat::q_pow(d) - QRat::q_pow(-d)).inv().expect("nonzero");
                let ai = QVec::simple(n, i);
                ef.push((-c.clone(), vec![Gen::K(ai.clone())]));
                ef.push((c, vec![Gen::K(-&ai)]));
            }
            out.push((format!("EF {} {}", i + 1, j + 1), ef));
            let (ai, aj) = (QVec::simple(n, i), QVec::simple(n, j));
            let b = rs.bilinear(&ai, &aj);
            for (name, g) in [("KE", Gen::E(j)), ("KF", Gen::F(j))] {
                let s = if name == "KE" { b } else { -b };
                out.push((
                    format!("{name} {} {}", i + 1, j + 1),
                    vec![(QRat::one(), vec![Gen::K(ai.clone()), g.clone(), Gen::K(-&ai)]), (-QRat::q_pow(s), vec![g])],
                ));
            }
        }
        let ai = QVec::simple(n, i);
        out.push((
            format!("KK {}", i + 1),
            vec![(QRat::one(), vec![Gen::K(ai.clone()), Gen::K(-&ai)]), (-QRat::one(), vec![])],
        ));
    }
    out
}
