//! Characters of U⁺[w] and the polynomial H-prime tests.

use super::linalg::{add_term, Lin};
use super::nf::NfContext;
use super::pbw::{Exponents, PbwBasis, PbwVec};
use crate::coeffs::QRat;
use crate::error::Result;
use crate::strata::CharacterData;

/// Values `φ(E_{β_k})` for `k ∈ theta`: free nonzero parameters, or
/// concrete values aligned with the sorted `theta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharValues {
    Symbolic,
    Concrete(Vec<QRat>),
}

fn eval_with(values: impl Fn(usize) -> QRat, x: &PbwVec) -> QRat {
    let mut out = QRat::zero();
    for (a, c) in &x.terms {
        let mut m = c.clone();
        for (k, &e) in a.iter().enumerate() {
            if e > 0 {
                m *= &values(k).pow(e as i64);
            }
        }
        out += &m;
    }
    out
}

/// `φ(x)` for a character given on root vectors, extended multiplicatively
/// over PBW monomials.
pub fn char_eval(ch: &CharacterData, x: &PbwVec) -> QRat {
    eval_with(|k| ch.value_at(k), x)
}

/// A polynomial in the parameters `f_k`, keyed by exponent vectors.
type MultiPoly = Lin<Exponents>;

/// Whether `E_{β_k} ↦ f_k` (`k ∈ theta`), `E_{β_k} ↦ 0` otherwise, respects
/// every LS relation. With symbolic values the residuals must vanish as
/// polynomials in the `f_k`.
pub fn char_well_defined(ctx: &NfContext, basis: &PbwBasis, theta: &[usize], f: &CharValues) -> Result<bool> {
    let t = basis.len();
    let in_theta = |k: usize| theta.contains(&k);
    for i in 0..t {
        for j in i + 1..t {
            let ls = basis.ls_relation(ctx, i, j)?;
            let c = QRat::one() - QRat::q_pow(ctx.rs().bilinear(&basis.betas()[i], &basis.betas()[j]));
            let ok = match f {
                CharValues::Concrete(vals) => {
                    let value = |k: usize| match theta.iter().position(|&x| x == k) {
                        Some(p) => vals[p].clone(),
                        None => QRat::zero(),
                    };
                    let lhs = if in_theta(i) && in_theta(j) { &c * &(&value(i) * &value(j)) } else { QRat::zero() };
                    lhs == eval_with(value, &ls)
                }
                CharValues::Symbolic => {
                    let mut residual = MultiPoly::new();
                    if in_theta(i) && in_theta(j) {
                        let mut a = vec![0; t];
                        a[i] = 1;
                        a[j] = 1;
                        add_term(&mut residual, a, c);
                    }
                    for (a, m) in &ls.terms {
                        let supported = a.iter().enumerate().all(|(k, &e)| e == 0 || in_theta(k));
                        if supported {
                            add_term(&mut residual, a.clone(), -m);
                        }
                    }
                    residual.is_empty()
                }
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Membership in `P_Θ`, the ideal generated by the `E_{β_k}` with `k ∉ theta`:
/// every PBW term has such a factor.
pub fn is_in_p_theta(theta: &[usize], x: &PbwVec) -> bool {
    x.terms.keys().all(|a| a.iter().enumerate().any(|(k, &e)| e > 0 && !theta.contains(&k)))
}

/// Whether `U⁺[w]/P_Θ` is the commutative polynomial ring on the classes of
/// `E_{β_k}`, `k ∈ theta`. Every LS relation must lie in the span of PBW
/// monomials with a factor outside `theta`, and roots in `theta` must be
/// pairwise orthogonal.
pub fn quotient_is_commutative_polynomial(ctx: &NfContext, basis: &PbwBasis, theta: &[usize]) -> Result<bool> {
    let betas = basis.betas();
    for (x, &i) in theta.iter().enumerate() {
        for &j in &theta[x + 1..] {
            if ctx.rs().bilinear(&betas[i], &betas[j]) != 0 {
                return Ok(false);
            }
        }
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !is_in_p_theta(theta, &basis.ls_relation(ctx, i, j)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All `S ⊆ {0..t}` whose quotient is a polynomial ring on the surviving
/// root vectors, sorted by size and then lexicographically.
pub fn enumerate_polynomial_ideals(ctx: &NfContext, basis: &PbwBasis) -> Result<Vec<Vec<usize>>> {
    let t = basis.len();
    let mut out = Vec::new();
    for mask in 0u64..(1 << t) {
        let s: Vec<usize> = (0..t).filter(|k| mask >> k & 1 == 1).collect();
        let survives = s.iter().all(|&k| !is_in_p_theta(&s, &PbwVec::root(basis.word(), k)));
        if survives && quotient_is_commutative_polynomial(ctx, basis, &s)? {
            out.push(s);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}
