//! Reflection-sequence procedures on chains `s_{β_m} ⋯ s_{β_1} w` whose
//! length drops by one at every step.

use num::Zero;

use super::WeylElt;
use crate::coeffs::Rat;
use crate::error::{Error, Result};
use crate::rootsys::{QVec, RootSystem};

/// The three conditions `s_β u < u`, `u⁻¹β ∈ Φ⁻` and `(β, uρ) < 0`.
pub fn weyl_bruhat_equiv(rs: &RootSystem, u: &WeylElt, beta: &QVec) -> Result<(bool, bool, bool)> {
    weyl_bruhat_equiv_at(rs, u, beta, &rs.rho())
}

/// As [`weyl_bruhat_equiv`] with a caller-supplied regular dominant weight
/// (rational root coordinates) in place of ρ.
pub fn weyl_bruhat_equiv_at(rs: &RootSystem, u: &WeylElt, beta: &QVec, lambda: &[Rat]) -> Result<(bool, bool, bool)> {
    if !rs.is_positive_root(beta) {
        return Err(Error::NotAPositiveRoot);
    }
    if !rs.is_regular_dominant(lambda) {
        return Err(Error::InvalidInput("weight is not regular dominant".into()));
    }
    let s = WeylElt::reflection(rs, beta)?;
    let c1 = s.mul(rs, u).length() < u.length();
    let c2 = u.inverse(rs).apply(beta).is_nonpos();
    let c3 = rs.pair_with_weight(beta, u, lambda) < Rat::zero();
    Ok((c1, c2, c3))
}

/// True iff every `β_i` is a positive root and
/// `ℓ(s_{β_i} ⋯ s_{β_1} w) = ℓ(w) − i` for all `i`.
pub fn chain_is_valid(rs: &RootSystem, w: &WeylElt, betas: &[QVec]) -> bool {
    let mut x = w.clone();
    for b in betas {
        if !rs.is_positive_root(b) {
            return false;
        }
        let y = WeylElt::reflection(rs, b).unwrap().mul(rs, &x);
        if y.length() + 1 != x.length() {
            return false;
        }
        x = y;
    }
    true
}

fn chain_product(rs: &RootSystem, w: &WeylElt, betas: &[QVec]) -> Result<WeylElt> {
    let mut x = w.clone();
    for b in betas {
        x = WeylElt::reflection(rs, b)?.mul(rs, &x);
    }
    Ok(x)
}

fn positive(rs: &RootSystem, r: QVec) -> QVec {
    if rs.is_positive_root(&r) {
        r
    } else {
        -&r
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Case {
    AlphaBetaOrthogonal,
    AlphaGammaOrthogonal,
    One,
    TwoA,
    Search,
}

/// Rewrites `s_α s_β s_γ` (γ applied first) as `s_{α'} s_{β'} s_{γ'}` with
/// the same length chain above `w` and `(β', γ') ≠ 0`.
///
/// Requires `(β, γ) = 0` and `(α, β) ≠ 0` or `(α, γ) ≠ 0`. Returns
/// `(α', β', γ')`.
pub fn lemma12_step(
    rs: &RootSystem,
    w: &WeylElt,
    alpha: &QVec,
    beta: &QVec,
    gamma: &QVec,
) -> Result<(QVec, QVec, QVec)> {
    triple_step_with_case(rs, w, alpha, beta, gamma).map(|(t, _)| t)
}

fn triple_step_with_case(
    rs: &RootSystem,
    w: &WeylElt,
    alpha: &QVec,
    beta: &QVec,
    gamma: &QVec,
) -> Result<((QVec, QVec, QVec), Case)> {
    let input = [gamma.clone(), beta.clone(), alpha.clone()];
    if !chain_is_valid(rs, w, &input) {
        return Err(Error::InvalidChain("length chain fails for (α, β, γ)".into()));
    }
    let ab = rs.bilinear(alpha, beta);
    let ag = rs.bilinear(alpha, gamma);
    if rs.bilinear(beta, gamma) != 0 {
        return Err(Error::InvalidChain("(β, γ) ≠ 0".into()));
    }
    if ab == 0 && ag == 0 {
        return Err(Error::InvalidChain("α orthogonal to both β and γ".into()));
    }

    let (out, case) = if ab == 0 {
        ((beta.clone(), alpha.clone(), gamma.clone()), Case::AlphaBetaOrthogonal)
    } else if ag == 0 {
        // s_β and s_γ commute, and s_β w < w follows from (β, γ) = 0.
        ((gamma.clone(), alpha.clone(), beta.clone()), Case::AlphaGammaOrthogonal)
    } else {
        match both_nonorthogonal(rs, w, alpha, beta, gamma) {
            Some(r) => r,
            None => match both_nonorthogonal(rs, w, alpha, gamma, beta) {
                Some(r) => r,
                None => match search(rs, w, &chain_product(rs, w, &input)?) {
                    Some(t) => (t, Case::Search),
                    None => {
                        return Err(Error::InternalContradiction(
                            "no case applies for either ordering of β and γ".into(),
                        ))
                    }
                },
            },
        }
    };

    let (a2, b2, g2) = &out;
    let output = [g2.clone(), b2.clone(), a2.clone()];
    let ok = chain_is_valid(rs, w, &output)
        && rs.bilinear(b2, g2) != 0
        && chain_product(rs, w, &output)? == chain_product(rs, w, &input)?;
    if !ok {
        return Err(Error::InternalContradiction(format!("postcondition failed for output ({a2}, {b2}, {g2})")));
    }
    Ok((out, case))
}

/// Cases 1 and 2a with `(α, β) ≠ 0 ≠ (α, γ)`. `None` when the
/// unequal-length subcase of case 2 is hit, or when case 1 applies but
/// `s_α β` is negative (possible when `(α, β) > 0`), since `s_{s_α β}` then
/// raises the length.
fn both_nonorthogonal(
    rs: &RootSystem,
    w: &WeylElt,
    alpha: &QVec,
    beta: &QVec,
    gamma: &QVec,
) -> Option<((QVec, QVec, QVec), Case)> {
    let v = WeylElt::reflection(rs, gamma).unwrap().mul(rs, w);
    if v.inverse(rs).apply(alpha).is_nonpos() {
        let a2 = rs.reflect(alpha, beta);
        if !rs.is_positive_root(&a2) {
            return None;
        }
        return Some(((a2, alpha.clone(), gamma.clone()), Case::One));
    }
    if rs.bilinear(alpha, alpha) == rs.bilinear(beta, beta) {
        let b2 = positive(rs, rs.reflect(beta, alpha));
        return Some(((beta.clone(), b2, gamma.clone()), Case::TwoA));
    }
    None
}

/// Any `(α', β', γ')` with `s_{α'} s_{β'} s_{γ'} w = target`, a valid length
/// chain and `(β', γ') ≠ 0`. Covers case 1 inputs with `(α, β) > 0` for both
/// orderings, where `s_α β` and `s_α γ` are both negative.
fn search(rs: &RootSystem, w: &WeylElt, target: &WeylElt) -> Option<(QVec, QVec, QVec)> {
    let refl = |b: &QVec| WeylElt::reflection(rs, b).unwrap();
    for g in rs.positive_roots() {
        let x1 = refl(g).mul(rs, w);
        if x1.length() + 1 != w.length() {
            continue;
        }
        for b in rs.positive_roots() {
            if rs.bilinear(b, g) == 0 {
                continue;
            }
            let x2 = refl(b).mul(rs, &x1);
            if x2.length() + 1 != x1.length() {
                continue;
            }
            // s_{α'} = target · x2⁻¹ must itself be a reflection.
            let s = target.mul(rs, &x2.inverse(rs));
            if let Some(a) = rs.positive_roots().iter().find(|a| refl(a) == s) {
                return Some((a.clone(), b.clone(), g.clone()));
            }
        }
    }
    None
}

/// Rewrites a valid chain `β_1, …, β_m` (β_1 applied first) into one with
/// the same length chain and the same product whose first two roots are not
/// orthogonal.
pub fn normalize_reflection_sequence(rs: &RootSystem, w: &WeylElt, betas: &[QVec]) -> Result<Vec<QVec>> {
    if !chain_is_valid(rs, w, betas) {
        return Err(Error::InvalidChain("length chain fails".into()));
    }
    let m = betas.len();
    let nonorth = |b: &[QVec], i: usize, j: usize| rs.bilinear(&b[i], &b[j]) != 0;

    // Closest non-orthogonal pair, earliest on ties.
    let (mut i, j) = (1..m)
        .flat_map(|gap| (0..m - gap).map(move |i| (i, i + gap)))
        .find(|&(i, j)| nonorth(betas, i, j))
        .ok_or(Error::NoNonorthogonalPair)?;

    let mut b = betas.to_vec();
    // Everything strictly between i and j is orthogonal to b[j] by
    // minimality, so b[j] commutes down to position i + 1.
    for p in (i + 1..j).rev() {
        b.swap(p, p + 1);
    }

    // Shift the adjacent pair (i, i + 1) down to (0, 1).
    while i > 0 {
        let (g, be, a) = (&b[i - 1], &b[i], &b[i + 1]);
        if rs.bilinear(g, be) != 0 {
            // (i - 1, i) is already a non-orthogonal pair.
        } else if rs.bilinear(g, a) != 0 {
            let prefix = chain_product(rs, w, &b[..i - 1])?;
            let (a2, b2, g2) = lemma12_step(rs, &prefix, a, be, g)?;
            b[i - 1] = g2;
            b[i] = b2;
            b[i + 1] = a2;
        } else {
            b.swap(i - 1, i);
            b.swap(i, i + 1);
        }
        i -= 1;
    }

    let ok =
        chain_is_valid(rs, w, &b) && nonorth(&b, 0, 1) && chain_product(rs, w, &b)? == chain_product(rs, w, betas)?;
    if !ok {
        return Err(Error::InternalContradiction("normalized chain fails its postconditions".into()));
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::super::all_elements;
    use super::*;
    use num::BigInt;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn rs(t: &str) -> RootSystem {
        RootSystem::from_type(t).unwrap()
    }

    fn all_agree(t: (bool, bool, bool)) -> bool {
        t.0 == t.1 && t.1 == t.2
    }

    #[test]
    fn bruhat_equivalence_rank_two() {
        for t in ["A2", "B2", "G2"] {
            let r = rs(t);
            for u in all_elements(&r) {
                for b in r.positive_roots() {
                    assert!(all_agree(weyl_bruhat_equiv(&r, &u, b).unwrap()));
                }
            }
        }
        let r = rs("A2");
        let e = WeylElt::identity(&r);
        let w0 = WeylElt::longest(&r);
        let a1 = r.simple_root(0);
        assert_eq!(weyl_bruhat_equiv(&r, &e, &a1).unwrap(), (false, false, false));
        assert_eq!(weyl_bruhat_equiv(&r, &w0, &a1).unwrap(), (true, true, true));
        for b in r.positive_roots() {
            let s = WeylElt::reflection(&r, b).unwrap();
            assert_eq!(weyl_bruhat_equiv(&r, &s, b).unwrap(), (true, true, true));
        }
    }

    #[test]
    fn bruhat_equivalence_with_shifted_weight() {
        let mut rng = StdRng::seed_from_u64(11);
        for t in ["A3", "B3", "C3"] {
            let r = rs(t);
            let all = all_elements(&r);
            let omegas = r.fundamental_weights();
            for _ in 0..100 {
                let mut lambda = r.rho();
                for om in &omegas {
                    let c = Rat::from_integer(BigInt::from(rng.gen_range(0..4)));
                    for (l, o) in lambda.iter_mut().zip(om) {
                        *l += &c * o;
                    }
                }
                let u = all.choose(&mut rng).unwrap();
                let b = r.positive_roots().choose(&mut rng).unwrap();
                let at_rho = weyl_bruhat_equiv(&r, u, b).unwrap();
                assert!(all_agree(at_rho));
                assert_eq!(weyl_bruhat_equiv_at(&r, u, b, &lambda).unwrap(), at_rho);
            }
        }
    }

    fn valid_triples(r: &RootSystem) -> Vec<(WeylElt, QVec, QVec, QVec)> {
        let mut out = Vec::new();
        for w in all_elements(r) {
            for g in w.inversion_set(r) {
                let v = WeylElt::reflection(r, &g).unwrap().mul(r, &w);
                if v.length() + 1 != w.length() {
                    continue;
                }
                for b in r.positive_roots() {
                    if r.bilinear(b, &g) != 0 || !chain_is_valid(r, &w, &[g.clone(), b.clone()]) {
                        continue;
                    }
                    for a in r.positive_roots() {
                        let chain = [g.clone(), b.clone(), a.clone()];
                        if (r.bilinear(a, b) != 0 || r.bilinear(a, &g) != 0) && chain_is_valid(r, &w, &chain) {
                            out.push((w.clone(), a.clone(), b.clone(), g.clone()));
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn triple_step_on_all_valid_triples() {
        let mut cases = Vec::new();
        for t in ["A3", "B3", "C3", "B2", "G2"] {
            let r = rs(t);
            for (w, a, b, g) in valid_triples(&r) {
                let (_, case) = triple_step_with_case(&r, &w, &a, &b, &g).unwrap();
                cases.push(case);
            }
        }
        for c in [Case::AlphaBetaOrthogonal, Case::AlphaGammaOrthogonal, Case::One, Case::TwoA, Case::Search] {
            assert!(cases.contains(&c), "{c:?} never exercised");
        }
    }

    #[test]
    fn triple_step_orthogonal_case_and_bad_inputs() {
        let r = rs("B3");
        let (w, a, b, g) = valid_triples(&r).into_iter().find(|(_, a, b, _)| r.bilinear(a, b) == 0).unwrap();
        assert_eq!(lemma12_step(&r, &w, &a, &b, &g).unwrap(), (b.clone(), a.clone(), g.clone()));

        let r = rs("A3");
        let w0 = WeylElt::longest(&r);
        let (a1, a2, a3) = (r.simple_root(0), r.simple_root(1), r.simple_root(2));
        assert!(matches!(lemma12_step(&r, &w0, &a3, &a2, &a1), Err(Error::InvalidChain(_))));
        assert!(matches!(lemma12_step(&r, &WeylElt::identity(&r), &a1, &a3, &a2), Err(Error::InvalidChain(_))));
    }

    fn random_chain(r: &RootSystem, rng: &mut StdRng, all: &[WeylElt], m: usize) -> Option<(WeylElt, Vec<QVec>)> {
        let w = all.choose(rng).unwrap().clone();
        let mut x = w.clone();
        let mut betas = Vec::new();
        for _ in 0..m {
            let cands: Vec<QVec> = x
                .inversion_set(r)
                .into_iter()
                .filter(|b| WeylElt::reflection(r, b).unwrap().mul(r, &x).length() + 1 == x.length())
                .collect();
            let b = cands.choose(rng)?.clone();
            x = WeylElt::reflection(r, &b).unwrap().mul(r, &x);
            betas.push(b);
        }
        Some((w, betas))
    }

    #[test]
    fn normalize_random_chains() {
        let mut rng = StdRng::seed_from_u64(5);
        for t in ["A3", "B3"] {
            let r = rs(t);
            let all = all_elements(&r);
            let mut done = 0;
            while done < 100 {
                let m = rng.gen_range(2..=4);
                let Some((w, betas)) = random_chain(&r, &mut rng, &all, m) else { continue };
                match normalize_reflection_sequence(&r, &w, &betas) {
                    Ok(g) => {
                        assert!(chain_is_valid(&r, &w, &g));
                        assert_ne!(r.bilinear(&g[0], &g[1]), 0);
                        assert_eq!(chain_product(&r, &w, &g).unwrap(), chain_product(&r, &w, &betas).unwrap());
                        done += 1;
                    }
                    Err(Error::NoNonorthogonalPair) => {
                        for i in 0..m {
                            for j in i + 1..m {
                                assert_eq!(r.bilinear(&betas[i], &betas[j]), 0);
                            }
                        }
                    }
                    Err(e) => panic!("{t}: {e}"),
                }
            }
        }
    }

    #[test]
    fn normalize_small_cases() {
        let r = rs("A2");
        let w0 = WeylElt::longest(&r);
        let a1 = r.simple_root(0);
        // s_{α1} w0 = s2 s1, then strip α1 + α2.
        let chain = vec![a1.clone(), QVec::new(vec![1, 1])];
        assert!(chain_is_valid(&r, &w0, &chain));
        assert_eq!(normalize_reflection_sequence(&r, &w0, &chain).unwrap(), chain);

        let r = rs("A1xA1");
        let w0 = WeylElt::longest(&r);
        let chain = vec![r.simple_root(0), r.simple_root(1)];
        assert_eq!(normalize_reflection_sequence(&r, &w0, &chain), Err(Error::NoNonorthogonalPair));
        assert!(matches!(
            normalize_reflection_sequence(&rs("A2"), &WeylElt::identity(&rs("A2")), &[a1]),
            Err(Error::InvalidChain(_))
        ));
    }
}
