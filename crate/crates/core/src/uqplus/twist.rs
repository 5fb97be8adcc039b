//! Twisting `ψ(U⁺[w])` by a character, and a bounded right coideal test.

use super::chars::char_eval;
use super::free::Word;
use super::hopf::{borel_elt, coproduct, psi_apply, psi_inverse};
use super::linalg::{add_term, axpy, Echelon, Lin};
use super::nf::{NfContext, UPlusElt};
use super::pbw::PbwBasis;
use super::uelt::UElt;
use crate::coeffs::QRat;
use crate::error::{Error, Result};
use crate::rootsys::{LatticeSubgroup, QVec};
use crate::strata::{CharacterData, CoidealTriple};

/// `(φψ⁻¹ ⊗ id)Δ(ψ(x))` for `x ∈ U⁺[w]`.
pub fn twist_element(ctx: &NfContext, basis: &PbwBasis, ch: &CharacterData, x: &UPlusElt) -> Result<UElt> {
    let d = coproduct(ctx, &psi_apply(ctx, x))?;
    let mut out = UElt::zero();
    for (right, left) in d.by_right() {
        let pre = psi_inverse(ctx, &left)?;
        let v = basis.expand(ctx, &pre).map_err(|e| match e {
            Error::NotInSubalgebra => Error::InternalContradiction("left coproduct leg outside psi(U+[w])".into()),
            e => e,
        })?;
        let c = char_eval(ch, &v);
        if !c.is_zero() {
            out = out.add(&borel_elt(&right, c));
        }
    }
    Ok(out)
}

/// Twisted root vectors `g_i`, followed by `K_γ, K_{−γ}` for `γ` in a basis
/// of `L`.
pub fn twist_generators(ctx: &NfContext, basis: &PbwBasis, triple: &CoidealTriple) -> Result<Vec<UElt>> {
    if let Some(why) = triple.defect(ctx.rs()) {
        return Err(Error::InvalidTriple(why));
    }
    if &triple.word != basis.word() {
        return Err(Error::InvalidTriple("PBW basis is for another word".into()));
    }
    let mut out = Vec::new();
    for k in 0..basis.len() {
        out.push(twist_element(ctx, basis, &triple.ch, basis.root_vector(k))?);
    }
    for g in triple.lattice.basis() {
        let g = QVec::new(g.clone());
        out.push(UElt::k(g.clone()));
        out.push(UElt::k(-&g));
    }
    Ok(out)
}

/// Outcome of [`coideal_report`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoidealReport {
    /// Left coproduct legs of every spanning element lie in the span.
    pub coideal: bool,
    /// Every `K`-homogeneous component of a spanning element lies in the span.
    pub graded: bool,
    pub span_dim: usize,
}

type CosetKey = (Vec<i64>, Word);

fn grouplike(x: &UElt) -> Option<&QVec> {
    match x.terms.iter().next() {
        Some(((f, k, e), _)) if x.terms.len() == 1 && f.is_empty() && e.is_empty() => Some(k),
        _ => None,
    }
}

fn degree(x: &UElt) -> usize {
    x.terms.keys().map(|(_, _, e)| e.len()).max().unwrap_or(0)
}

/// Splits by `K`-exponent and replaces each exponent by its representative
/// modulo `lat`. Left multiplication by `K_λ`, `λ ∈ lat`, is invisible here.
fn coset_components(lat: &LatticeSubgroup, x: &UElt) -> Vec<Lin<CosetKey>> {
    let mut by: std::collections::BTreeMap<&QVec, Lin<CosetKey>> = Default::default();
    for ((_, k, e), c) in &x.terms {
        add_term(by.entry(k).or_default(), (lat.reduce(k), e.clone()), c.clone());
    }
    by.into_values().collect()
}

/// Spans the subalgebra generated by `gens` (grouplike generators
/// `K_μ` generate a lattice `L` acting freely) through products of the
/// other generators of total degree at most `h`, then tests the right
/// coideal property and the `Q`-grading on that span.
pub fn coideal_report(ctx: &NfContext, gens: &[UElt], h: u32) -> Result<CoidealReport> {
    let n = ctx.rank();
    if gens.iter().any(|g| !g.is_borel()) {
        return Err(Error::InvalidInput("generators must lie in U^{>=0}".into()));
    }
    let lat = LatticeSubgroup::from_generators(n, gens.iter().filter_map(grouplike));
    let others: Vec<(&UElt, usize)> =
        gens.iter().filter(|g| grouplike(g).is_none() && !g.is_zero()).map(|g| (g, degree(g).max(1))).collect();
    if let Some(d) = gens.iter().map(degree).max().filter(|&d| d > h as usize) {
        return Err(Error::HeightOverflow { height: d as u32, bound: h });
    }
    // products of total degree ≤ h
    let mut products = vec![UElt::one(n)];
    let mut frontier = vec![(UElt::one(n), 0usize)];
    while let Some((p, used)) = frontier.pop() {
        for (g, d) in &others {
            if used + d <= h as usize {
                let next = p.mul(ctx, g)?;
                products.push(next.clone());
                frontier.push((next, used + d));
            }
        }
    }
    let mut span: Echelon<CosetKey> = Echelon::new();
    for p in &products {
        let mut whole = Lin::new();
        for c in coset_components(&lat, p) {
            axpy(&mut whole, &QRat::one(), &c);
        }
        span.insert(&whole);
    }
    let mut graded = true;
    let mut coideal = true;
    for p in &products {
        if coset_components(&lat, p).iter().any(|c| !span.contains(c)) {
            graded = false;
        }
        for left in coproduct(ctx, p)?.by_right().values() {
            if coset_components(&lat, left).iter().any(|c| !span.contains(c)) {
                coideal = false;
            }
        }
    }
    Ok(CoidealReport { coideal, graded, span_dim: span.rank() })
}

/// True iff [`coideal_report`] finds both the coideal property and the
/// grading.
pub fn coideal_check(ctx: &NfContext, gens: &[UElt], h: u32) -> Result<bool> {
    let r = coideal_report(ctx, gens, h)?;
    Ok(r.coideal && r.graded)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;
    use crate::strata::{enumerate_strata, max_admissible_lattice};
    use crate::weyl::{ReducedWord, WeylElt};

    #[test]
    fn rank_one_twist() {
        let rs = RootSystem::from_type("A1").unwrap();
        let ctx = NfContext::with_bound(&rs, 4);
        let word = ReducedWord::parse(&rs, "1").unwrap();
        let w = word.element(&rs);
        let basis = PbwBasis::new(&ctx, &word).unwrap();
        let strata = enumerate_strata(&rs, &w, &word).unwrap();
        let st = strata.iter().find(|s| s.dim == 1).unwrap().clone();
        let c = QRat::from_int(3) * QRat::q_pow(2);
        let ch = CharacterData::new(st, vec![c.clone()]).unwrap();
        let triple = CoidealTriple::new(ch, LatticeSubgroup::zero(1));
        let g = twist_generators(&ctx, &basis, &triple).unwrap();
        let kinv = UElt::k(QVec::new(vec![-1]));
        // c·K⁻¹ + q^{-d} E K⁻¹
        let expect = kinv.scale(&c).add(&UElt::e(1, 0).mul(&ctx, &kinv).unwrap().scale(&QRat::q_pow(-rs.d(0))));
        assert_eq!(g, vec![expect]);
        assert!(coideal_check(&ctx, &g, 4).unwrap());
    }

    #[test]
    fn counit_twist_is_psi() {
        let rs = RootSystem::from_type("B2").unwrap();
        let ctx = NfContext::new(&rs);
        let word = ReducedWord::parse(&rs, "1,2,1,2").unwrap();
        let w = word.element(&rs);
        let basis = PbwBasis::new(&ctx, &word).unwrap();
        let eps = CharacterData::counit(&rs, &w, &word).unwrap();
        let g = twist_generators(&ctx, &basis, &CoidealTriple::new(eps, LatticeSubgroup::zero(2))).unwrap();
        for k in 0..4 {
            assert_eq!(g[k], psi_apply(&ctx, basis.root_vector(k)));
        }
    }

    #[test]
    fn invalid_lattice() {
        let rs = RootSystem::from_type("A2").unwrap();
        let ctx = NfContext::new(&rs);
        let word = ReducedWord::parse(&rs, "1,2,1").unwrap();
        let basis = PbwBasis::new(&ctx, &word).unwrap();
        let st =
            enumerate_strata(&rs, &WeylElt::longest(&rs), &word).unwrap().into_iter().find(|s| s.dim == 1).unwrap();
        let triple = CoidealTriple::new(CharacterData::ones(st), LatticeSubgroup::full(2));
        assert!(matches!(twist_generators(&ctx, &basis, &triple), Err(Error::InvalidTriple(_))));
    }

    #[test]
    fn simple_generator_sets() {
        let rs = RootSystem::from_type("A2").unwrap();
        let ctx = NfContext::new(&rs);
        let k = |v: Vec<i64>| UElt::k(QVec::new(v));
        assert!(coideal_check(&ctx, &[k(vec![1, 0]), k(vec![-1, 0]), k(vec![0, 1])], 4).unwrap());
        assert!(!coideal_check(&ctx, &[UElt::e(2, 0)], 4).unwrap());
        assert!(coideal_check(&ctx, &[UElt::e(2, 0), k(vec![1, 0]), k(vec![-1, 0])], 4).unwrap());
        let big = UElt::e(2, 0).pow(&ctx, 3).unwrap();
        assert_eq!(coideal_check(&ctx, &[big], 2), Err(Error::HeightOverflow { height: 3, bound: 2 }));
    }

    #[test]
    fn a2_strata_twists_are_coideals() {
        let rs = RootSystem::from_type("A2").unwrap();
        let ctx = NfContext::new(&rs);
        for w in crate::weyl::all_elements(&rs) {
            let word = w.reduced_word(&rs);
            let basis = PbwBasis::new(&ctx, &word).unwrap();
            for st in enumerate_strata(&rs, &w, &word).unwrap() {
                let ch = CharacterData::ones(st);
                let lat = max_admissible_lattice(&rs, &ch);
                let g = twist_generators(&ctx, &basis, &CoidealTriple::new(ch, lat)).unwrap();
                let r = coideal_report(&ctx, &g, 4).unwrap();
                assert!(r.coideal && r.graded, "{word} {r:?}");
            }
        }
    }

    #[test]
    fn twist_map_is_injective_on_low_weights() {
        let rs = RootSystem::from_type("A2").unwrap();
        let ctx = NfContext::new(&rs);
        let word = ReducedWord::parse(&rs, "1,2,1").unwrap();
        let basis = PbwBasis::new(&ctx, &word).unwrap();
        for st in enumerate_strata(&rs, &word.element(&rs), &word).unwrap() {
            let ch = CharacterData::ones(st);
            let mut span: Echelon<crate::uqplus::UKey> = Echelon::new();
            let mut count = 0;
            for x in 0..=2i64 {
                for y in 0..=2 - x {
                    for a in basis.exponents_of_weight(&QVec::new(vec![x, y])) {
                        let m = basis.monomial(&ctx, &a).unwrap();
                        assert!(span.insert(&twist_element(&ctx, &basis, &ch, &m).unwrap().terms));
                        count += 1;
                    }
                }
            }
            assert_eq!(span.rank(), count);
        }
    }
}
