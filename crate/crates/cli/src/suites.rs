//! Self-checks run by `coideal verify`. Each suite returns one [`Check`] per
//! property, aggregated over every case it visits.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use coideal_core::coeffs::QRat;
use coideal_core::rootsys::{QVec, RootSystem};
use coideal_core::strata::{
    enumerate_strata, enumerate_tw, kappa, max_admissible_lattice, CharacterData, CoidealTriple, ThetaSet,
};
use coideal_core::uqplus::{
    char_well_defined, coideal_check, coproduct, defining_relations, enumerate_polynomial_ideals, is_coassociative_at,
    is_q2_compatible, kostant_partitions, psi_apply, psi_inverse, satisfies_counit_law, twist_generators,
    words_of_weight, Braid, CharValues, Gen, NfContext, PbwBasis, UElt, UPlusElt,
};
use coideal_core::weyl::{
    all_elements, bruhat_le, chain_is_valid, normalize_reflection_sequence, weyl_bruhat_equiv, ReducedWord, WeylElt,
};
use coideal_core::{Error, Result};

use crate::config::RunConfig;

pub const SUITES: [&str; 7] = ["strata", "chains", "lusztig", "pbw", "ls", "chars", "hopf"];

const SEED: u64 = 0x5eed;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Counts cases and keeps the first failure.
struct Tally {
    suite: &'static str,
    name: String,
    cases: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(suite: &'static str, name: &str) -> Self {
        Tally { suite, name: name.to_string(), cases: 0, failure: None }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn finish(self) -> Check {
        let detail = match &self.failure {
            Some(f) => format!("{} cases, first failure: {f}", self.cases),
            None => format!("{} cases", self.cases),
        };
        Check { suite: self.suite, name: self.name, passed: self.failure.is_none(), detail }
    }
}

/// Runs the suite named in `cfg` (or every suite for `all`).
pub fn run(cfg: &RunConfig) -> Result<Vec<Check>> {
    let names: Vec<&str> = if cfg.suite == "all" { SUITES.to_vec() } else { vec![cfg.suite.as_str()] };
    let mut out = Vec::new();
    for name in names {
        out.extend(run_one(cfg, name)?);
    }
    Ok(out)
}

fn run_one(cfg: &RunConfig, name: &str) -> Result<Vec<Check>> {
    let rs = &cfg.rs;
    match name {
        "strata" => strata(rs),
        "chains" => chains_suite(rs),
        "lusztig" => lusztig(&cfg.context()),
        "pbw" => pbw(&cfg.context()),
        "ls" => ls(&cfg.context()),
        "chars" => chars(&cfg.context()),
        "hopf" => hopf(&cfg.context()),
        other => Err(Error::InvalidInput(format!("unknown suite {other:?}"))),
    }
}

fn subsets(t: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << t).map(move |m| (0..t).filter(|k| m >> k & 1 == 1).collect())
}

/// Elements with a reduced word each. Small groups are taken whole; larger
/// ones fall back to `w0`.
fn sample_elements(rs: &RootSystem, limit: usize) -> Vec<(WeylElt, ReducedWord)> {
    let all = all_elements(rs);
    let pick = if all.len() <= limit { all } else { vec![WeylElt::longest(rs)] };
    pick.into_iter()
        .map(|w| {
            let word = w.reduced_word(rs);
            (w, word)
        })
        .collect()
}

fn strata(rs: &RootSystem) -> Result<Vec<Check>> {
    const S: &str = "strata";
    let mut oracle = Tally::new(S, "T^w equals the brute-force subset search");
    let mut closed = Tally::new(S, "T^w is closed under subsets");
    let mut injective = Tally::new(S, "kappa is injective and order-reversing");
    let mut dims = Tally::new(S, "stratum dimension is l(w) - l(y) and y <= w");
    let mut rank2 = Tally::new(S, "rank-2 strata use only the first and last root");
    let all = all_elements(rs);
    let every_word = all.len() <= 48;
    for w in &all {
        let words = if every_word { w.all_reduced_words(rs) } else { vec![w.reduced_word(rs)] };
        for word in words {
            let t = word.len();
            let tw = enumerate_tw(rs, w, &word)?;
            let got: BTreeSet<Vec<usize>> = tw.iter().map(|th| th.indices.clone()).collect();
            let mut brute = BTreeSet::new();
            for s in subsets(t) {
                if ThetaSet::from_indices(rs, &word, &s)?.is_in_tw(rs) {
                    brute.insert(s);
                }
            }
            oracle.record(got == brute, || format!("word {word}"));
            for s in &got {
                for k in 0..s.len() {
                    let mut smaller = s.clone();
                    smaller.remove(k);
                    closed.record(got.contains(&smaller), || format!("word {word}, {s:?}"));
                }
            }
            let ys: Vec<WeylElt> = tw.iter().map(|th| kappa(rs, th)).collect();
            let distinct: BTreeSet<&WeylElt> = ys.iter().collect();
            injective.record(distinct.len() == ys.len(), || format!("word {word}: repeated y"));
            for (a, ta) in tw.iter().enumerate() {
                for (b, tb) in tw.iter().enumerate() {
                    if a != b && ta.indices.iter().all(|k| tb.indices.contains(k)) {
                        injective.record(bruhat_le(rs, &ys[b], &ys[a]), || format!("word {word}: {:?}", tb.indices));
                    }
                }
            }
            for st in enumerate_strata(rs, w, &word)? {
                let ok = st.dim + st.y.length() == w.length() && bruhat_le(rs, &st.y, w);
                dims.record(ok, || format!("word {word}: {:?}", st.theta.indices));
            }
            if rs.rank() == 2 {
                for s in &got {
                    let ok = s.iter().all(|&k| k == 0 || k + 1 == t);
                    rank2.record(ok, || format!("word {word}: {s:?}"));
                }
            }
        }
    }
    let mut out = vec![oracle.finish(), closed.finish(), injective.finish(), dims.finish()];
    if rs.rank() == 2 {
        out.push(rank2.finish());
    }
    Ok(out)
}

/// A random length chain of `m` roots starting at `w`, if one exists.
fn random_chain(rs: &RootSystem, rng: &mut StdRng, w: &WeylElt, m: usize) -> Option<Vec<QVec>> {
    let mut x = w.clone();
    let mut out = Vec::new();
    for _ in 0..m {
        let steps: Vec<(QVec, WeylElt)> = x
            .inversion_set(rs)
            .into_iter()
            .filter_map(|b| {
                let y = WeylElt::reflection(rs, &b).ok()?.mul(rs, &x);
                (y.length() + 1 == x.length()).then_some((b, y))
            })
            .collect();
        let (b, y) = steps.choose(rng)?.clone();
        out.push(b);
        x = y;
    }
    Some(out)
}

fn chains_suite(rs: &RootSystem) -> Result<Vec<Check>> {
    const S: &str = "chains";
    let mut rng = StdRng::seed_from_u64(SEED);
    let all = all_elements(rs);
    let roots = rs.positive_roots();
    let mut equiv = Tally::new(S, "the three descent conditions agree");
    let mut cases: Vec<(&WeylElt, &QVec)> = Vec::new();
    if rs.rank() <= 2 {
        cases.extend(all.iter().flat_map(|u| roots.iter().map(move |b| (u, b))));
    } else {
        for _ in 0..1000 {
            cases.push((all.choose(&mut rng).unwrap(), roots.choose(&mut rng).unwrap()));
        }
    }
    for (u, b) in cases {
        let (c1, c2, c3) = weyl_bruhat_equiv(rs, u, b)?;
        equiv.record(c1 == c2 && c2 == c3, || format!("u = {}, beta = {b}", u.display(rs)));
    }

    let mut norm = Tally::new(S, "normalized chains keep the product and start non-orthogonal");
    let max_m = 4.min(WeylElt::longest(rs).length());
    let product = |w: &WeylElt, bs: &[QVec]| -> Result<WeylElt> {
        let mut x = w.clone();
        for b in bs {
            x = WeylElt::reflection(rs, b)?.mul(rs, &x);
        }
        Ok(x)
    };
    let mut attempts = 0;
    while norm.cases < 100 && max_m >= 2 && attempts < 10_000 {
        attempts += 1;
        let m = rng.gen_range(2..=max_m);
        let w = all.choose(&mut rng).unwrap();
        let Some(chain) = random_chain(rs, &mut rng, w, m) else { continue };
        match normalize_reflection_sequence(rs, w, &chain) {
            Ok(b) => {
                let ok = chain_is_valid(rs, w, &b)
                    && rs.bilinear(&b[0], &b[1]) != 0
                    && product(w, &b)? == product(w, &chain)?;
                norm.record(ok, || format!("w = {}", w.display(rs)));
            }
            Err(Error::NoNonorthogonalPair) => {
                let orth = chain.iter().all(|a| chain.iter().all(|b| rs.bilinear(a, b) == 0 || a == b));
                norm.record(orth, || format!("w = {}: spurious orthogonality", w.display(rs)));
            }
            Err(e) => norm.record(false, || format!("w = {}: {e}", w.display(rs))),
        }
    }
    Ok(vec![equiv.finish(), norm.finish()])
}

fn lusztig(ctx: &NfContext) -> Result<Vec<Check>> {
    const S: &str = "lusztig";
    let n = ctx.rank();
    let rels = defining_relations(ctx);
    let mut killed = Tally::new(S, "braid automorphisms kill the defining relations");
    let mut inverse = Tally::new(S, "T and T^-1 are mutually inverse on generators");
    for a in 0..n {
        let fwd = Braid::new(ctx, a, false)?;
        let inv = Braid::new(ctx, a, true)?;
        for (name, r) in &rels {
            killed.record(fwd.apply_expr(ctx, r)?.is_zero(), || format!("T{} {name}", a + 1));
            killed.record(inv.apply_expr(ctx, r)?.is_zero(), || format!("T{}^-1 {name}", a + 1));
        }
        let gens = (0..n).flat_map(|b| [Gen::E(b), Gen::F(b), Gen::K(QVec::simple(n, b))]);
        for g in gens {
            let x = UElt::gen(n, &g);
            let ok = fwd.apply(ctx, &inv.apply(ctx, &x)?)? == x && inv.apply(ctx, &fwd.apply(ctx, &x)?)? == x;
            inverse.record(ok, || format!("T{} on {g:?}", a + 1));
        }
    }
    Ok(vec![killed.finish(), inverse.finish()])
}

/// Nonnegative weights of height `1..=h`.
fn weights_up_to(n: usize, h: i64) -> Vec<QVec> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn go(k: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<QVec>) {
        if k == cur.len() {
            if cur.iter().sum::<i64>() > 0 {
                out.push(QVec::new(cur.clone()));
            }
            return;
        }
        for x in 0..=left {
            cur[k] = x;
            go(k + 1, left - x, cur, out);
        }
        cur[k] = 0;
    }
    go(0, h, &mut cur, &mut out);
    out
}

fn pbw(ctx: &NfContext) -> Result<Vec<Check>> {
    const S: &str = "pbw";
    let rs = ctx.rs();
    let w0 = WeylElt::longest(rs).reduced_word(rs);
    let basis = PbwBasis::new(ctx, &w0)?;
    let mut span = Tally::new(S, "w0 PBW monomials span each weight space with Kostant dimension");
    let mut indep = Tally::new(S, "PBW monomials are independent for every element");
    for mu in weights_up_to(rs.rank(), ctx.bound() as i64) {
        let r = basis.weight_rank(ctx, &mu)?;
        let ok = r == ctx.dim(&mu)? && r as u64 == kostant_partitions(rs, &mu);
        span.record(ok, || format!("weight {mu}"));
    }
    if rs.rank() <= 2 {
        for (_, word) in sample_elements(rs, 48) {
            let b = PbwBasis::new(ctx, &word)?;
            for mu in weights_up_to(rs.rank(), ctx.bound() as i64) {
                let expected = b.exponents_of_weight(&mu).len();
                match b.weight_rank(ctx, &mu) {
                    Ok(r) => indep.record(r == expected, || format!("word {word}, weight {mu}")),
                    Err(e) => indep.record(false, || format!("word {word}, weight {mu}: {e}")),
                }
            }
        }
    }
    let mut out = vec![span.finish()];
    if rs.rank() <= 2 {
        out.push(indep.finish());
    }
    Ok(out)
}

fn ls(ctx: &NfContext) -> Result<Vec<Check>> {
    const S: &str = "ls";
    let rs = ctx.rs();
    let mut shape = Tally::new(S, "ls relations live strictly between i and j with weight beta_i + beta_j");
    for (_, word) in sample_elements(rs, 24) {
        let basis = PbwBasis::new(ctx, &word)?;
        let betas = basis.betas().to_vec();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let target = &betas[i] + &betas[j];
                if target.coord_sum() > ctx.bound() as i64 {
                    continue;
                }
                let v = basis.ls_relation(ctx, i, j)?;
                let ok = v.terms.keys().all(|a| {
                    let inside = a.iter().enumerate().all(|(k, &x)| x == 0 || (i < k && k < j));
                    inside && basis.weight_of(a) == target
                });
                shape.record(ok, || format!("word {word}, ({}, {})", i + 1, j + 1));
            }
        }
    }
    Ok(vec![shape.finish()])
}

fn chars(ctx: &NfContext) -> Result<Vec<Check>> {
    const S: &str = "chars";
    let rs = ctx.rs();
    let mut ideals = Tally::new(S, "polynomial-quotient ideals are exactly T^w");
    let mut dichotomy = Tally::new(S, "a character with support Theta is well defined iff Theta is in T^w");
    for (w, word) in sample_elements(rs, 24) {
        let basis = PbwBasis::new(ctx, &word)?;
        let tw: BTreeSet<Vec<usize>> = enumerate_tw(rs, &w, &word)?.into_iter().map(|t| t.indices).collect();
        let found: BTreeSet<Vec<usize>> = enumerate_polynomial_ideals(ctx, &basis)?.into_iter().collect();
        ideals.record(found == tw, || format!("word {word}"));
        for s in subsets(word.len()) {
            let ok = char_well_defined(ctx, &basis, &s, &CharValues::Symbolic)? == tw.contains(&s);
            dichotomy.record(ok, || format!("word {word}, {s:?}"));
        }
    }
    Ok(vec![ideals.finish(), dichotomy.finish()])
}

fn random_plus(ctx: &NfContext, rng: &mut StdRng, mu: &QVec) -> Result<UPlusElt> {
    let mut x = UPlusElt::zero();
    for w in words_of_weight(mu.coords()) {
        let c = QRat::from_int(rng.gen_range(-2..=2)) * QRat::q_pow(rng.gen_range(-1..=1));
        x = x.add(&UPlusElt { terms: ctx.nf_word(&w)? }.scale(&c));
    }
    Ok(x)
}

fn random_weight(rng: &mut StdRng, n: usize, h: i64) -> QVec {
    let mut v = vec![0; n];
    for _ in 0..rng.gen_range(1..=h) {
        v[rng.gen_range(0..n)] += 1;
    }
    QVec::new(v)
}

fn hopf(ctx: &NfContext) -> Result<Vec<Check>> {
    const S: &str = "hopf";
    let rs = ctx.rs();
    let n = rs.rank();
    let mut rng = StdRng::seed_from_u64(SEED);
    let h = 4.min(ctx.bound() as i64);
    let mut laws = Tally::new(S, "coassociativity, counit law and q2 grading on samples");
    let mut mult = Tally::new(S, "coproduct is multiplicative on samples");
    let mut psi = Tally::new(S, "psi is multiplicative and inverted by psi_inverse");
    for _ in 0..20 {
        let mu = random_weight(&mut rng, n, h);
        let k = QVec::new((0..n).map(|_| rng.gen_range(-1..=1)).collect());
        let x = UElt::k(k).mul(ctx, &UElt::from_plus(&QVec::zero(n), &random_plus(ctx, &mut rng, &mu)?))?;
        let ok = is_coassociative_at(ctx, &x)? && satisfies_counit_law(ctx, &x)? && is_q2_compatible(ctx, &x)?;
        laws.record(ok, || format!("weight {mu}"));
        let nu = random_weight(&mut rng, n, (h - mu.coord_sum()).max(1));
        if (&mu + &nu).coord_sum() <= h {
            let y = UElt::from_plus(&QVec::zero(n), &random_plus(ctx, &mut rng, &nu)?);
            let ok = coproduct(ctx, &x.mul(ctx, &y)?)? == coproduct(ctx, &x)?.mul(ctx, &coproduct(ctx, &y)?)?;
            mult.record(ok, || format!("weights {mu}, {nu}"));
        }
    }
    let top = ctx.bound() as i64;
    for _ in 0..100 {
        let mu = random_weight(&mut rng, n, (top / 2).max(1));
        let nu = random_weight(&mut rng, n, (top / 2).max(1));
        let x = random_plus(ctx, &mut rng, &mu)?;
        let y = random_plus(ctx, &mut rng, &nu)?;
        let ok = psi_apply(ctx, &x.mul(ctx, &y)?) == psi_apply(ctx, &x).mul(ctx, &psi_apply(ctx, &y))?
            && psi_inverse(ctx, &psi_apply(ctx, &x))? == x;
        psi.record(ok, || format!("weights {mu}, {nu}"));
    }
    let mut out = vec![laws.finish(), mult.finish(), psi.finish()];
    if n <= 2 {
        let mut coideal = Tally::new(S, "twisted generators span right coideal subalgebras");
        for (w, word) in sample_elements(rs, 12) {
            let basis = PbwBasis::new(ctx, &word)?;
            let deg = word.roots(rs).iter().map(|b| b.coord_sum()).max().unwrap_or(0);
            let cap = (h.max(deg)).min(top) as u32;
            for st in enumerate_strata(rs, &w, &word)? {
                let ch = CharacterData::ones(st);
                let lat = max_admissible_lattice(rs, &ch);
                let what = format!("word {word}, {:?}", ch.stratum.theta.indices);
                let gens = twist_generators(ctx, &basis, &CoidealTriple::new(ch, lat))?;
                let ok = coideal_check(ctx, &gens, cap)?;
                coideal.record(ok, || what);
            }
        }
        out.push(coideal.finish());
    }
    Ok(out)
}
