use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::free::{serre_relation, word_weight, words_of_weight, FreeElt, Word};
use super::linalg::{add_term, axpy, Echelon, Lin};
use crate::coeffs::QRat;
use crate::error::{Error, Result};
use crate::rootsys::{QVec, RootSystem};

/// The Serre ideal in one weight component of the free algebra.
#[derive(Debug)]
pub struct WeightData {
    pub words: Vec<Word>,
    pub ideal: Echelon<Word>,
    /// Non-pivot words, a basis of `U⁺_μ`.
    pub standard: Vec<Word>,
}

/// Per-weight normal forms for U⁺ (and, with the same relations, U⁻),
/// built lazily up to a height bound.
pub struct NfContext {
    rs: RootSystem,
    bound: u32,
    serre: Vec<(QVec, FreeElt)>,
    cache: Mutex<HashMap<QVec, Arc<WeightData>>>,
    pub(super) ef_cache: Mutex<HashMap<(Word, Word), Arc<Vec<super::uelt::RawTerm>>>>,
}

impl NfContext {
    /// Height bound `2 · ht(θ)` for the highest root θ.
    pub fn new(rs: &RootSystem) -> Self {
        let h = rs.height(rs.highest_root()).expect("positive root") as u32;
        NfContext::with_bound(rs, 2 * h)
    }

    pub fn with_bound(rs: &RootSystem, bound: u32) -> Self {
        let n = rs.rank();
        let mut serre = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let s = serre_relation(rs, i, j).expect("distinct indices");
                    serre.push((s.weight(n).expect("homogeneous"), s));
                }
            }
        }
        NfContext {
            rs: rs.clone(),
            bound,
            serre,
            cache: Mutex::new(HashMap::new()),
            ef_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn check_height(&self, mu: &QVec) -> Result<()> {
        let h = mu.coord_sum();
        if h > self.bound as i64 {
            return Err(Error::HeightOverflow { height: h as u32, bound: self.bound });
        }
        Ok(())
    }

    /// Ideal and complement data for weight `mu ∈ Q₊`.
    pub fn weight_data(&self, mu: &QVec) -> Result<Arc<WeightData>> {
        self.check_height(mu)?;
        if !mu.is_nonneg() {
            return Err(Error::NotInPositiveCone);
        }
        if let Some(d) = self.cache.lock().unwrap().get(mu) {
            return Ok(d.clone());
        }
        let n = self.rank();
        let words = words_of_weight(mu);
        let mut ideal = Echelon::new();
        // I_μ = Σ_i I_{μ−α_i} E_i + Σ_S Free_{μ−wt S} S
        for i in 0..n {
            let prev = mu - &QVec::simple(n, i);
            if !prev.is_nonneg() {
                continue;
            }
            let pd = self.weight_data(&prev)?;
            for p in pd.ideal.pivots() {
                let row = pd.ideal.row(p).unwrap();
                let v: Lin<Word> = row
                    .iter()
                    .map(|(w, c)| {
                        let mut w2 = w.clone();
                        w2.push(i as u8);
                        (w2, c.clone())
                    })
                    .collect();
                ideal.insert(&v);
            }
        }
        for (sw, s) in &self.serre {
            let rest = mu - sw;
            if !rest.is_nonneg() {
                continue;
            }
            for u in words_of_weight(&rest) {
                let v = FreeElt::word(u, QRat::one()).mul(s);
                ideal.insert(&v.terms);
            }
        }
        let standard = words.iter().filter(|w| !ideal.is_pivot(w)).cloned().collect();
        let data = Arc::new(WeightData { words, ideal, standard });
        self.cache.lock().unwrap().insert(mu.clone(), data.clone());
        Ok(data)
    }

    pub fn dim(&self, mu: &QVec) -> Result<usize> {
        Ok(self.weight_data(mu)?.standard.len())
    }

    /// Normal form of a single word.
    pub fn nf_word(&self, w: &[u8]) -> Result<Lin<Word>> {
        let mu = word_weight(self.rank(), w);
        let d = self.weight_data(&mu)?;
        let mut out = Lin::new();
        match d.ideal.row(&w.to_vec()) {
            None => add_term(&mut out, w.to_vec(), QRat::one()),
            Some(row) => {
                for (k, c) in row {
                    if k.as_slice() != w {
                        add_term(&mut out, k.clone(), -c);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn nf(&self, x: &Lin<Word>) -> Result<Lin<Word>> {
        let mut out = Lin::new();
        for (w, c) in x {
            axpy(&mut out, c, &self.nf_word(w)?);
        }
        Ok(out)
    }
}

/// An element of U⁺ in normal form: coordinates over standard words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UPlusElt {
    pub terms: Lin<Word>,
}

impl UPlusElt {
    pub fn zero() -> Self {
        UPlusElt::default()
    }

    pub fn one() -> Self {
        UPlusElt::scalar(QRat::one())
    }

    pub fn scalar(c: QRat) -> Self {
        let mut terms = Lin::new();
        add_term(&mut terms, vec![], c);
        UPlusElt { terms }
    }

    pub fn gen(i: usize) -> Self {
        let mut terms = Lin::new();
        add_term(&mut terms, vec![i as u8], QRat::one());
        UPlusElt { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &UPlusElt) -> UPlusElt {
        let mut t = self.terms.clone();
        axpy(&mut t, &QRat::one(), &other.terms);
        UPlusElt { terms: t }
    }

    pub fn sub(&self, other: &UPlusElt) -> UPlusElt {
        let mut t = self.terms.clone();
        axpy(&mut t, &-QRat::one(), &other.terms);
        UPlusElt { terms: t }
    }

    pub fn scale(&self, c: &QRat) -> UPlusElt {
        let mut t = Lin::new();
        axpy(&mut t, c, &self.terms);
        UPlusElt { terms: t }
    }

    pub fn mul(&self, ctx: &NfContext, other: &UPlusElt) -> Result<UPlusElt> {
        let mut raw = Lin::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                add_term(&mut raw, w, x * y);
            }
        }
        Ok(UPlusElt { terms: ctx.nf(&raw)? })
    }

    pub fn pow(&self, ctx: &NfContext, k: u32) -> Result<UPlusElt> {
        let mut acc = UPlusElt::one();
        for _ in 0..k {
            acc = acc.mul(ctx, self)?;
        }
        Ok(acc)
    }

    /// Splits into homogeneous components.
    pub fn components(&self, n: usize) -> Vec<(QVec, UPlusElt)> {
        let mut by: std::collections::BTreeMap<QVec, UPlusElt> = Default::default();
        for (w, c) in &self.terms {
            add_term(&mut by.entry(word_weight(n, w)).or_default().terms, w.clone(), c.clone());
        }
        by.into_iter().collect()
    }

    pub fn weight(&self, n: usize) -> Result<QVec> {
        let comps = self.components(n);
        match comps.len() {
            0 => Ok(QVec::zero(n)),
            1 => Ok(comps[0].0.clone()),
            _ => Err(Error::NotHomogeneous),
        }
    }
}

impl fmt::Display for UPlusElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::fmt_sum(f, self.terms.iter(), |f, w| super::free::fmt_word(f, 'E', w))
    }
}

/// Reduces a free-algebra element modulo the Serre ideal.
pub fn nf_plus(ctx: &NfContext, x: &FreeElt) -> Result<UPlusElt> {
    Ok(UPlusElt { terms: ctx.nf(&x.terms)? })
}

/// Kostant's partition function: the number of ways to write `mu` as an
/// ℕ₀-combination of positive roots.
pub fn kostant_partitions(rs: &RootSystem, mu: &QVec) -> u64 {
    fn go(roots: &[QVec], k: usize, rest: &QVec, memo: &mut HashMap<(usize, QVec), u64>) -> u64 {
        if rest.is_zero() {
            return 1;
        }
        if k == roots.len() || !rest.is_nonneg() {
            return 0;
        }
        if let Some(&v) = memo.get(&(k, rest.clone())) {
            return v;
        }
        let mut total = 0;
        let mut r = rest.clone();
        while r.is_nonneg() {
            total += go(roots, k + 1, &r, memo);
            r = &r - &roots[k];
        }
        memo.insert((k, rest.clone()), total);
        total
    }
    go(rs.positive_roots(), 0, mu, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weights_up_to(n: usize, h: i64) -> Vec<QVec> {
        let mut out = vec![QVec::zero(n)];
        let mut frontier = out.clone();
        for _ in 0..h {
            let mut next = Vec::new();
            for m in &frontier {
                for i in 0..n {
                    let v = m + &QVec::simple(n, i);
                    if !next.contains(&v) {
                        next.push(v);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn serre_elements_reduce_to_zero() {
        for t in ["A2", "B2", "G2", "A1xA1"] {
            let rs = RootSystem::from_type(t).unwrap();
            let ctx = NfContext::with_bound(&rs, 8);
            for i in 0..2 {
                for j in 0..2 {
                    if i != j {
                        let s = serre_relation(&rs, i, j).unwrap();
                        assert!(nf_plus(&ctx, &s).unwrap().is_zero(), "{t}");
                        let wrapped = FreeElt::gen(1).mul(&s).mul(&FreeElt::gen(0));
                        assert!(nf_plus(&ctx, &wrapped).unwrap().is_zero());
                    }
                }
            }
            assert!(nf_plus(&ctx, &FreeElt::zero()).unwrap().is_zero());
        }
    }

    #[test]
    fn low_weights_are_free() {
        let rs = RootSystem::from_type("A2").unwrap();
        let ctx = NfContext::new(&rs);
        assert_eq!(ctx.dim(&QVec::new(vec![1, 1])).unwrap(), 2);
        let x = FreeElt::word(vec![0, 1], QRat::one()).add(&FreeElt::word(vec![1, 0], QRat::q_pow(1)));
        assert_eq!(nf_plus(&ctx, &x).unwrap().terms, x.terms);
        assert_eq!(ctx.dim(&QVec::new(vec![2, 1])).unwrap(), 2);
    }

    #[test]
    fn dimensions_match_kostant_count() {
        for t in ["A2", "B2", "G2", "A3", "A1xA1"] {
            let rs = RootSystem::from_type(t).unwrap();
            let ctx = NfContext::new(&rs);
            let h = if t == "G2" { 7 } else { ctx.bound() as i64 };
            for mu in weights_up_to(rs.rank(), h) {
                let d = ctx.weight_data(&mu).unwrap();
                assert_eq!(d.standard.len() + d.ideal.rank(), d.words.len());
                assert_eq!(d.standard.len() as u64, kostant_partitions(&rs, &mu), "{t} {mu:?}");
            }
        }
    }

    #[test]
    fn height_overflow() {
        let rs = RootSystem::from_type("A2").unwrap();
        let ctx = NfContext::with_bound(&rs, 3);
        assert_eq!(ctx.nf_word(&[0, 0, 1, 1]), Err(Error::HeightOverflow { height: 4, bound: 3 }));
    }
}
