//! Sparse linear algebra over Q(q).

use std::collections::BTreeMap;

use crate::coeffs::QRat;

/// A sparse vector: no zero entries are stored.
pub type Lin<K> = BTreeMap<K, QRat>;

pub fn add_term<K: Ord>(v: &mut Lin<K>, k: K, c: QRat) {
    if c.is_zero() {
        return;
    }
    match v.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// `v += c · w`.
pub fn axpy<K: Ord + Clone>(v: &mut Lin<K>, c: &QRat, w: &Lin<K>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in w {
        add_term(v, k.clone(), c * x);
    }
}

pub fn scaled<K: Ord + Clone>(c: &QRat, w: &Lin<K>) -> Lin<K> {
    if c.is_zero() {
        return Lin::new();
    }
    w.iter().map(|(k, x)| (k.clone(), c * x)).collect()
}

#[derive(Clone, Debug)]
struct Row<K> {
    v: Lin<K>,
    /// The row as a combination of inserted vectors (only when tracking).
    combo: Lin<usize>,
}

/// Reduced row echelon form with the largest key of each row as its pivot.
/// Optionally records every row as a combination of the inserted vectors.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, Row<K>>,
    track: bool,
    inserted: usize,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon::new()
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Echelon { rows: BTreeMap::new(), track: false, inserted: 0 }
    }

    pub fn tracking() -> Self {
        Echelon { rows: BTreeMap::new(), track: true, inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.rows.contains_key(k)
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// The pivot row (normalized, pivot coefficient 1).
    pub fn row(&self, k: &K) -> Option<&Lin<K>> {
        self.rows.get(k).map(|r| &r.v)
    }

    /// Remainder of `v` modulo the row space, plus the combination of
    /// inserted vectors that was subtracted (empty unless tracking).
    pub fn reduce_with_combo(&self, v: &Lin<K>) -> (Lin<K>, Lin<usize>) {
        let mut v = v.clone();
        let mut combo = Lin::new();
        let hits: Vec<K> = v.keys().filter(|k| self.rows.contains_key(k)).cloned().collect();
        // Rows are fully reduced, so subtracting one never creates another pivot.
        for k in hits {
            let Some(c) = v.get(&k).cloned() else { continue };
            let row = &self.rows[&k];
            axpy(&mut v, &-&c, &row.v);
            if self.track {
                axpy(&mut combo, &c, &row.combo);
            }
        }
        (v, combo)
    }

    pub fn reduce(&self, v: &Lin<K>) -> Lin<K> {
        self.reduce_with_combo(v).0
    }

    pub fn contains(&self, v: &Lin<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v`; returns `true` if it was independent. Every call consumes
    /// one tag (`0, 1, 2, …`) for combination tracking.
    pub fn insert(&mut self, v: &Lin<K>) -> bool {
        let tag = self.inserted;
        self.inserted += 1;
        let (mut r, combo) = self.reduce_with_combo(v);
        let Some(p) = r.keys().next_back().cloned() else { return false };
        let mut combo = if self.track {
            let mut c = Lin::new();
            add_term(&mut c, tag, QRat::one());
            axpy(&mut c, &-QRat::one(), &combo);
            c
        } else {
            Lin::new()
        };
        let inv = r[&p].inv().expect("nonzero pivot");
        r = scaled(&inv, &r);
        if self.track {
            combo = scaled(&inv, &combo);
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.v.get(&p).cloned() {
                axpy(&mut row.v, &-&c, &r);
                if self.track {
                    axpy(&mut row.combo, &-&c, &combo);
                }
            }
        }
        self.rows.insert(p, Row { v: r, combo });
        true
    }

    /// Coefficients `c_tag` with `v = Σ c_tag · inserted[tag]`, if `v` lies in
    /// the row space. Requires tracking.
    pub fn solve(&self, v: &Lin<K>) -> Option<Lin<usize>> {
        assert!(self.track, "solve needs a tracking echelon");
        let (rest, combo) = self.reduce_with_combo(v);
        rest.is_empty().then_some(combo)
    }
}
