use std::fmt::Write;

use serde::Serialize;

use super::{enumerate_strata, max_admissible_lattice, CharacterData};
use crate::error::Result;
use crate::rootsys::{QVec, RootSystem};
use crate::weyl::{bruhat_le, ReducedWord, WeylElt};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub y_word: ReducedWord,
    pub theta_roots: Vec<QVec>,
    pub dim: usize,
    #[serde(rename = "Lmax_basis")]
    pub lmax_basis: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Totals {
    /// |T^w|
    pub tw: usize,
    /// |W^w|
    pub ww: usize,
}

/// One row per Θ ∈ T^w, ordered by dimension and then by Θ, so the rows do
/// not depend on the reduced word used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    #[serde(rename = "type")]
    pub type_name: String,
    pub word: ReducedWord,
    pub rows: Vec<ReportRow>,
    /// Pairs `(a, b)` of row positions (0-based) with `y_a < y_b` in Bruhat
    /// order.
    pub bruhat: Vec<(usize, usize)>,
    pub totals: Totals,
}

pub fn classify(rs: &RootSystem, w: &WeylElt, word: &ReducedWord) -> Result<ClassificationReport> {
    let mut strata = enumerate_strata(rs, w, word)?;
    strata.sort_by_cached_key(|s| (s.dim, s.theta.root_set()));
    let rows: Vec<ReportRow> = strata
        .iter()
        .map(|s| ReportRow {
            y_word: s.y.reduced_word(rs),
            theta_roots: s.theta.root_set(),
            dim: s.dim,
            lmax_basis: max_admissible_lattice(rs, &CharacterData::ones(s.clone())).basis().to_vec(),
        })
        .collect();
    let mut bruhat = Vec::new();
    for (a, sa) in strata.iter().enumerate() {
        for (b, sb) in strata.iter().enumerate() {
            if a != b && bruhat_le(rs, &sa.y, &sb.y) {
                bruhat.push((a, b));
            }
        }
    }
    let mut ys: Vec<&WeylElt> = strata.iter().map(|s| &s.y).collect();
    ys.sort();
    ys.dedup();
    Ok(ClassificationReport {
        type_name: rs.name().to_string(),
        word: word.clone(),
        totals: Totals { tw: strata.len(), ww: ys.len() },
        rows,
        bruhat,
    })
}

fn vecs(v: &[QVec]) -> String {
    if v.is_empty() {
        return "-".into();
    }
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        writeln!(s, "# type {} word {}", self.type_name, self.word).unwrap();
        writeln!(s, "y_word\ttheta_roots\tdim\tLmax_basis").unwrap();
        for r in &self.rows {
            let basis: Vec<QVec> = r.lmax_basis.iter().map(|b| QVec::new(b.clone())).collect();
            writeln!(s, "{}\t{}\t{}\t{}", r.y_word, vecs(&r.theta_roots), r.dim, vecs(&basis)).unwrap();
        }
        for &(a, b) in &self.bruhat {
            writeln!(s, "# bruhat {} < {}", self.rows[a].y_word, self.rows[b].y_word).unwrap();
        }
        writeln!(s, "# totals T^w={} W^w={}", self.totals.tw, self.totals.ww).unwrap();
        s
    }
}
