use std::fmt::Write;

use serde_json::json;

use coideal_core::rootsys::QVec;
use coideal_core::strata::{classify, enumerate_strata, ThetaJson};
use coideal_core::uqplus::PbwBasis;

use crate::config::{CliError, Format, RunConfig, Selector};
use crate::suites;

type Out = Result<String, CliError>;

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn join_roots(v: &[QVec]) -> String {
    if v.is_empty() {
        return "-".into();
    }
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn cmd_roots(cfg: &RunConfig) -> Out {
    let rs = &cfg.rs;
    let roots = rs.positive_roots();
    Ok(match cfg.format {
        Format::Json => pretty(&json!({
            "type": rs.name(),
            "rank": rs.rank(),
            "cartan": rs.cartan(),
            "d": (0..rs.rank()).map(|i| rs.d(i)).collect::<Vec<_>>(),
            "positive_roots": roots,
            "highest_root": rs.highest_root(),
        })),
        Format::Tsv => {
            let mut s = format!("# type {} rank {}\nindex\troot\theight\n", rs.name(), rs.rank());
            for (k, r) in roots.iter().enumerate() {
                writeln!(s, "{}\t{}\t{}", k + 1, r, r.coord_sum()).unwrap();
            }
            s
        }
    })
}

pub fn cmd_weyl(cfg: &RunConfig) -> Out {
    let rs = &cfg.rs;
    let elems = cfg.elements();
    Ok(match cfg.format {
        Format::Json => pretty(&serde_json::Value::Array(
            elems
                .iter()
                .map(|(w, word)| json!({"word": word, "length": w.length(), "inversions": w.inversion_set(rs)}))
                .collect(),
        )),
        Format::Tsv => {
            let mut s = String::from("word\tlength\tinversions\n");
            for (w, word) in &elems {
                writeln!(s, "{}\t{}\t{}", word, w.length(), join_roots(&w.inversion_set(rs))).unwrap();
            }
            s
        }
    })
}

pub fn cmd_strata(cfg: &RunConfig) -> Out {
    let rs = &cfg.rs;
    let mut json_out = Vec::new();
    let mut tsv = String::new();
    for (w, word) in cfg.elements() {
        let strata = enumerate_strata(rs, &w, &word)?;
        json_out.push(json!({
            "word": word,
            "strata": strata
                .iter()
                .map(|s| json!({
                    "y_word": s.y.reduced_word(rs),
                    "theta": ThetaJson::from(&s.theta),
                    "dim": s.dim,
                }))
                .collect::<Vec<_>>(),
        }));
        writeln!(tsv, "# word {word}\ny_word\ttheta_indices\ttheta_roots\tdim").unwrap();
        for s in &strata {
            let idx: Vec<String> = s.theta.indices.iter().map(|k| (k + 1).to_string()).collect();
            let idx = if idx.is_empty() { "-".to_string() } else { idx.join(",") };
            writeln!(tsv, "{}\t{}\t{}\t{}", s.y.reduced_word(rs), idx, join_roots(&s.theta.roots), s.dim).unwrap();
        }
    }
    Ok(match cfg.format {
        Format::Json => pretty(&serde_json::Value::Array(json_out)),
        Format::Tsv => tsv,
    })
}

pub fn cmd_classify(cfg: &RunConfig) -> Out {
    let rs = &cfg.rs;
    let reports = cfg.elements().iter().map(|(w, word)| classify(rs, w, word)).collect::<Result<Vec<_>, _>>()?;
    Ok(match (cfg.format, &cfg.selector) {
        (Format::Json, Selector::All) => pretty(&serde_json::to_value(&reports).expect("reports serialize")),
        (Format::Json, _) => reports[0].to_json() + "\n",
        (Format::Tsv, _) => reports.iter().map(|r| r.to_tsv()).collect::<Vec<_>>().join("\n"),
    })
}

/// `i` and `j` are 1-based.
pub fn cmd_ls(cfg: &RunConfig, i: usize, j: usize) -> Out {
    if cfg.selector == Selector::All {
        return Err(CliError::Usage("ls needs a single word".into()));
    }
    let (_, word) = cfg.elements().remove(0);
    let ctx = cfg.context();
    let basis = PbwBasis::new(&ctx, &word)?;
    if i == 0 || j == 0 {
        return Err(CliError::Usage("indices are 1-based".into()));
    }
    let v = basis.ls_relation(&ctx, i - 1, j - 1)?;
    Ok(match cfg.format {
        Format::Json => pretty(&serde_json::to_value(&v).expect("PBW vector serializes")),
        Format::Tsv => format!("{v}\n"),
    })
}

/// The report plus whether every check passed.
pub fn cmd_verify(cfg: &RunConfig) -> Result<(String, bool), CliError> {
    let checks = suites::run(cfg)?;
    let ok = checks.iter().all(|c| c.passed);
    let out = match cfg.format {
        Format::Json => pretty(&json!({
            "type": cfg.rs.name(),
            "passed": ok,
            "checks": checks,
        })),
        Format::Tsv => {
            let mut s = String::new();
            for c in &checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                writeln!(s, "{tag}\t{}\t{}\t{}", c.suite, c.name, c.detail).unwrap();
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            writeln!(s, "# {} checks, {} failed", checks.len(), failed).unwrap();
            s
        }
    };
    Ok((out, ok))
}
