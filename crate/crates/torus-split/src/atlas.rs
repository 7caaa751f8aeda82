//! The atlas: the full (rank, q, cycle type) table of splitting verdicts,
//! each cell cross-checked by classifier, construction or obstruction, and
//! the brute-force oracle.

use crate::bweyl::enumerate_types;
use crate::exec;
use crate::normalizer::{build_normalizer, GroupKind, DEFAULT_NORMALIZER_BUDGET};
use crate::split::{
    brute_force_split, classify, construct_complement, obstruction_check, verify_complement,
    ObstructionClause, SplitError, DEFAULT_SEARCH_BUDGET,
};
use crate::torus::make_torus;
use std::time::Instant;

/// One atlas cell: the three verdict columns and their agreement.
#[derive(Clone, Debug)]
pub struct AtlasRow {
    pub n: usize,
    pub q: u64,
    pub type_string: String,
    pub kind: GroupKind,
    pub splits: bool,
    pub rule: &'static str,
    /// "cert-ok" for a verified complement, "witness-ok" for an obstruction.
    pub constructive: String,
    /// Oracle verdict, or "-" when the cell exceeds the search budget.
    pub oracle: String,
    pub agree: bool,
    pub millis: (u64, u64, u64),
}

#[derive(Clone, Debug)]
pub struct AtlasConfig {
    pub nmax: usize,
    pub qlist: Vec<u64>,
    pub kind: GroupKind,
    pub jobs: Option<usize>,
    pub search_budget: u64,
}

impl AtlasConfig {
    pub fn new(nmax: usize, qlist: Vec<u64>, kind: GroupKind) -> AtlasConfig {
        AtlasConfig {
            nmax,
            qlist,
            kind,
            jobs: None,
            search_budget: DEFAULT_SEARCH_BUDGET,
        }
    }
}

/// Computes one cell; obstruction or construction failures abort the run.
pub fn atlas_cell(
    n: usize,
    q: u64,
    type_string: &str,
    kind: GroupKind,
    search_budget: u64,
) -> Result<AtlasRow, SplitError> {
    let ctype = type_string
        .parse()
        .map_err(|_| SplitError::InvalidType(0, n))?;
    let t0 = Instant::now();
    let verdict = classify(n, q, &ctype, kind)?;
    let t_classify = t0.elapsed().as_millis() as u64;

    let spec = make_torus(n, q, &ctype)?;
    let t1 = Instant::now();
    let constructive = if verdict.splits {
        let cert = construct_complement(&spec, kind)?;
        let ng = build_normalizer(&spec, kind, DEFAULT_NORMALIZER_BUDGET)?;
        if verify_complement(&ng, &cert)? {
            "cert-ok".to_string()
        } else {
            "cert-fail".to_string()
        }
    } else {
        let clause = ObstructionClause::for_verdict(kind, &ctype);
        let _witness = obstruction_check(&spec, kind, clause)?;
        "witness-ok".to_string()
    };
    let t_construct = t1.elapsed().as_millis() as u64;

    let t2 = Instant::now();
    let ng = build_normalizer(&spec, kind, DEFAULT_NORMALIZER_BUDGET)?;
    let oracle = if ng.quotient_order() <= search_budget {
        let out = brute_force_split(&ng, search_budget)?;
        if out.splits() {
            "split".to_string()
        } else {
            "non-split".to_string()
        }
    } else {
        "-".to_string()
    };
    let t_oracle = t2.elapsed().as_millis() as u64;

    let verdict_str = if verdict.splits { "split" } else { "non-split" };
    let construct_agrees = match (verdict.splits, constructive.as_str()) {
        (true, "cert-ok") | (false, "witness-ok") => true,
        _ => false,
    };
    let oracle_agrees = oracle == "-" || oracle == verdict_str;
    Ok(AtlasRow {
        n,
        q,
        type_string: type_string.to_string(),
        kind,
        splits: verdict.splits,
        rule: verdict.rule.id(),
        constructive,
        oracle,
        agree: construct_agrees && oracle_agrees,
        millis: (t_classify, t_construct, t_oracle),
    })
}

/// Runs every (n ≤ nmax, q, type) cell; cells are independent and run in
/// parallel when a pool is available, in a fixed row order either way.
pub fn run_atlas(cfg: &AtlasConfig) -> Result<Vec<AtlasRow>, SplitError> {
    let mut cells: Vec<(usize, u64, String)> = Vec::new();
    for n in 1..=cfg.nmax {
        for &q in &cfg.qlist {
            for t in enumerate_types(n) {
                cells.push((n, q, t.to_string()));
            }
        }
    }
    let kind = cfg.kind;
    let budget = cfg.search_budget;
    let results: Vec<Result<AtlasRow, SplitError>> = exec::with_jobs(cfg.jobs, || {
        exec::map_indices(cells.len(), |i| {
            let (n, q, ref ts) = cells[i];
            atlas_cell(n, q, ts, kind, budget)
        })
    });
    results.into_iter().collect()
}

/// CSV rendering; timing columns are optional so default output is
/// byte-deterministic.
pub fn atlas_csv(rows: &[AtlasRow], with_timings: bool) -> String {
    let mut out = String::from("# torus-split-atlas v1\n");
    out.push_str("n,q,type,group,verdict,rule,construct,oracle,agree");
    if with_timings {
        out.push_str(",t_classify_ms,t_construct_ms,t_oracle_ms");
    }
    out.push('\n');
    for r in rows {
        let verdict = if r.splits { "split" } else { "non-split" };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}",
            r.n, r.q, r.type_string, r.kind, verdict, r.rule, r.constructive, r.oracle, r.agree
        ));
        if with_timings {
            out.push_str(&format!(",{},{},{}", r.millis.0, r.millis.1, r.millis.2));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atlas_rank1_q3_sp_both_types_non_split() {
        let cfg = AtlasConfig::new(1, vec![3], GroupKind::Sp);
        let rows = run_atlas(&cfg).unwrap();
        assert_eq!(rows.len(), 2);
        for r in &rows {
            assert!(!r.splits, "{}", r.type_string);
            assert!(r.agree);
            assert_eq!(r.constructive, "witness-ok");
            assert_eq!(r.oracle, "non-split");
        }
    }

    #[test]
    fn atlas_rank2_q3_psp_matches_expected_pattern() {
        let cfg = AtlasConfig::new(2, vec![3], GroupKind::PSp);
        let rows = run_atlas(&cfg).unwrap();
        assert!(rows.iter().all(|r| r.agree));
        let get = |ts: &str| rows.iter().find(|r| r.type_string == ts).unwrap().splits;
        assert!(get("(1-)(1-)"));
        assert!(!get("(1)(1)"));
        assert!(!get("(1-)(1)"));
        assert!(get("(2)"));
        assert!(get("(2-)"));
    }

    #[test]
    fn csv_shape_and_determinism() {
        let cfg = AtlasConfig::new(1, vec![2, 3], GroupKind::PSp);
        let rows = run_atlas(&cfg).unwrap();
        let csv = atlas_csv(&rows, false);
        assert!(csv.starts_with("# torus-split-atlas v1\n"));
        assert_eq!(csv.lines().count(), 2 + rows.len());
        let again = atlas_csv(&run_atlas(&cfg).unwrap(), false);
        assert_eq!(csv, again);
        let with_t = atlas_csv(&rows, true);
        assert!(with_t.contains("t_oracle_ms"));
    }
}
