//! Batch verification: runs the exact solver, the adversarial greedy
//! search and the bound catalogue over a corpus of graphs and reports
//! per-bound pass/fail rows.

use crate::bounds::{bound_floor, BoundFamily};
use crate::error::Result;
use crate::game::Player;
use crate::graph::Graph;
use crate::scheme::Family;
use crate::solver::{self, SolverConfig};
use crate::strategy::{self, Policy};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;
use std::path::Path;

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Exact-solver order cap; larger graphs get no γ columns.
    pub cap: usize,
    /// Node budget for the worst-case Staller search.
    pub search_budget: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            cap: 22,
            search_budget: strategy::DEFAULT_SEARCH_BUDGET,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportRow {
    pub graph_id: String,
    pub n: usize,
    pub delta: u32,
    pub gamma: Option<u32>,
    pub gamma_g: Option<u32>,
    pub gamma_g_prime: Option<u32>,
    pub greedy_wc_d: Option<u32>,
    pub greedy_wc_s: Option<u32>,
    pub bound_family: String,
    pub bound_floor: Option<i64>,
    pub pass: bool,
    pub lemma_violations: usize,
    /// Free-form context (error messages, preconditions); JSON only.
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub rows: Vec<ReportRow>,
    pub graphs: usize,
    pub passed: usize,
    pub failed: usize,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub const CSV_HEADER: &'static str = "graph_id,n,delta,gamma,gamma_g,gamma_g_prime,greedy_wc_D,greedy_wc_S,bound_family,bound_floor,pass,lemma_violations";

    pub fn to_csv(&self) -> String {
        fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
            v.as_ref().map(|x| x.to_string()).unwrap_or_default()
        }
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{}\n",
                r.graph_id,
                r.n,
                r.delta,
                opt(&r.gamma),
                opt(&r.gamma_g),
                opt(&r.gamma_g_prime),
                opt(&r.greedy_wc_d),
                opt(&r.greedy_wc_s),
                r.bound_family,
                opt(&r.bound_floor),
                r.pass,
                r.lemma_violations
            ));
        }
        out
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// One corpus entry: a parse failure is carried along so a bad line
/// becomes a failing row rather than aborting the run.
pub struct CorpusEntry {
    pub id: String,
    pub graph: std::result::Result<Graph, String>,
}

/// Loads every file in `dir`: `.g6` files hold one graph6 string per
/// line, anything else is read as an edge list.
pub fn load_corpus(dir: &Path) -> Result<Vec<CorpusEntry>> {
    let mut files: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    let mut out = Vec::new();
    for path in files {
        let name = path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let text = std::fs::read_to_string(&path)?;
        if path.extension().is_some_and(|e| e == "g6") {
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                out.push(CorpusEntry {
                    id: format!("{name}:{}", i + 1),
                    graph: Graph::parse_graph6(line).map_err(|e| e.to_string()),
                });
            }
        } else {
            out.push(CorpusEntry {
                id: name,
                graph: Graph::parse_edge_list(&text).map_err(|e| e.to_string()),
            });
        }
    }
    Ok(out)
}

/// Verifies every corpus entry in parallel and assembles the report,
/// rows sorted by graph id then bound family.
pub fn verify_corpus(entries: &[CorpusEntry], cfg: VerifyConfig) -> VerifyReport {
    let mut rows: Vec<ReportRow> = entries
        .par_iter()
        .flat_map(|e| match &e.graph {
            Ok(g) => verify_graph(&e.id, g, cfg),
            Err(msg) => vec![error_row(&e.id, 0, 0, msg)],
        })
        .collect();
    rows.sort_by(|a, b| {
        (&a.graph_id, &a.bound_family).cmp(&(&b.graph_id, &b.bound_family))
    });
    let passed = rows.iter().filter(|r| r.pass).count();
    VerifyReport {
        graphs: entries.len(),
        passed,
        failed: rows.len() - passed,
        rows,
    }
}

fn error_row(id: &str, n: usize, delta: u32, msg: &str) -> ReportRow {
    ReportRow {
        graph_id: id.into(),
        n,
        delta,
        gamma: None,
        gamma_g: None,
        gamma_g_prime: None,
        greedy_wc_d: None,
        greedy_wc_s: None,
        bound_family: "error".into(),
        bound_floor: None,
        pass: false,
        lemma_violations: 0,
        note: msg.into(),
    }
}

/// Worst-case greedy lengths and lemma-violation count for one strategy
/// family on one graph; `None` lengths mean the search budget ran out.
struct FamilyRun {
    wc_d: Option<u32>,
    wc_s: Option<u32>,
    violations: usize,
    note: String,
}

fn run_family(g: &Graph, family: Family, cfg: VerifyConfig) -> FamilyRun {
    let mut note = String::new();
    let mut wc = |first| match strategy::worst_case_length_vs_greedy(
        g,
        family,
        first,
        cfg.search_budget,
    ) {
        Ok(len) => Some(len),
        Err(e) => {
            note = e.to_string();
            None
        }
    };
    let wc_d = wc(Player::Dominator);
    let wc_s = wc(Player::Staller);
    let mut violations = 0;
    for first in [Player::Dominator, Player::Staller] {
        match strategy::play_game(
            g,
            family,
            &Policy::GreedyDominator,
            &Policy::WorstCaseStaller,
            first,
        ) {
            Ok(trace) => violations += trace.violations.len(),
            Err(e) => note = e.to_string(),
        }
    }
    FamilyRun {
        wc_d,
        wc_s,
        violations,
        note,
    }
}

/// Bound families applicable to minimum degree `delta`, paired with the
/// strategy family whose greedy worst case each is compared against. For
/// δ > 4 the polynomial bound is run both at d = δ and at d = 4.
fn applicable(delta: i64) -> Vec<(BoundFamily, Family)> {
    let mut out = vec![(BoundFamily::General23, Family::TwoThirds)];
    if delta >= 3 {
        out.push((BoundFamily::Deg3, Family::Deg3));
        out.push((BoundFamily::Deg3StallerStart, Family::Deg3));
    }
    if delta >= 4 {
        let mut ds = vec![delta];
        if delta > 4 {
            ds.push(4);
        }
        for d in ds {
            let fam = Family::min_deg(d).expect("d >= 4");
            out.push((BoundFamily::MinDeg(d), fam));
            out.push((BoundFamily::MinDegStallerStart(d), fam));
        }
    }
    if delta >= 2 {
        let auto = if delta >= 4 {
            Family::min_deg(delta).expect("delta >= 4")
        } else if delta == 3 {
            Family::Deg3
        } else {
            Family::TwoThirds
        };
        out.push((BoundFamily::LogBound(delta), auto));
    }
    out
}

fn verify_graph(id: &str, g: &Graph, cfg: VerifyConfig) -> Vec<ReportRow> {
    if !g.is_isolate_free() {
        let mut row = error_row(id, g.n(), 0, "isolate-free required");
        row.bound_family = "precondition".into();
        return vec![row];
    }
    let n = g.n();
    let delta = g.min_degree();

    let solver_cfg = SolverConfig {
        cap: cfg.cap,
        ..Default::default()
    };
    let exact = solver::check_sandwich_with(g, solver_cfg).ok();
    let (gamma, gamma_g, gamma_g_prime) = match &exact {
        Some(r) => (Some(r.gamma), Some(r.gamma_g), Some(r.gamma_g_prime)),
        None => (None, None, None),
    };

    let mut runs: HashMap<String, FamilyRun> = HashMap::new();
    let mut rows = Vec::new();
    let blank = |bound_family: String| ReportRow {
        graph_id: id.into(),
        n,
        delta,
        gamma,
        gamma_g,
        gamma_g_prime,
        greedy_wc_d: None,
        greedy_wc_s: None,
        bound_family,
        bound_floor: None,
        pass: false,
        lemma_violations: 0,
        note: String::new(),
    };

    if let Some(r) = &exact {
        let mut row = blank("sandwich".into());
        row.bound_floor = Some(2 * r.gamma as i64 - 1);
        row.pass = r.holds;
        rows.push(row);
    }

    for (bound, family) in applicable(delta as i64) {
        let run = runs
            .entry(family.name())
            .or_insert_with(|| run_family(g, family, cfg));
        let mut row = blank(bound.name());
        row.greedy_wc_d = run.wc_d;
        row.greedy_wc_s = run.wc_s;
        row.lemma_violations = run.violations;
        row.note = run.note.clone();
        let staller_start = matches!(
            bound,
            BoundFamily::Deg3StallerStart | BoundFamily::MinDegStallerStart(_)
        );
        match bound_floor(bound, n) {
            Ok(floor) => {
                row.bound_floor = Some(floor);
                let len = if staller_start { run.wc_s } else { run.wc_d };
                let exact_len = if staller_start { gamma_g_prime } else { gamma_g };
                row.pass = match len {
                    Some(len) => {
                        let within = (len as i64) <= floor;
                        // The optimal-play value never exceeds the greedy
                        // worst case (Dominator could do no worse by
                        // playing optimally).
                        let consistent = exact_len.is_none_or(|ex| ex <= len);
                        within && consistent && run.violations == 0
                    }
                    None => false,
                };
            }
            Err(e) => row.note = e.to_string(),
        }
        rows.push(row);
    }
    rows
}
