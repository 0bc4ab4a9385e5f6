//! Exhaustive verification runs over graph corpora.
//!
//! Each input graph is split into components. Isolated vertices are
//! stripped: each adds 1 to Z(G) and nothing to Z(L(G)) or B(G). On every
//! remaining component the exact solvers, the transfer pipeline and the
//! witness checks run; per-component values are summed into one row.
//!
//! Rows are computed in parallel but always reported in input order, and
//! timings are only written on request, so reports are byte-identical for
//! any number of workers.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::brushing::{brushing_number, verify_brush_witness};
use crate::budget::Budget;
use crate::diagnostic::DiagnosticBundle;
use crate::error::{Error, Result};
use crate::format::write_graph6;
use crate::graph::{line_graph, Graph};
use crate::transfer::{random_line_graph_process, transfer_with_process};
use crate::zero_forcing::{
    is_zero_forcing, minimum_zero_forcing_sets, record_process, zero_forcing_number,
};

pub const REPORT_SCHEMA: &str = "zfbrush-corpus/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusOptions {
    /// Wall-clock limit per graph per solver, in milliseconds.
    pub budget_ms: Option<u64>,
    /// Exact B(G) is attempted only for graphs with at most this many edges.
    pub exact_brush_max_m: usize,
    /// Randomized line-graph processes replayed per component.
    pub random_processes: usize,
    pub seed: u64,
    #[serde(skip)]
    pub jobs: usize,
    #[serde(skip)]
    pub timings: bool,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions {
            budget_ms: None,
            exact_brush_max_m: 12,
            random_processes: 0,
            seed: 0,
            jobs: 1,
            timings: false,
        }
    }
}

impl CorpusOptions {
    fn budget(&self) -> Budget {
        match self.budget_ms {
            Some(ms) => Budget::timeout(Duration::from_millis(ms)),
            None => Budget::unlimited(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BrushStatus {
    Exact,
    /// Budget ran out; only the transfer witness bounds B(G).
    Unknown,
    /// Above the exact-search edge limit; only the transfer witness bounds B(G).
    Skipped,
    /// No edges; B(G) reported as 0.
    Degenerate,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub z_g: u64,
    pub z_lg: u64,
    pub b_g: u64,
    pub transfer: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRow {
    pub index: usize,
    pub graph6: Option<String>,
    pub n: usize,
    pub m: usize,
    pub isolated: usize,
    /// Components with at least one edge.
    pub components: usize,
    pub z_g: Option<usize>,
    pub z_lg: Option<usize>,
    pub b_g: Option<usize>,
    pub b_status: BrushStatus,
    pub y_size: Option<usize>,
    pub brush_paths: Option<usize>,
    /// B(G) <= Z(L(G)), exactly or through a verified witness.
    pub brush_bound: bool,
    /// Z(G) <= Z(L(G)) on the stripped graph, and Y forces G.
    pub forcing_bound: bool,
    pub random_runs: usize,
    pub random_ok: bool,
    pub witness_verified: bool,
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings_ms: Option<Timings>,
}

impl CorpusRow {
    pub fn all_ok(&self) -> bool {
        self.error.is_none()
            && self.brush_bound
            && self.forcing_bound
            && self.random_ok
            && self.witness_verified
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub graphs: usize,
    pub violations: usize,
    pub errors: usize,
    pub unknown_b: usize,
    pub exact_b: usize,
    /// Largest Z(L(G)) − B(G) over rows with exact B.
    pub max_gap_b: Option<usize>,
    /// Largest Z(L(G)) − Z(G) over rows (stripped graph).
    pub max_gap_z: Option<usize>,
    pub y_below_k: usize,
    pub failed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub schema: String,
    pub options: CorpusOptions,
    pub rows: Vec<CorpusRow>,
    pub summary: CorpusSummary,
    pub diagnostics: Vec<DiagnosticBundle>,
}

impl CorpusReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Flat CSV projection of the rows.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "index",
            "graph6",
            "n",
            "m",
            "isolated",
            "components",
            "z_g",
            "z_lg",
            "b_g",
            "b_status",
            "y_size",
            "brush_paths",
            "brush_bound",
            "forcing_bound",
            "random_runs",
            "random_ok",
            "witness_verified",
            "error",
        ])
        .map_err(csv_err)?;
        let opt = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_default();
        for r in &self.rows {
            let status = serde_json::to_value(r.b_status)?
                .as_str()
                .unwrap_or_default()
                .to_string();
            w.write_record([
                r.index.to_string(),
                r.graph6.clone().unwrap_or_default(),
                r.n.to_string(),
                r.m.to_string(),
                r.isolated.to_string(),
                r.components.to_string(),
                opt(r.z_g),
                opt(r.z_lg),
                opt(r.b_g),
                status,
                opt(r.y_size),
                opt(r.brush_paths),
                r.brush_bound.to_string(),
                r.forcing_bound.to_string(),
                r.random_runs.to_string(),
                r.random_ok.to_string(),
                r.witness_verified.to_string(),
                r.error.clone().unwrap_or_default(),
            ])
            .map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

fn elapsed_ms(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

struct RowOutcome {
    row: CorpusRow,
    diagnostics: Vec<DiagnosticBundle>,
}

fn row_seed(seed: u64, index: usize, component: usize) -> u64 {
    seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ (component as u64).wrapping_mul(0xD1B5_4A32_D192_ED03)
}

fn run_row(index: usize, g: &Graph, opts: &CorpusOptions) -> RowOutcome {
    let isolated = g.isolated_vertices().count();
    let mut row = CorpusRow {
        index,
        graph6: write_graph6(g).ok(),
        n: g.n(),
        m: g.m(),
        isolated,
        components: 0,
        z_g: None,
        z_lg: None,
        b_g: None,
        b_status: BrushStatus::Exact,
        y_size: None,
        brush_paths: None,
        brush_bound: false,
        forcing_bound: false,
        random_runs: 0,
        random_ok: false,
        witness_verified: false,
        error: None,
        timings_ms: None,
    };
    let mut diagnostics = Vec::new();
    let mut timings = Timings::default();
    match row_body(index, g, opts, &mut row, &mut timings, &mut diagnostics) {
        Ok(()) => {}
        Err(e) => {
            if let Some(b) = e.diagnostic() {
                diagnostics.push(b.clone());
            }
            row.error = Some(e.to_string());
            row.brush_bound = false;
            row.forcing_bound = false;
            row.random_ok = false;
            row.witness_verified = false;
        }
    }
    if opts.timings {
        row.timings_ms = Some(timings);
    }
    RowOutcome { row, diagnostics }
}

fn row_body(
    index: usize,
    g: &Graph,
    opts: &CorpusOptions,
    row: &mut CorpusRow,
    timings: &mut Timings,
    diagnostics: &mut Vec<DiagnosticBundle>,
) -> Result<()> {
    let comps: Vec<_> = g
        .components()
        .into_iter()
        .filter(|c| c.graph.m() > 0)
        .collect();
    row.components = comps.len();

    let (mut z_g, mut z_lg, mut b_g, mut y_size, mut paths) = (row.isolated, 0, 0, 0, 0);
    let mut brush_known = true;
    let mut verified = true;
    let mut random_ok = true;
    row.b_status = if comps.is_empty() {
        BrushStatus::Degenerate
    } else if g.m() > opts.exact_brush_max_m {
        brush_known = false;
        BrushStatus::Skipped
    } else {
        BrushStatus::Exact
    };

    for (ci, comp) in comps.iter().enumerate() {
        let cg = &comp.graph;
        let t = Instant::now();
        z_g += zero_forcing_number(cg, opts.budget())?.k;
        timings.z_g += elapsed_ms(t);

        let lg = line_graph(cg)?;
        let t = Instant::now();
        let zl = zero_forcing_number(&lg.graph, opts.budget())?;
        timings.z_lg += elapsed_ms(t);
        z_lg += zl.k;

        if row.b_status == BrushStatus::Exact {
            let t = Instant::now();
            match brushing_number(cg, opts.budget()) {
                Ok(b) => {
                    verified &= verify_brush_witness(cg, &b.witness).is_ok();
                    b_g += b.b;
                }
                Err(Error::BudgetExceeded { .. }) => {
                    brush_known = false;
                    row.b_status = BrushStatus::Unknown;
                }
                Err(e) => return Err(e),
            }
            timings.b_g += elapsed_ms(t);
        }

        let t = Instant::now();
        let process = record_process(&lg.graph, &zl.witness)?;
        let result = transfer_with_process(cg, lg.clone(), process)?;
        verified &= verify_brush_witness(cg, &result.brush_witness).is_ok()
            && is_zero_forcing(cg, &result.y)
            && result.checks.all();
        paths += result.brush_witness.paths.len();
        y_size += result.y.len();
        timings.transfer += elapsed_ms(t);

        if opts.random_processes > 0 {
            let sets = minimum_zero_forcing_sets(&lg.graph, opts.budget())?;
            let mut rng = ChaCha8Rng::seed_from_u64(row_seed(opts.seed, index, ci));
            for _ in 0..opts.random_processes {
                let process = random_line_graph_process(&lg, &sets, &mut rng)?;
                match transfer_with_process(cg, lg.clone(), process) {
                    Ok(r) => random_ok &= r.checks.all(),
                    Err(e) => {
                        random_ok = false;
                        match e.diagnostic() {
                            Some(b) => diagnostics.push(b.clone()),
                            None => return Err(e),
                        }
                    }
                }
                row.random_runs += 1;
            }
        }
    }

    row.z_g = Some(z_g);
    row.z_lg = Some(z_lg);
    row.y_size = Some(y_size);
    row.brush_paths = Some(paths);
    row.b_g = brush_known.then_some(b_g);
    row.witness_verified = verified;
    row.random_ok = random_ok;
    let certificate = paths == z_lg && verified;
    row.brush_bound = certificate && row.b_g.is_none_or(|b| b <= z_lg);
    row.forcing_bound = z_g - row.isolated <= z_lg && y_size <= z_lg && verified;
    Ok(())
}

/// Runs every check on every graph and aggregates in input order.
pub fn run_corpus(graphs: &[Graph], opts: &CorpusOptions) -> Result<CorpusReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    let outcomes: Vec<RowOutcome> = pool.install(|| {
        graphs
            .par_iter()
            .enumerate()
            .map(|(i, g)| run_row(i, g, opts))
            .collect()
    });

    let mut rows = Vec::with_capacity(outcomes.len());
    let mut diagnostics = Vec::new();
    for o in outcomes {
        rows.push(o.row);
        diagnostics.extend(o.diagnostics);
    }
    let summary = summarize(&rows, diagnostics.len());
    Ok(CorpusReport {
        schema: REPORT_SCHEMA.to_string(),
        options: opts.clone(),
        rows,
        summary,
        diagnostics,
    })
}

fn summarize(rows: &[CorpusRow], diagnostics: usize) -> CorpusSummary {
    let inequality_broken = |r: &CorpusRow| {
        let t1 = matches!((r.b_g, r.z_lg), (Some(b), Some(z)) if b > z);
        let t2 = matches!((r.z_g, r.z_lg), (Some(zg), Some(z)) if zg - r.isolated > z);
        let y = matches!((r.y_size, r.z_lg), (Some(y), Some(z)) if y > z);
        t1 || t2 || y
    };
    let rows_violating = rows
        .iter()
        .filter(|r| inequality_broken(r) || (r.error.is_none() && !r.all_ok()))
        .count();
    let violations = rows_violating + diagnostics;
    CorpusSummary {
        graphs: rows.len(),
        violations,
        errors: rows.iter().filter(|r| r.error.is_some()).count(),
        unknown_b: rows
            .iter()
            .filter(|r| r.b_g.is_none() && r.b_status != BrushStatus::Degenerate)
            .count(),
        exact_b: rows
            .iter()
            .filter(|r| r.b_status == BrushStatus::Exact)
            .count(),
        max_gap_b: rows.iter().filter_map(|r| Some(r.z_lg? - r.b_g?)).max(),
        max_gap_z: rows
            .iter()
            .filter_map(|r| Some(r.z_lg? - (r.z_g? - r.isolated)))
            .max(),
        y_below_k: rows
            .iter()
            .filter(|r| matches!((r.y_size, r.z_lg), (Some(y), Some(z)) if y < z))
            .count(),
        failed: violations > 0 || rows.iter().any(|r| !r.all_ok()),
    }
}
