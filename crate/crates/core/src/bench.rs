//! Random-graph experiments comparing the two reductions on coloring
//! polynomials.

use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::coloring::{default_bits, utility_polynomial, ColoringEncoding, Graph};
use crate::error::{Error, Result};
use crate::oracle::check_equivalence;
use crate::pbpoly::Polynomial;
use crate::reduction::{mono_red, symm_red, AuxAllocator, ReductionOutcome};

/// Identifier of the per-trial random stream, written into CSV metadata.
pub const RNG_NAME: &str = "chacha8/splitmix64-v1";

/// Largest vertex count for which every trial is also checked exhaustively.
pub const VERIFY_MAX_VERTICES: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Symmetric,
    Monomial,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Symmetric => "symmetric",
            Method::Monomial => "monomial",
        }
    }

    pub fn reduce(self, p: &Polynomial) -> Result<ReductionOutcome> {
        let mut alloc = AuxAllocator::new();
        match self {
            Method::Symmetric => symm_red(p, &mut alloc),
            Method::Monomial => mono_red(p, &mut alloc),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub vertex_sizes: Vec<usize>,
    pub probabilities: Vec<f64>,
    pub trials: usize,
    pub seed: u64,
    /// Run the exhaustive equivalence check on trials with at most
    /// [`VERIFY_MAX_VERTICES`] vertices.
    pub verify_small: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            vertex_sizes: (3..=8).collect(),
            probabilities: vec![0.75, 0.80, 0.85, 0.90, 0.95, 1.00],
            trials: 100,
            seed: 42,
            verify_small: true,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidConfig("trials must be positive".into()));
        }
        if self.vertex_sizes.is_empty() || self.probabilities.is_empty() {
            return Err(Error::InvalidConfig(
                "need at least one vertex size and one probability".into(),
            ));
        }
        if let Some(v) = self.vertex_sizes.iter().find(|&&v| v < 3) {
            return Err(Error::InvalidConfig(format!("vertex size {v} is below 3")));
        }
        if let Some(p) = self.probabilities.iter().find(|&&p| !(p > 0.0 && p <= 1.0)) {
            return Err(Error::InvalidConfig(format!(
                "probability {p} is outside (0, 1]"
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrialRecord {
    pub p: f64,
    pub vertices: usize,
    pub trial: usize,
    pub method: Method,
    pub total_vars: usize,
    pub monomials: usize,
    pub aux_vars: usize,
    pub wall_time_ms: u64,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Random stream for one `(p, V, trial)` cell, independent of scheduling.
pub fn trial_rng(seed: u64, p: f64, vertices: usize, trial: usize) -> ChaCha8Rng {
    let mut h = splitmix64(seed);
    for word in [p.to_bits(), vertices as u64, trial as u64] {
        h = splitmix64(h ^ word);
    }
    ChaCha8Rng::seed_from_u64(h)
}

/// Erdős–Rényi graph: each of the `C(V, 2)` edges independently with
/// probability `p`, drawn in lexicographic edge order.
pub fn random_graph(vertices: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut g = Graph::new(vertices);
    for u in 0..vertices {
        for v in u + 1..vertices {
            if rng.random::<f64>() < p {
                g.add_edge(u, v).expect("vertices in range");
            }
        }
    }
    g
}

fn run_trial(
    cfg: &ExperimentConfig,
    p: f64,
    vertices: usize,
    trial: usize,
) -> Result<[TrialRecord; 2]> {
    let mut rng = trial_rng(cfg.seed, p, vertices, trial);
    let graph = random_graph(vertices, p, &mut rng);
    let enc = ColoringEncoding::new(default_bits(vertices)?)?;
    let q = utility_polynomial(&graph, &enc)?;
    let original = enc.variable_count(vertices);

    let mut out = Vec::with_capacity(2);
    for method in [Method::Symmetric, Method::Monomial] {
        let start = Instant::now();
        let reduced = method.reduce(&q)?;
        let wall_time_ms = start.elapsed().as_millis() as u64;
        if cfg.verify_small && vertices <= VERIFY_MAX_VERTICES {
            let report = check_equivalence(&q, &reduced)?;
            if let Some(ce) = report.counterexample {
                return Err(Error::NotEquivalent(format!(
                    "{} reduction, p = {p}, V = {vertices}, trial {trial}: {ce}",
                    method.name()
                )));
            }
        }
        out.push(TrialRecord {
            p,
            vertices,
            trial,
            method,
            total_vars: original + reduced.aux_count(),
            monomials: reduced.quadratic.len(),
            aux_vars: reduced.aux_count(),
            wall_time_ms,
        });
    }
    Ok(out.try_into().expect("two methods"))
}

/// Runs every `(p, V, trial)` cell in parallel; records come back in
/// `(p, V, trial, method)` order.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<TrialRecord>> {
    cfg.validate()?;
    let jobs: Vec<(f64, usize, usize)> = cfg
        .probabilities
        .iter()
        .flat_map(|&p| {
            cfg.vertex_sizes
                .iter()
                .flat_map(move |&v| (0..cfg.trials).map(move |t| (p, v, t)))
        })
        .collect();
    let results: Vec<[TrialRecord; 2]> = jobs
        .par_iter()
        .map(|&(p, v, t)| run_trial(cfg, p, v, t))
        .collect::<Result<_>>()?;
    Ok(results.into_iter().flatten().collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct AggregateRow {
    pub p: f64,
    pub vertices: usize,
    pub method: Method,
    pub trials: usize,
    pub mean_vars: f64,
    pub mean_monomials: f64,
    /// Mean variables relative to the monomial method, in percent.
    pub ratio_vars_pct: f64,
    pub ratio_monomials_pct: f64,
}

/// Per-(p, V, method) means; the ratio columns divide by the monomial
/// method's mean in the same cell. Rows keep first-appearance order of the
/// `(p, V)` cells, symmetric before monomial.
pub fn summarize(records: &[TrialRecord]) -> Result<Vec<AggregateRow>> {
    if records.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut cells: Vec<(f64, usize)> = Vec::new();
    for r in records {
        if !cells.iter().any(|&(p, v)| p == r.p && v == r.vertices) {
            cells.push((r.p, r.vertices));
        }
    }
    let mut rows = Vec::new();
    for (p, v) in cells {
        let mean = |method: Method| -> Option<(usize, f64, f64)> {
            let sel: Vec<&TrialRecord> = records
                .iter()
                .filter(|r| r.p == p && r.vertices == v && r.method == method)
                .collect();
            if sel.is_empty() {
                return None;
            }
            let n = sel.len() as f64;
            Some((
                sel.len(),
                sel.iter().map(|r| r.total_vars as f64).sum::<f64>() / n,
                sel.iter().map(|r| r.monomials as f64).sum::<f64>() / n,
            ))
        };
        let baseline = mean(Method::Monomial);
        for method in [Method::Symmetric, Method::Monomial] {
            let Some((trials, mean_vars, mean_monomials)) = mean(method) else {
                continue;
            };
            let (ratio_vars_pct, ratio_monomials_pct) = match baseline {
                Some((_, bv, bm)) => (100.0 * mean_vars / bv, 100.0 * mean_monomials / bm),
                None => (f64::NAN, f64::NAN),
            };
            rows.push(AggregateRow {
                p,
                vertices: v,
                method,
                trials,
                mean_vars,
                mean_monomials,
                ratio_vars_pct,
                ratio_monomials_pct,
            });
        }
    }
    Ok(rows)
}

fn metadata_line(cfg: &ExperimentConfig) -> String {
    format!(
        "# seed={} trials={} rng={} version={}\n",
        cfg.seed,
        cfg.trials,
        RNG_NAME,
        env!("CARGO_PKG_VERSION")
    )
}

/// Per-trial CSV. With `include_timing = false` the `wall_time_ms` column
/// is written as 0 so that output depends only on the configuration.
pub fn trials_csv(
    cfg: &ExperimentConfig,
    records: &[TrialRecord],
    include_timing: bool,
) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "p",
        "V",
        "trial",
        "method",
        "total_vars",
        "monomials",
        "aux_vars",
        "wall_time_ms",
    ])
    .map_err(csv_err)?;
    for r in records {
        w.write_record([
            format!("{:.2}", r.p),
            r.vertices.to_string(),
            r.trial.to_string(),
            r.method.name().to_string(),
            r.total_vars.to_string(),
            r.monomials.to_string(),
            r.aux_vars.to_string(),
            if include_timing { r.wall_time_ms } else { 0 }.to_string(),
        ])
        .map_err(csv_err)?;
    }
    finish(metadata_line(cfg), w)
}

pub fn aggregate_csv(cfg: &ExperimentConfig, rows: &[AggregateRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "p",
        "V",
        "method",
        "mean_vars",
        "mean_monomials",
        "ratio_vars_pct",
        "ratio_monomials_pct",
    ])
    .map_err(csv_err)?;
    for r in rows {
        w.write_record([
            format!("{:.2}", r.p),
            r.vertices.to_string(),
            r.method.name().to_string(),
            format!("{:.2}", r.mean_vars),
            format!("{:.2}", r.mean_monomials),
            format!("{:.2}", r.ratio_vars_pct),
            format!("{:.2}", r.ratio_monomials_pct),
        ])
        .map_err(csv_err)?;
    }
    finish(metadata_line(cfg), w)
}

fn csv_err(e: csv::Error) -> Error {
    Error::InvalidConfig(format!("csv: {e}"))
}

fn finish(header: String, w: csv::Writer<Vec<u8>>) -> Result<String> {
    let body = w
        .into_inner()
        .map_err(|e| Error::InvalidConfig(format!("csv: {e}")))?;
    let mut out = header;
    out.push_str(&String::from_utf8(body).expect("csv output is utf-8"));
    Ok(out)
}

/// Plain-text rendering of aggregate rows, one line per `(p, V)` cell.
pub fn render_table(rows: &[AggregateRow]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:>5} {:>3} | {:>9} {:>9} | {:>9} {:>9} | {:>7} {:>7}",
        "p", "V", "r1", "N1", "r2", "N2", "r1/r2", "N1/N2"
    )
    .unwrap();
    for pair in rows.chunks(2) {
        if let [s, m] = pair {
            writeln!(
                out,
                "{:>5.2} {:>3} | {:>9.2} {:>9.2} | {:>9.2} {:>9.2} | {:>6.2}% {:>6.2}%",
                s.p,
                s.vertices,
                s.mean_vars,
                s.mean_monomials,
                m.mean_vars,
                m.mean_monomials,
                s.ratio_vars_pct,
                s.ratio_monomials_pct
            )
            .unwrap();
        }
    }
    out
}
