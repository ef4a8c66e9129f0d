//! Command-line front end.
//!
//! Exit status: 0 success, 1 reduction not equivalent, 2 parse or usage
//! error, 3 arithmetic overflow, 4 instance too large for exhaustive
//! checking.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{self, ExperimentConfig};
use crate::coloring::{default_bits, utility_polynomial, ColoringEncoding, Graph};
use crate::error::Error;
use crate::oracle::check_equivalence;
use crate::pbpoly::format::{aux_sidecar, parse_polynomial, write_polynomial};
use crate::reduction::{mono_red, symm_red_with, AuxAllocator, ReductionOutcome, SymmRedOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_EQUIVALENT: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;
pub const EXIT_TOO_LARGE: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "quadratize",
    version,
    about = "Reduce binary polynomials to QUBO form",
    long_about = "Reduce binary polynomials to QUBO form.\n\nSet RUST_LOG=debug (or trace) for diagnostics."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Quadratize a polynomial file.
    Reduce(ReduceArgs),
    /// Build the graph-coloring utility polynomial.
    Coloring(ColoringArgs),
    /// Exhaustively check that a reduced polynomial reproduces the original.
    Verify(VerifyArgs),
    /// Random-graph benchmark of both reductions.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// Symmetric-block reduction.
    Symm,
    /// Monomial-wise reduction.
    Mono,
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    /// Polynomial in the text format.
    pub input: PathBuf,
    #[arg(short, long, value_enum, default_value = "symm")]
    pub method: MethodArg,
    /// Output path; standard output when omitted.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Keep one auxiliary per gadget progression (symm only).
    #[arg(long)]
    pub no_consolidate: bool,
}

#[derive(Args, Debug)]
pub struct ColoringArgs {
    /// DIMACS edge file.
    #[arg(conflicts_with = "complete", required_unless_present = "complete")]
    pub graph: Option<PathBuf>,
    /// Use the complete graph on this many vertices.
    #[arg(long, value_name = "V")]
    pub complete: Option<usize>,
    /// Bits per color code; defaults to ceil(log2 V).
    #[arg(long)]
    pub bits: Option<usize>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub original: PathBuf,
    pub reduced: PathBuf,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_values_t = vec![3usize, 4, 5, 6, 7, 8])]
    pub vertices: Vec<usize>,
    #[arg(long = "p", value_delimiter = ',', default_values_t = vec![0.75f64, 0.80, 0.85, 0.90, 0.95, 1.00])]
    pub probabilities: Vec<f64>,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
    pub trials: u32,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Per-trial CSV output.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Aggregate CSV output.
    #[arg(long)]
    pub aggregate: Option<PathBuf>,
    /// Record wall-clock times in the per-trial CSV (otherwise written as 0).
    #[arg(long)]
    pub timing: bool,
    /// Skip the exhaustive equivalence check on small graphs.
    #[arg(long)]
    pub no_verify: bool,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Overflow) => EXIT_OVERFLOW,
            CliError::Core(Error::TooLarge { .. } | Error::TooManyAux { .. }) => EXIT_TOO_LARGE,
            CliError::Core(Error::NotEquivalent(_)) => EXIT_NOT_EQUIVALENT,
            _ => EXIT_PARSE,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write_or_print(path: Option<&Path>, text: &str, stdout: &mut dyn Write) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_owned(),
            source,
        }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

/// Runs a parsed command and returns the process exit status.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Reduce(a) => cmd_reduce(&a, stdout, stderr),
        Command::Coloring(a) => cmd_coloring(&a, stdout, stderr),
        Command::Verify(a) => cmd_verify(&a, stdout),
        Command::Bench(a) => cmd_bench(&a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

/// Text of a reduction: the aux sidecar line followed by the terms.
pub fn render_outcome(outcome: &ReductionOutcome) -> String {
    let mut text = aux_sidecar(&outcome.aux_vars);
    text.push_str(&write_polynomial(&outcome.quadratic));
    text
}

fn cmd_reduce(a: &ReduceArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<i32> {
    let p = parse_polynomial(&read(&a.input)?)?;
    let mut alloc = AuxAllocator::new();
    let outcome = match a.method {
        MethodArg::Symm => {
            let opts = SymmRedOptions {
                consolidate: !a.no_consolidate,
            };
            symm_red_with(&p, &mut alloc, opts)?.outcome
        }
        MethodArg::Mono => mono_red(&p, &mut alloc)?,
    }
    .renumbered()?;

    let summary = format!(
        "total_vars={} monomials={} aux={}\n",
        p.original_vars().len() + outcome.aux_count(),
        outcome.quadratic.len(),
        outcome.aux_count()
    );
    write_or_print(a.output.as_deref(), &render_outcome(&outcome), stdout)?;
    // Keep standard output clean when it carries the polynomial.
    if a.output.is_some() {
        write_or_print(None, &summary, stdout)?;
    } else {
        write_or_print(None, &summary, stderr)?;
    }
    Ok(EXIT_OK)
}

fn cmd_coloring(
    a: &ColoringArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CliResult<i32> {
    let graph = match (&a.graph, a.complete) {
        (_, Some(v)) => Graph::complete(v),
        (Some(path), None) => Graph::parse_dimacs(&read(path)?)?,
        (None, None) => unreachable!("clap requires a graph source"),
    };
    let bits = match a.bits {
        Some(b) => b,
        None => default_bits(graph.vertex_count())?,
    };
    let enc = ColoringEncoding::new(bits)?;
    let q = utility_polynomial(&graph, &enc)?;
    let summary = format!(
        "{} variables, {} monomials\n",
        enc.variable_count(graph.vertex_count()),
        q.len()
    );
    write_or_print(a.output.as_deref(), &write_polynomial(&q), stdout)?;
    // Keep standard output clean when it carries the polynomial.
    if a.output.is_some() {
        write_or_print(None, &summary, stdout)?;
    } else {
        write_or_print(None, &summary, stderr)?;
    }
    Ok(EXIT_OK)
}

fn cmd_verify(a: &VerifyArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let original = parse_polynomial(&read(&a.original)?)?;
    let quadratic = parse_polynomial(&read(&a.reduced)?)?;
    let outcome = ReductionOutcome {
        aux_vars: quadratic.aux_vars().into_iter().collect(),
        quadratic,
    };
    let report = check_equivalence(&original, &outcome)?;
    let text = match &report.counterexample {
        None => format!(
            "equivalent ({} assignments checked)\n",
            report.assignments_checked
        ),
        Some(ce) => format!("NOT equivalent: {ce}\n"),
    };
    write_or_print(None, &text, stdout)?;
    Ok(if report.equivalent {
        EXIT_OK
    } else {
        EXIT_NOT_EQUIVALENT
    })
}

fn cmd_bench(a: &BenchArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let cfg = ExperimentConfig {
        vertex_sizes: a.vertices.clone(),
        probabilities: a.probabilities.clone(),
        trials: a.trials as usize,
        seed: a.seed,
        verify_small: !a.no_verify,
    };
    let records = bench::run_experiment(&cfg)?;
    let rows = bench::summarize(&records)?;
    if let Some(path) = &a.csv {
        write_or_print(
            Some(path),
            &bench::trials_csv(&cfg, &records, a.timing)?,
            stdout,
        )?;
    }
    if let Some(path) = &a.aggregate {
        write_or_print(Some(path), &bench::aggregate_csv(&cfg, &rows)?, stdout)?;
    }
    write_or_print(None, &bench::render_table(&rows), stdout)?;
    Ok(EXIT_OK)
}
