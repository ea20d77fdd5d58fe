//! Command-line front end: reads polytope and quasipolynomial files, runs
//! the library, and prints plain `key=value` reports.
//!
//! Exit codes: 0 on success, 1 when a verifier reports a violated bound,
//! 2 on bad input (and on internal fitting failures, which are reported
//! with an `internal error` prefix).

pub mod report;
pub mod rng;
pub mod suite;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use thiserror::Error;

use qpgrade::faces::{enumerate_faces, verify_ehrhart_grade_bound};
use qpgrade::hilbert::{verify_grade_bound_weighted, HilbertSeries, WeightedModulePresentation};
use qpgrade::polytope::PolytopeError;
use qpgrade::{QuasiPolynomial, RationalPolytope};

use crate::suite::{run_suite, SuiteMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qpgrade", version, about = "Grades of Hilbert and Ehrhart quasipolynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Ehrhart quasipolynomial of a polytope file.
    Ehrhart {
        file: PathBuf,
        /// Also list lattice-point counts of the dilates 0..=N.
        #[arg(long, value_name = "N")]
        max_dilate: Option<u64>,
    },
    /// All nonempty faces with their affine-span lattice test.
    Faces { file: PathBuf },
    /// Check grade E_P < delta* for a polytope file.
    VerifyPolytope { file: PathBuf },
    /// Hilbert quasipolynomial of numerator / prod(1 - t^e).
    Hilbert {
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<u64>,
        #[arg(long, value_delimiter = ',', default_value = "1", allow_hyphen_values = true)]
        numerator: Vec<BigInt>,
    },
    /// Check grade Q < dim M/IM for a shifted free module.
    VerifyWeighted {
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<u64>,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        shifts: Vec<u64>,
    },
    /// Minimal period and grade of a quasipolynomial file.
    QpGrade { file: PathBuf },
    /// Seeded randomized verification.
    RandomSuite {
        #[arg(long, value_enum)]
        mode: SuiteMode,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl From<PolytopeError> for CliError {
    fn from(e: PolytopeError) -> Self {
        match e {
            PolytopeError::InconsistentFit(m) => CliError::Internal(m),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_polytope(path: &Path) -> Result<RationalPolytope, CliError> {
    read(path)?.parse().map_err(|e: PolytopeError| match e {
        PolytopeError::InconsistentFit(_) => CliError::from(e),
        other => CliError::Input(format!("{}: {other}", path.display())),
    })
}

/// Runs one invocation, writing the report to `out` and diagnostics to
/// `err`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let text = e.to_string();
            let line = text.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(err, "{line}");
            return EXIT_INPUT;
        }
    };
    let mut buf = String::new();
    let result = dispatch(cli.command, &mut buf);
    let _ = out.write_all(buf.as_bytes());
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_VIOLATION,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

// Ok(false) means a bound was violated.
fn dispatch(command: Command, out: &mut String) -> Result<bool, CliError> {
    match command {
        Command::Ehrhart { file, max_dilate } => {
            let poly = load_polytope(&file)?;
            let q = poly.ehrhart_quasipolynomial()?;
            report::quasipolynomial(out, &q);
            if let Some(n_max) = max_dilate {
                for n in 0..=n_max {
                    report::line(out, format!("dilate n={n} points={}", poly.count_lattice_points(n)));
                }
            }
            Ok(true)
        }
        Command::Faces { file } => {
            let poly = load_polytope(&file)?;
            let faces = enumerate_faces(&poly);
            report::line(out, format!("faces={}", faces.len()));
            for f in &faces {
                report::face(out, f, f.span_contains_lattice_point());
            }
            Ok(true)
        }
        Command::VerifyPolytope { file } => {
            let poly = load_polytope(&file)?;
            let r = verify_ehrhart_grade_bound(&poly)?;
            report::ehrhart(out, &r);
            Ok(r.holds)
        }
        Command::Hilbert { weights, numerator } => {
            let hs = HilbertSeries::new(numerator, weights).map_err(|e| CliError::Input(e.to_string()))?;
            let (q, n0) = hs.hilbert_quasipolynomial().map_err(|e| CliError::Internal(e.to_string()))?;
            report::line(out, format!("pole_order={}", hs.pole_order_at_one()));
            report::line(out, format!("n0={n0}"));
            report::line(out, format!("grade={}", q.grade()));
            report::quasipolynomial(out, &q);
            Ok(true)
        }
        Command::VerifyWeighted { weights, shifts } => {
            let p = WeightedModulePresentation::new(weights, shifts).map_err(|e| CliError::Input(e.to_string()))?;
            let r = verify_grade_bound_weighted(&p).map_err(|e| CliError::Internal(e.to_string()))?;
            report::weighted(out, &r);
            Ok(r.holds)
        }
        Command::QpGrade { file } => {
            let q: QuasiPolynomial = read(&file)?
                .parse()
                .map_err(|e: qpgrade::quasipoly::QuasiPolyError| CliError::Input(format!("{}: {e}", file.display())))?;
            let canonical = q.canonical();
            report::line(out, format!("grade={}", canonical.grade()));
            report::quasipolynomial(out, &canonical);
            Ok(true)
        }
        Command::RandomSuite { mode, seed, count } => {
            let outcome = run_suite(mode, seed, count);
            for v in &outcome.violations {
                report::line(out, format!("violation {v}"));
            }
            report::line(out, format!("checked={} violations={}", outcome.checked, outcome.violations.len()));
            Ok(outcome.violations.is_empty())
        }
    }
}
