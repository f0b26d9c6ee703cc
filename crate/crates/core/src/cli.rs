//! The `starlattice` command line.
//!
//! Exit codes: 0 when every check came out as expected, 1 when a
//! verification failed, 2 on bad input or usage.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::fixtures;
use crate::hilbert_lattice;
use crate::locality;
use crate::qlogic::{self, FiniteOrtholattice};
use crate::report::{AxiomReport, CheckResult, VerificationReport, Witness};
use crate::scalars::ScalarRing;
use crate::star_algebra::{verify_algebra_axioms, StarAlgebra};
use crate::states_norms;
use crate::wedderburn;

/// Largest matrix size accepted by `tensor-deficit`.
pub const MAX_DEFICIT_SIZE: usize = 4;

/// Prefix that loads a bundled fixture instead of a file.
pub const FIXTURE_PREFIX: &str = "fixture:";

#[derive(Debug, Parser)]
#[command(name = "starlattice", version, about = "Check *-algebra and ortholattice axioms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Algebra axioms, Banach/C* inequalities and the positivity sweep.
    VerifyAlgebra {
        path: String,
        #[arg(long)]
        seed: u64,
        /// Random elements for the norm inequalities.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Random forms for the positivity comparison.
        #[arg(long, default_value_t = 1000)]
        forms: usize,
        /// Worker threads; 0 picks the rayon default. Output does not depend on it.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Block-diagonalize the left-regular representation.
    Decompose {
        path: String,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Symmetric dimension of M_n(K) ⊗ M_m(K) against the span of products.
    TensorDeficit {
        #[arg(long)]
        ring: ScalarRing,
        n: usize,
        m: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Poset, lattice, orthocomplement, orthomodularity, atomicity,
    /// covering and distributivity, in that order. The run stops after the
    /// first stage with a failing check.
    VerifyLattice {
        path: String,
        /// Check expected to fail; may be repeated.
        #[arg(long = "expect-fail", value_name = "CHECK")]
        expect_fail: Vec<String>,
        /// Also write the Hasse diagram in DOT format.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Pointwise lattice axioms on random subspaces of K^n.
    Subspace {
        #[arg(long)]
        ring: ScalarRing,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// List the bundled fixtures, optionally writing them to a directory.
    ListFixtures {
        #[arg(long, value_name = "DIR")]
        write: Option<PathBuf>,
    },
}

/// What a command produced: text for stdout and whether it came out as
/// expected.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub ok: bool,
}

/// Whether an error is the caller's fault (exit 2) rather than a failed
/// verification (exit 1).
pub fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Io(_)
            | Error::Json(_)
            | Error::InvalidAlgebra(_)
            | Error::InvalidLattice(_)
            | Error::InvalidArgument(_)
            | Error::DimensionMismatch { .. }
    )
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.output);
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if is_input_error(&e) { 2 } else { 1 })
        }
    }
}

fn read_input(path: &str) -> Result<String> {
    if let Some(name) = path.strip_prefix(FIXTURE_PREFIX) {
        return fixtures::get(name)
            .map(|f| f.contents)
            .ok_or_else(|| Error::InvalidArgument(format!("no bundled fixture named `{name}`")));
    }
    std::fs::read_to_string(Path::new(path))
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{path}: {e}"))))
}

fn render(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
    }
}

pub fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::VerifyAlgebra {
            path,
            seed,
            samples,
            forms,
            workers,
            format,
        } => {
            let a = StarAlgebra::from_json(&read_input(&path)?)?;
            let report = verify_algebra(&a, seed, samples, forms, workers);
            Ok(Outcome {
                output: render(&report, format),
                ok: report.passed(),
            })
        }
        Command::Decompose { path, seed, format } => {
            let a = StarAlgebra::from_json(&read_input(&path)?)?;
            let dec = wedderburn::block_diagonalize(&a, seed)?;
            let residual = wedderburn::verify_decomposition(&a, &dec)?;
            let report = dec.report();
            let output = match format {
                Format::Json => serde_json::to_string_pretty(&report)? + "\n",
                Format::Text => {
                    let mut s = format!("seed {} residual {:.3e}\n", report.seed, report.residual);
                    for b in &report.blocks {
                        s.push_str(&format!("M{}({}) x{}\n", b.n, b.ring, b.multiplicity));
                    }
                    s
                }
            };
            Ok(Outcome {
                output,
                ok: residual <= wedderburn::CLUSTER_TOL,
            })
        }
        Command::TensorDeficit { ring, n, m, format } => {
            if n == 0 || m == 0 || n > MAX_DEFICIT_SIZE || m > MAX_DEFICIT_SIZE {
                return Err(Error::InvalidArgument(format!(
                    "n and m must lie in 1..={MAX_DEFICIT_SIZE}, got {n} and {m}"
                )));
            }
            let row = locality::deficit_row(ring, n, m)?;
            let output = match format {
                Format::Json => serde_json::to_string_pretty(&[row])? + "\n",
                Format::Text => locality::format_table(&[row]),
            };
            Ok(Outcome { output, ok: true })
        }
        Command::VerifyLattice {
            path,
            expect_fail,
            dot,
            format,
        } => {
            let l = FiniteOrtholattice::from_json(&read_input(&path)?)?;
            if let Some(dot) = dot {
                std::fs::write(dot, l.to_dot())?;
            }
            let report = verify_lattice(&l, expect_fail)?;
            Ok(Outcome {
                output: render(&report, format),
                ok: report.as_expected(),
            })
        }
        Command::Subspace {
            ring,
            dim,
            samples,
            seed,
            workers,
            format,
        } => {
            if dim == 0 {
                return Err(Error::InvalidArgument("--dim must be positive".into()));
            }
            let r = hilbert_lattice::verify_pointwise_axioms_with_workers(ring, dim, samples, seed, workers)?;
            let mut report = VerificationReport::new("subspace", seed, r.checks);
            report.ring = Some(ring);
            report.ambient_dim = Some(dim);
            Ok(Outcome {
                output: render(&report, format),
                ok: report.passed(),
            })
        }
        Command::ListFixtures { write } => {
            let mut output = String::new();
            for f in fixtures::all() {
                let kind = match f.kind {
                    fixtures::FixtureKind::Algebra => "algebra",
                    fixtures::FixtureKind::Lattice => "lattice",
                };
                output.push_str(&format!("{:<22} {:<8} {}\n", f.name, kind, f.description));
            }
            if let Some(dir) = write {
                fixtures::write_all(&dir)?;
            }
            Ok(Outcome { output, ok: true })
        }
    }
}

/// The `verify-algebra` battery. Norm and state checks only run on inputs
/// that pass the algebra axioms; otherwise they are listed as skipped.
pub fn verify_algebra(a: &StarAlgebra, seed: u64, samples: usize, forms: usize, workers: usize) -> VerificationReport {
    let axioms = verify_algebra_axioms(a);
    let mut cases = axioms.checks.clone();
    let mut skipped = Vec::new();
    if axioms.passed() {
        cases.extend(states_norms::verify_banach_cstar_with_workers(a, samples, seed, workers).checks);
        cases.push(match states_norms::positivity_equivalence_sweep(a, forms, seed, workers) {
            Ok(sweep) => CheckResult::new(
                "positivity_equivalence",
                sweep.disagreements == 0,
                sweep.disagreements as f64,
            )
            .with_witness(sweep.witnesses.into_iter().next().map(Witness::Coords)),
            Err(_) => CheckResult::new("positivity_equivalence", false, f64::INFINITY),
        });
    } else {
        skipped.push("banach_cstar".to_string());
        skipped.push("positivity_equivalence".to_string());
    }
    let mut report = VerificationReport::new("verify-algebra", seed, cases);
    report.skipped = skipped;
    report
}

type Stage = (&'static str, fn(&FiniteOrtholattice) -> Result<AxiomReport>);

fn stages() -> [Stage; 7] {
    fn single(c: Result<CheckResult>) -> Result<AxiomReport> {
        Ok(AxiomReport { checks: vec![c?] })
    }
    [
        ("poset", |l| Ok(qlogic::verify_poset(l))),
        ("lattice", |l| Ok(qlogic::verify_lattice(l))),
        ("orthocomplement", |l| {
            let mut r = qlogic::verify_orthocomplement(l);
            if r.passed() {
                r.push(qlogic::verify_de_morgan(l)?);
            }
            Ok(r)
        }),
        ("orthomodular", |l| Ok(qlogic::verify_orthomodular(l))),
        ("atomistic", |l| Ok(qlogic::verify_atomistic(l))),
        ("covering", |l| Ok(qlogic::verify_covering(l))),
        ("distributive", |l| single(qlogic::is_distributive(l))),
    ]
}

/// Every check name `verify-lattice` can report.
pub fn lattice_check_names() -> Vec<String> {
    let mut names = Vec::new();
    let b3 = qlogic::boolean_lattice(2).expect("valid");
    for (_, stage) in stages() {
        names.extend(stage(&b3).expect("boolean lattice").checks.into_iter().map(|c| c.check));
    }
    names
}

/// The staged `verify-lattice` battery. A stage with any failing check,
/// expected or not, ends the run; the remaining stages are reported as
/// skipped.
pub fn verify_lattice(l: &FiniteOrtholattice, expect_fail: Vec<String>) -> Result<VerificationReport> {
    let known = lattice_check_names();
    if let Some(bad) = expect_fail.iter().find(|c| !known.contains(c)) {
        return Err(Error::InvalidArgument(format!(
            "unknown check `{bad}`; known checks: {}",
            known.join(", ")
        )));
    }
    let mut cases = Vec::new();
    let mut skipped = Vec::new();
    let mut stopped = false;
    for (name, stage) in stages() {
        if stopped {
            skipped.push(name.to_string());
            continue;
        }
        let r = stage(l)?;
        stopped = !r.passed();
        cases.extend(r.checks);
    }
    let mut report = VerificationReport::new("verify-lattice", 0, cases);
    report.expected_failures = expect_fail;
    report.skipped = skipped;
    Ok(report)
}
