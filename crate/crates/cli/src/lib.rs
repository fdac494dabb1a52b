//! Command-line front end for the Hermite form library.
//!
//! [`run`] takes the argument vector and returns the exit status together
//! with everything that would be written to stdout and stderr, so the
//! binary is a thin wrapper and tests can drive the commands in process.

mod report;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use ore_hermite::linsys::hermite_via_linsys_with;
use ore_hermite::matrix::{random_full_rank, random_unimodular_with};
use ore_hermite::text::{parse_instance, print_entry, print_instance};
use ore_hermite::{hermite_elimination, Derivation, Error, HermiteResult, LinsysOptions, OreMatrix};
use serde_json::{json, Value};

pub use report::{verify, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ore-hermite",
    version,
    about = "Hermite normal forms of matrices of differential polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the Hermite form H and the transform U with U*A = H.
    Hermite {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Algorithm::Elim)]
        algorithm: Algorithm,
        #[arg(long, value_enum, default_value_t = Emit::H)]
        emit: Emit,
        /// Re-check the result and fail if any check does not hold.
        #[arg(long)]
        verify: bool,
        /// Worker threads for the degree search of the linsys algorithm.
        #[arg(long, value_name = "N", value_parser = clap::value_parser!(u16).range(1..))]
        jobs: Option<u16>,
        #[arg(long)]
        json: bool,
    },
    /// Verify a claimed pair (U, H) for the input A.
    Check {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        u: PathBuf,
        #[arg(long, value_name = "FILE")]
        h: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print a reproducible random instance.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degd: usize,
        #[arg(long)]
        degt: usize,
        #[arg(long)]
        seed: u64,
        /// Emit a random unimodular matrix built from K elementary row
        /// operations instead of a full-rank instance.
        #[arg(long, value_name = "K")]
        unimodular_steps: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Elim,
    Linsys,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    H,
    U,
    Both,
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Runs one command line; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    match cli.command {
        Command::Hermite {
            input,
            algorithm,
            emit,
            verify,
            jobs,
            json,
        } => hermite(&input, algorithm, emit, verify, jobs, json),
        Command::Check { input, u, h, json } => check(&input, &u, &h, json),
        Command::Random {
            n,
            degd,
            degt,
            seed,
            unimodular_steps,
        } => random(n, degd, degt, seed, unimodular_steps),
    }
}

fn read_matrix(path: &Path) -> Result<OreMatrix, Outcome> {
    let text = fs::read_to_string(path)
        .map_err(|e| Outcome::fail(EXIT_USAGE, format!("error: cannot read {}: {e}\n", path.display())))?;
    parse_instance(&text).map_err(|e| Outcome::fail(EXIT_USAGE, format!("error: {}: {e}\n", path.display())))
}

fn matrix_json(m: &OreMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|e| Value::String(print_entry(e))).collect()))
            .collect(),
    )
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn hermite(
    input: &Path,
    algorithm: Algorithm,
    emit: Emit,
    verify_result: bool,
    jobs: Option<u16>,
    json_out: bool,
) -> Outcome {
    let a = match read_matrix(input) {
        Ok(a) => a,
        Err(o) => return o,
    };
    if !a.is_square() {
        return Outcome::fail(
            EXIT_USAGE,
            format!("error: the Hermite form needs a square matrix, got {}x{}\n", a.rows(), a.cols()),
        );
    }

    let computed: Result<(HermiteResult, Option<usize>), Error> = match algorithm {
        Algorithm::Elim => hermite_elimination(&a).map(|r| (r, None)),
        Algorithm::Linsys => {
            let threads = jobs.map_or(1, usize::from);
            let opts = LinsysOptions { parallel: threads > 1 };
            let solve = || hermite_via_linsys_with(&a, opts).map(|(r, s)| (r, Some(s.probe_count())));
            if threads > 1 {
                match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
                    Ok(pool) => pool.install(solve),
                    Err(e) => return Outcome::fail(EXIT_FAILED, format!("error: thread pool: {e}\n")),
                }
            } else {
                solve()
            }
        }
    };
    let (res, probes) = match computed {
        Ok(r) => r,
        Err(Error::RankDeficient { dependent_rows }) => {
            // the linear-system path cannot name rows; elimination can
            let rows = if dependent_rows.is_empty() {
                match hermite_elimination(&a) {
                    Err(Error::RankDeficient { dependent_rows }) => dependent_rows,
                    _ => dependent_rows,
                }
            } else {
                dependent_rows
            };
            let e = Error::RankDeficient { dependent_rows: rows };
            return Outcome::fail(EXIT_FAILED, format!("error: {e}\n"));
        }
        Err(e) => return Outcome::fail(EXIT_FAILED, format!("error: {e}\n")),
    };

    let report = verify_result.then(|| verify(&a, &res.u, &res.h));
    let failed = report.as_ref().is_some_and(|r| !r.passed());

    let mut stdout = String::new();
    let mut stderr = String::new();
    if json_out {
        let mut doc = json!({
            "algorithm": match algorithm { Algorithm::Elim => "elim", Algorithm::Linsys => "linsys" },
            "n": a.rows(),
            "derivation": a.derivation().name(),
            "diagDegrees": res.diag_degrees.0,
        });
        if matches!(emit, Emit::U | Emit::Both) {
            doc["U"] = matrix_json(&res.u);
        }
        if matches!(emit, Emit::H | Emit::Both) {
            doc["H"] = matrix_json(&res.h);
        }
        if let Some(p) = probes {
            doc["probes"] = json!(p);
        }
        if let Some(r) = &report {
            doc["verification"] = r.to_json();
        }
        stdout = pretty(&doc);
    } else {
        match emit {
            Emit::H => stdout.push_str(&print_instance(&res.h)),
            Emit::U => stdout.push_str(&print_instance(&res.u)),
            Emit::Both => {
                stdout.push_str(&print_instance(&res.u));
                stdout.push_str("---\n");
                stdout.push_str(&print_instance(&res.h));
            }
        }
        if let Some(r) = &report {
            stderr.push_str(&r.to_text());
        }
    }
    Outcome {
        code: if failed { EXIT_FAILED } else { EXIT_OK },
        stdout,
        stderr,
    }
}

fn check(input: &Path, u: &Path, h: &Path, json_out: bool) -> Outcome {
    let (a, u, h) = match (read_matrix(input), read_matrix(u), read_matrix(h)) {
        (Ok(a), Ok(u), Ok(h)) => (a, u, h),
        (Err(o), _, _) | (_, Err(o), _) | (_, _, Err(o)) => return o,
    };
    if a.derivation() != u.derivation() || a.derivation() != h.derivation() {
        return Outcome::fail(EXIT_USAGE, "error: the three files use different derivations\n".into());
    }
    let report = verify(&a, &u, &h);
    let stdout = if json_out {
        pretty(&report.to_json())
    } else {
        report.to_text()
    };
    Outcome {
        code: if report.passed() { EXIT_OK } else { EXIT_FAILED },
        stdout,
        stderr: String::new(),
    }
}

fn random(n: usize, degd: usize, degt: usize, seed: u64, steps: Option<usize>) -> Outcome {
    if n == 0 {
        return Outcome::fail(EXIT_USAGE, "error: --n must be positive\n".into());
    }
    let m = match steps {
        Some(k) => random_unimodular_with(n, k, degd, degt, seed, Derivation::Standard),
        None => random_full_rank(n, degd, degt, seed, Derivation::Standard).0,
    };
    Outcome::ok(print_instance(&m))
}
