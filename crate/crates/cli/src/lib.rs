//! Batch front end: reads a problem file, runs one command, and renders the result as
//! canonical text with a stable exit code.

pub mod problem;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use coxdescent::galois::descend;
use coxdescent::sample::random_nonzero_scalar;
use coxdescent::{Error as CoreError, Ideal, Polynomial, StrictCi};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use problem::{Problem, ProblemFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_STRICT: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SEMANTIC: i32 = 3;
pub const EXIT_NOT_CI: i32 = 4;
pub const EXIT_PRECONDITION: i32 = 5;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Reduced Groebner basis of an ideal
    Gb,
    /// Saturation of an ideal by another (default: the irrelevant ideal)
    Saturate,
    /// Strict complete intersection test
    StrictCi,
    /// Complete intersection test
    Ci,
    /// Krull dimension and height
    Dim,
    /// Rearrange generators into Galois orbits
    Descend,
}

#[derive(Debug, Parser)]
#[command(name = "coxdescent", version, about = "Strict complete intersections in Cox rings and their Galois descent")]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// Problem file
    pub file: PathBuf,
    /// Ideal to operate on (default: the first one in the file)
    #[arg(long)]
    pub ideal: Option<String>,
    /// Ideal to saturate against (default: the irrelevant ideal)
    #[arg(long)]
    pub against: Option<String>,
    /// Seed for the randomized membership self-check of `descend`
    #[arg(long)]
    pub seed: Option<u64>,
}

/// What a run prints and how it exits.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn error(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {message}\n"), code }
    }

    fn verdict(code: i32, line: String) -> Self {
        Outcome { stdout: line, stderr: String::new(), code }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub ideal: Option<String>,
    pub against: Option<String>,
    pub seed: Option<u64>,
}

pub fn run(cli: &Cli) -> Outcome {
    match std::fs::read_to_string(&cli.file) {
        Ok(text) => {
            let opts = Options { ideal: cli.ideal.clone(), against: cli.against.clone(), seed: cli.seed };
            run_text(cli.command, &text, &opts)
        }
        Err(e) => Outcome::error(EXIT_SEMANTIC, format!("cannot read {}: {e}", cli.file.display())),
    }
}

/// Runs `command` on the contents of a problem file.
pub fn run_text(command: Command, text: &str, opts: &Options) -> Outcome {
    let problem = match ProblemFile::parse(text).and_then(|f| f.build()) {
        Ok(p) => p,
        Err(e) => {
            let code = if e.is_parse_error() { EXIT_PARSE } else { EXIT_SEMANTIC };
            return Outcome::error(code, e);
        }
    };
    match execute(command, &problem, opts) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::error(EXIT_SEMANTIC, e),
    }
}

fn lines(ps: &[Polynomial]) -> String {
    if ps.is_empty() {
        return "0\n".into();
    }
    ps.iter().map(|p| format!("{p}\n")).collect()
}

/// Basis for printing: reduced basis modulo the defining ideal, `1` for the unit ideal.
fn printed_basis(ideal: &Ideal) -> Vec<Polynomial> {
    if ideal.is_unit() {
        vec![Polynomial::one(ideal.poly_ring())]
    } else {
        ideal.gens_mod_defining()
    }
}

fn execute(command: Command, problem: &Problem, opts: &Options) -> Result<Outcome, String> {
    let amb = &problem.amb;
    let (name, gens) = problem.ideal(opts.ideal.as_deref()).ok_or_else(|| match &opts.ideal {
        Some(n) => format!("no ideal named `{n}`"),
        None => "the file defines no ideal".to_string(),
    })?;
    let core = |e: CoreError| format!("ideal `{name}`: {e}");
    let ideal = amb.ideal(gens).map_err(core)?;
    Ok(match command {
        Command::Gb => Outcome::ok(lines(&printed_basis(&ideal))),
        Command::Saturate => {
            let direction = match &opts.against {
                None => amb.irrelevant_ideal(),
                Some(n) => {
                    let (_, g) = problem.ideal(Some(n)).ok_or_else(|| format!("no ideal named `{n}`"))?;
                    amb.ideal(g).map_err(core)?
                }
            };
            let sat = ideal.saturate(&direction).map_err(core)?;
            Outcome::ok(lines(&printed_basis(&sat)))
        }
        Command::StrictCi => match amb.is_strict_ci(gens).map_err(core)? {
            StrictCi::Strict => Outcome::verdict(EXIT_OK, "STRICT\n".into()),
            StrictCi::NotStrict { witness } => {
                Outcome::verdict(EXIT_NOT_STRICT, format!("NOT_STRICT witness={witness}\n"))
            }
            StrictCi::NotCi { height, expected } => {
                Outcome::verdict(EXIT_NOT_CI, format!("NOT_CI height={height} expected={expected}\n"))
            }
        },
        Command::Ci => {
            let height = amb.ci_height(gens).map_err(core)?;
            let expected = gens.len();
            if height == expected {
                Outcome::verdict(EXIT_OK, format!("CI height={height} expected={expected}\n"))
            } else {
                Outcome::verdict(EXIT_NOT_CI, format!("NOT_CI height={height} expected={expected}\n"))
            }
        }
        Command::Dim => {
            let dim = ideal.dimension().map_err(core)?;
            let height = ideal.height().map_err(core)?;
            Outcome::ok(format!("dim={dim} height={height}\n"))
        }
        Command::Descend => {
            let action = problem.action.as_ref().ok_or("`descend` needs an `action` line")?;
            let result = match descend(amb, action, gens) {
                Ok(r) => r,
                Err(e) => {
                    let tag = match &e {
                        CoreError::NotInvariant => "NOT_INVARIANT",
                        CoreError::NotStrict => "NOT_STRICT",
                        CoreError::DegreeMismatch(_) => "DEGREE_MISMATCH",
                        CoreError::InvalidAction(_) => "NOT_GALOIS",
                        _ => return Err(core(e)),
                    };
                    return Ok(Outcome {
                        stdout: format!("{tag}\n"),
                        stderr: format!("error: {e}\n"),
                        code: EXIT_PRECONDITION,
                    });
                }
            };
            let mut out = String::new();
            for orbit in result.orbits() {
                let parts: Vec<String> = orbit.iter().map(|f| f.to_string()).collect();
                writeln!(out, "ORBIT {{ {} }}", parts.join(" ; ")).unwrap();
            }
            for (i, (before, after)) in result.degree_log.iter().enumerate() {
                writeln!(out, "H{} {before} -> {after}", i + 1).unwrap();
            }
            let equal = amb.ideal(&result.new_gens).map_err(core)?.equals(&ideal).map_err(core)?;
            writeln!(out, "IDEAL_EQUAL={equal}").unwrap();
            if let Some(seed) = opts.seed {
                let passed = self_check(seed, &ideal, &result.new_gens).map_err(core)?;
                writeln!(out, "SELF_CHECK={} seed={seed}", if passed { "pass" } else { "fail" }).unwrap();
            }
            Outcome::ok(out)
        }
    })
}

/// Random combinations of each generating set must lie in the ideal of the other.
fn self_check(seed: u64, original: &Ideal, new_gens: &[Polynomial]) -> Result<bool, CoreError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = original.poly_ring();
    let tower = ring.tower();
    let renewed = Ideal::new(original.ring(), new_gens.to_vec())?;
    for _ in 0..8 {
        for (from, into) in [(original.gens(), &renewed), (new_gens, original)] {
            let mut combo = Polynomial::zero(ring);
            for g in from {
                if rng.gen_bool(0.6) {
                    let v = rng.gen_range(0..ring.nvars());
                    let m = Polynomial::var(ring, v).scale(random_nonzero_scalar(&mut rng, tower));
                    combo = &combo + &(&m * g);
                }
            }
            if !into.contains(&combo)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
