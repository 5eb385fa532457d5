//! Command-line front end.
//!
//! Exit codes: 0 pass, 1 fail/inconsistent/growing, 2 usage or
//! validation error, 3 inconclusive.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::config::{ConfigFile, LambdaSpec, RunConfig};
use crate::duals::{dual_report, ConditionVerdict, DualCandidate, DualKind, SourceSpace};
use crate::error::{Error, Result};
use crate::operators::{
    discrepancy_report, verification_suites, NamedMatrix, PrintedForm, MAX_EXACT_ORDER,
};
use crate::scalar::{Backend, Float, Rational, Scalar};
use crate::transforms::{
    apply, eta_sequence, inverse_apply, membership_report, theta_basis, SequenceWindow, Space,
    Verdict,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

/// Environment variable naming the default backend.
pub const BACKEND_ENV: &str = "SEQSPACE_BACKEND";

#[derive(Debug, Parser)]
#[command(
    name = "seqspace",
    version,
    about = "Fractional binomial difference operators on sequence spaces"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: CommonArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// JSON config file; flags override its fields.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Fractional order, e.g. 1/2.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub alpha: Option<String>,

    #[arg(long, global = true, allow_hyphen_values = true)]
    pub r: Option<String>,

    #[arg(long, global = true, allow_hyphen_values = true)]
    pub s: Option<String>,

    /// Lambda preset: cesaro, squares or powers2.
    #[arg(long, global = true, conflicts_with = "lambda_file")]
    pub lambda: Option<String>,

    /// File with one lambda value per line.
    #[arg(long, global = true)]
    pub lambda_file: Option<PathBuf>,

    /// exact or float (default from SEQSPACE_BACKEND, else exact).
    #[arg(long, global = true)]
    pub backend: Option<String>,

    /// Truncation order / window length.
    #[arg(long, short = 'n', global = true)]
    pub n: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Forward,
    Inverse,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one matrix entry.
    Entry {
        /// delta, delta-inv, binomial, binomial-inv, lambda, lambda-inv,
        /// composed or composed-inv.
        #[arg(long)]
        matrix: NamedMatrix,
        #[arg(long)]
        row: usize,
        #[arg(long)]
        col: usize,
    },
    /// Check every inverse identity and oracle agreement at order n.
    Verify {
        /// Also compare a printed closed form: lemma3, theorem4, eq21, theta.
        #[arg(long)]
        paper_variant: Option<String>,
    },
    /// Transform a sequence file (one scalar per line; `-` for stdin).
    Transform {
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long, default_value = "-")]
        input: PathBuf,
    },
    /// Emit a basis sequence theta^(k) or eta over n terms.
    #[command(group(ArgGroup::new("which").required(true).args(["k", "eta"])))]
    Basis {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        eta: bool,
    },
    /// Finite-window membership diagnostics.
    Membership {
        #[arg(long, default_value = "-")]
        input: PathBuf,
        /// c0, c, linf or lp.
        #[arg(long)]
        space: String,
        #[arg(long)]
        p: Option<f64>,
        /// Optional bound on sup |y| (linf) or the partial p-sum (lp).
        #[arg(long, allow_hyphen_values = true)]
        bound: Option<String>,
    },
    /// Evaluate the dual conditions for a multiplier sequence d.
    Dual {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        source: String,
        #[arg(long, default_value = "-")]
        input: PathBuf,
    },
}

impl CommonArgs {
    fn as_overrides(&self) -> ConfigFile {
        let lambda = match (&self.lambda, &self.lambda_file) {
            (Some(p), _) => Some(LambdaSpec::Preset { preset: p.clone() }),
            (None, Some(f)) => Some(LambdaSpec::File { file: f.clone() }),
            (None, None) => None,
        };
        ConfigFile {
            alpha: self.alpha.clone(),
            r: self.r.clone(),
            s: self.s.clone(),
            lambda,
            backend: self.backend.clone(),
            n: self.n,
        }
    }

    /// Config file, then flags; the env var only supplies the default
    /// backend.
    pub fn resolve(&self, env_backend: Option<&str>) -> Result<RunConfig> {
        let base = match &self.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let default_backend = match env_backend {
            Some(b) if !b.trim().is_empty() => b.parse()?,
            _ => Backend::Exact,
        };
        RunConfig::resolve(base.merged_with(self.as_overrides()), default_backend)
    }
}

/// Runs the CLI against the given streams and returns the exit code.
pub fn run<I, T>(
    args: I,
    env_backend: Option<&str>,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let outcome = cli
        .common
        .resolve(env_backend)
        .and_then(|cfg| match cfg.backend {
            Backend::Exact => execute::<Rational>(&cli.command, &cfg, stdin, stdout),
            Backend::Float => execute::<Float>(&cli.command, &cfg, stdin, stdout),
        });
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Config(format!("i/o: {e}"))
}

fn read_window<S: Scalar>(path: &Path, stdin: &mut dyn Read) -> Result<SequenceWindow<S>> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        stdin.read_to_string(&mut buf).map_err(io_err)?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("reading {}: {e}", path.display())))?
    };
    SequenceWindow::parse_lines(&text)
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Config(e.to_string()))?;
    writeln!(out, "{text}").map_err(io_err)
}

fn execute<S: Scalar>(
    command: &Command,
    cfg: &RunConfig,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
) -> Result<i32> {
    let op = cfg.operator::<S>()?;
    match command {
        Command::Entry { matrix, row, col } => {
            if col > row {
                return Err(Error::Config(format!(
                    "entry requires col <= row, got ({row}, {col})"
                )));
            }
            let t = matrix.build(&op)?;
            t.check_order(row + 1)?;
            writeln!(out, "{}", t.entry(*row, *col)).map_err(io_err)?;
            Ok(EXIT_PASS)
        }
        Command::Verify { paper_variant } => {
            if S::BACKEND == Backend::Exact && cfg.n > MAX_EXACT_ORDER {
                return Err(Error::TruncationCap {
                    requested: cfg.n,
                    cap: MAX_EXACT_ORDER,
                });
            }
            let variant = paper_variant
                .as_deref()
                .map(str::parse::<PrintedForm>)
                .transpose()?;
            let suites = verification_suites(&op, cfg.n)?;
            let mut all_pass = true;
            for s in &suites {
                all_pass &= s.pass;
                writeln!(
                    out,
                    "{}\t{}\t{}",
                    s.suite,
                    s.max_residual,
                    if s.pass { "pass" } else { "fail" }
                )
                .map_err(io_err)?;
            }
            if let Some(v) = variant {
                let rep = discrepancy_report(v, &op, cfg.n)?;
                all_pass &= rep.agrees;
                write_json(out, &rep)?;
            }
            Ok(if all_pass { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Transform { direction, input } => {
            let x = read_window::<S>(input, stdin)?;
            let y = match direction {
                Direction::Forward => apply(&op.forward(), &x)?,
                Direction::Inverse => inverse_apply(&op, &x)?,
            };
            out.write_all(y.to_lines().as_bytes()).map_err(io_err)?;
            Ok(EXIT_PASS)
        }
        Command::Basis { k, eta } => {
            let w = match (k, eta) {
                (_, true) => eta_sequence(&op, cfg.n)?,
                (Some(k), false) => theta_basis(&op, *k, cfg.n)?,
                (None, false) => unreachable!("clap enforces k or eta"),
            };
            out.write_all(w.to_lines().as_bytes()).map_err(io_err)?;
            Ok(EXIT_PASS)
        }
        Command::Membership {
            input,
            space,
            p,
            bound,
        } => {
            let x = read_window::<S>(input, stdin)?;
            let space = Space::parse(space, *p)?;
            let bound = bound.as_deref().map(S::parse).transpose()?;
            let rep = membership_report(&x, space, &op, bound.as_ref())?;
            write_json(out, &rep)?;
            Ok(match rep.verdict {
                Verdict::Consistent => EXIT_PASS,
                Verdict::Inconsistent => EXIT_FAIL,
                Verdict::Inconclusive => EXIT_INCONCLUSIVE,
            })
        }
        Command::Dual {
            kind,
            source,
            input,
        } => {
            let d = read_window::<S>(input, stdin)?;
            let kind: DualKind = kind.parse()?;
            let source: SourceSpace = source.parse()?;
            let order = cfg.n.min(d.len());
            let rep = dual_report(&DualCandidate::new(d), kind, source, &op, order)?;
            write_json(out, &rep)?;
            Ok(match rep.aggregate {
                ConditionVerdict::Growing => EXIT_FAIL,
                _ => EXIT_PASS,
            })
        }
    }
}
