//! `ndc`: hook tables, membership verdicts, compression norms and positivity
//! checks for operators given as JSON specs or built-in demos.
//!
//! [`run`] is the whole program minus process I/O, so tests drive it
//! directly.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};

use normdecomp::compressions::{
    norm_via_compressions, positivity_via_compressions, CompressionSchedule, PositivityVerdict,
};
use normdecomp::decomposition::{hook_sequence, membership, MembershipVerdict};
use normdecomp::Error;

mod checks;
pub mod spec;

use spec::{load, DemoParams, SpecError};

pub const EXIT_OK: i32 = 0;
/// Demo or verification check failed.
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_NOT_HERMITIAN: i32 = 2;
pub const EXIT_CERTIFIED_OUT: i32 = 3;
pub const EXIT_EMPIRICAL: i32 = 4;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_NUMERIC: i32 = 70;

pub const DEFAULT_MAX_DEPTH: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "ndc", version, about = "Norm decompositions of infinite matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct OpArgs {
    /// Operator spec: a JSON file or demo:NAME
    #[arg(long)]
    op: String,
    /// Evaluate against this partition instead (uniform:W or cantor:<partition>)
    #[arg(long)]
    partition: Option<String>,
    /// demo:row-isometry coefficient
    #[arg(long, default_value_t = 0.75, allow_negative_numbers = true)]
    lambda: f64,
    /// demo:minf-geometric base
    #[arg(long, default_value_t = 0.5)]
    base: f64,
    /// demo:coarse-projection group
    #[arg(long, default_value_t = 0)]
    group: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Tsv,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Demo {
    NotIdeal,
    PartitionsDiffer,
    Minf,
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// Closure of members under sums, products and adjoints
    Closure {
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hook-norm bounds, one TSV row per block
    Hooks {
        #[command(flatten)]
        op: OpArgs,
        #[arg(long, default_value_t = 32)]
        horizon: usize,
        #[arg(long, default_value_t = 64)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Membership verdict with evidence
    Membership {
        #[command(flatten)]
        op: OpArgs,
        #[arg(long, default_value_t = 1e-6)]
        eps: f64,
        #[arg(long, default_value_t = 32)]
        horizon: usize,
        #[arg(long, default_value_t = 64)]
        depth: usize,
    },
    /// Norms of the prefix compressions and an estimate of the operator norm
    Norm {
        #[command(flatten)]
        op: OpArgs,
        #[arg(long, default_value_t = 8)]
        levels: usize,
        #[arg(long, default_value_t = 64)]
        depth: usize,
    },
    /// Positivity test over the prefix compressions
    Positivity {
        #[command(flatten)]
        op: OpArgs,
        #[arg(long, default_value_t = 8)]
        levels: usize,
        #[arg(long, default_value_t = 1e-9)]
        slack: f64,
        #[arg(long, default_value_t = 64)]
        depth: usize,
    },
    /// Run one of the built-in demonstrations
    Demo {
        #[arg(value_enum)]
        name: Demo,
    },
    /// Randomized property checks
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
}

enum Failure {
    Usage(String),
    Numeric(String),
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Precondition(_) | Error::Range { .. } | Error::Overlap { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Numeric(e.to_string()),
        }
    }
}

fn check_depth(depth: usize, max_depth: usize) -> Result<(), Failure> {
    if depth == 0 || depth > max_depth {
        return Err(Failure::Usage(format!(
            "--depth: {depth} outside 1..={max_depth} (NDC_MAX_DEPTH)"
        )));
    }
    Ok(())
}

fn positive(value: f64, key: &str) -> Result<(), Failure> {
    if !(value > 0.0 && value.is_finite()) {
        return Err(Failure::Usage(format!("{key}: expected a positive number, got {value}")));
    }
    Ok(())
}

fn at_least_one(value: usize, key: &str) -> Result<(), Failure> {
    if value == 0 {
        return Err(Failure::Usage(format!("{key}: must be at least 1")));
    }
    Ok(())
}

fn load_op(a: &OpArgs) -> Result<spec::Loaded, Failure> {
    let params = DemoParams {
        lambda: a.lambda,
        base: a.base,
        group: a.group,
    };
    Ok(load(&a.op, params, a.partition.as_deref())?)
}

fn upper_text(u: Option<f64>) -> String {
    u.map_or_else(|| "inf".to_string(), |u| u.to_string())
}

fn dispatch(command: Command, max_depth: usize, out: &mut String) -> Result<i32, Failure> {
    match command {
        Command::Hooks {
            op,
            horizon,
            depth,
            format: Format::Tsv,
        } => {
            check_depth(depth, max_depth)?;
            at_least_one(horizon, "--horizon")?;
            let l = load_op(&op)?;
            for h in hook_sequence(&l.op, &l.partition, horizon, depth)? {
                writeln!(out, "{}\t{}\t{}", h.i, h.bound.lower, upper_text(h.bound.upper)).unwrap();
            }
            Ok(EXIT_OK)
        }
        Command::Membership {
            op,
            eps,
            horizon,
            depth,
        } => {
            check_depth(depth, max_depth)?;
            positive(eps, "--eps")?;
            at_least_one(horizon, "--horizon")?;
            let l = load_op(&op)?;
            let v = membership(&l.op, &l.partition, eps, horizon, depth)?;
            writeln!(out, "{v}").unwrap();
            Ok(match v {
                MembershipVerdict::CertifiedIn { .. } => EXIT_OK,
                MembershipVerdict::CertifiedOut { .. } => EXIT_CERTIFIED_OUT,
                MembershipVerdict::Empirical { .. } => EXIT_EMPIRICAL,
            })
        }
        Command::Norm { op, levels, depth } => {
            check_depth(depth, max_depth)?;
            at_least_one(levels, "--levels")?;
            let l = load_op(&op)?;
            let sched = CompressionSchedule::prefixes(levels, depth)?;
            let est = norm_via_compressions(&l.op, &l.partition, &sched)?;
            for (n, p) in est.points.iter().enumerate() {
                writeln!(out, "{}\t{p}", n + 1).unwrap();
            }
            writeln!(out, "estimate\t{}\t{}", est.estimate.lower, upper_text(est.estimate.upper)).unwrap();
            Ok(EXIT_OK)
        }
        Command::Positivity {
            op,
            levels,
            slack,
            depth,
        } => {
            check_depth(depth, max_depth)?;
            at_least_one(levels, "--levels")?;
            positive(slack, "--slack")?;
            let l = load_op(&op)?;
            let sched = CompressionSchedule::prefixes(levels, depth)?;
            match positivity_via_compressions(&l.op, &l.partition, &sched, slack)? {
                PositivityVerdict::NotHermitian { row, col } => {
                    writeln!(out, "NOT_HERMITIAN row={row} col={col}").unwrap();
                    Ok(EXIT_NOT_HERMITIAN)
                }
                PositivityVerdict::NegativeWitness {
                    subset,
                    min_eig,
                    trigger,
                } => {
                    let s: Vec<String> = subset.iter().map(|b| b.to_string()).collect();
                    writeln!(
                        out,
                        "NEGATIVE_WITNESS subset={{{}}} min_eig={min_eig} level={}",
                        s.join(","),
                        trigger + 1
                    )
                    .unwrap();
                    Ok(EXIT_CERTIFIED_OUT)
                }
                PositivityVerdict::PositiveUpTo {
                    n_checked,
                    worst_min_eig,
                } => {
                    writeln!(out, "POSITIVE_UP_TO levels={n_checked} worst_min_eig={worst_min_eig}").unwrap();
                    Ok(EXIT_OK)
                }
            }
        }
        Command::Demo { name } => {
            let lines = match name {
                Demo::NotIdeal => checks::not_ideal()?,
                Demo::PartitionsDiffer => checks::partitions_differ()?,
                Demo::Minf => checks::minf()?,
            };
            Ok(checks::report(&lines, out))
        }
        Command::Verify {
            what: Verify::Closure { trials, seed },
        } => {
            at_least_one(trials, "--trials")?;
            Ok(checks::closure(trials, seed, out)?)
        }
    }
}

/// Runs `ndc` on `argv` (program name first), with the depth cap taken from
/// `NDC_MAX_DEPTH`.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with_max_depth(argv, std::env::var("NDC_MAX_DEPTH").ok().as_deref())
}

/// As [`run`], with the raw `NDC_MAX_DEPTH` value passed in.
pub fn run_with_max_depth<I, S>(argv: I, max_depth: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let fail = |code, stderr: String| Outcome {
        code,
        stdout: String::new(),
        stderr,
    };
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                fail(code, text)
            };
        }
    };
    let max_depth = match max_depth {
        None => DEFAULT_MAX_DEPTH,
        Some(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => n,
            _ => return fail(EXIT_USAGE, format!("NDC_MAX_DEPTH: expected a positive integer, got {s:?}\n")),
        },
    };
    let mut stdout = String::new();
    match dispatch(cli.command, max_depth, &mut stdout) {
        Ok(code) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => fail(EXIT_USAGE, format!("ndc: {msg}\n")),
        Err(Failure::Numeric(msg)) => fail(EXIT_NUMERIC, format!("ndc: {msg}\n")),
    }
}
