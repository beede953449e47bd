//! The `mullreg` command line.
//!
//! Exit status: 0 on success, 1 when a `check` run finds a counterexample,
//! 2 for usage errors, unparsable input, and operator precondition
//! violations (for example `mull` on an e-singular partition).

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::error::{Error, Result};
use crate::hooks::{hook_profile, s_operator};
use crate::mullineux::{e_rim, mullineux, strip_i, strip_j};
use crate::partition::{parse_partition, Partition};
use crate::regularisation::regularise;
use crate::render::{render, Annotation, RenderOptions};
use crate::verify::{reports_to_json, run_suite, CheckConfig, Suite};

#[derive(Parser, Debug)]
#[command(
    name = "mullreg",
    version,
    about = "Regularisation, the Mullineux map, and hook combinatorics of partitions"
)]
struct Cli {
    #[command(flatten)]
    common: Common,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// The integer e ≥ 2.
    #[arg(long = "e", global = true)]
    e: Option<usize>,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Partition in exponent notation, e.g. "4,3^3,1^5"; "()" is the empty partition.
    #[arg(long, global = true, allow_hyphen_values = true)]
    partition: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Draw the Young diagram.
    Show {
        /// none, ladders, e-rim, truncated-rim or hook-classes
        #[arg(long, default_value = "none")]
        annotate: String,
    },
    /// Conjugate partition.
    Conjugate,
    /// e-regularisation.
    Reg,
    /// e-rim, its length r, m and l'.
    Rim,
    /// Remove the e-rim.
    #[command(name = "strip-i")]
    StripI,
    /// Remove the truncated e-rim.
    #[command(name = "strip-j")]
    StripJ,
    /// Mullineux map.
    Mull,
    /// Hook table with e-weight and steep/shallow counts.
    Hooks,
    /// Whether the partition is an L-partition.
    Lpart,
    /// The S operator.
    #[command(name = "s-op")]
    SOp,
    /// Run exhaustive checks and print JSON reports.
    Check {
        /// main, boxthm, lemmas, structural, census or all
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long = "max-n", default_value_t = 12)]
        max_n: usize,
        /// Inclusive range "A..B" or a single value.
        #[arg(long = "e-range", default_value = "2..6")]
        e_range: String,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Usage(err.to_string())
    }
}

/// Parses `A..B` (inclusive) or `A`.
pub fn parse_e_range(text: &str) -> Result<Vec<usize>> {
    let bad = |reason: &str| Error::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| bad("expected integers"))
    };
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let v = num(text)?;
            (v, v)
        }
    };
    if lo < 2 {
        return Err(Error::InvalidE(lo));
    }
    if hi < lo {
        return Err(bad("empty range"));
    }
    Ok((lo..=hi).collect())
}

/// Runs the CLI on `argv` (including the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Verification) => 1,
    }
}

fn partition_arg(common: &Common) -> std::result::Result<Partition, Failure> {
    let text = common
        .partition
        .as_deref()
        .ok_or_else(|| Failure::Usage("--partition is required".to_string()))?;
    Ok(parse_partition(text)?)
}

fn e_arg(common: &Common) -> std::result::Result<usize, Failure> {
    match common.e {
        Some(e) if e >= 2 => Ok(e),
        Some(e) => Err(Error::InvalidE(e).into()),
        None => Err(Failure::Usage("--e is required".to_string())),
    }
}

fn emit_partition(out: &mut dyn Write, p: &Partition, as_json: bool) -> std::io::Result<()> {
    if as_json {
        writeln!(out, "{}", p.to_json())
    } else {
        writeln!(out, "{p}")
    }
}

fn dispatch(
    cli: Cli,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::result::Result<(), Failure> {
    let common = &cli.common;
    let io = |e: std::io::Error| Failure::Usage(format!("write failed: {e}"));
    match cli.command {
        Command::Show { annotate } => {
            let annotation: Annotation = annotate.parse()?;
            let lam = partition_arg(common)?;
            let e = if annotation == Annotation::None {
                common.e
            } else {
                Some(e_arg(common)?)
            };
            let text = render(&lam, RenderOptions { annotation, e })?;
            if common.json {
                let lines: Vec<&str> = text.lines().collect();
                writeln!(
                    out,
                    "{}",
                    json!({ "partition": lam, "annotation": annotation.to_string(), "rows": lines })
                )
                .map_err(io)?;
            } else {
                writeln!(out, "{text}").map_err(io)?;
            }
        }
        Command::Conjugate => {
            let lam = partition_arg(common)?;
            emit_partition(out, &lam.conjugate(), common.json).map_err(io)?;
        }
        Command::Reg => {
            let (lam, e) = (partition_arg(common)?, e_arg(common)?);
            emit_partition(out, &regularise(&lam, e), common.json).map_err(io)?;
        }
        Command::StripI => {
            let (lam, e) = (partition_arg(common)?, e_arg(common)?);
            emit_partition(out, &strip_i(&lam, e)?, common.json).map_err(io)?;
        }
        Command::StripJ => {
            let (lam, e) = (partition_arg(common)?, e_arg(common)?);
            emit_partition(out, &strip_j(&lam, e)?, common.json).map_err(io)?;
        }
        Command::Mull => {
            let (lam, e) = (partition_arg(common)?, e_arg(common)?);
            emit_partition(out, &mullineux(&lam, e)?, common.json).map_err(io)?;
        }
        Command::SOp => {
            let (lam, e) = (partition_arg(common)?, e_arg(common)?);
            emit_partition(out, &s_operator(&lam, e)?, common.json).map_err(io)?;
        }
        Command::Rim => {
            let (lam, e) = (partition_arg(common)?, e_arg(common)?);
            let rim = e_rim(&lam, e)?;
            if common.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&rim).expect("serializable")
                )
                .map_err(io)?;
            } else {
                let list = |nodes: &[crate::Node]| {
                    nodes
                        .iter()
                        .map(|n| n.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                writeln!(out, "r = {}", rim.r).map_err(io)?;
                writeln!(out, "m = {}", rim.m).map_err(io)?;
                writeln!(out, "l' = {}", rim.l_prime).map_err(io)?;
                writeln!(out, "e-rim: {}", list(&rim.rim_nodes)).map_err(io)?;
                writeln!(out, "truncated e-rim: {}", list(&rim.truncated_rim)).map_err(io)?;
            }
        }
        Command::Hooks => {
            let (lam, e) = (partition_arg(common)?, e_arg(common)?);
            let profile = hook_profile(&lam, e);
            if common.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&profile).expect("serializable")
                )
                .map_err(io)?;
            } else {
                writeln!(out, "node\ta\tl\th\tdivisible\tclass").map_err(io)?;
                for r in &profile.records {
                    writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}\t{}",
                        r.node, r.arm, r.leg, r.length, r.divisible, r.class
                    )
                    .map_err(io)?;
                }
                writeln!(
                    out,
                    "w = {}, z = {}, z_conj = {}",
                    profile.w, profile.z, profile.z_conj
                )
                .map_err(io)?;
            }
        }
        Command::Lpart => {
            let (lam, e) = (partition_arg(common)?, e_arg(common)?);
            let profile = hook_profile(&lam, e);
            let bad = profile.bad_hooks().next().copied();
            if common.json {
                writeln!(
                    out,
                    "{}",
                    json!({ "l_partition": bad.is_none(), "bad_hook": bad })
                )
                .map_err(io)?;
            } else {
                match bad {
                    None => writeln!(out, "true").map_err(io)?,
                    Some(r) => writeln!(
                        out,
                        "false\nhook at {} has a = {}, l = {}, h = {}: divisible by {e} but neither shallow nor steep",
                        r.node, r.arm, r.leg, r.length
                    )
                    .map_err(io)?,
                }
            }
        }
        Command::Check {
            suite,
            max_n,
            e_range,
        } => {
            let suite: Suite = suite.parse()?;
            let cfg = CheckConfig::new(max_n, parse_e_range(&e_range)?);
            let started = Instant::now();
            let reports = run_suite(suite, &cfg)?;
            writeln!(out, "{}", reports_to_json(&reports)).map_err(io)?;
            for r in &reports {
                let _ = writeln!(
                    err,
                    "{} {} e={} n={}..{} instances={}",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.check_id,
                    r.e,
                    r.n_range.0,
                    r.n_range.1,
                    r.instances_checked
                );
            }
            let _ = writeln!(err, "wall time: {:.3}s", started.elapsed().as_secs_f64());
            if reports.iter().any(|r| !r.pass) {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}
