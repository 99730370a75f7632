//! Command-line front end.
//!
//! Exit codes are a stable contract: 0 success, 1 a verification check
//! failed, 2 usage error, 3 enumeration guard exceeded, 4 invalid
//! configuration, 5 I/O failure.

pub mod export;
pub mod record;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::counting::{brute_force_count_jobs, formula_count, sequence, tally_gconfigs};
use crate::enumerate::{all_gconfigs, all_trees, gconfig_count_by_k, Guard};
use crate::gconfig::GConfiguration;
use crate::involution::{apply_checked, classify, verify_involution_jobs, InvolutionOutcome};

pub use record::ConfigRecord;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_INVALID: i32 = 4;
pub const EXIT_IO: i32 = 5;

/// Setting this to `1`/`true`/`yes` lifts the enumeration guard when
/// `--force` is not given.
pub const FORCE_ENV: &str = "LONECHILD_FORCE";

#[derive(Debug, Parser)]
#[command(
    name = "lonechild",
    version,
    about = "Count labeled lone-child-avoiding trees and check the G-configuration involution"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a(1), ..., a(N_MAX).
    Seq {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = SeqFormat::Bfile)]
        format: SeqFormat,
    },
    /// Exhaustively check counts and/or the involution at size N.
    Verify {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Mode::All)]
        mode: Mode,
        /// Lift the enumeration guard.
        #[arg(long)]
        force: bool,
        /// Worker threads; results do not depend on this.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
        /// Machine-readable report.
        #[arg(long)]
        json: bool,
    },
    /// Apply the involution to a configuration record.
    Pair { input: PathBuf },
    /// Write a configuration record as a Graphviz graph.
    Export { input: PathBuf, output: PathBuf },
    /// Stream every tree or configuration of size N, one per line.
    List {
        #[arg(value_enum)]
        kind: ListKind,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        force: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqFormat {
    Bfile,
    Records,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    All,
    Involution,
    Counts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListKind {
    Trees,
    Configs,
}

fn force_requested(flag: bool, env: Option<&str>) -> bool {
    flag || matches!(
        env.map(|s| s.trim().to_ascii_lowercase()).as_deref(),
        Some("1" | "true" | "yes")
    )
}

fn guard_for(flag: bool) -> Guard {
    let env = std::env::var(FORCE_ENV).ok();
    if force_requested(flag, env.as_deref()) {
        Guard::unlimited()
    } else {
        Guard::default()
    }
}

/// Runs the CLI with `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Seq { n_max, format } => cmd_seq(n_max as usize, format, out),
        Command::Verify {
            n,
            mode,
            force,
            jobs,
            json,
        } => cmd_verify(
            n as usize,
            mode,
            guard_for(force),
            jobs as usize,
            json,
            out,
            err,
        ),
        Command::Pair { input } => cmd_pair(&input, out, err),
        Command::Export { input, output } => cmd_export(&input, &output, err),
        Command::List { kind, n, force } => cmd_list(kind, n as usize, guard_for(force), out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_IO
        }
    }
}

fn cmd_seq(n_max: usize, format: SeqFormat, out: &mut dyn Write) -> io::Result<i32> {
    let table = sequence(n_max).expect("n_max >= 1 and the sum is always divisible");
    match format {
        SeqFormat::Bfile => out.write_all(table.to_bfile().as_bytes())?,
        SeqFormat::Records => {
            for (n, a) in table.rows() {
                writeln!(out, "{{\"n\":{n},\"a\":{a}}}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    n: usize,
    mode: Mode,
    guard: Guard,
    jobs: usize,
    as_json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let want_involution = matches!(mode, Mode::All | Mode::Involution);
    let want_counts = matches!(mode, Mode::All | Mode::Counts);
    let mut guard_check = guard.check_configs(n);
    if want_counts && guard_check.is_ok() {
        guard_check = guard.check_trees(n);
    }
    if let Err(e) = guard_check {
        writeln!(err, "error: {e}")?;
        return Ok(EXIT_GUARD);
    }

    let formula = formula_count(n).expect("n >= 1 and the sum is always divisible");
    let mut passed = true;
    let mut text = format!("n = {n}\nformula: {formula}\n");
    let mut doc = json!({ "n": n, "formula": formula.to_string() });

    if want_involution {
        let report = verify_involution_jobs(n, &guard, jobs).expect("guard checked");
        let fixed_matches = BigInt::from(report.fixed) == formula;
        passed &= report.passed() && fixed_matches;
        text += &format!(
            "involution: {} configs, {} pairs, {} fixed, total {}\n",
            report.configs, report.pairs, report.fixed, report.signed_total
        );
        for b in &report.per_k {
            text += &format!(
                "  k = {}: {} configs, {} paired, {} fixed\n",
                b.k, b.configs, b.paired, b.fixed
            );
        }
        if let Some(c) = &report.counterexample {
            text += &format!(
                "  counterexample ({}): {} {}\n",
                c.check, c.config, c.detail
            );
        }
        if !fixed_matches {
            text += &format!(
                "  fixed-point count {} differs from formula {formula}\n",
                report.fixed
            );
        }
        doc["involution"] = serde_json::to_value(&report).expect("report serializes");
        doc["involution"]["fixed_matches_formula"] = json!(fixed_matches);
    }

    if want_counts {
        let brute = brute_force_count_jobs(n, &guard, jobs).expect("guard checked");
        let tally = tally_gconfigs(n, &guard, jobs).expect("guard checked");
        let signed = tally.signed_total();
        let mut per_k_ok = true;
        let mut per_k = Vec::new();
        let mut per_k_text = String::new();
        for (i, &got) in tally.per_k.iter().enumerate() {
            let k = i + 1;
            let closed = gconfig_count_by_k(n, k).expect("1 <= k <= n");
            let ok = BigInt::from(got) == closed;
            per_k_ok &= ok;
            per_k_text += &format!("  k = {k}: {got} enumerated, {closed} closed form\n");
            per_k.push(json!({ "k": k, "enumerated": got, "closed_form": closed.to_string() }));
        }
        let agree = brute == formula && signed == formula;
        passed &= agree && per_k_ok;
        text += &format!(
            "counts:\n  formula      {formula}\n  brute force  {brute}\n  signed total {signed}\n"
        );
        text += &per_k_text;
        doc["counts"] = json!({
            "formula": formula.to_string(),
            "brute_force": brute.to_string(),
            "signed_total": signed.to_string(),
            "per_k": per_k,
            "agree": agree && per_k_ok,
        });
    }

    let verdict = if passed { "PASS" } else { "FAIL" };
    doc["verdict"] = json!(verdict);
    if as_json {
        writeln!(out, "{doc}")?;
    } else {
        text += &format!("verdict: {verdict}\n");
        out.write_all(text.as_bytes())?;
    }
    Ok(if passed { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn read_config(path: &Path, err: &mut dyn Write) -> io::Result<Result<GConfiguration, i32>> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            writeln!(err, "error: cannot read {}: {e}", path.display())?;
            return Ok(Err(EXIT_IO));
        }
    };
    let record = match ConfigRecord::from_text(&text) {
        Ok(r) => r,
        Err(e) => {
            writeln!(err, "error: malformed configuration record: {e}")?;
            return Ok(Err(EXIT_INVALID));
        }
    };
    match record.to_config() {
        Ok(c) => Ok(Ok(c)),
        Err(violations) => {
            writeln!(err, "error: invalid configuration")?;
            for v in &violations.0 {
                writeln!(err, "  {v}")?;
            }
            Ok(Err(EXIT_INVALID))
        }
    }
}

fn cmd_pair(input: &Path, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let config = match read_config(input, err)? {
        Ok(c) => c,
        Err(code) => return Ok(code),
    };
    writeln!(out, "# case: {}", classify(&config))?;
    match apply_checked(&config) {
        Ok(InvolutionOutcome::Fixed(_)) => writeln!(out, "FIXED")?,
        Ok(InvolutionOutcome::Paired(partner)) => {
            writeln!(out, "{}", ConfigRecord::from(&partner).to_json())?
        }
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_CHECK_FAILED);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_export(input: &Path, output: &Path, err: &mut dyn Write) -> io::Result<i32> {
    let config = match read_config(input, err)? {
        Ok(c) => c,
        Err(code) => return Ok(code),
    };
    if let Err(e) = std::fs::write(output, export::to_dot(&config)) {
        writeln!(err, "error: cannot write {}: {e}", output.display())?;
        return Ok(EXIT_IO);
    }
    Ok(EXIT_OK)
}

fn cmd_list(
    kind: ListKind,
    n: usize,
    guard: Guard,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    match kind {
        ListKind::Trees => match all_trees(n, &guard) {
            Ok(trees) => {
                for t in trees {
                    writeln!(out, "{t}")?;
                }
            }
            Err(e) => {
                writeln!(err, "error: {e}")?;
                return Ok(EXIT_GUARD);
            }
        },
        ListKind::Configs => match all_gconfigs(n, &guard) {
            Ok(configs) => {
                for c in configs {
                    writeln!(out, "{c}")?;
                }
            }
            Err(e) => {
                writeln!(err, "error: {e}")?;
                return Ok(EXIT_GUARD);
            }
        },
    }
    Ok(EXIT_OK)
}
