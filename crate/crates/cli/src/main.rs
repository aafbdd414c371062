//! `torus-ki`: expansions, bubble trees and verification runs from the
//! command line.
//!
//! Exit status: 0 on success, 1 when a verification check fails, 2 on
//! invalid arguments.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use torus_ki::torus::{document, series_latex, trees_latex, x_pq_limit, y_rat, TorusParams};
use torus_ki::verify::{self, Suite, VerifyConfig};

/// Directory receiving a copy of every verification report.
const REPORT_DIR_VAR: &str = "TORUS_KI_REPORT_DIR";

#[derive(Parser)]
#[command(name = "torus-ki", version, about = "Bubble-tree expansion of torus knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the gluing-graph series X_{p,q}.
    Expand(Common),
    /// Print the decorated bubble trees of X_{p,q}.
    Trees(Common),
    /// Run verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Args)]
struct Common {
    #[arg(long, allow_negative_numbers = true)]
    p: i64,
    #[arg(long, allow_negative_numbers = true)]
    q: i64,
    /// Largest edge count kept.
    #[arg(long, default_value_t = 3)]
    e_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, allow_negative_numbers = true, default_value_t = 2)]
    p: i64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 3)]
    q: i64,
    #[arg(long, default_value_t = 3)]
    e_max: usize,
    /// Truncation order of x-series.
    #[arg(long, default_value_t = 12)]
    order: i64,
    /// Covering degrees for the lift suite.
    #[arg(long = "r", num_args = 1.., default_values_t = [5, 7])]
    r: Vec<i64>,
    /// Suites to run, or `all`.
    #[arg(long, num_args = 1.., default_values_t = [String::from("all")])]
    suite: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the JSON report to FILE.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Checks,
    Io(String),
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn expand(c: &Common) -> Result<(), Failure> {
    let params = TorusParams::new(c.p, c.q, c.e_max).map_err(usage)?;
    let x = x_pq_limit(&params).map_err(usage)?;
    let text = match c.format {
        Format::Json => to_json(&x),
        Format::Latex => document(&series_latex(&format!("X_{{{},{}}}", c.p, c.q), &x, &params)),
        Format::Text => x.iter().map(|(g, k)| format!("{:>10}  {g}\n", torus_ki::rational::pretty(k))).collect(),
    };
    emit(&text, c.out.as_deref())
}

fn trees(c: &Common) -> Result<(), Failure> {
    let params = TorusParams::new(c.p, c.q, c.e_max).map_err(usage)?;
    let trees = y_rat(&params).map_err(usage)?;
    let text = match c.format {
        Format::Json => to_json(&trees),
        Format::Latex => document(&trees_latex(&trees)),
        Format::Text => trees.iter().map(|t| format!("{t}\n")).collect(),
    };
    emit(&text, c.out.as_deref())
}

fn parse_suites(names: &[String]) -> Result<Vec<Suite>, Failure> {
    if names.iter().any(|n| n == "all") {
        return Ok(Suite::ALL.to_vec());
    }
    let mut out = Vec::new();
    for n in names {
        let s: Suite = n.parse().map_err(usage)?;
        if !out.contains(&s) {
            out.push(s);
        }
    }
    Ok(out)
}

fn run_verify(v: &VerifyArgs) -> Result<(), Failure> {
    let params = TorusParams::new(v.p, v.q, v.e_max).map_err(usage)?;
    let suites = parse_suites(&v.suite)?;
    let cfg = VerifyConfig::new(params, v.order, v.r.clone()).map_err(usage)?;
    let report = verify::run(&suites, &cfg).map_err(usage)?;
    let json = to_json(&report);
    if let Some(path) = &v.out {
        emit(&json, Some(path))?;
    }
    if let Some(dir) = std::env::var_os(REPORT_DIR_VAR) {
        let dir = PathBuf::from(dir);
        std::fs::create_dir_all(&dir).map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
        emit(&json, Some(&dir.join("verify-report.json")))?;
    }
    match v.format {
        Format::Json => print!("{json}"),
        Format::Latex | Format::Text => {
            for c in &report.checks {
                println!("{} [{}] {}", if c.passed { "PASS" } else { "FAIL" }, c.suite, c.name);
            }
            let failed = report.failures().count();
            println!("{} checks, {failed} failed", report.checks.len());
        }
    }
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Expand(c) => expand(c),
        Command::Trees(c) => trees(c),
        Command::Verify(v) => run_verify(v),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
