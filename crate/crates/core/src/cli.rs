//! The `ccl` command line.
//!
//! Exit codes: 0 success, 1 evaluation or check failure, 2 usage or parse
//! error.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::checker::{check_derivation, Derivation, Report};
use crate::corpus::{load_dir, run_entry};
use crate::opsem::{eval, trace, EvalError, DEFAULT_FUEL};
use crate::props::{run_suite, Suite};
use crate::syntax::{parse, print, Term};

pub const FUEL_VAR: &str = "CCL_FUEL";

#[derive(Parser, Debug)]
#[command(name = "ccl", about = "Cartesian cubical interpreter and derivation checker")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Evaluate a closed program to a value.
    Eval {
        /// Program file, or `-` for standard input.
        file: PathBuf,
        #[arg(long)]
        fuel: Option<u64>,
    },
    /// List every step of an evaluation.
    Trace {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        fuel: Option<u64>,
    },
    /// Check a derivation tree stored as JSON.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run every `*.ccl` program of a directory against its expected value.
    Canonicity { dir: PathBuf },
    /// Run a randomized property suite.
    Proptest {
        /// dim-preservation, stability, subst-functoriality, exclusivity,
        /// roundtrip or coherence-bool
        suite: String,
        #[arg(long, default_value_t = 10_000)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// A usage or parse error.
struct Usage(String);

type Res = Result<i32, Usage>;

/// Runs the command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut io = Io { out, err };
    let res = match cli.cmd {
        Cmd::Eval { file, fuel } => cmd_eval(&file, fuel, &mut io),
        Cmd::Trace { file, json, fuel } => cmd_trace(&file, json, fuel, &mut io),
        Cmd::Check { file, json } => cmd_check(&file, json, &mut io),
        Cmd::Canonicity { dir } => cmd_canonicity(&dir, &mut io),
        Cmd::Proptest { suite, n, seed } => cmd_proptest(&suite, n, seed, &mut io),
    };
    match res {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            2
        }
    }
}

/// `--fuel`, else `CCL_FUEL`, else the default.
fn fuel(flag: Option<u64>) -> Result<u64, Usage> {
    if let Some(f) = flag {
        return Ok(f);
    }
    match std::env::var(FUEL_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| Usage(format!("{FUEL_VAR} must be a number, got `{v}`"))),
        Err(_) => Ok(DEFAULT_FUEL),
    }
}

fn read_input(file: &Path) -> Result<String, Usage> {
    if file == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(file).map_err(|e| Usage(format!("{}: {e}", file.display())))
    }
}

fn read_term(file: &Path) -> Result<Term, Usage> {
    let text = read_input(file)?;
    parse(&text).map_err(|e| Usage(format!("{}: {e}", file.display())))
}

fn report_eval_error(e: &EvalError, io: &mut Io) {
    let _ = match e {
        EvalError::Stuck { reason, path, redex } => {
            writeln!(io.err, "stuck: {reason}\n  at {}\n  under {}", print(redex), path.join(" > "))
        }
        EvalError::FuelExhausted { fuel, last } => writeln!(io.err, "fuel exhausted after {fuel} steps at {}", print(last)),
    };
}

fn cmd_eval(file: &Path, fuel_flag: Option<u64>, io: &mut Io) -> Res {
    let fuel = fuel(fuel_flag)?;
    let m = read_term(file)?;
    match eval(&m, fuel) {
        Ok(v) => {
            let _ = writeln!(io.out, "{}", print(&v.value));
            Ok(0)
        }
        Err(e) => {
            report_eval_error(&e, io);
            Ok(1)
        }
    }
}

fn cmd_trace(file: &Path, json: bool, fuel_flag: Option<u64>, io: &mut Io) -> Res {
    let fuel = fuel(fuel_flag)?;
    let m = read_term(file)?;
    let t = trace(&m, fuel);
    if json {
        let _ = writeln!(io.out, "{}", serde_json::to_string_pretty(&t.to_json()).expect("JSON values serialize"));
    } else {
        for (k, s) in t.steps.iter().enumerate() {
            let flag = if s.stable { "stable" } else { "unstable" };
            let _ = writeln!(io.out, "{:>4}  {:<22} {:<8}  {}", k + 1, s.rule, flag, print(&s.term));
        }
        match &t.outcome {
            Ok(v) => {
                let flag = if v.stable { "stable" } else { "unstable" };
                let _ = writeln!(io.out, "value ({flag}, {} steps): {}", v.steps, print(&v.value));
            }
            Err(e) => report_eval_error(e, io),
        }
    }
    Ok(if t.outcome.is_ok() { 0 } else { 1 })
}

fn cmd_check(file: &Path, json: bool, io: &mut Io) -> Res {
    let text = read_input(file)?;
    let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| Usage(format!("{}: {e}", file.display())))?;
    let report = match Derivation::from_json(&v) {
        Ok(d) => check_derivation(&d),
        Err(r) => r,
    };
    if json {
        let _ = writeln!(io.out, "{}", report.to_json());
    } else {
        let _ = writeln!(io.out, "{report}");
    }
    Ok(if report == Report::Ok { 0 } else { 1 })
}

fn cmd_canonicity(dir: &Path, io: &mut Io) -> Res {
    let entries = load_dir(dir).map_err(Usage)?;
    if entries.is_empty() {
        return Err(Usage(format!("{}: no .ccl programs", dir.display())));
    }
    let fuel = fuel(None)?;
    let mut failed = 0;
    let _ = writeln!(io.out, "{:<24} {:<6} {:<22} {:>8} {:>9}  result", "program", "type", "value", "steps", "ms");
    for e in &entries {
        let r = run_entry(e, fuel);
        let shown = match &r.value {
            Ok(v) => print(v),
            Err(msg) => format!("error: {msg}"),
        };
        if !r.ok {
            failed += 1;
        }
        let verdict = match (&r.ok, &e.expected) {
            (true, _) => "PASS".to_string(),
            (false, Some(want)) => format!("FAIL (expected {})", print(want)),
            (false, None) => "FAIL".to_string(),
        };
        let ms = r.time.as_secs_f64() * 1e3;
        let ty = e.ty().unwrap_or("?");
        let _ = writeln!(io.out, "{:<24} {:<6} {:<22} {:>8} {:>9.3}  {verdict}", e.name, ty, shown, r.steps, ms);
    }
    let _ = writeln!(io.out, "{}/{} programs canonical", entries.len() - failed, entries.len());
    Ok(if failed == 0 { 0 } else { 1 })
}

fn cmd_proptest(suite: &str, n: u64, seed: u64, io: &mut Io) -> Res {
    let suite: Suite = suite.parse().map_err(Usage)?;
    let r = run_suite(suite, n, seed);
    let _ = writeln!(io.out, "{r}");
    Ok(if r.passed() { 0 } else { 1 })
}
