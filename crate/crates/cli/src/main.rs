//! Command-line front end: parse a matrix-set document, dispatch to the
//! engines, and emit a report. Exit codes: 0 = yes, 1 = no, 2 = error.

mod commands;
mod demos;
mod report;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use flagstone::error::Error;
use flagstone::field::FieldSpec;
use flagstone::wire::ProblemDocWire;

use commands::VerifyOutcome;
use report::Report;

#[derive(Parser)]
#[command(
    name = "flagstone",
    version,
    about = "Exact simultaneous triangularization over Q and F_p"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide simultaneous triangularizability and emit a certified flag.
    Triangularize {
        /// Require a strict (zero-diagonal) triangularization.
        #[arg(long)]
        strict: bool,
        /// Problem document; stdin when omitted or "-".
        file: Option<PathBuf>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Structural decision through the algebra radical, with a cross-check
    /// against the constructive engine.
    Mccoy {
        file: Option<PathBuf>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Close the unital algebra and report its radical and quotient.
    Radical {
        file: Option<PathBuf>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compute the generated matrix algebra.
    Closure {
        /// Close without adjoining the identity.
        #[arg(long)]
        nonunital: bool,
        file: Option<PathBuf>,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run a built-in sandbox demonstration: lower-tri, shift, or non-iso.
    Demo {
        name: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Re-check the certificate or witness embedded in an emitted report.
    Verify {
        report: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// Override the document's field: Q, or F<p> for a prime p.
    #[arg(long)]
    field: Option<String>,
    /// Override the resource/probe bound.
    #[arg(long)]
    bound: Option<u64>,
    /// Emit the JSON report on stdout instead of human-readable text.
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(cli) {
        Ok(Outcome::Report { report, json }) => {
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report::render_human(&report));
                println!("time:     {} ms", started.elapsed().as_millis());
            }
            exit_code(report.exit)
        }
        Ok(Outcome::Verify { outcome, json }) => {
            let (valid, checked) = match outcome {
                VerifyOutcome::Valid(what) => (true, what),
                VerifyOutcome::Invalid(what) => (false, what),
            };
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "command": "verify",
                        "checked": checked,
                        "valid": valid,
                    })
                );
            } else {
                println!("checked:  {checked}");
                println!("valid:    {valid}");
            }
            exit_code(if valid { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

enum Outcome {
    Report { report: Report, json: bool },
    Verify { outcome: VerifyOutcome, json: bool },
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Triangularize { strict, file, common } => {
            let doc = load_doc(file.as_deref(), common.field.as_deref())?;
            let report = commands::cmd_triangularize(&doc, strict, common.bound)?;
            Ok(Outcome::Report { report, json: common.json })
        }
        Command::Mccoy { file, common } => {
            let doc = load_doc(file.as_deref(), common.field.as_deref())?;
            let report = commands::cmd_mccoy(&doc, common.bound)?;
            Ok(Outcome::Report { report, json: common.json })
        }
        Command::Radical { file, common } => {
            let doc = load_doc(file.as_deref(), common.field.as_deref())?;
            let report = commands::cmd_radical(&doc, common.bound)?;
            Ok(Outcome::Report { report, json: common.json })
        }
        Command::Closure { nonunital, file, common } => {
            let doc = load_doc(file.as_deref(), common.field.as_deref())?;
            let report = commands::cmd_closure(&doc, nonunital, common.bound)?;
            Ok(Outcome::Report { report, json: common.json })
        }
        Command::Demo { name, common } => {
            let report = demos::run_demo(&name, common.bound)?;
            Ok(Outcome::Report { report, json: common.json })
        }
        Command::Verify { report, common } => {
            let text = std::fs::read_to_string(&report)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", report.display())))?;
            let parsed = Report::from_json(&text).map_err(|e| Error::Parse(e.to_string()))?;
            let outcome = commands::cmd_verify(&parsed)?;
            Ok(Outcome::Verify { outcome, json: common.json })
        }
    }
}

fn load_doc(file: Option<&std::path::Path>, field_flag: Option<&str>) -> Result<ProblemDocWire, Error> {
    let text = match file {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", p.display())))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let mut doc = ProblemDocWire::from_json(&text)?;
    if let Some(flag) = field_flag {
        doc.field = parse_field_flag(flag)?;
    }
    Ok(doc)
}

/// "Q" or "F<p>", e.g. F5, F97.
fn parse_field_flag(s: &str) -> Result<FieldSpec, Error> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Q);
    }
    if let Some(p) = t.strip_prefix('F').or_else(|| t.strip_prefix('f')) {
        let p: u64 = p
            .parse()
            .map_err(|_| Error::Parse(format!("invalid field flag {s:?}")))?;
        return Ok(FieldSpec::Fp { p });
    }
    Err(Error::Parse(format!("invalid field flag {s:?}; expected Q or F<p>")))
}

fn exit_code(code: i32) -> ExitCode {
    ExitCode::from(code.clamp(0, 255) as u8)
}
