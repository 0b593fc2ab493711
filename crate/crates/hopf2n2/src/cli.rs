//! Command-line front end: verification suites, fusion tables,
//! presentations, and idempotent listings with deterministic output.
//!
//! Four subcommands cover the library's reporting surface:
//!
//! * `verify` runs one or all of the check suites and exits 0 only if
//!   every check passes,
//! * `table` emits the full fusion table as JSON or CSV,
//! * `presentation` prints the ring relations together with their
//!   verification,
//! * `idempotents` lists the primitive central idempotents with block
//!   kinds and dimensions.
//!
//! All commands accept `--n <int|all>` (where `all` means 2 through 8),
//! `--format <json|csv|text>`, and `--out <path>`. CSV is only
//! meaningful for the flat fusion table, so other commands reject it as
//! a usage error. Exit codes: 0 for success, 1 for a verification
//! failure, 2 for a usage error.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::report::VerificationReport;
use crate::{center, fusion, hopf, presentation, repr, Error, Result};

/// Version tag carried by every JSON document this crate emits.
pub const SCHEMA: &str = "hfl/1";

/// Exact arithmetic for the Hopf algebras H_{2n^2}: axiom checks,
/// block decompositions, fusion tables, and ring presentations.
#[derive(Parser, Debug)]
#[command(name = "hopf2n2", version)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification suites and report every check.
    Verify(CommonArgs),
    /// Emit the fusion multiplication table.
    Table(CommonArgs),
    /// Print the Grothendieck ring relations and verify them.
    Presentation(CommonArgs),
    /// List the primitive central idempotents with block data.
    Idempotents(CommonArgs),
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// Algebra parameter: an integer >= 2, or "all" for 2 through 8.
    #[arg(long)]
    n: String,
    /// Which verification suite to run (verify only).
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// The verification suites `verify` can run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Suite {
    Hopf,
    Idempotents,
    Repr,
    Fusion,
    Presentation,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::Idempotents => "idempotents",
            Suite::Repr => "repr",
            Suite::Fusion => "fusion",
            Suite::Presentation => "presentation",
            Suite::All => "all",
        }
    }
}

/// Output formats. CSV only applies to the fusion table.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One resolved invocation: parameters, suite, format, destination.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub ns: Vec<u32>,
    pub suite: Suite,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl CommonArgs {
    fn resolve(&self) -> Result<RunConfig> {
        Ok(RunConfig {
            ns: parse_n(&self.n)?,
            suite: self.suite,
            format: self.format,
            out: self.out.clone(),
        })
    }
}

/// Resolve the `--n` argument: a literal integer at least 2, or `all`
/// for the range 2 through 8 covered by the worked examples.
pub fn parse_n(s: &str) -> Result<Vec<u32>> {
    if s == "all" {
        return Ok((2..=8).collect());
    }
    match s.parse::<u32>() {
        Ok(n) if n >= 2 => Ok(vec![n]),
        _ => Err(Error::Usage(format!(
            "--n takes an integer >= 2 or \"all\", got {s:?}"
        ))),
    }
}

/// Run one verification suite for one parameter.
pub fn run_suite(n: u32, suite: Suite) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "parameter must be at least 2, got {n}"
        )));
    }
    let mut report = VerificationReport::new();
    if matches!(suite, Suite::Hopf | Suite::All) {
        report.merge(hopf::verify_hopf_axioms(n));
        report.merge(hopf::verify_integral(n));
        report.merge(hopf::verify_quasitriangular(n));
    }
    if matches!(suite, Suite::Idempotents | Suite::All) {
        report.merge(center::verify_block_structure(n));
    }
    if matches!(suite, Suite::Repr | Suite::All) {
        report.merge(repr::verify_representations(n));
    }
    if matches!(suite, Suite::Fusion | Suite::All) {
        report.merge(fusion::verify_fusion(n));
    }
    if matches!(suite, Suite::Presentation | Suite::All) {
        report.merge(presentation::verify_presentation(n));
    }
    Ok(report)
}

fn reject_csv(config: &RunConfig, command: &str) -> Result<()> {
    if config.format == Format::Csv {
        return Err(Error::Usage(format!(
            "csv output only applies to the table command, not {command}"
        )));
    }
    Ok(())
}

/// Render the verify output; the flag reports whether every check in
/// every requested run passed.
pub fn render_verify(config: &RunConfig) -> Result<(String, bool)> {
    reject_csv(config, "verify")?;
    let mut runs = Vec::new();
    for &n in &config.ns {
        runs.push((n, run_suite(n, config.suite)?));
    }
    let all_pass = runs.iter().all(|(_, r)| r.passed());
    let text = match config.format {
        Format::Json => {
            let results: Vec<Value> = runs
                .iter()
                .map(|(n, r)| {
                    json!({
                        "n": n,
                        "pass": r.passed(),
                        "checks": r,
                    })
                })
                .collect();
            let doc = json!({
                "schema": SCHEMA,
                "command": "verify",
                "suite": config.suite.name(),
                "pass": all_pass,
                "results": results,
            });
            pretty(&doc)
        }
        Format::Text => {
            let mut out = String::new();
            for (n, r) in &runs {
                let _ = writeln!(out, "n = {n}  suite = {}", config.suite.name());
                let _ = write!(out, "{r}");
            }
            let _ = writeln!(out, "overall: {}", if all_pass { "pass" } else { "fail" });
            out
        }
        Format::Csv => unreachable!("rejected above"),
    };
    Ok((text, all_pass))
}

/// Render the fusion table in the requested format.
pub fn render_table(config: &RunConfig) -> Result<String> {
    match config.format {
        Format::Csv => {
            if config.ns.len() != 1 {
                return Err(Error::Usage(
                    "csv table output takes a single --n value".into(),
                ));
            }
            Ok(fusion::fusion_table(config.ns[0])?.to_csv())
        }
        Format::Json => {
            let tables: Vec<Value> = config
                .ns
                .iter()
                .map(|&n| fusion::fusion_table(n).map(|t| t.to_json()))
                .collect::<Result<_>>()?;
            let doc = if tables.len() == 1 {
                tables.into_iter().next().unwrap()
            } else {
                json!({ "schema": SCHEMA, "command": "table", "tables": tables })
            };
            Ok(pretty(&doc))
        }
        Format::Text => {
            let mut out = String::new();
            for &n in &config.ns {
                let table = fusion::fusion_table(n)?;
                let labels = table.labels();
                let _ = writeln!(out, "n = {n}");
                for (i, a) in labels.iter().enumerate() {
                    for (j, b) in labels.iter().enumerate() {
                        let _ = writeln!(out, "{a} * {b} = {}", table.cell(i, j));
                    }
                }
            }
            Ok(out)
        }
    }
}

/// Render the presentation report; the flag is the combined verdict.
pub fn render_presentation(config: &RunConfig) -> Result<(String, bool)> {
    reject_csv(config, "presentation")?;
    let mut runs = Vec::new();
    for &n in &config.ns {
        let relations = presentation::presentation_relations(n)?;
        let report = presentation::verify_presentation(n);
        runs.push((n, relations, report));
    }
    let all_pass = runs.iter().all(|(_, _, r)| r.passed());
    let text = match config.format {
        Format::Json => {
            let results: Vec<Value> = runs
                .iter()
                .map(|(n, rels, report)| {
                    let rels: Vec<String> = rels.iter().map(|r| r.to_string()).collect();
                    json!({
                        "n": n,
                        "relations": rels,
                        "pass": report.passed(),
                        "checks": report,
                    })
                })
                .collect();
            let doc = json!({
                "schema": SCHEMA,
                "command": "presentation",
                "pass": all_pass,
                "results": results,
            });
            pretty(&doc)
        }
        Format::Text => {
            let mut out = String::new();
            for (n, rels, report) in &runs {
                let _ = writeln!(out, "n = {n}");
                let _ = writeln!(out, "relations:");
                for r in rels {
                    let _ = writeln!(out, "  {r}");
                }
                let _ = write!(out, "{report}");
                let _ = writeln!(
                    out,
                    "verdict: {}",
                    if report.passed() { "pass" } else { "fail" }
                );
            }
            out
        }
        Format::Csv => unreachable!("rejected above"),
    };
    Ok((text, all_pass))
}

/// Render the primitive central idempotent listing.
pub fn render_idempotents(config: &RunConfig) -> Result<String> {
    reject_csv(config, "idempotents")?;
    let mut out = String::new();
    match config.format {
        Format::Json => {
            let results: Vec<Value> = config
                .ns
                .iter()
                .map(|&n| {
                    let blocks: Vec<Value> = center::primitive_central_idempotents(n)
                        .iter()
                        .map(|e| {
                            json!({
                                "kind": e.kind.to_string(),
                                "module": repr::SimpleLabel::from_block(n, e.kind).to_string(),
                                "dim": e.block_size(),
                                "element": e.element.to_string(),
                            })
                        })
                        .collect();
                    json!({ "n": n, "count": blocks.len(), "blocks": blocks })
                })
                .collect();
            let doc = json!({
                "schema": SCHEMA,
                "command": "idempotents",
                "results": results,
            });
            out = pretty(&doc);
        }
        Format::Text => {
            for &n in &config.ns {
                let idems = center::primitive_central_idempotents(n);
                let _ = writeln!(out, "n = {n}  ({} blocks)", idems.len());
                for e in &idems {
                    let _ = writeln!(
                        out,
                        "{}  dim {}  {}",
                        e.kind,
                        e.block_size(),
                        repr::SimpleLabel::from_block(n, e.kind)
                    );
                }
            }
        }
        Format::Csv => unreachable!("rejected above"),
    }
    Ok(out)
}

fn pretty(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("json rendering cannot fail");
    s.push('\n');
    s
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, content)?,
        None => std::io::stdout().write_all(content.as_bytes())?,
    }
    Ok(())
}

/// Execute a parsed invocation. Returns whether the run counts as a
/// full pass (commands without a verdict always do).
pub fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify(args) => {
            let config = args.resolve()?;
            let (text, pass) = render_verify(&config)?;
            emit(&config.out, &text)?;
            Ok(pass)
        }
        Command::Table(args) => {
            let config = args.resolve()?;
            let text = render_table(&config)?;
            emit(&config.out, &text)?;
            Ok(true)
        }
        Command::Presentation(args) => {
            let config = args.resolve()?;
            let (text, pass) = render_presentation(&config)?;
            emit(&config.out, &text)?;
            Ok(pass)
        }
        Command::Idempotents(args) => {
            let config = args.resolve()?;
            let text = render_idempotents(&config)?;
            emit(&config.out, &text)?;
            Ok(true)
        }
    }
}

/// Parse the process arguments, execute, and map the outcome to an
/// exit status: 0 pass, 1 verification failure, 2 usage error.
pub fn run_main() -> u8 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e @ (Error::Usage(_) | Error::Io(_))) => {
            eprintln!("error: {e}");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(ns: &[u32], suite: Suite, format: Format) -> RunConfig {
        RunConfig {
            ns: ns.to_vec(),
            suite,
            format,
            out: None,
        }
    }

    #[test]
    fn n_argument_parses_numbers_and_all() {
        assert_eq!(parse_n("2").unwrap(), vec![2]);
        assert_eq!(parse_n("all").unwrap(), vec![2, 3, 4, 5, 6, 7, 8]);
        assert!(matches!(parse_n("1"), Err(Error::Usage(_))));
        assert!(matches!(parse_n("seven"), Err(Error::Usage(_))));
    }

    #[test]
    fn single_suites_pass_for_n2() {
        for suite in [
            Suite::Hopf,
            Suite::Idempotents,
            Suite::Repr,
            Suite::Fusion,
            Suite::Presentation,
        ] {
            let report = run_suite(2, suite).unwrap();
            assert!(report.passed(), "suite {}:\n{report}", suite.name());
        }
    }

    #[test]
    fn verify_json_has_schema_and_verdict() {
        let cfg = config(&[2], Suite::Idempotents, Format::Json);
        let (text, pass) = render_verify(&cfg).unwrap();
        assert!(pass);
        let doc: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["schema"], "hfl/1");
        assert_eq!(doc["pass"], true);
        assert_eq!(doc["results"][0]["n"], 2);
        assert!(doc["results"][0]["checks"].as_array().unwrap().len() > 3);
    }

    #[test]
    fn csv_is_rejected_outside_table() {
        let cfg = config(&[2], Suite::All, Format::Csv);
        assert!(matches!(render_verify(&cfg), Err(Error::Usage(_))));
        assert!(matches!(render_presentation(&cfg), Err(Error::Usage(_))));
        assert!(matches!(render_idempotents(&cfg), Err(Error::Usage(_))));
    }

    #[test]
    fn table_renders_every_format_deterministically() {
        for format in [Format::Json, Format::Csv, Format::Text] {
            let cfg = config(&[2], Suite::All, format);
            let first = render_table(&cfg).unwrap();
            let second = render_table(&cfg).unwrap();
            assert_eq!(first, second);
            assert!(!first.is_empty());
        }
        let csv = render_table(&config(&[2], Suite::All, Format::Csv)).unwrap();
        assert!(csv.starts_with("a,b,c,mult\n"));
        assert!(csv.contains("S_{0,1},S_{0,1},S_0,1"));
    }

    #[test]
    fn multi_n_csv_table_is_a_usage_error() {
        let cfg = config(&[2, 3], Suite::All, Format::Csv);
        assert!(matches!(render_table(&cfg), Err(Error::Usage(_))));
    }

    #[test]
    fn presentation_text_lists_relations_and_verdict() {
        let cfg = config(&[3], Suite::All, Format::Text);
        let (text, pass) = render_presentation(&cfg).unwrap();
        assert!(pass);
        assert!(text.contains("y^6 - 1"));
        assert!(text.contains("verdict: pass"));
    }

    #[test]
    fn idempotent_listing_counts_blocks() {
        let cfg = config(&[2], Suite::All, Format::Json);
        let text = render_idempotents(&cfg).unwrap();
        let doc: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["results"][0]["count"], 5);
        let blocks = doc["results"][0]["blocks"].as_array().unwrap();
        let dims: usize = blocks
            .iter()
            .map(|b| {
                let d = b["dim"].as_u64().unwrap() as usize;
                d * d
            })
            .sum();
        assert_eq!(dims, 8);
    }

    #[test]
    fn cli_parses_the_documented_flags() {
        let out = std::env::temp_dir().join("hopf2n2-cli-test-verify.txt");
        let path = out.to_str().unwrap();
        let cli = Cli::try_parse_from([
            "hopf2n2", "verify", "--n", "3", "--suite", "hopf", "--format", "text", "--out", path,
        ])
        .unwrap();
        assert!(run(cli).unwrap());
        let written = std::fs::read_to_string(&out).unwrap();
        assert!(written.contains("overall: pass"));
        let _ = std::fs::remove_file(&out);
        assert!(Cli::try_parse_from(["hopf2n2", "verify", "--suite", "hopf"]).is_err());
    }
}
