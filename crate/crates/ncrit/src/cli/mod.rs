//! Command-line front end.
//!
//! Reads a formation definition or a prime graph, runs the decision
//! procedure, and prints a text or JSON report. The exit status
//! reflects execution, not the mathematical answer: 0 means a verdict
//! was computed (either way), 2 means the input could not be used.

mod parse;
mod report;

pub use parse::{parse_formation_file, parse_graph_file, ParseError};
pub use report::{render_json, render_text};

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::decider::{decide_graph_with, DecideOptions, Verdict};
use crate::formation::formation_graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Lines `<p>: <q1> <q2> ...` defining the set assigned to each prime.
    Formation,
    /// A `vertices:` line followed by `<p> -> <q>` edge lines.
    Graph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub mode: Mode,
    /// Input file; standard input when absent.
    pub input_path: Option<PathBuf>,
    pub output_format: OutputFormat,
    pub emit_trace: bool,
    pub all_witnesses: bool,
    pub strict: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug)]
pub struct RunOutput {
    /// The complete report, exactly as it should reach standard output.
    pub report: String,
    /// Non-fatal input findings (duplicate vertices or edges outside
    /// strict mode); they belong on standard error.
    pub warnings: Vec<String>,
    pub verdict: Verdict,
}

/// Reads the configured input, decides it, and renders the report.
pub fn run(config: &RunConfig) -> Result<RunOutput, CliError> {
    let text = match &config.input_path {
        Some(path) => std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        None => {
            let mut buffer = String::new();
            std::io::stdin()
                .read_to_string(&mut buffer)
                .map_err(|source| CliError::Io {
                    path: "<stdin>".to_string(),
                    source,
                })?;
            buffer
        }
    };
    let (gamma, warnings) = match config.mode {
        Mode::Formation => (formation_graph(&parse_formation_file(&text)?), Vec::new()),
        Mode::Graph => parse_graph_file(&text, config.strict)?,
    };
    let verdict = decide_graph_with(
        &gamma,
        DecideOptions {
            all_witnesses: config.all_witnesses,
        },
    );
    let report = match config.output_format {
        OutputFormat::Text => render_text(&verdict, config.emit_trace),
        OutputFormat::Json => render_json(&verdict),
    };
    Ok(RunOutput {
        report,
        warnings,
        verdict,
    })
}

#[derive(Debug, Parser)]
#[command(
    name = "ncrit",
    version,
    about = "Decide whether a locally defined formation is a formation of soluble groups with the Shemetkov property"
)]
struct Args {
    /// Input kind.
    #[arg(long, value_enum, default_value_t = Mode::Formation)]
    mode: Mode,
    /// Read from this file instead of standard input.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
    /// Include the numbered candidate-check trace (text output).
    #[arg(long)]
    trace: bool,
    /// Check every candidate instead of stopping at the first witness.
    #[arg(long)]
    all_witnesses: bool,
    /// Treat duplicate vertices and edges in graph input as errors.
    #[arg(long)]
    strict: bool,
}

impl From<Args> for RunConfig {
    fn from(args: Args) -> Self {
        RunConfig {
            mode: args.mode,
            input_path: args.input,
            output_format: if args.json {
                OutputFormat::Json
            } else {
                OutputFormat::Text
            },
            emit_trace: args.trace,
            all_witnesses: args.all_witnesses,
            strict: args.strict,
        }
    }
}

/// Binary entry point; returns the process exit code.
pub fn main_entry() -> i32 {
    let config = RunConfig::from(Args::parse());
    match run(&config) {
        Ok(output) => {
            for warning in &output.warnings {
                eprintln!("warning: {warning}");
            }
            print!("{}", output.report);
            0
        }
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write as _;

    fn config(mode: Mode, path: PathBuf) -> RunConfig {
        RunConfig {
            mode,
            input_path: Some(path),
            output_format: OutputFormat::Text,
            emit_trace: false,
            all_witnesses: false,
            strict: false,
        }
    }

    fn write_temp(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn run_formation_file() {
        let f = write_temp("2: 2 3 5 7\n3: 2 3 5 7\n5: 3 5 7\n7: 5 7\n");
        let out = run(&config(Mode::Formation, f.path().to_path_buf())).unwrap();
        assert!(out.verdict.is_soluble_shemetkov);
        assert_eq!(out.report, "VERDICT: soluble+Shemetkov\n");
    }

    #[test]
    fn run_graph_file_with_witness() {
        let f = write_temp("vertices: 2 3 13\n2 -> 3\n3 -> 2\n13 -> 3\n");
        let mut cfg = config(Mode::Graph, f.path().to_path_buf());
        cfg.output_format = OutputFormat::Json;
        let out = run(&cfg).unwrap();
        assert!(!out.verdict.is_soluble_shemetkov);
        assert!(out.report.contains("\"family\": \"PSL3_3\""));
    }

    #[test]
    fn run_propagates_parse_errors() {
        let f = write_temp("4: 2 4\n");
        let err = run(&config(Mode::Formation, f.path().to_path_buf())).unwrap_err();
        assert!(matches!(err, CliError::Parse(_)));
        assert_eq!(err.to_string(), "line 1: 4 is not prime");
    }

    #[test]
    fn run_reports_missing_file() {
        let err = run(&config(Mode::Formation, PathBuf::from("/nonexistent/x"))).unwrap_err();
        assert!(matches!(err, CliError::Io { .. }));
    }

    #[test]
    fn clap_args_map_to_config() {
        use clap::Parser as _;
        let args = Args::parse_from([
            "ncrit",
            "--mode",
            "graph",
            "--input",
            "in.txt",
            "--json",
            "--trace",
            "--all-witnesses",
            "--strict",
        ]);
        let cfg = RunConfig::from(args);
        assert_eq!(cfg.mode, Mode::Graph);
        assert_eq!(cfg.input_path, Some(PathBuf::from("in.txt")));
        assert_eq!(cfg.output_format, OutputFormat::Json);
        assert!(cfg.emit_trace && cfg.all_witnesses && cfg.strict);

        let args = Args::parse_from(["ncrit"]);
        let cfg = RunConfig::from(args);
        assert_eq!(cfg.mode, Mode::Formation);
        assert_eq!(cfg.input_path, None);
        assert_eq!(cfg.output_format, OutputFormat::Text);
    }
}
