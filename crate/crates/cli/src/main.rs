use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kenmotsu_core::report::{
    analyze_document, render_analysis_text, render_verify_text, to_structured, verify_document, OutputFormat,
    EXIT_INPUT,
};
use kenmotsu_core::{catalog, Error, Scalar, Variant};

/// Exact Kenmotsu-geometry checks and conformal η-Einstein soliton analysis
/// for frame-homogeneous manifolds.
#[derive(Parser, Debug)]
#[command(name = "kenmotsu", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the almost contact axioms, the Kenmotsu condition and the derived identities.
    Verify {
        path: PathBuf,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report format; defaults to text on stdout and structured with --out.
        #[arg(long, value_parser = parse_format)]
        format: Option<OutputFormat>,
        /// Evaluate the derived identities even if the spec is not Kenmotsu.
        #[arg(long)]
        force: bool,
    },
    /// Solve the soliton equation and run the classification suite.
    Analyze {
        path: PathBuf,
        /// Conformal scalar p as an exact rational (overrides the document).
        #[arg(long, allow_hyphen_values = true, value_parser = parse_scalar)]
        p: Option<Scalar>,
        #[arg(long, default_value = "conformal-eta-einstein", value_parser = parse_variant)]
        variant: Variant,
        /// Evaluate the derived identities even if the spec is not Kenmotsu.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_parser = parse_format)]
        format: Option<OutputFormat>,
    },
    /// Print a built-in spec document (kenmotsu3, flat3).
    Example { name: String },
}

fn parse_scalar(s: &str) -> Result<Scalar, String> {
    s.parse::<Scalar>().map_err(|e| e.to_string())
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse()
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse()
}

enum Failure {
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn emit(text: String, summary: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
            println!("{summary}");
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32, Failure> {
    match cli.command {
        Command::Verify { path, out, format, force } => {
            let report = verify_document(&read(&path)?, force)?;
            let format = format.unwrap_or(if out.is_some() { OutputFormat::Structured } else { OutputFormat::Text });
            let text = match format {
                OutputFormat::Text => render_verify_text(&report),
                OutputFormat::Structured => to_structured(&report),
            };
            emit(text, &report.verdict.summary, out.as_deref())?;
            Ok(report.verdict.exit_code)
        }
        Command::Analyze { path, p, variant, force, out, format } => {
            let report = analyze_document(&read(&path)?, p, variant, force)?;
            let format = format.unwrap_or(if out.is_some() { OutputFormat::Structured } else { OutputFormat::Text });
            let text = match format {
                OutputFormat::Text => render_analysis_text(&report),
                OutputFormat::Structured => to_structured(&report),
            };
            emit(text, &report.verdict.summary, out.as_deref())?;
            Ok(report.verdict.exit_code)
        }
        Command::Example { name } => {
            print!("{}", catalog::example(&name)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
