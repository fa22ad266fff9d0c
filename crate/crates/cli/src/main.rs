//! `desargues`: affine-plane axiom checks, point addition on a line, Cayley
//! tables and construction diagrams.
//!
//! Exit codes: 0 when every expectation is met, 1 when a property is
//! violated or output cannot be written, 2 on usage or model errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "desargues", version, about = "Point addition on lines of affine planes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check A1–A3, Desargues and little Pappus (and Hessenberg on finite models).
    Axioms(SuiteArgs),
    /// Check Desargues' axiom for triangles on three parallel lines.
    Desargues(SuiteArgs),
    /// Check the little Pappus property.
    Pappus(SuiteArgs),
    /// Construct A + B with a printable trace.
    Add(OperandArgs),
    /// Construct the negative of A.
    Negate(OperandArgs),
    /// Check that sums do not depend on the auxiliary point.
    Independence(OperandArgs),
    /// Emit the Cayley table of a finite line and its group verdict.
    Cayley(Common),
    /// Render a construction diagram as SVG.
    Diagram(DiagramArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Plane model: ag2:<p>, rational or moulton.
    #[arg(long)]
    pub model: String,
    /// Origin of the frame line, `x,y` (rationals as n/d).
    #[arg(long = "O", default_value = "0,0", allow_hyphen_values = true)]
    pub origin: String,
    /// Unit point of the frame line.
    #[arg(long = "I", default_value = "1,0", allow_hyphen_values = true)]
    pub unit: String,
    /// Sample budget for infinite models.
    #[arg(long, default_value_t = 1000)]
    pub budget: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Shorthand for `--format json`.
    #[arg(long)]
    pub json: bool,
    /// Output file (diagram for add/negate/diagram, report otherwise).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl Common {
    pub fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct SuiteArgs {
    #[command(flatten)]
    pub common: Common,
    /// Sweep finite models exhaustively regardless of size (slow above p = 5).
    #[arg(long)]
    pub full: bool,
}

#[derive(Args, Debug, Clone)]
pub struct OperandArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Auxiliary point off the frame line (default: canonical choice).
    #[arg(long, allow_hyphen_values = true)]
    pub aux: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct DiagramArgs {
    #[command(flatten)]
    pub operands: OperandArgs,
    /// Construction to draw.
    #[arg(long, value_enum, default_value_t = DiagramOp::Add)]
    pub op: DiagramOp,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagramOp {
    Add,
    Negate,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Axioms(a) => commands::suite(a, commands::Suite::All),
        Command::Desargues(a) => commands::suite(a, commands::Suite::Desargues),
        Command::Pappus(a) => commands::suite(a, commands::Suite::Pappus),
        Command::Add(a) => commands::add(a),
        Command::Negate(a) => commands::negate(a),
        Command::Independence(a) => commands::independence(a),
        Command::Cayley(c) => commands::cayley(c),
        Command::Diagram(d) => commands::diagram(d),
    };
    match result {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.output.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
