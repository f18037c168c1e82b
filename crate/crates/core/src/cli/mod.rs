//! Command-line surface: `check`, `dual`, `analyze`, `wedge`, `cpspec`,
//! `theorems` and `examples export`.
//!
//! Exit codes: 0 success, 1 invalid document or failed identity, 2 usage
//! error, 3 enumeration budget exceeded.

pub mod document;
mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::settings::{Settings, DEFAULT_BUDGET};

pub use document::{emit, parse, ParseError, ValidationError, WorkbenchDocument, SCHEMA_VERSION};
pub use report::Output;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "coprimal", version, about = "Primeness and coprimeness of finite-dimensional coalgebras, exactly")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest number of vectors or subspace pairs any enumeration may visit.
    #[arg(long, global = true, env = "COPRIMAL_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Seed for the randomized irreducibility search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the coalgebra and comodule axioms.
    Check { file: PathBuf },
    /// The convolution algebra C* and its classification.
    Dual { file: PathBuf },
    /// Socle, EP classes, fully coprime spectrum and hypothesis flags.
    Analyze {
        file: PathBuf,
        /// A comodule of the document; C over itself by default.
        #[arg(long)]
        comodule: Option<String>,
    },
    /// Wedge and internal coproduct of two named subspaces of C.
    Wedge {
        file: PathBuf,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Fully coprime spectrum and coradical.
    Cpspec {
        file: PathBuf,
        #[arg(long)]
        comodule: Option<String>,
    },
    /// Check the identities between C and C*; fails if any identity fails.
    Theorems { file: PathBuf },
    /// Built-in example coalgebras.
    Examples {
        #[command(subcommand)]
        action: ExamplesCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum ExamplesCommand {
    /// Write a built-in coalgebra as a document.
    Export {
        /// matrix, divided-power, grouplike or lomp.
        name: String,
        #[arg(long, default_value_t = crate::coalg::Builtin::DEFAULT_PARAM)]
        param: usize,
        #[arg(long, default_value = "Q")]
        field: String,
        /// Write here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    /// Unparseable or invalid input, or a failed identity.
    Rejected(String),
    Budget(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Rejected(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Rejected(e.to_string())
        }
    }
}

/// Runs the command line of the current process and returns the exit code.
pub fn run() -> i32 {
    run_from(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr())
}

/// Runs with explicit arguments and streams.
pub fn run_from<I, T>(args: I, out: &mut dyn std::io::Write, err: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let settings = Settings {
        budget: cli.budget,
        seed: cli.seed,
    };
    match report::execute(&cli.command, &settings) {
        Ok(output) => {
            for w in &output.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            let _ = match cli.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&output.json).expect("report serializes")),
                Format::Text => write!(out, "{}", output.text),
            };
            if output.ok {
                0
            } else {
                1
            }
        }
        Err(f) => {
            let msg = match &f {
                Failure::Usage(m) | Failure::Rejected(m) | Failure::Budget(m) => m,
            };
            if cli.format == Format::Json {
                let v = serde_json::json!({
                    "schema_version": SCHEMA_VERSION,
                    "error": msg,
                    "exit_code": f.exit_code(),
                });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("error serializes"));
            }
            let _ = writeln!(err, "error: {msg}");
            f.exit_code()
        }
    }
}
