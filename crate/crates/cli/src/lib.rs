//! The `kmchar` command line: problem files in, deterministic tables out.

pub mod cache;
pub mod commands;
pub mod problem;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments.
    Usage(String),
    /// The problem file could not be read.
    Input(String),
    /// The problem file is not a valid document.
    Parse {
        field: String,
        message: String,
    },
    Domain(kmchar_core::Error),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Input(_) => "input",
            CliError::Parse { .. } => "parse-error",
            CliError::Domain(e) => e.code(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Input(m) => f.write_str(m),
            CliError::Parse { field, message } => write!(f, "{field}: {message}"),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<kmchar_core::Error> for CliError {
    fn from(e: kmchar_core::Error) -> Self {
        CliError::Domain(e)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "kmchar",
    version,
    about = "Integral Weyl groups, KL polynomials and characters for Kac-Moody algebras"
)]
pub struct Cli {
    /// Ignore the cache directory named in the problem file.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ProblemArg {
    /// Problem file (JSON).
    pub problem: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CharKind {
    Verma,
    Irr,
    IrrNonregular,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive roots up to the height bound, with multiplicities.
    Roots(ProblemArg),
    /// Integral positive roots and the simple system of W(lambda).
    Integral(ProblemArg),
    /// Canonical form, lengths and lambda-reduced word of a Weyl group element.
    Weyl {
        #[command(flatten)]
        problem: ProblemArg,
        /// Space-separated 0-based simple reflection indices.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// KL polynomial P_{x,y} of W(lambda).
    Kl {
        #[command(flatten)]
        problem: ProblemArg,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Inverse KL polynomial Q_{x,y} of W(lambda).
    InverseKl {
        #[command(flatten)]
        problem: ProblemArg,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Truncated character of M(w . lambda) or L(w . lambda).
    Char {
        #[command(flatten)]
        problem: ProblemArg,
        #[arg(long, value_enum)]
        kind: CharKind,
        #[arg(long, default_value = "")]
        w: String,
        /// Apply the formula without verifying its hypotheses.
        #[arg(long)]
        override_hypotheses: bool,
    },
    /// Hypotheses of the character formula for lambda.
    Check(ProblemArg),
    /// Kac-Kazhdan chain from lambda down to lambda - mu.
    Embed {
        #[command(flatten)]
        problem: ProblemArg,
        /// Space-separated nonnegative coordinates of mu in the simple roots.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Shifted-action stabilizer of lambda (affine data).
    Isotropy(ProblemArg),
}

/// Parses `args`, runs the command and writes its output. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let rendered = e.to_string();
            let first = rendered
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ");
            let _ = writeln!(err, "ERROR usage: {first}");
            let _ = write!(err, "{rendered}");
            return 2;
        }
    };
    let mut warnings = Vec::new();
    let result = commands::execute(&cli, &mut warnings);
    match result {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            for w in warnings {
                let _ = writeln!(err, "{w}");
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "ERROR {}: {e}", e.code());
            for w in warnings {
                let _ = writeln!(err, "{w}");
            }
            e.exit_code()
        }
    }
}
