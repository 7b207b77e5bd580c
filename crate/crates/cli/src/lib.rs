//! Command-line front end: argument parsing, the JSON envelope and exit codes.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 bad usage or input.

mod commands;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::builder::BoolishValueParser;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

pub use commands::execute;

pub const SCHEMA: &str = "ngsemi/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ngsemi",
    version,
    about = "Numerical semigroups and the nearly Gorenstein property"
)]
pub struct Cli {
    /// Emit the versioned JSON envelope instead of text.
    #[arg(long, global = true, env = "NGSEMI_JSON", value_parser = BoolishValueParser::new())]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants, pseudo-Frobenius numbers and hierarchy flags.
    Analyze(GensArg),
    /// All NG-vectors with their structure annotation.
    NgVectors {
        #[command(flatten)]
        gens: GensArg,
        /// Print at most this many vectors.
        #[arg(long, env = "NGSEMI_LIMIT", default_value_t = 10_000)]
        limit: usize,
    },
    /// RF⁺ matrices for a pseudo-Frobenius number, optionally RF⁻ as well.
    Rf(RfArgs),
    /// Gluing, dilation and generalized arithmetic sequences.
    #[command(subcommand)]
    Construct(Construct),
    /// Exhaustive sweep of the semigroup tree for one statement.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct GensArg {
    /// Generators, as separate integers or one comma-separated list.
    #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
    pub generators: Vec<String>,
}

#[derive(Debug, Args)]
pub struct RfArgs {
    #[command(flatten)]
    pub gens: GensArg,
    #[arg(long, env = "NGSEMI_F", allow_negative_numbers = true)]
    pub f: i64,
    /// Also list RF⁻ matrices (requires --ng-vector).
    #[arg(long, env = "NGSEMI_MINUS", value_parser = BoolishValueParser::new(), requires = "ng_vector")]
    pub minus: bool,
    #[arg(long, num_args = 1.., requires = "minus", allow_negative_numbers = true)]
    pub ng_vector: Option<Vec<String>>,
    /// Cap on the number of matrices of each kind.
    #[arg(long, env = "NGSEMI_LIMIT", default_value_t = 10_000)]
    pub limit: usize,
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// ⟨xS₁, yS₂⟩.
    Glue {
        #[arg(long, env = "NGSEMI_S1")]
        s1: String,
        #[arg(long, env = "NGSEMI_S2")]
        s2: String,
        #[arg(long, env = "NGSEMI_X")]
        x: i64,
        #[arg(long, env = "NGSEMI_Y")]
        y: i64,
    },
    /// ⟨dn_1, …, dn_{ν−1}, n_ν⟩.
    Dilate {
        #[command(flatten)]
        gens: GensArg,
        #[arg(long, env = "NGSEMI_D", allow_negative_numbers = true)]
        d: i64,
    },
    /// ⟨a, sa + d, …, sa + nd⟩.
    Gas {
        #[arg(long, env = "NGSEMI_A")]
        a: i64,
        #[arg(long, env = "NGSEMI_S")]
        s: i64,
        #[arg(long, env = "NGSEMI_D")]
        d: i64,
        #[arg(long, env = "NGSEMI_N")]
        n: i64,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// One of the ids listed by `ngsemi verify --help`.
    #[arg(
        long_help = "type-bound-dim4, coprimality, hierarchy, distinct-corollary, \
                     type-bound-dim5, type-vs-embdim, canonical-reduction-dim4"
    )]
    pub theorem: String,
    /// Defaults to 26 for the embedding-dimension-4 statements and 22 otherwise.
    #[arg(long, env = "NGSEMI_MAX_GENUS")]
    pub max_genus: Option<u32>,
    /// Worker threads, 0 for one per core.
    #[arg(long, env = "NGSEMI_THREADS", default_value_t = 0)]
    pub threads: usize,
    #[arg(long, env = "NGSEMI_WITNESS_CSV")]
    pub witness_csv: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {0}", .0.code())]
    Core(#[from] ngsemi::Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

/// What a command produced, before formatting.
#[derive(Debug)]
pub struct Outcome {
    pub command: &'static str,
    pub input: Value,
    pub result: Value,
    pub warnings: Vec<String>,
    /// A checked property failed; maps to exit code 1.
    pub violation: bool,
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema: &'static str,
    command: &'a str,
    input: &'a Value,
    result: &'a Value,
    warnings: &'a [String],
}

impl Outcome {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(Envelope {
            schema: SCHEMA,
            command: self.command,
            input: &self.input,
            result: &self.result,
            warnings: &self.warnings,
        })
        .expect("envelope serializes")
    }

    pub fn exit_code(&self) -> i32 {
        if self.violation {
            EXIT_VIOLATION
        } else {
            EXIT_OK
        }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// the report. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return e.exit_code();
        }
    };
    match execute(&cli.command) {
        Ok(outcome) => {
            let written = if cli.json {
                serde_json::to_writer_pretty(&mut *out, &outcome.to_json())
                    .map_err(std::io::Error::from)
                    .and_then(|()| writeln!(out))
            } else {
                render::text(&outcome.result, out)
            };
            for w in &outcome.warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            outcome.exit_code()
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Integers from positional tokens; each token may itself be a comma-separated list.
pub fn parse_int_list(tokens: &[String]) -> Result<Vec<i64>, CliError> {
    tokens
        .iter()
        .flat_map(|t| t.split(','))
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| CliError::Usage(format!("not an integer: {t:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_lists() {
        let v = |x: &[&str]| x.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert_eq!(
            parse_int_list(&v(&["4", "5", "11"])).unwrap(),
            vec![4, 5, 11]
        );
        assert_eq!(parse_int_list(&v(&["4,5,11"])).unwrap(), vec![4, 5, 11]);
        assert_eq!(
            parse_int_list(&v(&["4,", "5", ",11"])).unwrap(),
            vec![4, 5, 11]
        );
        assert!(matches!(
            parse_int_list(&v(&["4;5"])),
            Err(CliError::Usage(_))
        ));
    }

    #[test]
    fn core_errors_carry_their_code() {
        let e = CliError::from(ngsemi::Error::GcdNotOne(2));
        assert_eq!(
            e.to_string(),
            "GcdNotOne: gcd of the generators is 2, expected 1"
        );
    }
}
