//! `pants`: intersection numbers of curves on the pair of pants.

mod commands;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pants_core::Error;

use output::Format;

#[derive(Parser)]
#[command(name = "pants", version, about = "Intersection numbers of closed curves on the pair of pants")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t, global = true)]
    format: Format,

    /// Also print words with the C = ab and c = BA shorthands.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical form, root, exponent and boundary flag of a word.
    Canon {
        word: String,
        /// Keep the orientation: do not identify a word with its inverse.
        #[arg(long)]
        oriented: bool,
    },
    /// Self-intersection number.
    Si {
        word: String,
        /// Recompute with the hyperbolic oracle and require agreement.
        #[arg(long)]
        oracle: bool,
        /// Largest word length the oracle enumerates.
        #[arg(long, env = "PANTS_MAX_RADIUS")]
        max_radius: Option<usize>,
    },
    /// Geometric intersection number of two classes.
    Int {
        first: String,
        second: String,
        #[arg(long)]
        oracle: bool,
        #[arg(long, env = "PANTS_MAX_RADIUS")]
        max_radius: Option<usize>,
    },
    /// Intersections with aB, Cb and aC.
    Triple { word: String },
    /// List classes up to a length.
    Enum {
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        oriented: bool,
        /// Include proper powers.
        #[arg(long)]
        powers: bool,
        /// Include powers of a, b and ab.
        #[arg(long)]
        include_boundary: bool,
        /// Give up beyond this many classes.
        #[arg(long, env = "PANTS_CLASS_LIMIT", default_value_t = 5_000_000)]
        limit: usize,
    },
    /// Non-power classes with exactly K self-intersections.
    SiClasses {
        k: usize,
        /// Length cap of the enumeration; defaults to 2K + 2.
        #[arg(long, env = "PANTS_SI_CAP")]
        cap: Option<usize>,
    },
    /// Decide k-equivalence of two classes.
    Kequiv {
        first: String,
        second: String,
        #[arg(long)]
        k: usize,
        /// Also probe with powers d^n having K self-intersections.
        #[arg(long)]
        powers: bool,
    },
    /// Triples of all classes up to a length, with the bound max <= 2 min.
    ScanTriples {
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Classes meeting aB twice, matched against the eight C^m forms.
    ClassifyTwo {
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Classes with triple (2, 2, 2).
    #[command(name = "class-222")]
    Class222 {
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Run every check and print a pass/fail table.
    VerifyPaper {
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = 3)]
        max_exp: usize,
    },
}

/// A failed command: the operation and what went wrong.
pub struct Failure {
    pub op: &'static str,
    pub error: Error,
}

impl Failure {
    pub fn new(op: &'static str, error: Error) -> Self {
        Failure { op, error }
    }

    fn exit_code(&self) -> u8 {
        match self.error {
            Error::Syntax { .. } | Error::TrivialClass => 2,
            _ => 3,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let report = match commands::run(&cli.command, cli.pretty) {
        Ok(r) => r,
        Err(f) => {
            eprintln!("error: {}: {}", f.op, f.error);
            return ExitCode::from(f.exit_code());
        }
    };
    let mut out = io::stdout().lock();
    if let Err(e) = report.write(cli.format, &mut out).and_then(|_| out.flush()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
            return ExitCode::from(3);
        }
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
