use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quasikit::constructions::GroupSpec;
use quasikit::tables::Permutation;
use quasikit::terms::DEFAULT_BUDGET;

mod commands;

/// Exit codes (sysexits).
mod exit {
    pub const OK: u8 = 0;
    pub const FAILS: u8 = 1;
    pub const INVALID: u8 = 2;
    pub const USAGE: u8 = 64;
    pub const DATA: u8 = 65;
    pub const NO_INPUT: u8 = 66;
    pub const SOFTWARE: u8 = 70;
}

#[derive(Parser, Debug)]
#[command(
    name = "quasikit",
    version,
    about = "Finite quasigroups, their identities, and free T-quasigroup words"
)]
struct Cli {
    /// Emit a machine-readable JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a .qg file holds a Latin square.
    Validate { file: PathBuf },

    /// Check an identity on every assignment.
    Check {
        file: PathBuf,
        /// Identity text such as "x*(x\y) = y".
        #[arg(long, conflicts_with = "named", required_unless_present = "named")]
        identity: Option<String>,
        /// Catalog key such as MEDIAL or AB_BELOUSOV.
        #[arg(long)]
        named: Option<String>,
        /// Element denoted by the constant `u`.
        #[arg(long, default_value_t = 0)]
        u: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },

    /// Run the identity catalog, the isotopy oracle and nilpotency checks.
    Classify {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_class: usize,
        #[arg(long)]
        decompose_t: bool,
        /// Comma-separated catalog keys; default is the whole catalog.
        #[arg(long, value_delimiter = ',')]
        entries: Option<Vec<String>>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },

    /// Principal isotope x∘y = (x/a)·(b\y).
    Isotope {
        file: PathBuf,
        #[arg(short)]
        a: usize,
        #[arg(short)]
        b: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },

    /// Build a table from a group.
    Construct {
        #[arg(value_enum)]
        kind: Kind,
        /// Z3, Z2xZ4, S3, D4, Q8, ...
        #[arg(long, value_parser = parse_group)]
        group: GroupSpec,
        /// Automorphism as comma-separated images.
        #[arg(long, value_parser = parse_permutation)]
        phi: Option<Permutation>,
        #[arg(long, value_parser = parse_permutation)]
        psi: Option<Permutation>,
        /// The constant (the `d` of a CH-quasigroup).
        #[arg(long)]
        c: Option<usize>,
        #[arg(long, value_enum, default_value_t = Form::Middle)]
        form: Form,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },

    /// Quasigroup identity derived from a loop identity.
    Derive { identity: String },

    /// Decide equality in the free T-quasigroup (or medial quasigroup).
    WordEq {
        t1: String,
        t2: String,
        #[arg(long)]
        medial: bool,
    },

    /// Canonical form of a term.
    Normalize {
        term: String,
        #[arg(long)]
        medial: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Linear,
    T,
    Ch,
    Leftdist,
    Group,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Form {
    /// φx + c + ψy
    Middle,
    /// (φx + ψy) + c
    Trailing,
}

fn parse_group(s: &str) -> Result<GroupSpec, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_permutation(s: &str) -> Result<Permutation, String> {
    let images = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{p}` is not an element"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Permutation::new(images).ok_or_else(|| format!("`{s}` is not a permutation of 0..n"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.json;
    match commands::run(cli.command) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = if json {
                writeln!(stdout, "{}", out.json)
            } else {
                write!(stdout, "{}", out.text)
            };
            if let Some(diag) = out.diagnostic {
                eprintln!("{diag}");
            }
            ExitCode::from(out.code)
        }
        Err(failure) => {
            if json {
                let doc = serde_json::json!({"error": failure.message, "exit_code": failure.code});
                let _ = writeln!(std::io::stdout().lock(), "{doc}");
            }
            eprintln!("quasikit: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
