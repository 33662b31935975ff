//! `z2steenrod`: arithmetic in the equivariant dual Steenrod algebra and its
//! profile quotients from the command line.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::output::Failure;

#[derive(Debug, Parser)]
#[command(
    name = "z2steenrod",
    version,
    about = "Exact computations in the Z/2-equivariant mod 2 dual Steenrod algebra"
)]
pub struct Cli {
    /// Emit JSON (schema 1) instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write the report to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce an expression to normal form, e.g. `t0^2`.
    Reduce { expr: String },
    /// Multiply two expressions.
    Mul { x: String, y: String },
    /// Coproduct of an expression, printed as `(left) # (right)` terms.
    Coproduct { expr: String },
    /// Antipode of an expression.
    Antipode { expr: String },
    /// Basis of the primitives in one degree.
    Primitives {
        /// Degree `c,d` meaning `c + dα`.
        #[arg(long, value_name = "C,D", allow_hyphen_values = true)]
        deg: String,
    },
    /// Monomial basis in a window.
    Basis {
        /// `N`, `lo..hi` or `lo..hi:tlo..thi` (dimension and twist, inclusive).
        #[arg(long, default_value = "8", allow_hyphen_values = true)]
        window: String,
    },
    /// Profile functions and their ideals.
    #[command(subcommand)]
    Profile(ProfileCommand),
    /// Structural checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Compare with the classical dual Steenrod algebra.
    #[command(subcommand)]
    Compare(CompareCommand),
    /// Run acceptance criteria 1 to 9 and report one line per criterion.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
pub struct ProfileArg {
    /// `h=[1,0|0] k=[2,1|0]` or a named quotient such as `A(2)`, `E(1)`, `Atilde(3)`, `Einf`.
    pub profile: String,
    /// Use the printed form of the named families instead of the shipped one.
    #[arg(long)]
    pub literal: bool,
}

#[derive(Debug, Subcommand)]
pub enum ProfileCommand {
    /// Minimal profile generating the same ideal.
    Minimize(ProfileArg),
    /// Numeric and direct Hopf-ideal tests.
    CheckHopf {
        #[command(flatten)]
        profile: ProfileArg,
        #[arg(long, default_value = "16", allow_hyphen_values = true)]
        window: String,
    },
    /// Whether the pair satisfies the freeness condition.
    CheckFree(ProfileArg),
    /// Quotient basis of a free pair.
    Basis {
        #[command(flatten)]
        profile: ProfileArg,
        #[arg(long, default_value = "16", allow_hyphen_values = true)]
        window: String,
    },
    /// Ideal generators in a window, or membership of an expression.
    Members {
        #[command(flatten)]
        profile: ProfileArg,
        #[arg(long, default_value = "16", allow_hyphen_values = true)]
        window: String,
        /// Test whether this expression lies in the ideal.
        #[arg(long)]
        element: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Check that the quotient by `B` is a cofree comodule over the quotient by `C`.
    Cofree {
        #[arg(long = "B", alias = "b")]
        b: String,
        #[arg(long = "C", alias = "c")]
        c: String,
        /// Comma-separated generator monomials, e.g. `1,x1`.
        #[arg(long, default_value = "1")]
        generators: String,
        #[arg(long, default_value = "16", allow_hyphen_values = true)]
        window: String,
        #[arg(long)]
        literal: bool,
    },
    /// Reference scenarios: worked examples and the named families.
    Paper,
}

#[derive(Debug, Subcommand)]
pub enum CompareCommand {
    /// The deformation to the classical dual Steenrod algebra.
    R { expr: String },
    /// The restriction to the underlying algebra, with `S` for `σ`.
    Rho { expr: String },
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Comma-separated subset of criteria, default all.
    #[arg(long)]
    pub criteria: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(report) => match output::emit(&cli, &report) {
            Ok(()) if report.ok => ExitCode::SUCCESS,
            Ok(()) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
