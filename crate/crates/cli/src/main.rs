//! Command-line surface for the spectral-moore toolkit.
//!
//! Exit codes: 0 success, 1 negative verdict under an --expect flag,
//! 2 usage or domain errors.

mod cmd_bound;
mod cmd_certify;
mod cmd_enumerate;
mod cmd_feasibility;
mod cmd_graph;
mod cmd_tables;
mod record;
mod theta;

use clap::{Parser, Subcommand};
use record::Format;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "spectral-moore",
    version,
    about = "Spectral order bounds for regular graphs: LP bounds, Moore-polygon feasibility, \
             enumeration, and interlacing certificates"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "plain", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the LP bound M(k,theta) or M(k,t,c).
    Bound(cmd_bound::BoundArgs),
    /// Regenerate the reference tables.
    Tables(cmd_tables::TablesArgs),
    /// Moore-polygon intersection-array feasibility.
    Feasibility(cmd_feasibility::FeasibilityArgs),
    /// Construct or parse graphs and report invariants.
    Graph(cmd_graph::GraphArgs),
    /// Enumerate small regular graphs up to isomorphism.
    Enumerate(cmd_enumerate::EnumerateArgs),
    /// Produce an eigenvalue-interlacing certificate.
    Certify(cmd_certify::CertifyArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Bound(args) => cmd_bound::run(args, cli.format),
        Command::Tables(args) => cmd_tables::run(args, cli.format),
        Command::Feasibility(args) => cmd_feasibility::run(args, cli.format),
        Command::Graph(args) => cmd_graph::run(args, cli.format),
        Command::Enumerate(args) => cmd_enumerate::run(args, cli.format),
        Command::Certify(args) => cmd_certify::run(args, cli.format),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
