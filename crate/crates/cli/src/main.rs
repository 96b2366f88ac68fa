use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use output::{RunReport, Status};

/// Exact checks, constructions and cohomology for Nijenhuis structures on Lie algebras.
#[derive(Parser, Debug)]
#[command(name = "nijenhuis", version)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// List every failed identity, or cohomology representatives.
    #[arg(long, global = true)]
    witnesses: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify the axioms of a structure read from JSON files.
    Check {
        kind: CheckKind,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Dimension tables of a cochain complex.
    Cohomology {
        kind: CohomologyKind,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Highest degree to compute; defaults to the dimension of the algebra.
        #[arg(long)]
        up_to: Option<usize>,
        /// Coefficients when no representation file is given.
        #[arg(long, value_enum, default_value = "adjoint")]
        coeff: Coeff,
    },
    /// Build a new structure and write it as JSON.
    Construct {
        kind: ConstructKind,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Write the result here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Lie,
    Nijenhuis,
    Rep,
    NijenhuisRep,
    Coalgebra,
    CoalgebraNijenhuis,
    MatchedPair,
    Manin,
    Bialgebra,
    Cybe,
    AdmissibleCybe,
    OOperator,
    Nslie,
    NsRep,
    NsMatchedPair,
    #[value(name = "2term")]
    TwoTerm,
    HomotopyNijenhuis,
    CrossedModule,
    Deformation,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CohomologyKind {
    Ce,
    Nop,
    Nlie,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coeff {
    Adjoint,
    Trivial,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructKind {
    DeformedBracket,
    DeformedCobracket,
    Semidirect,
    Bicrossed,
    InduceNslie,
    SkeletalFromCocycle,
    CrossedFromStrict,
    CoboundaryCobracket,
    LiftRb,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, result) = match &cli.command {
        Command::Check { kind, files } => (format!("check {}", value_name(*kind)), commands::check(*kind, files)),
        Command::Cohomology { kind, files, up_to, coeff } => (
            format!("cohomology {}", value_name(*kind)),
            commands::cohomology(*kind, files, *up_to, *coeff, cli.witnesses),
        ),
        Command::Construct { kind, files, out } => {
            (format!("construct {}", value_name(*kind)), commands::construct(*kind, files, out.as_deref()))
        }
    };
    let report = match result {
        Ok(r) => r.named(&name),
        Err(e) => RunReport::error(&name, &e),
    };
    let code = match report.status {
        Status::Pass => 0,
        Status::Fail => 1,
        Status::Error => 2,
    };
    // Without --out the constructed object owns standard output.
    let object_on_stdout = matches!(cli.command, Command::Construct { out: None, .. });
    let text = if cli.json { format!("{}\n", report.to_json()) } else { report.render(cli.witnesses) };
    if object_on_stdout || (report.status == Status::Error && !cli.json) {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    ExitCode::from(code)
}

fn value_name<V: ValueEnum>(v: V) -> String {
    v.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default()
}
