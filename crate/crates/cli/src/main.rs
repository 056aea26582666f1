use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use superlie::commands::{self, Exit, Options, Outcome};
use superlie::fixtures;
use superlie::report::{Format, Report};

#[derive(Parser)]
#[command(name = "superlie", version, about = "Exact computations with Lie superalgebras")]
struct Cli {
    /// Degree bound for Hopf-side checks.
    #[arg(long, global = true, default_value_t = 4)]
    truncation: usize,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Counterexample {
    Sec8,
    Sec10,
    Notalg,
}

impl Counterexample {
    fn name(self) -> &'static str {
        match self {
            Counterexample::Sec8 => "sec8",
            Counterexample::Sec10 => "sec10",
            Counterexample::Notalg => "notalg",
        }
    }
}

/// Files may be paths or `@name` for a bundled fixture, e.g. `@sl2`.
#[derive(Subcommand)]
enum Command {
    /// Check the super Jacobi identity and super antisymmetry.
    Validate { algebra: PathBuf },
    /// Center, commutant, derived series, radical and quasireductivity.
    Analyze { algebra: PathBuf },
    /// The derivation superalgebra and its inner/outer split.
    Derivations { algebra: PathBuf },
    /// Jordan-Chevalley decomposition of a rational matrix.
    Jordan { matrix: PathBuf },
    /// Kac's semisimplicity criterion for a subalgebra of Der(g ⊗ Λ(n)).
    Kac { algebra: PathBuf, subalgebra: PathBuf },
    /// Verify the axioms of a coaction on a free supercommutative algebra.
    Coaction { data: PathBuf },
    /// Reproduce one of the bundled counterexamples.
    Counterexample {
        #[arg(value_enum)]
        which: Counterexample,
    },
}

fn read(path: &PathBuf) -> Result<String, String> {
    let s = path.to_string_lossy();
    if let Some(name) = s.strip_prefix('@') {
        return fixtures::file(name).map(str::to_string).ok_or_else(|| format!("no bundled fixture named '{name}'"));
    }
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: &Cli) -> Result<Outcome, String> {
    let options = Options { truncation: cli.truncation, seed: cli.seed };
    Ok(match &cli.command {
        Command::Validate { algebra } => commands::cmd_validate(&read(algebra)?),
        Command::Analyze { algebra } => commands::cmd_analyze(&read(algebra)?),
        Command::Derivations { algebra } => commands::cmd_derivations(&read(algebra)?),
        Command::Jordan { matrix } => commands::cmd_jordan(&read(matrix)?),
        Command::Kac { algebra, subalgebra } => commands::cmd_kac(&read(algebra)?, &read(subalgebra)?),
        Command::Coaction { data } => commands::cmd_coaction(&read(data)?, options),
        Command::Counterexample { which } => commands::cmd_counterexample(which.name(), options),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Json => Format::Json,
    };
    let outcome = run(&cli).unwrap_or_else(|message| {
        let mut report = Report::new();
        report.set("error", message);
        Outcome { report, exit: Exit::InputError }
    });
    print!("{}", outcome.report.render(format));
    if let Some(error) = outcome.report.get("error").and_then(|e| e.as_str()) {
        eprintln!("superlie: {error}");
    }
    ExitCode::from(outcome.exit.code() as u8)
}
