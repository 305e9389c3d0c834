use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fox_coloring::coloring::DEFAULT_BUDGET;
use fox_coloring::diagram::MoveSite;
use fox_coloring::orbits::{GroupKind, DEFAULT_SEED};

mod commands;
mod table;
mod target;

use commands::{Failure, Report};

#[derive(Parser)]
#[command(
    name = "foxcolor",
    version,
    about = "Fox colorings of knot and link diagrams"
)]
struct Cli {
    /// Emit JSON instead of text tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

/// TARGET is a catalog name (see `catalog`), a PD code such as
/// "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]", `@path` to read one from a file, or `-`
/// for stdin.
#[derive(Subcommand)]
enum Command {
    /// Invariant factors and determinant; nullity and coloring count with --mod.
    Analyze {
        target: String,
        #[arg(long = "mod", value_name = "M")]
        modulus: Option<u64>,
    },
    /// Equivalence classes of non-trivial colorings under Aut_m or Inn_m.
    Classes {
        target: String,
        #[arg(long = "mod", value_name = "M")]
        modulus: u64,
        #[arg(long, default_value = "aut", value_name = "aut|inn")]
        group: GroupKind,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// List the colorings mod M.
    Enumerate {
        target: String,
        #[arg(long = "mod", value_name = "M")]
        modulus: u64,
        /// Skip the constant colorings.
        #[arg(long)]
        nontrivial: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Check the class-count formulas on the diagram and on random Reidemeister variants.
    Verify {
        target: String,
        #[arg(long, value_delimiter = ',', default_values_t = [3u64, 5, 7])]
        primes: Vec<u64>,
        /// Number of variants, each one R1/R2 insertion further from the input.
        #[arg(long, default_value_t = 3)]
        moves: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
    /// List the built-in knots, or print the PD code of one.
    Catalog { name: Option<String> },
    /// List Reidemeister move sites, or rewrite the diagram.
    Moves {
        target: String,
        /// Site to apply, e.g. r1+:3:L:U, r1-:4, r2+:1:3:R, r2-:5, r3:1,4,9. Repeatable.
        #[arg(long, value_name = "SITE")]
        apply: Vec<MoveSite>,
        /// Apply this many random R1/R2 insertions after the --apply sites.
        #[arg(long, value_name = "K")]
        random: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn run(cmd: Command) -> Result<Report, Failure> {
    match cmd {
        Command::Analyze { target, modulus } => commands::analyze(&target, modulus),
        Command::Classes {
            target,
            modulus,
            group,
            budget,
        } => commands::classes(&target, modulus, group, budget),
        Command::Enumerate {
            target,
            modulus,
            nontrivial,
            budget,
        } => commands::enumerate(&target, modulus, nontrivial, budget),
        Command::Verify {
            target,
            primes,
            moves,
            seed,
            budget,
        } => commands::verify(&target, &primes, moves, seed, budget),
        Command::Catalog { name } => commands::catalog_cmd(name.as_deref()),
        Command::Moves {
            target,
            apply,
            random,
            seed,
        } => commands::moves(&target, &apply, random, seed),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(report) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("json values serialize")
                );
            } else {
                print!("{}", report.text);
            }
            if report.failed {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("foxcolor: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
