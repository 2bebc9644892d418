use std::process::ExitCode;

use clap::{Parser, Subcommand};
use polya_cli::{bench, parse_colors, parse_range, run_count, BenchPlan, CliError, CountRequest};

/// Count distinct colorings of a finite set under a permutation group.
#[derive(Parser)]
#[command(name = "polya", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the number of distinct colorings at a fixed concentration.
    Count {
        /// dihedral:N, cyclic:N, symmetric:N, trivial:N, grid:RxC, or a group file
        #[arg(long)]
        group: String,
        /// Color counts, comma separated, summing to the set size
        #[arg(long)]
        colors: String,
        /// Check the group axioms before counting
        #[arg(long)]
        validate_group: bool,
        /// Cross-check with none|burnside|orbits|expand|all
        #[arg(long, default_value = "none")]
        oracle: String,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Time a sweep and write CSV to stdout.
    Bench {
        /// Group source; use {n} where the sweep value goes for set_size and group_size
        #[arg(long)]
        family: String,
        /// colors|set_size|group_size
        #[arg(long)]
        sweep: String,
        /// Inclusive range, e.g. 2..5
        #[arg(long)]
        range: String,
        /// Colors for set_size and group_size sweeps
        #[arg(long, default_value_t = 2)]
        num_colors: usize,
        /// Report the fastest of this many runs per point
        #[arg(long, default_value_t = 1)]
        repeat: usize,
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Count {
            group,
            colors,
            validate_group,
            oracle,
            threads,
        } => {
            let request = CountRequest {
                group,
                colors: parse_colors(&colors)?,
                oracle: oracle.parse()?,
                validate: validate_group,
                threads,
            };
            let count = run_count(&request)?;
            println!("{count}");
        }
        Command::Bench {
            family,
            sweep,
            range,
            num_colors,
            repeat,
            threads,
        } => {
            let (start, end) = parse_range(&range)?;
            let plan = BenchPlan {
                family,
                sweep: sweep.parse()?,
                start,
                end,
                num_colors,
                repeat,
                threads,
            };
            let records = plan.run()?;
            bench::write_csv(&records, std::io::stdout().lock())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(2);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("polya: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
