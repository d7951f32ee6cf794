use clap::{Parser, Subcommand};

use p2chi_cli::{
    cmd_chi, cmd_filtration, cmd_polyhedron, cmd_series, cmd_verify, Format, EXIT_INVALID_INPUT,
};

/// Exact Euler-characteristic tables for moduli of stable rank-2 and rank-3
/// bundles on the projective plane, via torus fixed points.
#[derive(Parser)]
#[command(name = "p2chi", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "tsv", value_parser = parse_format)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

fn parse_format(s: &str) -> Result<Format, String> {
    Format::parse(s).ok_or_else(|| format!("unknown format `{s}`; valid: tsv | json"))
}

#[derive(Subcommand)]
enum Command {
    /// Euler characteristic at one working discriminant.
    Chi {
        /// Bundle rank (2 or 3).
        #[arg(long)]
        rank: u8,
        /// Working discriminant (nonpositive; |delta| = 0,3 mod 4 for rank 2
        /// and 0,4 mod 6 for rank 3).
        #[arg(long, allow_hyphen_values = true)]
        delta: i64,
    },
    /// Table of generating-function coefficients for one residue class.
    Series {
        #[arg(long)]
        rank: u8,
        /// Residue class: 0 or 3 for rank 2, 0 or 4 for rank 3.
        #[arg(long)]
        residue: u8,
        /// Number of coefficients.
        #[arg(long)]
        depth: usize,
    },
    /// Extreme points and extremal rays of a stability system.
    Polyhedron {
        /// Named system: rank2 | case1 | case2 | case3 | rank3-mod0.
        #[arg(long)]
        case: Option<String>,
        /// File with `m n`, then m rows of n rationals, then m bounds.
        #[arg(long)]
        matrix_file: Option<String>,
    },
    /// Evaluate a filtration triple from its JSON file.
    Filtration {
        #[arg(long)]
        path: String,
        /// chern | disc | stable | standardize
        #[arg(long)]
        action: String,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        /// polyhedra | closed-forms | decomposition | hurwitz | series |
        /// properties | stability | all
        #[arg(long)]
        suite: String,
    },
}

fn main() {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Chi { rank, delta } => cmd_chi(*rank, *delta),
        Command::Series {
            rank,
            residue,
            depth,
        } => cmd_series(*rank, *residue, *depth),
        Command::Polyhedron { case, matrix_file } => {
            cmd_polyhedron(case.as_deref(), matrix_file.as_deref())
        }
        Command::Filtration { path, action } => cmd_filtration(path, action),
        Command::Verify { suite } => cmd_verify(suite),
    };
    match outcome {
        Ok((record, code)) => {
            // Full record assembled before printing: no partial output.
            print!("{}", record.render(cli.format));
            std::process::exit(code);
        }
        Err(err) => {
            eprintln!("error: {}", err.message);
            std::process::exit(if err.exit_code == 0 {
                EXIT_INVALID_INPUT
            } else {
                err.exit_code
            });
        }
    }
}
