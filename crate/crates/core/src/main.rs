use std::process::ExitCode;

use clap::{Parser, Subcommand};

use picard_hodge::report::{
    abelian_record, decompose_record, render_text, types_record, verify_record, OutputRecord,
};
use picard_hodge::{weights, DominantWeight};

const NEGATIVE_NUMBERS: &str = "\
Negative integers can be given directly (`types 0 0 -1 0`) or after a `--` \
separator (`types -- 0 0 -1 0`).

Exit codes: 0 success, 1 verification mismatch, 2 usage error.";

#[derive(Parser)]
#[command(
    name = "picard-hodge",
    version,
    about = "Hodge types and weights of degenerations at a Baily-Borel cusp of a Picard modular surface",
    after_help = NEGATIVE_NUMBERS
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kostant table, Hodge types and weights of R^k i^* j_* for F_{a,b,c,d} (a >= b >= c).
    #[command(allow_negative_numbers = true)]
    Types {
        a: i64,
        b: i64,
        c: i64,
        d: i64,
        /// Emit the structured JSON record.
        #[arg(long)]
        json: bool,
    },
    /// Decompose R^p f_* Q of the r-fold fibre power and compare both routes to its weights.
    Abelian {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        p: u32,
        #[arg(long)]
        json: bool,
    },
    /// Check every (r, p) with 1 <= r <= r_max and 0 <= p <= 6r.
    Verify {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        r_max: u32,
        #[arg(long)]
        json: bool,
    },
    /// Irreducible decomposition of the p-th exterior power for rank r.
    Decompose {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        p: u32,
        #[arg(long)]
        json: bool,
    },
}

fn emit(record: &OutputRecord, json: bool) -> ExitCode {
    if json {
        print!("{}", record.to_json());
    } else {
        print!("{}", render_text(record));
    }
    ExitCode::from(record.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if let Err(e) = weights::self_check() {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }

    let (record, json) = match cli.command {
        Command::Types { a, b, c, d, json } => match DominantWeight::new(a, b, c, d) {
            Ok(lambda) => (Ok(types_record(&lambda)), json),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
        Command::Abelian { r, p, json } => (abelian_record(r, p), json),
        Command::Verify { r_max, json } => (verify_record(r_max), json),
        Command::Decompose { r, p, json } => (decompose_record(r, p), json),
    };

    match record {
        Ok(record) => emit(&record, json),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
