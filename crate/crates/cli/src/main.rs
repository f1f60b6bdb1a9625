use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use poisson_cli::input::{self, FlagValues};
use poisson_cli::oracle::render_summary;
use poisson_cli::report::{exit, ReportDocument};
use poisson_cli::table::{build_table, TableKind};
use poisson_core::crosscheck::oracle_grid;
use poisson_core::{classify, validate};

/// Counts Poisson structures on complex projective surfaces.
#[derive(Parser, Debug)]
#[command(name = "poisson", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify one surface given as a spec file or by flags.
    Classify(ClassifyArgs),
    /// Print h0(-K) over a range of the invariant e.
    Table(TableArgs),
    /// Compare the case analysis with the pushforward oracle over a grid.
    OracleCheck(OracleArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Human,
    Machine,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Human,
    Tsv,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    /// Spec file (TOML). Mutually exclusive with the field flags.
    path: Option<PathBuf>,

    /// k3, abelian, plane, rational, ruled or other
    #[arg(long)]
    kind: Option<String>,
    /// Genus of the base curve (ruled)
    #[arg(long)]
    genus: Option<u32>,
    /// Invariant e = -deg V (ruled, rational)
    #[arg(long, allow_negative_numbers = true)]
    e: Option<i64>,
    /// decomposable or indecomposable (ruled)
    #[arg(long)]
    bundle: Option<String>,
    /// Kodaira dimension marker 0, 1 or 2 (other)
    #[arg(long)]
    kodaira: Option<u8>,
    /// Tag of det V: unspecified, trivial, canonical(k), torsion(m), point(n)
    #[arg(long = "lambda2-tag")]
    lambda2_tag: Option<String>,
    /// Whether -K_C - det V is effective, when known
    #[arg(long)]
    effective: Option<bool>,
    /// Blow up a point: yes, no or unknown (is it a base point of |-K|?). Repeatable.
    #[arg(long = "blowup")]
    blowups: Vec<String>,

    #[arg(long, value_enum, default_value = "human")]
    format: ReportFormat,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(value_enum)]
    which: TableKind,
    /// Base genus (highgenus only)
    #[arg(long)]
    genus: Option<u32>,
    /// First value of e (defaults to the smallest admissible one)
    #[arg(long, allow_negative_numbers = true)]
    from: Option<i64>,
    /// Last value of e
    #[arg(long, allow_negative_numbers = true, default_value_t = 12)]
    to: i64,
    #[arg(long, value_enum, default_value = "human")]
    format: TableFormat,
}

#[derive(Args, Debug)]
struct OracleArgs {
    /// 0 or 1
    #[arg(long)]
    genus: u32,
    #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
    from: i64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 20)]
    to: i64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(exit::PARSE_ERROR),
            };
        }
    };
    ExitCode::from(match cli.command {
        Command::Classify(args) => run_classify(args),
        Command::Table(args) => run_table(args),
        Command::OracleCheck(args) => run_oracle(args),
    })
}

fn run_classify(args: ClassifyArgs) -> u8 {
    let flags = FlagValues {
        kind: args.kind,
        genus: args.genus,
        e: args.e,
        bundle: args.bundle,
        kodaira: args.kodaira,
        lambda2_tag: args.lambda2_tag,
        effective: args.effective,
        blowups: args.blowups,
    };
    let parsed = match (&args.path, flags.is_empty()) {
        (Some(_), false) => {
            eprintln!("error: give either a spec file or field flags, not both");
            return exit::PARSE_ERROR;
        }
        (Some(path), true) => match std::fs::read_to_string(path) {
            Ok(text) => input::parse_spec_text(&text),
            Err(err) => {
                eprintln!("error: cannot read {}: {err}", path.display());
                return exit::PARSE_ERROR;
            }
        },
        (None, _) => input::parse_spec_flags(&flags),
    };
    let spec = match parsed {
        Ok(spec) => spec,
        Err(err) => {
            eprintln!("error: {err}");
            return exit::PARSE_ERROR;
        }
    };
    let report = match validate(&spec).and_then(|v| classify(&v).map(|r| (v, r))) {
        Ok((validated, report)) => ReportDocument::new(validated, report),
        Err(err) => {
            eprintln!("validation error: {err}");
            return exit::VALIDATION_ERROR;
        }
    };
    match args.format {
        ReportFormat::Human => print!("{}", report.to_human()),
        ReportFormat::Machine => println!("{}", report.to_machine()),
    }
    report.exit_status()
}

fn run_table(args: TableArgs) -> u8 {
    let from = args.from.unwrap_or(match args.which {
        TableKind::Fn => 0,
        TableKind::Elliptic => -1,
        TableKind::Highgenus => -i64::from(args.genus.unwrap_or(2)),
    });
    match build_table(args.which, args.genus, from, args.to) {
        Ok(table) => {
            match args.format {
                TableFormat::Human => print!("{}", table.to_human()),
                TableFormat::Tsv => print!("{}", table.to_tsv()),
            }
            0
        }
        Err(err) => {
            eprintln!("error: {err}");
            exit::VALIDATION_ERROR
        }
    }
}

fn run_oracle(args: OracleArgs) -> u8 {
    match oracle_grid(args.genus, args.from..=args.to) {
        Ok(summary) => {
            print!("{}", render_summary(&summary));
            if summary.all_passed() {
                0
            } else {
                1
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            exit::VALIDATION_ERROR
        }
    }
}
