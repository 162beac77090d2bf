use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use gradpos::gradings::delta1_of;
use gradpos::render;
use gradpos::verify::{self, Topic, VerifyOptions};
use gradpos::{Error, GradingKind, Limits, RootSystem};

/// Highest rank accepted by `verify`.
const MAX_VERIFY_RANK: usize = 8;

#[derive(Parser)]
#[command(name = "gradpos", version, about = "Graded weight posets Δ(1) of simple Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print Δ(1) with heights and cover relations.
    Poset {
        /// Cartan type such as E7 or B4.
        #[arg(long = "type")]
        ty: String,
        /// `standard:<i>` or `extra-special`.
        #[arg(long)]
        grading: String,
        #[arg(long, value_enum, default_value_t = PosetFormat::Text)]
        format: PosetFormat,
    },
    /// Polynomials, involution, rowmotion orbits and cyclic sieving for one Δ(1).
    Report {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        grading: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Check the structural results over all types up to a rank bound.
    Verify {
        /// Run every theorem.
        #[arg(long, conflicts_with = "theorem", required_unless_present = "theorem")]
        all: bool,
        /// One of M-poly, ideal-count, self-complementary, fixed-points, N-poly,
        /// orbits, CSP, structure, gaussian, products.
        #[arg(long)]
        theorem: Option<String>,
        #[arg(long, default_value_t = MAX_VERIFY_RANK)]
        max_rank: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetFormat {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

enum Failure {
    Usage(String),
    Run(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::InvalidType { .. } | Error::InvalidIndex { .. } | Error::InvalidInput(_) => Failure::Usage(e.to_string()),
            _ => Failure::Run(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    if !text.ends_with('\n') {
        let _ = out.write_all(b"\n");
    }
}

fn load(ty: &str, grading: &str) -> Result<(RootSystem, gradpos::Delta1), Failure> {
    let rs = RootSystem::parse(ty)?;
    let kind = GradingKind::parse(grading)?;
    let d = delta1_of(&rs, kind)?;
    Ok((rs, d))
}

/// Returns whether every check passed.
fn run(command: Command) -> Result<bool, Failure> {
    let limits = Limits::from_env();
    match command {
        Command::Poset { ty, grading, format } => {
            let (_, d) = load(&ty, &grading)?;
            emit(&match format {
                PosetFormat::Text => render::poset_text(&d),
                PosetFormat::Json => render::poset_json(&d),
                PosetFormat::Dot => render::poset_dot(&d),
            });
            Ok(true)
        }
        Command::Report { ty, grading, format } => {
            let (rs, d) = load(&ty, &grading)?;
            let report = render::build_report(&rs, &d, limits)?;
            emit(&match format {
                ReportFormat::Text => render::report_text(&report),
                ReportFormat::Json => render::report_json(&report),
            });
            Ok(true)
        }
        Command::Verify { all, theorem, max_rank, format } => {
            if max_rank == 0 || max_rank > MAX_VERIFY_RANK {
                return Err(Failure::Usage(format!("--max-rank must be between 1 and {MAX_VERIFY_RANK}")));
            }
            let topics = match (all, theorem) {
                (true, _) => Topic::ALL.to_vec(),
                (false, Some(name)) => vec![Topic::parse(&name)?],
                (false, None) => return Err(Failure::Usage("pass --all or --theorem <name>".into())),
            };
            let start = Instant::now();
            let names: Vec<&str> = topics.iter().map(|t| t.name()).collect();
            eprintln!("verifying {} up to rank {max_rank}", names.join(", "));
            let outcomes = verify::run(&topics, &VerifyOptions { max_rank, limits });
            emit(&match format {
                ReportFormat::Text => render::outcomes_text(&outcomes),
                ReportFormat::Json => render::outcomes_json(&outcomes),
            });
            let (total, failed) = verify::total_checks(&outcomes);
            eprintln!(
                "{} jobs, {total} checks, {failed} failed in {:.2}s",
                outcomes.len(),
                start.elapsed().as_secs_f64()
            );
            Ok(failed == 0)
        }
    }
}
