use clap::{Args, Parser, Subcommand};
use foxcalc::cli::{self, CliError, GroupChoice, QuotientKind, VerifyArgs};
use foxcalc::groups::DEFAULT_MAX_ORDER;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact filtration quotients of integral group rings of finite groups.
#[derive(Parser)]
#[command(name = "foxcalc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Preset group such as cyclic:6, dihedral:4, quaternion8, cyclic:2*cyclic:4.
    #[arg(long)]
    preset: Option<String>,
    /// JSON multiplication table file.
    #[arg(long)]
    table: Option<PathBuf>,
    /// Subgroup H as comma-separated element words; defaults to G.
    #[arg(long)]
    subgroup: Option<String>,
    /// N-series: gamma, intersect[:<labels>], action:<labels> or custom:<file>.
    #[arg(long, default_value = "gamma")]
    series: String,
    /// Write the JSON output to this file as well.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long)]
    verbose: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    #[arg(long, default_value_t = 4)]
    max_degree: usize,
}

impl Common {
    fn choice(&self) -> GroupChoice {
        GroupChoice {
            preset: self.preset.clone(),
            table: self.table.clone(),
            series: self.series.clone(),
            subgroup: self.subgroup.clone(),
            max_order: self.max_order,
            max_degree: self.max_degree,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Order, series, abelianization and graded Lie ring of a group.
    Describe {
        #[command(flatten)]
        common: Common,
    },
    /// Invariant factors of a Fox quotient, augmentation quotient or polynomial group.
    Quotient {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        /// fox, aug, poly or rel-poly.
        #[arg(long, default_value = "fox")]
        kind: QuotientKind,
        /// Normal subgroup N for rel-poly.
        #[arg(long)]
        normal: Option<String>,
    },
    /// The unit subgroup G ∩ (1 + M) of a named module M.
    Subgroup {
        #[command(flatten)]
        common: Common,
        /// zero, aug, ig-ih, filtration:<n>, fox:<n> or ih-power:<n>.
        #[arg(long)]
        module: String,
    },
    /// Runs verification suites over a corpus file (default: FOXCALC_CORPUS or the shipped corpus).
    Verify {
        corpus: Option<PathBuf>,
        /// Comma-separated suite ids; all suites by default.
        #[arg(long, value_delimiter = ',')]
        suite: Option<Vec<String>>,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        verbose: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
    },
    /// Brute-force and closed-form sides: filtration, q3, tensor, tor.
    Oracle {
        id: String,
        args: Vec<String>,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: Option<usize>,
    },
}

/// Prints a line; a closed pipe is not an error.
fn say(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn emit(value: &serde_json::Value, report: Option<&PathBuf>) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("json serializes");
    say(&text);
    if let Some(path) = report {
        std::fs::write(path, text + "\n").map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Describe { common } => emit(&cli::describe(&common.choice())?, common.report.as_ref())?,
        Command::Quotient { common, n, kind, normal } => {
            emit(&cli::quotient(&common.choice(), kind, n, normal.as_deref(), common.verbose)?, common.report.as_ref())?
        }
        Command::Subgroup { common, module } => emit(&cli::subgroup(&common.choice(), &module)?, common.report.as_ref())?,
        Command::Oracle { id, args, common, n } => {
            emit(&cli::oracle(&common.choice(), &id, &args, n, common.verbose)?, common.report.as_ref())?
        }
        Command::Verify { corpus, suite, report, jobs, verbose, max_order, max_degree } => {
            let r = cli::verify(&VerifyArgs { corpus, suites: suite, jobs, verbose, max_order, max_degree })?;
            for rec in r.payload.records.iter().filter(|r| r.status == foxcalc::report::Status::Fail) {
                say(&format!("FAIL {} {} [H={}] {}: {}", rec.suite, rec.entry, rec.subgroup, rec.check, rec.witness.as_deref().unwrap_or("")));
            }
            let t = &r.payload.totals;
            say(&format!("{} passed, {} failed, {} skipped in {} ms", t.pass, t.fail, t.skip, r.wall_time.total_ms));
            if let Some(path) = report {
                std::fs::write(&path, r.to_json() + "\n").map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            }
            if !r.all_pass() {
                return Ok(cli::EXIT_CHECK_FAILED);
            }
        }
    }
    Ok(cli::EXIT_OK)
}

fn main() -> ExitCode {
    let parsed = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { cli::EXIT_INPUT } else { cli::EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(parsed) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("foxcalc: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
