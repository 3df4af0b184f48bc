use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use asmcalc::mt::{enumerate_mt, pattern_genfun, MtFilter};
use asmcalc::refined::{
    cd_numbers, family_a_brute, family_a_from_c, family_b_formula, family_bstar, CdKind, RefinedFamily,
};
use asmcalc::report::{numbers_csv, ReportFormat, VerificationReport};
use asmcalc::suite::{run_suite, Suite, SuiteConfig};
use asmcalc::{Error, Result};

#[derive(Parser)]
#[command(name = "asmcalc", version, about = "Exact verification of refined ASM/VSASM identities")]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, env = "ASMCALC_THREADS")]
    threads: Option<usize>,

    /// Base seed for randomized checks.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print its report.
    Verify {
        /// conjecture-1, conjecture-6.2, les, cd, symmetry-c, words, genfun,
        /// identities, mt, operators or all.
        suite: String,
        #[command(flatten)]
        bounds: Bounds,
        /// Output format on stdout.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        out: Outputs,
    },
    /// Count monotone triangles.
    Count {
        #[command(subcommand)]
        what: CountWhat,
    },
    /// Print a table of refined numbers as CSV.
    Numbers {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        /// Parameter of the C and D families.
        #[arg(long, default_value_t = 2)]
        d: i64,
    },
    /// Run a suite and write its report to files.
    Report {
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        bounds: Bounds,
        #[command(flatten)]
        out: Outputs,
    },
}

#[derive(Subcommand)]
enum CountWhat {
    /// Monotone triangles with a given bottom row.
    Mt {
        /// Strictly increasing bottom row, comma separated.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        bottom: Vec<i64>,
        /// Required top entry.
        #[arg(long, allow_hyphen_values = true)]
        top: Option<i64>,
        /// Required number of left-diagonal entries equal to the first bottom entry.
        #[arg(long)]
        left_eq: Option<usize>,
        /// Print the generating function of the local pattern count (needs --top).
        #[arg(long)]
        patterns: bool,
    },
}

#[derive(Args)]
struct Bounds {
    /// Largest variable count for the inversion sweep (1..=7, default 6).
    #[arg(long)]
    max_vars: Option<usize>,
    /// Largest size for size-indexed checks.
    #[arg(long)]
    n: Option<usize>,
    /// Random instances per randomized check.
    #[arg(long)]
    samples: Option<usize>,
    /// Longest operator word (at most 7, default 5).
    #[arg(long)]
    max_len: Option<usize>,
    /// Restrict the linear-system suite to one family.
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
}

#[derive(Args)]
struct Outputs {
    /// Also write the report as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Also write the report as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Keep measured timings (reports are then no longer reproducible).
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "Bstar")]
    Bstar,
    #[value(name = "C")]
    C,
    #[value(name = "D")]
    D,
}

impl From<FamilyArg> for asmcalc::refined::Family {
    fn from(f: FamilyArg) -> Self {
        use asmcalc::refined::Family;
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::B => Family::B,
            FamilyArg::Bstar => Family::Bstar,
            FamilyArg::C => Family::C,
            FamilyArg::D => Family::D,
        }
    }
}

fn config(seed: u64, b: &Bounds) -> SuiteConfig {
    SuiteConfig {
        seed,
        max_vars: b.max_vars,
        n: b.n,
        samples: b.samples,
        max_len: b.max_len,
        family: b.family.map(Into::into),
    }
}

fn threads(cli: &Cli) -> usize {
    cli.threads
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

fn run_and_write(suite: &str, cfg: &SuiteConfig, workers: usize, out: &Outputs) -> Result<VerificationReport> {
    let suite: Suite = suite.parse()?;
    let mut report = run_suite(suite, cfg, workers)?;
    if !out.timings {
        report = report.without_timings();
    }
    if let Some(path) = &out.json {
        report.emit(ReportFormat::Json, path)?;
    }
    if let Some(path) = &out.csv {
        report.emit(ReportFormat::Csv, path)?;
    }
    Ok(report)
}

fn family_table(family: FamilyArg, n: usize, d: i64) -> Result<RefinedFamily> {
    match family {
        FamilyArg::A if n <= 6 => family_a_brute(n),
        FamilyArg::A => family_a_from_c(n),
        FamilyArg::B => Ok(family_b_formula(n, 1..=2 * n as i64)),
        FamilyArg::Bstar => Ok(family_bstar(n)),
        FamilyArg::C => cd_numbers(n, d, CdKind::C),
        FamilyArg::D => cd_numbers(n, d, CdKind::D),
    }
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Verify {
            suite,
            bounds,
            format,
            out,
        } => {
            let report = run_and_write(suite, &config(cli.seed, bounds), threads(cli), out)?;
            let fmt = match format {
                Format::Text => ReportFormat::Text,
                Format::Json => ReportFormat::Json,
                Format::Csv => ReportFormat::Csv,
            };
            let text = report.render(fmt)?;
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(!report.has_failures())
        }
        Command::Report { suite, bounds, out } => {
            if out.json.is_none() && out.csv.is_none() {
                return Err(Error::Precondition("report needs --json PATH or --csv PATH".into()));
            }
            let report = run_and_write(suite, &config(cli.seed, bounds), threads(cli), out)?;
            eprint!("{}", report.to_text().lines().last().map(|l| format!("{l}\n")).unwrap_or_default());
            Ok(!report.has_failures())
        }
        Command::Count {
            what:
                CountWhat::Mt {
                    bottom,
                    top,
                    left_eq,
                    patterns,
                },
        } => {
            if *patterns {
                let top = top.ok_or_else(|| Error::Precondition("--patterns needs --top".into()))?;
                println!("{}", pattern_genfun(bottom, top)?);
            } else {
                let filter = MtFilter {
                    left_diag_eq_first: *left_eq,
                    top_entry: *top,
                    ..MtFilter::default()
                };
                println!("{}", enumerate_mt(bottom, &filter)?);
            }
            Ok(true)
        }
        Command::Numbers { family, n, d } => {
            let table = family_table(*family, *n, *d)?;
            let rows: Vec<Vec<String>> = table
                .values
                .iter()
                .map(|(i, v)| vec![n.to_string(), i.to_string(), v.to_string()])
                .collect();
            print!("{}", numbers_csv(&["n", "i", "value"], &rows)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
