use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use docclone::analyzer::{AnalyzerConfig, Severity};
use docclone::detector::{DetectorConfig, ThrowsPolicy};
use docclone::report::DEFAULT_CSV_NAME;
use docclone::{run, Error, RunConfig, Scope, Target};

const EXIT_USAGE: u8 = 1;
const EXIT_EMPTY: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(
    name = "docclone",
    version,
    about = "Find and rank cloned Javadoc comments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan Java sources and write the clone CSV and severity reports.
    Analyze(AnalyzeArgs),
}

#[derive(clap::Args)]
struct AnalyzeArgs {
    /// Source files or directories to scan.
    #[arg(required = true)]
    roots: Vec<PathBuf>,
    /// Which element pairs to compare: intra, hierarchy or inter.
    #[arg(long, default_value = "intra")]
    scope: Scope,
    /// methods, fields or all.
    #[arg(long, default_value = "all")]
    target: Target,
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Name of the CSV record file inside the output directory.
    #[arg(long, default_value = DEFAULT_CSV_NAME)]
    csv_name: String,
    #[arg(long, default_value_t = 0.25)]
    min_threshold: f64,
    #[arg(long, default_value_t = 0.50)]
    high_threshold: f64,
    #[arg(long, default_value_t = 0.1)]
    diff_threshold: f64,
    /// Minimum word count of a descriptive @throws text.
    #[arg(long, default_value_t = 4)]
    min_throws_words: usize,
    /// Treat every same-type, short or generic @throws clone as legitimate.
    #[arg(long)]
    throws_exempt_generic: bool,
    /// Abbreviation table (`abbr=expansion` per line).
    #[arg(long, value_name = "FILE")]
    abbreviations: Option<PathBuf>,
    /// Stopword list (one word per line).
    #[arg(long, value_name = "FILE")]
    stopwords: Option<PathBuf>,
    /// Regular expressions for generic @throws texts (one per line).
    #[arg(long, value_name = "FILE")]
    generic_throws: Option<PathBuf>,
    /// Compare comment texts case-sensitively.
    #[arg(long)]
    strict_case: bool,
    /// Also write a file grouping records with identical cloned text.
    #[arg(long)]
    group_duplicates: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let Command::Analyze(args) = cli.command;

    let mut cfg = RunConfig::new(args.roots, args.out);
    cfg.scope = args.scope;
    cfg.target = args.target;
    cfg.csv_name = args.csv_name;
    cfg.analyzer = AnalyzerConfig {
        min_threshold: args.min_threshold,
        high_threshold: args.high_threshold,
        diff_threshold: args.diff_threshold,
    };
    cfg.detector = DetectorConfig {
        min_throws_words: args.min_throws_words,
        throws_policy: if args.throws_exempt_generic {
            ThrowsPolicy::ExemptGeneric
        } else {
            ThrowsPolicy::RequireDescriptive
        },
        ..DetectorConfig::default()
    };
    cfg.abbrev_path = args.abbreviations;
    cfg.stopword_path = args.stopwords;
    cfg.patterns_path = args.generic_throws;
    cfg.strict_case = args.strict_case;
    cfg.group_duplicates = args.group_duplicates;

    match run(&cfg) {
        Ok(summary) => {
            for w in &summary.warnings {
                eprintln!("warning: {w}");
            }
            println!("classes: {}", summary.classes);
            for severity in Severity::ALL {
                println!("{severity}: {}", summary.count(severity));
            }
            println!("legit-filtered: {}", summary.legit);
            println!("total records: {}", summary.total);
            println!("csv: {}", summary.csv_path.display());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::EmptyCorpus => EXIT_EMPTY,
                Error::Io { .. } | Error::Csv(_) => EXIT_IO,
                Error::Config(_) | Error::Pattern { .. } => EXIT_USAGE,
            })
        }
    }
}
