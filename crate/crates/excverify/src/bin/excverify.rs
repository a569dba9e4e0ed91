use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use excverify::harness::{self, convention_fingerprint, Context, Format, Report, RunConfig, RunMeta, Suite, BRACKET_ROWS};
use excverify::liealg::AlgebraId;

#[derive(Parser)]
#[command(name = "excverify", version, about = "Exact checks of the exceptional Lie algebra constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// output format
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: OutFormat,
    /// directory for cached bases
    #[arg(long, env = "EXCVERIFY_CACHE", global = true)]
    cache_dir: Option<PathBuf>,
    /// worker threads (defaults to available parallelism)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, default_value_t = harness::DEFAULT_SEED, global = true)]
    seed: u64,
    /// pair count for sampled checks
    #[arg(long, default_value_t = harness::DEFAULT_SAMPLE, global = true)]
    sample: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// build (or load) bases and check them
    Bases {
        #[arg(long)]
        algebra: Option<String>,
    },
    /// commuting pairs of involutions
    Table1 {
        /// restrict to these row labels
        #[arg(long, num_args = 1..)]
        rows: Vec<String>,
    },
    /// single involutions
    Table2,
    /// fixed-dimension statements for individual maps
    Lemmas,
    /// word identities and group membership
    Identities,
    /// every suite
    All,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("excverify: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let c = cli.common;
    let (suite, filter) = match cli.command {
        Command::Bases { algebra } => {
            let filter = match algebra {
                Some(a) => {
                    let id = AlgebraId::parse(&a).ok_or_else(|| anyhow::anyhow!("unknown algebra {a:?}"))?;
                    vec![format!("bases/{id}/"), format!("properties/{id}/")]
                }
                None => vec![],
            };
            (Suite::Bases, filter)
        }
        Command::Table1 { rows } => (Suite::Table1, rows.iter().map(|r| format!("table1/{r}/")).collect()),
        Command::Table2 => (Suite::Table2, vec![]),
        Command::Lemmas => (Suite::Lemmas, vec![]),
        Command::Identities => (Suite::Identities, vec![]),
        Command::All => (Suite::All, vec![]),
    };
    let jobs = c.jobs.unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1));
    let ctx = Context::new(RunConfig { seed: c.seed, sample: c.sample, jobs, cache_dir: c.cache_dir });
    let results = harness::run_suite(suite, &filter, &ctx);
    if results.is_empty() {
        anyhow::bail!("no checks selected");
    }
    let timing = ctx
        .sources()
        .into_iter()
        .map(|(id, s)| (id.name().to_string(), serde_json::to_value(s).expect("plain struct")))
        .collect();
    let meta = RunMeta {
        convention_fingerprint: convention_fingerprint(),
        seed: c.seed,
        sample: c.sample,
        version: env!("CARGO_PKG_VERSION").to_string(),
        suite: suite.name().to_string(),
        bracket_rows: BRACKET_ROWS.name().to_string(),
        timing: Some(timing),
    };
    let code = harness::exit_code(&results);
    let format = match c.format {
        OutFormat::Json => Format::Json,
        OutFormat::Md => Format::Markdown,
    };
    print!("{}", harness::emit_report(&Report::new(results, meta), format));
    Ok(code)
}
