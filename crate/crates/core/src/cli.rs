//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 usage or domain error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::identity_suite::GridSpec;
use crate::perm_oracle::{enumerate_a, enumerate_b, ProblemSize};
use crate::pipeline::{self, CountMethod, Suite, VerifyConfig};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "permcount", version, about = "Exact counts of permutations with an increasing prefix and bounded LIS")]
pub struct Cli {
    /// Bound the number of worker threads.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print #A(n, n-k).
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "formula")]
        method: MethodArg,
    },
    /// Print the component table for consecutive n.
    Table {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n_from: usize,
        #[arg(long)]
        n_to: usize,
        #[arg(long, value_enum, default_value = "md")]
        format: FormatArg,
    },
    /// List the members of A(n, n-k), or of B(n, n-k)(i) with --prefix.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        prefix: Option<usize>,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 5)]
        k_max: usize,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        /// Largest n enumerated by brute force (default: min(n-max, 14)).
        #[arg(long)]
        oracle_n_max: Option<usize>,
        /// Cap on binom(n,k)·k! candidates per brute-force cell.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        /// JSON document with identity grid ranges.
        #[arg(long)]
        grid: Option<PathBuf>,
        /// Random matrices compared by the dodgson suite.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MethodArg {
    Formula,
    Oracle,
    Kernel,
    Cramer,
}

impl From<MethodArg> for CountMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Formula => CountMethod::Formula,
            MethodArg::Oracle => CountMethod::Oracle,
            MethodArg::Kernel => CountMethod::KernelRecursion,
            MethodArg::Cramer => CountMethod::Cramer,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Md,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SuiteArg {
    All,
    Methods,
    Tables,
    Conjecture,
    #[value(name = "lemmaA")]
    LemmaA,
    #[value(name = "lemmaB")]
    LemmaB,
    #[value(name = "lemmaC")]
    LemmaC,
    Prop33,
    Bijection,
    Dodgson,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Methods => Suite::Methods,
            SuiteArg::Tables => Suite::Tables,
            SuiteArg::Conjecture => Suite::Conjecture,
            SuiteArg::LemmaA => Suite::LemmaA,
            SuiteArg::LemmaB => Suite::LemmaB,
            SuiteArg::LemmaC => Suite::LemmaC,
            SuiteArg::Prop33 => Suite::Prop33,
            SuiteArg::Bijection => Suite::Bijection,
            SuiteArg::Dodgson => Suite::Dodgson,
        }
    }
}

enum Outcome {
    Done,
    Failed,
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    match command {
        Command::Count { n, k, method } => {
            let c = pipeline::count(n, k, method.into())?;
            writeln!(out, "{c}")?;
        }
        Command::Table { k, n_from, n_to, format } => {
            let t = pipeline::table(k, n_from, n_to)?;
            let text = match format {
                FormatArg::Md => t.to_markdown(),
                FormatArg::Csv => t.to_csv(),
                FormatArg::Json => t.to_json(),
            };
            write!(out, "{text}")?;
        }
        Command::Enumerate { n, k, prefix } => {
            let size = ProblemSize::new(n, k)?;
            let members = match prefix {
                Some(i) => enumerate_b(size, i)?,
                None => enumerate_a(size),
            };
            for mu in members {
                writeln!(out, "{mu}")?;
            }
        }
        Command::Verify {
            suite,
            k_max,
            n_max,
            oracle_n_max,
            budget,
            grid,
            samples,
            out: report_path,
        } => {
            let mut cfg = VerifyConfig::new(k_max, n_max, budget);
            if let Some(m) = oracle_n_max {
                cfg.oracle_n_max = m;
            }
            if let Some(path) = grid {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                cfg.grid = GridSpec::from_json(&text)?;
            }
            cfg.dodgson_samples = samples;
            cfg.validate()?;
            let report = pipeline::run_suite(suite.into(), &cfg);
            writeln!(out, "{}", report.summary())?;
            if let Some(path) = report_path {
                let json = serde_json::to_string_pretty(&report)?;
                std::fs::write(&path, json + "\n")
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            }
            if !report.is_success() {
                writeln!(err, "verification failed: {} failing checks", report.failures().count())?;
                return Ok(Outcome::Failed);
            }
        }
    }
    Ok(Outcome::Done)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    // the worker pool cannot borrow the caller's (non-Send) streams
    let (result, out_buf, err_buf) = pool.install(|| {
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let r = execute(cli.command, &mut o, &mut e);
        (r, o, e)
    });
    let _ = out.write_all(&out_buf);
    let _ = err.write_all(&err_buf);
    match result {
        Ok(Outcome::Done) => EXIT_OK,
        Ok(Outcome::Failed) => EXIT_FAILED,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
