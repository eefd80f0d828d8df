use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tfmzv::fp::{fmzv_eval, fmzv_t_eval, primes_between, CacheRecord, EvalCache, PrimeCtx};
use tfmzv::index::Index;
use tfmzv::suite::{compare_shuffle_recursion, registry, resolve_ids, run_suite, Bounds};
use tfmzv::Error;

#[derive(Parser)]
#[command(name = "tfmzv", version, about = "Evaluate and verify t-interpolated finite multiple zeta values")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print zeta_p^t(k) coefficients, or the strict or star value.
    Eval {
        #[arg(long)]
        prime: u64,
        /// Comma-separated parts, e.g. 1,2
        #[arg(long)]
        index: String,
        #[arg(long, conflicts_with = "strict")]
        star: bool,
        #[arg(long)]
        strict: bool,
    },
    /// Check theorem instances and write a report.
    Verify {
        /// Theorem ids, or `all`.
        ids: Vec<String>,
        /// Weight cap; also lowers the caps of the word and symbolic families.
        #[arg(long)]
        max_weight: Option<u32>,
        /// Depth cap for index families.
        #[arg(long, default_value_t = 5)]
        max_depth: usize,
        #[arg(long, default_value_t = 11)]
        prime_min: u64,
        #[arg(long, default_value_t = 199)]
        prime_max: u64,
        /// Worker threads; defaults to the number of CPUs.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Report file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Directory of the evaluation cache.
        #[arg(long, env = "FMZV_CACHE_DIR")]
        cache: Option<PathBuf>,
    },
    /// List the registered theorem ids.
    List,
    /// Compare the t-shuffle letter recursion with the transported product.
    ShuffleCompare {
        #[arg(long, default_value_t = 4)]
        max_len: u32,
    },
}

/// Any error; reported on stderr with exit code 2.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

fn eval(prime: u64, index: &str, star: bool, strict: bool) -> Result<String, Failure> {
    let ctx = PrimeCtx::new(prime)?;
    let k: Index = index.parse()?;
    if star || strict {
        return Ok(fmzv_eval(&ctx, &k, star).to_string());
    }
    let q = fmzv_t_eval(&ctx, &k)?;
    let rec = CacheRecord {
        p: prime,
        index: k.parts().to_vec(),
        tcoeffs: q.coeffs().to_vec(),
    };
    Ok(serde_json::to_string(&rec).expect("record serializes"))
}

#[allow(clippy::too_many_arguments)]
fn verify(
    ids: &[String],
    max_weight: Option<u32>,
    max_depth: usize,
    prime_min: u64,
    prime_max: u64,
    jobs: Option<usize>,
    format: Format,
    out: Option<PathBuf>,
    cache_dir: Option<PathBuf>,
) -> Result<bool, Failure> {
    resolve_ids(ids)?;
    let mut bounds = Bounds::default();
    if let Some(w) = max_weight {
        bounds = bounds.clamp_weight(w);
    }
    bounds.max_depth = max_depth;
    if prime_max > tfmzv::fp::MAX_PRIME {
        return Err(Failure(format!("--prime-max must be at most {}", tfmzv::fp::MAX_PRIME)));
    }
    let primes = primes_between(prime_min, prime_max);
    let cache = match &cache_dir {
        Some(dir) => {
            let (cache, stats) = EvalCache::open(dir)?;
            if !stats.malformed.is_empty() {
                let lines: Vec<String> = stats.malformed.iter().map(usize::to_string).collect();
                eprintln!(
                    "warning: skipped {} malformed cache line(s): {}",
                    stats.malformed.len(),
                    lines.join(", ")
                );
            }
            cache
        }
        None => EvalCache::new(),
    };
    let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let report = run_suite(ids, &bounds, &primes, jobs, &cache)?;
    cache.persist()?;
    let text = match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv()?,
    };
    match out {
        Some(path) => fs::write(&path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    let s = &report.summary;
    eprintln!("{} instances: {} pass, {} fail, {} skipped", s.total, s.pass, s.fail, s.skipped);
    for f in report.failures() {
        eprintln!(
            "FAIL {} {} p={} residual={:?} {}",
            f.theorem,
            f.params,
            f.prime.map_or("-".into(), |p| p.to_string()),
            f.residual.as_deref().unwrap_or(&[]),
            f.detail.as_deref().unwrap_or("")
        );
    }
    Ok(!report.has_failures())
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Eval {
            prime,
            index,
            star,
            strict,
        } => {
            println!("{}", eval(prime, &index, star, strict)?);
            Ok(true)
        }
        Command::Verify {
            ids,
            max_weight,
            max_depth,
            prime_min,
            prime_max,
            jobs,
            format,
            out,
            cache,
        } => verify(&ids, max_weight, max_depth, prime_min, prime_max, jobs, format, out, cache),
        Command::List => {
            for d in registry() {
                let kind = serde_json::to_value(d.kind).expect("kind serializes");
                println!("{:<22} {:<16} {}", d.id, kind.as_str().unwrap_or(""), d.statement);
            }
            Ok(true)
        }
        Command::ShuffleCompare { max_len } => {
            let rows = compare_shuffle_recursion(max_len)?;
            println!("{}", serde_json::to_string_pretty(&rows).expect("rows serialize"));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
