use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fvblab_core::catalog::FamilyId;
use fvblab_core::report::{CheckRecord, VerdictReport};
use fvblab_core::scalar::ParamBinding;
use fvblab_core::suite;

const SEED_ENV: &str = "FVBLAB_SEED";

#[derive(Parser, Debug)]
#[command(name = "fvblab", version, about = "Verify and stress-test local representations of flat virtual braid groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Check the group relations of catalog families.
    Verify,
    /// Re-derive the classification with the branch solver.
    Classify,
    /// Exhaustive search over a finite field.
    Census,
    /// Irreducibility oracles against the stated conditions.
    Analyze,
    /// Kernel search and symbolic witnesses.
    Faithfulness,
    /// The full acceptance suite.
    ReportAll,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Md,
}

#[derive(Args, Debug, Default)]
struct Opts {
    /// Family tags (l1..l12, g1, g2, d1..d8, burau, frep, b1..b3), comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    family: Vec<String>,
    /// Select every catalog family.
    #[arg(long, global = true)]
    all_families: bool,
    /// Strand counts: `4`, `3..6` or a comma-separated mix.
    #[arg(long, global = true)]
    n: Option<String>,
    #[arg(long, global = true, value_delimiter = ',')]
    prime: Vec<u64>,
    /// Block size for `census`.
    #[arg(long, global = true)]
    block: Option<usize>,
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Defaults to $FVBLAB_SEED, then 42.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Parameter values, e.g. `b=2/1,y=3/1`.
    #[arg(long, global = true)]
    bind: Option<String>,
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// Treat disagreements with the stated results as failures.
    #[arg(long, global = true)]
    strict_paper: bool,
    /// Write the JSON report here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Flat `key = value` file; command-line flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct RunConfig {
    command: Command,
    families: Vec<String>,
    n: Vec<usize>,
    primes: Vec<u64>,
    block: Option<usize>,
    samples: Option<usize>,
    seed: u64,
    bind: Option<String>,
    max_len: Option<usize>,
    strict_paper: bool,
    #[serde(skip)]
    out: Option<PathBuf>,
    #[serde(skip)]
    format: Format,
    #[serde(skip)]
    family_ids: Vec<FamilyId>,
    #[serde(skip)]
    binding: Option<ParamBinding>,
}

#[derive(Debug)]
struct UsageError(String);

fn usage<E: std::fmt::Display>(e: E) -> UsageError {
    UsageError(e.to_string())
}

fn parse_config_file(path: &Path) -> Result<BTreeMap<String, String>, UsageError> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| usage(format!("{}:{}: expected `key = value`", path.display(), i + 1)))?;
        let key = k.trim().replace('_', "-");
        const KEYS: [&str; 12] = [
            "family", "all-families", "n", "prime", "block", "samples", "seed", "bind", "max-len", "strict-paper", "out", "format",
        ];
        if !KEYS.contains(&key.as_str()) {
            return Err(usage(format!("{}:{}: unknown key `{key}`", path.display(), i + 1)));
        }
        out.insert(key, v.trim().trim_matches('"').to_string());
    }
    Ok(out)
}

fn parse_ns(s: &str) -> Result<Vec<usize>, UsageError> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| usage(format!("bad strand count `{t}`")));
        match part.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
                if a > b {
                    return Err(usage(format!("empty range `{part}`")));
                }
                out.extend(a..=b);
            }
            None => out.push(num(part)?),
        }
    }
    Ok(out)
}

fn parse_bool(key: &str, v: &str) -> Result<bool, UsageError> {
    match v.to_ascii_lowercase().as_str() {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(usage(format!("`{key}` expects true or false, got `{v}`"))),
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, UsageError> {
    v.parse().map_err(|_| usage(format!("`{key}` expects a non-negative integer, got `{v}`")))
}

/// Merges flags over the config file over the environment.
fn resolve(cli: Cli) -> Result<RunConfig, UsageError> {
    let o = cli.opts;
    let file = match &o.config {
        Some(p) => parse_config_file(p)?,
        None => BTreeMap::new(),
    };
    let cfg = |k: &str| file.get(k).map(String::as_str);

    let mut families = o.family.clone();
    if families.is_empty() {
        if let Some(v) = cfg("family") {
            families = v.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
        }
    }
    let all = o.all_families || cfg("all-families").map(|v| parse_bool("all-families", v)).transpose()?.unwrap_or(false);
    let family_ids: Vec<FamilyId> = if all || families.iter().any(|f| f.eq_ignore_ascii_case("all")) {
        FamilyId::all()
    } else {
        families.iter().map(|f| f.parse::<FamilyId>().map_err(usage)).collect::<Result<_, _>>()?
    };

    let n = match o.n.as_deref().or(cfg("n")) {
        Some(s) => parse_ns(s)?,
        None => Vec::new(),
    };
    let primes = if o.prime.is_empty() {
        cfg("prime")
            .map(|v| v.split(',').map(|p| parse_num("prime", p.trim())).collect::<Result<Vec<u64>, _>>())
            .transpose()?
            .unwrap_or_default()
    } else {
        o.prime.clone()
    };
    let opt_num = |flag: Option<usize>, key: &str| -> Result<Option<usize>, UsageError> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => cfg(key).map(|v| parse_num(key, v)).transpose(),
        }
    };
    let seed = match o.seed {
        Some(s) => s,
        None => match cfg("seed") {
            Some(v) => parse_num("seed", v)?,
            None => match std::env::var(SEED_ENV) {
                Ok(v) => parse_num(SEED_ENV, v.trim())?,
                Err(_) => suite::DEFAULT_SEED,
            },
        },
    };
    let bind = o.bind.clone().or_else(|| cfg("bind").map(String::from));
    let binding = bind.as_deref().map(ParamBinding::parse).transpose().map_err(usage)?;
    let format = match (o.format, cfg("format")) {
        (Some(f), _) => f,
        (None, Some(v)) => Format::from_str(v, true).map_err(|_| usage(format!("unknown format `{v}`")))?,
        (None, None) => Format::Json,
    };
    let strict_paper = o.strict_paper || cfg("strict-paper").map(|v| parse_bool("strict-paper", v)).transpose()?.unwrap_or(false);

    for id in &family_ids {
        for &k in &n {
            if !matches!(cli.command, Command::Verify | Command::Analyze) {
                break;
            }
            // Explicit strand counts must suit an explicitly named family.
            if !all && id.check_n(k).is_err() {
                return Err(usage(id.check_n(k).unwrap_err()));
            }
        }
    }

    Ok(RunConfig {
        command: cli.command,
        families: family_ids.iter().map(|f| f.tag()).collect(),
        n,
        primes,
        block: opt_num(o.block, "block")?,
        samples: opt_num(o.samples, "samples")?,
        seed,
        bind,
        max_len: opt_num(o.max_len, "max-len")?,
        strict_paper,
        out: o.out.clone().or_else(|| cfg("out").map(PathBuf::from)),
        format,
        family_ids,
        binding,
    })
}

fn records(cfg: &RunConfig) -> fvblab_core::Result<Vec<CheckRecord>> {
    match cfg.command {
        Command::Verify => {
            let fams = if cfg.family_ids.is_empty() { FamilyId::all() } else { cfg.family_ids.clone() };
            suite::verify_records(&fams, &cfg.n)
        }
        Command::Classify => suite::criterion3(),
        Command::Census => {
            let primes = if cfg.primes.is_empty() { vec![3] } else { cfg.primes.clone() };
            suite::census_records(&primes, cfg.block.unwrap_or(2), cfg.n.first().copied())
        }
        Command::Analyze => {
            let fams = if cfg.family_ids.is_empty() { FamilyId::lambdas() } else { cfg.family_ids.clone() };
            suite::analyze_records(&fams, &cfg.n, cfg.samples, cfg.seed)
        }
        Command::Faithfulness => suite::faithfulness_records(
            &cfg.family_ids,
            cfg.n.first().copied(),
            cfg.binding.as_ref(),
            cfg.max_len,
            cfg.seed,
        ),
        Command::ReportAll => suite::report_all(cfg.seed).map(|r| r.records),
    }
}

fn timestamp() -> String {
    let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    format!("unix:{secs}")
}

fn run(cli: Cli) -> ExitCode {
    let cfg = match resolve(cli) {
        Ok(c) => c,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let recs = match records(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            // Errors from the core here are all caused by the requested
            // parameters (unknown family, bad n, binding off the domain, ...).
            return ExitCode::from(2);
        }
    };
    let mut report = VerdictReport::new(&cfg, recs);
    report.generated_at = Some(timestamp());

    if let Some(path) = &cfg.out {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    match (cfg.format, &cfg.out) {
        (Format::Md, _) => print!("{}", report.to_markdown()),
        (Format::Json, None) => println!("{}", report.to_json()),
        (Format::Json, Some(_)) => {}
    }
    let s = report.summary;
    eprintln!("{} checks: {} pass, {} fail, {} finding", s.total, s.pass, s.fail, s.finding);
    ExitCode::from(report.exit_code(cfg.strict_paper) as u8)
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors by itself.
    run(Cli::parse())
}
