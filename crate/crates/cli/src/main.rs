//! `charlab`: character tables, p-blocks and McKay-type counting checks
//! from the command line.

mod cache;
mod corpus;
mod report;

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use charlab_core::blocks::{block_partition, block_report};
use charlab_core::chartab::{self, verify_table, CharacterTable, DEFAULT_SEED};
use charlab_core::classdata::DEFAULT_ORDER_BUDGET;
use charlab_core::conjectures::{self, mk_vector, ConjectureReport, Verdict};
use charlab_core::workbench::Workbench;
use charlab_core::{arith, Error, GroupSpec};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cache::DiskCache;
use crate::report::{combine, envelope, render_report, to_pretty, HashedConfig};

const EXIT_FAIL: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "charlab", version, about = "Exact character tables and McKay-type counting checks")]
struct Cli {
    /// Directory for cached character tables
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Largest group order to work with
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_BUDGET, value_parser = clap::value_parser!(u64).range(1..))]
    budget_order: u64,
    /// Seed for randomized internals (results do not depend on it)
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute (or load) a character table and verify it
    Table {
        spec: String,
        /// Also print the p-block partition
        #[arg(long)]
        p: Option<u64>,
        /// Write the table file here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one check on one group
    Check {
        #[arg(value_enum, ignore_case = true)]
        which: Which,
        /// Group spec (not used by symdiv)
        spec: Option<String>,
        #[arg(long)]
        p: u64,
        /// Galois level; sweeps all levels when omitted
        #[arg(long)]
        n: Option<u32>,
        /// Restrict comparisons to the residue ±k mod p
        #[arg(long, allow_negative_numbers = true)]
        k: Option<i64>,
        /// Restrict block checks to this block of G
        #[arg(long)]
        block: Option<usize>,
        /// Largest n for symdiv
        #[arg(long, default_value_t = 7)]
        nmax: usize,
    },
    /// Run every check over the built-in corpus
    Corpus {
        /// Only run these groups
        #[arg(long)]
        filter: Vec<String>,
        /// Only run this prime
        #[arg(long)]
        p: Option<u64>,
        /// Worker threads
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Read a table file or a degree list, verify it and add it to the cache
    Ingest {
        file: PathBuf,
        /// Also report blocks and degree counts at p
        #[arg(long)]
        p: Option<u64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    A,
    B,
    C,
    D,
    Composite,
    Symdiv,
    Exponent,
    Dade,
    All,
}

struct Outcome {
    text: String,
    json: Value,
    code: u8,
}

fn code_for(v: Verdict) -> u8 {
    if v == Verdict::Fail {
        EXIT_FAIL
    } else {
        0
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(o) => {
            if cli.json {
                print!("{}", to_pretty(&o.json));
            } else {
                print!("{}", o.text);
            }
            ExitCode::from(o.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let budget = e.chain().any(|c| matches!(c.downcast_ref::<Error>(), Some(Error::BudgetExceeded { .. })));
            ExitCode::from(if budget { EXIT_BUDGET } else { EXIT_ERROR })
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    let cache = DiskCache::new(cli.cache_dir.clone(), cli.seed).context("cannot create the cache directory")?;
    let config = HashedConfig { budget_order: cli.budget_order, seed: cli.seed };
    match &cli.command {
        Command::Table { spec, p, out } => cmd_table(spec, *p, out.as_ref(), &cache, &config, cli.budget_order),
        Command::Check { which, spec, p, n, k, block, nmax } => {
            let args = CheckArgs { which: *which, spec: spec.as_deref(), p: *p, n: *n, k: *k, block: *block, nmax: *nmax };
            cmd_check(&args, &cache, &config, cli.budget_order)
        }
        Command::Corpus { filter, p, jobs } => {
            let filter = filter.iter().map(|s| Ok(GroupSpec::parse(s)?.name())).collect::<anyhow::Result<Vec<_>>>()?;
            if let Some(p) = p {
                require_prime(*p)?;
            }
            let result = corpus::run(&filter, *p, *jobs, &cache, cli.budget_order)?;
            Ok(Outcome {
                text: result.render(),
                json: envelope("corpus", &config, Some(result.verdict()), result.to_json()),
                code: result.exit_code(),
            })
        }
        Command::Ingest { file, p } => cmd_ingest(file, *p, &cache, &config),
    }
}

fn require_prime(p: u64) -> anyhow::Result<()> {
    if !arith::is_prime(p) {
        bail!(Error::NotPrime(p));
    }
    Ok(())
}

fn build_group(spec: &str, budget: u64) -> anyhow::Result<(String, charlab_core::PermGroup)> {
    let parsed = GroupSpec::parse(spec)?;
    if let Some(order) = parsed.expected_order() {
        if order > budget.into() {
            bail!(Error::BudgetExceeded {
                what: "group order",
                size: u64::try_from(&order).unwrap_or(u64::MAX),
                limit: budget
            });
        }
    }
    let g = parsed.build()?;
    Ok((parsed.name(), g))
}

fn table_summary(t: &CharacterTable) -> Value {
    let mut v = json!({
        "degrees": t.degrees(),
        "mode": t.mode(),
        "name": t.name(),
        "order": t.order().to_string(),
    });
    if let Ok(cd) = t.classes() {
        v["classes"] = json!(cd.len());
        v["exponent"] = json!(cd.exponent());
    }
    v
}

fn render_table(t: &CharacterTable, out: &mut String) {
    let _ = writeln!(out, "{}: order {}", t.name(), t.order());
    if let Ok(cd) = t.classes() {
        let _ = writeln!(out, "classes: {}", cd.len());
    }
    let degrees: Vec<String> = t.degrees().iter().map(u64::to_string).collect();
    let _ = writeln!(out, "degrees: {}", degrees.join(","));
}

fn render_verification(v: &chartab::VerifyReport, out: &mut String) {
    match &v.failure {
        None => {
            let _ = writeln!(out, "verification: pass ({})", v.checks.join(", "));
        }
        Some(f) => {
            let _ = writeln!(out, "verification: FAIL ({f})");
        }
    }
}

fn blocks_value(t: &CharacterTable, p: u64, out: &mut String) -> anyhow::Result<Value> {
    let report = block_report(t, &block_partition(t, p)?);
    let _ = writeln!(out, "{}-blocks: {}", p, report.blocks.len());
    for (i, b) in report.blocks.iter().enumerate() {
        let degrees: Vec<String> = b.degrees.iter().map(u64::to_string).collect();
        let _ = writeln!(out, "  block {i}: defect {}, degrees {}", b.defect, degrees.join(","));
    }
    Ok(serde_json::to_value(report)?)
}

fn cmd_table(
    spec: &str,
    p: Option<u64>,
    out_path: Option<&PathBuf>,
    cache: &DiskCache,
    config: &HashedConfig,
    budget: u64,
) -> anyhow::Result<Outcome> {
    let (name, g) = build_group(spec, budget)?;
    let t = charlab_core::workbench::TableSource::table(cache, &name, &g, budget)?;
    let v = verify_table(&t);
    let mut text = String::new();
    render_table(&t, &mut text);
    render_verification(&v, &mut text);
    let mut body = json!({ "table": table_summary(&t), "verification": v });
    if let Some(p) = p {
        require_prime(p)?;
        body["blocks"] = blocks_value(&t, p, &mut text)?;
    }
    if let Some(path) = out_path {
        fs::write(path, t.to_json()).with_context(|| format!("cannot write {}", path.display()))?;
    }
    let code = if v.passed() { 0 } else { EXIT_FAIL };
    Ok(Outcome { text, json: envelope("table", config, None, body), code })
}

struct CheckArgs<'a> {
    which: Which,
    spec: Option<&'a str>,
    p: u64,
    n: Option<u32>,
    k: Option<i64>,
    block: Option<usize>,
    nmax: usize,
}

fn cmd_check(args: &CheckArgs, cache: &DiskCache, config: &HashedConfig, budget: u64) -> anyhow::Result<Outcome> {
    let p = args.p;
    require_prime(p)?;
    let k = match args.k {
        None => None,
        Some(k) => Some(
            arith::normalize_pm(k, p)
                .ok_or_else(|| Error::InvalidArgument(format!("k = {k} is divisible by p = {p}")))?,
        ),
    };
    if args.n == Some(0) {
        bail!(Error::InvalidArgument("n must be at least 1".into()));
    }
    let mut reports: Vec<ConjectureReport> = if args.which == Which::Symdiv {
        vec![conjectures::symmetric_divisibility(args.nmax, p, cache, budget)?]
    } else {
        let spec = args.spec.context("this check needs a group spec")?;
        let (name, g) = build_group(spec, budget)?;
        let wb = Workbench::new(&name, g, cache, budget)?;
        if let Some(b) = args.block {
            if wb.divides_order(p) {
                let count = wb.blocks(p)?.g_blocks.blocks.len();
                if b >= count {
                    bail!(Error::InvalidArgument(format!("block {b} out of range ({count} blocks)")));
                }
            }
        }
        match args.which {
            Which::A => vec![conjectures::check_a(&wb, p)?],
            Which::B => vec![conjectures::check_b(&wb, p, args.block)?],
            Which::C => vec![conjectures::check_c(&wb, p, args.n)?],
            Which::D => vec![conjectures::check_d(&wb, p, args.n, args.block)?],
            Which::Composite => {
                vec![conjectures::check_ac(&wb, p, args.n)?, conjectures::check_bd(&wb, p, args.n, args.block)?]
            }
            Which::Exponent => vec![conjectures::check_exponent(&wb, p)?],
            Which::Dade => vec![conjectures::check_dade(&wb, p, args.block)?],
            Which::All => conjectures::run_all(&wb, p)?,
            Which::Symdiv => unreachable!(),
        }
    };
    if let Some(k) = k {
        reports = reports.into_iter().map(|r| r.restrict_k(k)).collect();
    }
    let verdict = combine(reports.iter().map(|r| r.verdict));
    let mut text = String::new();
    for r in &reports {
        render_report(r, &mut text);
    }
    let name = format!("check {}", args.which.to_possible_value().unwrap().get_name());
    let json = envelope(&name, config, Some(verdict), json!({ "reports": reports }));
    Ok(Outcome { text, json, code: code_for(verdict) })
}

fn cmd_ingest(file: &PathBuf, p: Option<u64>, cache: &DiskCache, config: &HashedConfig) -> anyhow::Result<Outcome> {
    let text_in = fs::read_to_string(file).with_context(|| format!("cannot read {}", file.display()))?;
    let t = if text_in.trim_start().starts_with('{') {
        chartab::read_table(&text_in)?
    } else {
        chartab::parse_degree_list(&text_in)?
    };
    let v = verify_table(&t);
    let mut text = String::new();
    render_table(&t, &mut text);
    render_verification(&v, &mut text);
    let mut capabilities = vec!["degree counts"];
    if t.is_full() {
        capabilities.extend(["block partition", "heights", "block degree counts"]);
    }
    let _ = writeln!(text, "available: {}; defect groups and local checks need the group itself", capabilities.join(", "));
    let mut body = json!({ "capabilities": capabilities, "table": table_summary(&t), "verification": v });
    if let Some(p) = p {
        require_prime(p)?;
        let mk = mk_vector(&t, p);
        let counts: Vec<String> = mk.entries.iter().map(|(k, v)| format!("M_{k} = {v}")).collect();
        let _ = writeln!(text, "p = {p}: {}", counts.join(", "));
        body["Mk"] = json!(mk.entries);
        if t.is_full() {
            body["blocks"] = blocks_value(&t, p, &mut text)?;
        }
    }
    if v.passed() {
        if let Some(path) = cache.store(&t)? {
            let _ = writeln!(text, "cached: {}", path.display());
        }
    }
    let code = if v.passed() { 0 } else { EXIT_FAIL };
    Ok(Outcome { text, json: envelope("ingest", config, None, body), code })
}
