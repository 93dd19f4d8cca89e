//! Benchmark and comparison tables: one row per (algorithm, n, seed) cell,
//! with an exact-oracle column on instances small enough to certify.
//!
//! Rows are built in a fixed grid order, so the table is a deterministic
//! function of the config apart from the elapsed-time columns. A cell an
//! algorithm refuses (size cap, bit budget, float input to an int-only
//! baseline) becomes a skip marker, never an abort.

use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde::Serialize;
use setpart::baselines::{brute_force, dp_optimal};
use setpart::io::{generate, Distribution, GenSpec};
use setpart::{run, Algorithm, AnyInstance, AnyRunResult, Caps, Element};

use crate::{emit, load_instance, parse_alg, parse_dist, CapsArgs, CliError, SourceArgs};

const CSV_HEADER: &str = "algorithm,n,dist,seed,diff,opt_diff,ratio,transfers,elapsed_ns";

#[derive(Clone, Copy, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args)]
pub struct BenchArgs {
    /// Algorithms to run, comma separated
    #[arg(
        long,
        value_name = "LIST",
        value_parser = parse_alg,
        value_delimiter = ',',
        default_value = "v1,v2,greedy,kk"
    )]
    algs: Vec<Algorithm>,

    /// Instance sizes, comma separated
    #[arg(long, value_name = "LIST", value_delimiter = ',', default_value = "1000")]
    sizes: Vec<usize>,

    /// Distribution tag for the generated instances
    #[arg(long, value_name = "TAG", value_parser = parse_dist, default_value = "uniform-int(1,100)")]
    dist: Distribution,

    /// Seeds per cell; each cell runs seeds 0..COUNT
    #[arg(long, value_name = "COUNT", default_value_t = 3)]
    seeds: u64,

    /// Run the exact oracle on instances with at most this many values
    #[arg(long, value_name = "N", default_value_t = 24)]
    oracle_cap: usize,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write the table here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(flatten)]
    caps: CapsArgs,
}

#[derive(Args)]
pub struct CompareArgs {
    #[command(flatten)]
    source: SourceArgs,

    /// Run the exact oracle on instances with at most this many values
    #[arg(long, value_name = "N", default_value_t = 24)]
    oracle_cap: usize,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write the table here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(flatten)]
    caps: CapsArgs,
}

pub fn cmd_bench(args: &BenchArgs) -> Result<(), CliError> {
    let caps = args.caps.caps();
    let mut rows = Vec::new();
    for &alg in &args.algs {
        for &n in &args.sizes {
            for seed in 0..args.seeds {
                let spec = GenSpec { n, dist: args.dist, seed };
                let instance = generate(&spec).map_err(|e| CliError::Input(e.to_string()))?;
                rows.push(solve_row(alg, &instance, args.dist.to_string(), seed, &caps, args.oracle_cap));
            }
        }
    }
    let summary = summarize(&rows);
    let text = match args.format {
        Format::Csv => csv_table(&rows, &summary),
        Format::Json => json_table(&rows, &summary),
    };
    emit(args.out.as_deref(), &text)
}

pub fn cmd_compare(args: &CompareArgs) -> Result<(), CliError> {
    let instance = load_instance(&args.source)?;
    let caps = args.caps.caps();
    let (dist, seed) = match &args.source.input {
        Some(_) => ("-".to_string(), 0),
        None => (
            args.source.dist.expect("load_instance required a tag").to_string(),
            args.source.seed,
        ),
    };
    let rows: Vec<Row> = Algorithm::ALL
        .iter()
        .map(|&alg| solve_row(alg, &instance, dist.clone(), seed, &caps, args.oracle_cap))
        .collect();
    let text = match args.format {
        Format::Csv => csv_table(&rows, &[]),
        Format::Json => json_table(&rows, &[]),
    };
    emit(args.out.as_deref(), &text)
}

/// A diff in the instance's own arithmetic, rendered without loss.
#[derive(Clone, Copy)]
enum Num {
    Int(i128),
    Float(f64),
}

impl Num {
    fn render(self) -> String {
        match self {
            Num::Int(v) => v.render(),
            Num::Float(v) => v.render(),
        }
    }

    fn as_f64(self) -> f64 {
        match self {
            Num::Int(v) => v as f64,
            Num::Float(v) => v,
        }
    }

    fn json(self) -> serde_json::Value {
        match self {
            Num::Int(v) => match i64::try_from(v) {
                Ok(small) => small.into(),
                Err(_) => v.to_string().into(),
            },
            Num::Float(v) => v.into(),
        }
    }
}

struct Row {
    algorithm: Algorithm,
    n: usize,
    dist: String,
    seed: u64,
    outcome: Outcome,
}

enum Outcome {
    Solved {
        diff: Num,
        opt_diff: Option<Num>,
        ratio: Option<f64>,
        transfers: usize,
        elapsed_ns: u64,
    },
    Skipped {
        reason: String,
    },
}

fn solve_row(
    alg: Algorithm,
    instance: &AnyInstance,
    dist: String,
    seed: u64,
    caps: &Caps,
    oracle_cap: usize,
) -> Row {
    let outcome = match run(alg, instance, caps) {
        Err(err) => Outcome::Skipped { reason: err.to_string() },
        Ok(result) => {
            let (diff, transfers, elapsed) = match &result {
                AnyRunResult::Int(r) => {
                    (Num::Int(r.report.diff), r.report.transfers, r.report.elapsed)
                }
                AnyRunResult::Float(r) => {
                    (Num::Float(r.report.diff), r.report.transfers, r.report.elapsed)
                }
            };
            let opt_diff = oracle(instance, caps, oracle_cap);
            let ratio = opt_diff.map(|opt| max_sum_ratio(instance, diff, opt));
            Outcome::Solved {
                diff,
                opt_diff,
                ratio,
                transfers,
                elapsed_ns: elapsed.as_nanos().min(u64::MAX as u128) as u64,
            }
        }
    };
    Row { algorithm: alg, n: instance.len(), dist, seed, outcome }
}

/// Exact optimal diff when the instance is small enough to certify: the
/// subset-sum table for integers, brute force for floats. None past the cap.
fn oracle(instance: &AnyInstance, caps: &Caps, oracle_cap: usize) -> Option<Num> {
    if instance.len() > oracle_cap {
        return None;
    }
    match instance {
        AnyInstance::Int(inst) => {
            dp_optimal(inst, caps.dp_budget_bits).ok().map(|r| Num::Int(r.diff))
        }
        AnyInstance::Float(inst) => {
            if instance.len() > caps.bf_cap {
                return None;
            }
            brute_force(inst, caps.bf_cap).ok().map(|(diff, _)| Num::Float(diff))
        }
    }
}

/// (sum|x| + diff) / (sum|x| + opt). On nonnegative instances sum|x| equals
/// the total, making each side exactly twice a max side sum, so this is the
/// max-sum ratio; on mixed-sign instances it remains a well-conditioned
/// measure of gap excess. Always at least 1, with equality iff the gap is
/// optimal; defined as 1 when both gaps and all values are zero.
fn max_sum_ratio(instance: &AnyInstance, diff: Num, opt: Num) -> f64 {
    let s_abs: f64 = match instance {
        AnyInstance::Int(inst) => inst.values().iter().map(|&v| (v as f64).abs()).sum(),
        AnyInstance::Float(inst) => inst.values().iter().map(|&v| v.abs()).sum(),
    };
    let denom = s_abs + opt.as_f64();
    if denom == 0.0 {
        1.0
    } else {
        (s_abs + diff.as_f64()) / denom
    }
}

struct Cell {
    algorithm: Algorithm,
    n: usize,
    median_elapsed_ns: u64,
    mean_ratio: Option<f64>,
}

/// Per (algorithm, n) aggregates over the solved rows, in first-seen order.
/// Cells with no solved rows are dropped.
fn summarize(rows: &[Row]) -> Vec<Cell> {
    let mut order: Vec<(Algorithm, usize)> = Vec::new();
    for row in rows {
        if !order.contains(&(row.algorithm, row.n)) {
            order.push((row.algorithm, row.n));
        }
    }
    let mut cells = Vec::new();
    for (alg, n) in order {
        let mut elapsed: Vec<u64> = Vec::new();
        let mut ratios: Vec<f64> = Vec::new();
        for row in rows.iter().filter(|r| r.algorithm == alg && r.n == n) {
            if let Outcome::Solved { ratio, elapsed_ns, .. } = &row.outcome {
                elapsed.push(*elapsed_ns);
                if let Some(r) = ratio {
                    ratios.push(*r);
                }
            }
        }
        if elapsed.is_empty() {
            continue;
        }
        elapsed.sort_unstable();
        let mean_ratio =
            (!ratios.is_empty()).then(|| ratios.iter().sum::<f64>() / ratios.len() as f64);
        cells.push(Cell { algorithm: alg, n, median_elapsed_ns: median(&elapsed), mean_ratio });
    }
    cells
}

fn median(sorted: &[u64]) -> u64 {
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / 2
    }
}

/// RFC 4180 quoting; only distribution tags ever need it here.
fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_table(rows: &[Row], summary: &[Cell]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        match &row.outcome {
            Outcome::Skipped { reason } => {
                out.push_str(&format!(
                    "# skip algorithm={} n={} dist={} seed={} reason={}\n",
                    row.algorithm, row.n, row.dist, row.seed, reason
                ));
            }
            Outcome::Solved { diff, opt_diff, ratio, transfers, elapsed_ns } => {
                let opt = opt_diff.map(Num::render).unwrap_or_default();
                let ratio = ratio.map(|r| format!("{r:?}")).unwrap_or_default();
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    row.algorithm,
                    row.n,
                    csv_field(&row.dist),
                    row.seed,
                    diff.render(),
                    opt,
                    ratio,
                    transfers,
                    elapsed_ns
                ));
            }
        }
    }
    for cell in summary {
        let mean = cell.mean_ratio.map(|r| format!(" mean_ratio={r:?}")).unwrap_or_default();
        out.push_str(&format!(
            "# summary algorithm={} n={} median_elapsed_ns={}{}\n",
            cell.algorithm, cell.n, cell.median_elapsed_ns, mean
        ));
    }
    out
}

#[derive(Serialize)]
struct JsonRow<'a> {
    algorithm: &'static str,
    n: usize,
    dist: &'a str,
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    diff: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    opt_diff: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ratio: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    transfers: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ns: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skipped: Option<&'a str>,
}

#[derive(Serialize)]
struct JsonCell {
    algorithm: &'static str,
    n: usize,
    median_elapsed_ns: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    mean_ratio: Option<f64>,
}

#[derive(Serialize)]
struct JsonTable<'a> {
    rows: Vec<JsonRow<'a>>,
    summary: Vec<JsonCell>,
}

fn json_table(rows: &[Row], summary: &[Cell]) -> String {
    let rows = rows
        .iter()
        .map(|row| {
            let mut json = JsonRow {
                algorithm: row.algorithm.as_str(),
                n: row.n,
                dist: &row.dist,
                seed: row.seed,
                diff: None,
                opt_diff: None,
                ratio: None,
                transfers: None,
                elapsed_ns: None,
                skipped: None,
            };
            match &row.outcome {
                Outcome::Skipped { reason } => json.skipped = Some(reason),
                Outcome::Solved { diff, opt_diff, ratio, transfers, elapsed_ns } => {
                    json.diff = Some(diff.json());
                    json.opt_diff = Some(opt_diff.map(Num::json).unwrap_or(serde_json::Value::Null));
                    json.ratio = Some(ratio.map_or(serde_json::Value::Null, Into::into));
                    json.transfers = Some(*transfers);
                    json.elapsed_ns = Some(*elapsed_ns);
                }
            }
            json
        })
        .collect();
    let summary = summary
        .iter()
        .map(|cell| JsonCell {
            algorithm: cell.algorithm.as_str(),
            n: cell.n,
            median_elapsed_ns: cell.median_elapsed_ns,
            mean_ratio: cell.mean_ratio,
        })
        .collect();
    serde_json::to_string(&JsonTable { rows, summary }).expect("table serialization is infallible")
}
