//! Command-line front end for the partitioning toolkit: solve instances,
//! verify assignments, generate seeded test data, and benchmark the
//! solvers against the exact baselines.
//!
//! Exit codes: 0 success (and verified, when verification was requested),
//! 1 verification failed, 2 usage error, 3 input error, 4 resource cap
//! exceeded. Every failure prints a one-line diagnostic on stderr.

mod bench;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use setpart::io::{
    generate, parse_assignment, parse_instance, serialize_check, serialize_instance,
    serialize_result, CheckDoc, Distribution, GenSpec, ModeChoice,
};
use setpart::{
    local_optimality_violations, objective, run, Algorithm, AnyInstance, AnyRunResult, Caps,
    Element, Instance, Partition, RunError, RunResult, DEFAULT_BF_CAP, DEFAULT_DP_BUDGET_BITS,
    DEFAULT_HS_CAP,
};

#[derive(Parser)]
#[command(name = "setpart", version, about = "Two-way number set partitioning toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one algorithm on an instance and print the result JSON
    Solve(SolveArgs),
    /// Verify an assignment against an instance and report violations
    Check(CheckArgs),
    /// Generate an instance file from a seeded distribution
    Gen(GenArgs),
    /// Benchmark algorithms over a grid of sizes and seeds
    Bench(bench::BenchArgs),
    /// Run every algorithm on one instance, one row each
    Compare(bench::CompareArgs),
}

/// Where the instance comes from: a file, or the seeded generator.
#[derive(Args)]
struct SourceArgs {
    /// Instance file: one value per line, '#' starts a comment
    #[arg(long, value_name = "PATH", conflicts_with_all = ["n", "dist", "seed"])]
    input: Option<PathBuf>,

    /// Generate the instance instead: number of values
    #[arg(long, value_name = "COUNT", requires = "dist")]
    n: Option<usize>,

    /// Distribution tag, e.g. "uniform-int(1,100)" or "high-precision-real"
    #[arg(long, value_name = "TAG", value_parser = parse_dist, requires = "n")]
    dist: Option<Distribution>,

    /// Generator seed
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Arithmetic mode; "auto" infers int when every literal is an integer
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    mode: ModeArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Auto,
    Int,
    Float,
}

impl From<ModeArg> for ModeChoice {
    fn from(mode: ModeArg) -> Self {
        match mode {
            ModeArg::Auto => ModeChoice::Auto,
            ModeArg::Int => ModeChoice::Int,
            ModeArg::Float => ModeChoice::Float,
        }
    }
}

/// Size caps for the enumeration baselines; exceeding one is exit 4,
/// never a silent switch to another algorithm.
#[derive(Args)]
struct CapsArgs {
    /// Largest n brute force accepts
    #[arg(long, value_name = "N", default_value_t = DEFAULT_BF_CAP)]
    bf_cap: usize,

    /// Largest n the meet-in-the-middle search accepts
    #[arg(long, value_name = "N", default_value_t = DEFAULT_HS_CAP)]
    hs_cap: usize,

    /// Bit budget for the subset-sum reachability table
    #[arg(long, value_name = "BITS", default_value_t = DEFAULT_DP_BUDGET_BITS)]
    dp_budget_bits: u64,
}

impl CapsArgs {
    fn caps(&self) -> Caps {
        Caps {
            bf_cap: self.bf_cap,
            hs_cap: self.hs_cap,
            dp_budget_bits: self.dp_budget_bits,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    source: SourceArgs,

    /// Algorithm to run
    #[arg(long, value_parser = parse_alg)]
    alg: Algorithm,

    /// Include the transfer trace in the result JSON (v1 and v2 only)
    #[arg(long)]
    trace: bool,

    /// Re-verify local optimality and exit 1 if it does not hold
    #[arg(long)]
    check: bool,

    /// Write the output here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(flatten)]
    caps: CapsArgs,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    source: SourceArgs,

    /// Assignment JSON: a bare [1,2,...] array or a solve result object
    #[arg(long, value_name = "PATH")]
    assignment: PathBuf,

    /// Write the report here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// Number of values
    #[arg(long, value_name = "COUNT")]
    n: usize,

    /// Distribution tag, e.g. "mixed-sign-int(-50,50)"
    #[arg(long, value_name = "TAG", value_parser = parse_dist)]
    dist: Distribution,

    /// Generator seed
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Force the arithmetic mode of the emitted values
    #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
    mode: ModeArg,

    /// Write the instance here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

/// Failures after argument parsing, keyed by exit code. Usage errors are
/// clap's own and exit 2 before any of this runs.
enum CliError {
    /// Exit 1: a requested verification did not hold.
    Verify(String),
    /// Exit 3: unreadable or malformed input, or an invalid generator range.
    Input(String),
    /// Exit 4: a resource cap refused the run.
    Caps(String),
}

impl CliError {
    fn report(self) -> ExitCode {
        let (code, msg) = match self {
            CliError::Verify(m) => (1, format!("verification failed: {m}")),
            CliError::Input(m) => (3, format!("error: {m}")),
            CliError::Caps(m) => (4, format!("error: {m}")),
        };
        eprintln!("{msg}");
        ExitCode::from(code)
    }
}

fn main() -> ExitCode {
    match dispatch(&Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => err.report(),
    }
}

fn dispatch(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Check(args) => cmd_check(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Bench(args) => bench::cmd_bench(args),
        Command::Compare(args) => bench::cmd_compare(args),
    }
}

fn cmd_solve(args: &SolveArgs) -> Result<(), CliError> {
    let instance = load_instance(&args.source)?;
    let result = run(args.alg, &instance, &args.caps.caps()).map_err(run_error)?;
    let (json, locally_optimal) = match &result {
        AnyRunResult::Int(r) => solve_output(r, instance.len(), args.trace),
        AnyRunResult::Float(r) => solve_output(r, instance.len(), args.trace),
    };
    emit(args.out.as_deref(), &json)?;
    if args.check && !locally_optimal {
        return Err(CliError::Verify("result is not locally optimal".into()));
    }
    Ok(())
}

fn solve_output<T: Element>(result: &RunResult<T>, n: usize, want_trace: bool) -> (String, bool) {
    let trace = if want_trace { result.trace.as_ref() } else { None };
    let json = serialize_result(&result.report, n, result.partition.as_ref(), trace);
    (json, result.report.locally_optimal)
}

fn cmd_check(args: &CheckArgs) -> Result<(), CliError> {
    let instance = load_instance(&args.source)?;
    let raw = parse_assignment(&read_text(&args.assignment)?)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.assignment.display())))?;
    match &instance {
        AnyInstance::Int(inst) => check_assignment(inst, &raw, args.out.as_deref()),
        AnyInstance::Float(inst) => check_assignment(inst, &raw, args.out.as_deref()),
    }
}

fn check_assignment<T: Element>(
    instance: &Instance<T>,
    raw: &[i64],
    out: Option<&Path>,
) -> Result<(), CliError> {
    let partition = Partition::from_raw(instance, raw).map_err(|e| CliError::Input(e.to_string()))?;
    let violations = local_optimality_violations(instance, &partition);
    let doc = CheckDoc {
        n: instance.len(),
        mode: T::MODE.as_str(),
        s1: partition.s1(),
        s2: partition.s2(),
        diff: objective(&partition).diff,
        locally_optimal: violations.is_empty(),
        violations,
    };
    emit(out, &serialize_check(&doc))?;
    if doc.locally_optimal {
        Ok(())
    } else {
        Err(CliError::Verify(format!(
            "{} improving single-element transfers exist",
            doc.violations.len()
        )))
    }
}

fn cmd_gen(args: &GenArgs) -> Result<(), CliError> {
    let spec = GenSpec { n: args.n, dist: args.dist, seed: args.seed };
    let generated = generate(&spec).map_err(|e| CliError::Input(e.to_string()))?;
    let instance = apply_mode(generated, args.mode)?;
    let text = format!(
        "# n={} dist={} seed={}\n{}",
        args.n,
        args.dist,
        args.seed,
        serialize_instance(&instance)
    );
    emit(args.out.as_deref(), &text)
}

/// Reads or generates the instance named by the source flags.
fn load_instance(src: &SourceArgs) -> Result<AnyInstance, CliError> {
    if let Some(path) = &src.input {
        let text = read_text(path)?;
        return parse_instance(&text, src.mode.into())
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())));
    }
    let (Some(n), Some(dist)) = (src.n, src.dist) else {
        usage_error("an instance source is required: --input PATH, or --n COUNT --dist TAG")
    };
    let generated = generate(&GenSpec { n, dist, seed: src.seed })
        .map_err(|e| CliError::Input(e.to_string()))?;
    apply_mode(generated, src.mode)
}

fn apply_mode(instance: AnyInstance, mode: ModeArg) -> Result<AnyInstance, CliError> {
    match (mode, instance) {
        (ModeArg::Int, AnyInstance::Float(_)) => Err(CliError::Input(
            "generated instance is float-valued and cannot be forced to --mode int".into(),
        )),
        (ModeArg::Float, instance) => instance
            .into_float()
            .map(AnyInstance::Float)
            .map_err(|e| CliError::Input(e.to_string())),
        (_, instance) => Ok(instance),
    }
}

fn run_error(err: RunError) -> CliError {
    match err {
        RunError::NonIntegerInput { .. } => CliError::Input(err.to_string()),
        RunError::CapExceeded { .. } | RunError::BudgetExceeded { .. } => {
            CliError::Caps(err.to_string())
        }
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Writes `body` to the path or stdout, ensuring a trailing newline.
fn emit(out: Option<&Path>, body: &str) -> Result<(), CliError> {
    let text = if body.ends_with('\n') { body.to_string() } else { format!("{body}\n") };
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_alg(s: &str) -> Result<Algorithm, String> {
    s.parse()
}

fn parse_dist(s: &str) -> Result<Distribution, String> {
    s.parse::<Distribution>().map_err(|e| e.to_string())
}

/// Reports a post-parse usage problem the clap way and exits 2.
fn usage_error(msg: &str) -> ! {
    Cli::command().error(ErrorKind::MissingRequiredArgument, msg).exit()
}
