use std::time::Instant;

use crate::baselines::{brute_force, dp_optimal, greedy, hs, kk};
use crate::instance::{AnyInstance, FloatInstance, Instance, IntInstance};
use crate::num::Element;
use crate::partition::{local_optimality_violations, objective, Partition};
use crate::report::{AlgoReport, Algorithm};
use crate::solvers::{solve_v1, solve_v2};
use crate::trace::SolveTrace;

pub const DEFAULT_BF_CAP: usize = 24;
pub const DEFAULT_HS_CAP: usize = 32;
pub const DEFAULT_DP_BUDGET_BITS: u64 = 1 << 28;

/// Resource limits for the exact baselines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub bf_cap: usize,
    pub hs_cap: usize,
    pub dp_budget_bits: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            bf_cap: DEFAULT_BF_CAP,
            hs_cap: DEFAULT_HS_CAP,
            dp_budget_bits: DEFAULT_DP_BUDGET_BITS,
        }
    }
}

/// Why an algorithm could not run on this instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum RunError {
    #[error("{algorithm} requires an integer-mode instance")]
    NonIntegerInput { algorithm: Algorithm },
    #[error("{algorithm}: instance has {n} elements, cap is {cap}")]
    CapExceeded { algorithm: Algorithm, n: usize, cap: usize },
    #[error("dp: subset-sum table needs {needed_bits} bits, budget is {budget_bits}")]
    BudgetExceeded { needed_bits: u128, budget_bits: u64 },
}

/// One algorithm run: the report plus whatever artifacts the algorithm
/// produced. `partition` is absent only for a dp run that fit the diff
/// row but not the reconstruction table; `trace` only exists for the
/// iterative solvers.
#[derive(Debug, Clone)]
pub struct RunResult<T> {
    pub report: AlgoReport<T>,
    pub partition: Option<Partition<T>>,
    pub trace: Option<SolveTrace<T>>,
}

/// Result of [`run`], tagged by the instance's arithmetic mode.
#[derive(Debug, Clone)]
pub enum AnyRunResult {
    Int(RunResult<i128>),
    Float(RunResult<f64>),
}

fn finish<T: Element>(
    algorithm: Algorithm,
    instance: &Instance<T>,
    partition: Option<Partition<T>>,
    trace: Option<SolveTrace<T>>,
    diff_only: Option<T>,
    started: Instant,
) -> RunResult<T> {
    let elapsed = started.elapsed();
    let transfers = trace.as_ref().map_or(0, |t| t.steps.len());
    let report = match (&partition, diff_only) {
        (Some(p), _) => {
            let o = objective(p);
            AlgoReport {
                algorithm,
                diff: o.diff,
                max_sum: o.max_sum,
                min_sum: o.min_sum,
                locally_optimal: local_optimality_violations(instance, p).is_empty(),
                transfers,
                elapsed,
            }
        }
        (None, Some(diff)) => {
            // No assignment to check, but the diff is the exact optimum,
            // and nothing improves on an optimal gap. The two sums are
            // recovered from total and gap; total and diff always share
            // parity (flipping a value's side changes the gap by twice
            // the value), so the halving is exact.
            let total = instance.total();
            AlgoReport {
                algorithm,
                diff,
                max_sum: (total + diff).halve(),
                min_sum: (total - diff).halve(),
                locally_optimal: true,
                transfers,
                elapsed,
            }
        }
        (None, None) => unreachable!("every run yields a partition or a diff"),
    };
    RunResult { report, partition, trace }
}

pub fn run_on_int(
    algorithm: Algorithm,
    instance: &IntInstance,
    caps: &Caps,
) -> Result<RunResult<i128>, RunError> {
    let started = Instant::now();
    match algorithm {
        Algorithm::V1 => {
            let (p, t) = solve_v1(instance);
            Ok(finish(algorithm, instance, Some(p), Some(t), None, started))
        }
        Algorithm::V2 => {
            let (p, t) = solve_v2(instance);
            Ok(finish(algorithm, instance, Some(p), Some(t), None, started))
        }
        Algorithm::Greedy => {
            let p = greedy(instance);
            Ok(finish(algorithm, instance, Some(p), None, None, started))
        }
        Algorithm::Kk => {
            let (p, _residual) = kk(instance);
            Ok(finish(algorithm, instance, Some(p), None, None, started))
        }
        Algorithm::Dp => {
            let r = dp_optimal(instance, caps.dp_budget_bits).map_err(|e| {
                RunError::BudgetExceeded {
                    needed_bits: e.needed_bits,
                    budget_bits: e.budget_bits,
                }
            })?;
            let diff_only = r.partition.is_none().then_some(r.diff);
            Ok(finish(algorithm, instance, r.partition, None, diff_only, started))
        }
        Algorithm::Hs => {
            let (_diff, p) = hs(instance, caps.hs_cap).map_err(|e| RunError::CapExceeded {
                algorithm,
                n: e.n,
                cap: e.cap,
            })?;
            Ok(finish(algorithm, instance, Some(p), None, None, started))
        }
        Algorithm::Bf => {
            let (_diff, p) =
                brute_force(instance, caps.bf_cap).map_err(|e| RunError::CapExceeded {
                    algorithm,
                    n: e.n,
                    cap: e.cap,
                })?;
            Ok(finish(algorithm, instance, Some(p), None, None, started))
        }
    }
}

pub fn run_on_float(
    algorithm: Algorithm,
    instance: &FloatInstance,
    caps: &Caps,
) -> Result<RunResult<f64>, RunError> {
    let started = Instant::now();
    match algorithm {
        Algorithm::V1 => {
            let (p, t) = solve_v1(instance);
            Ok(finish(algorithm, instance, Some(p), Some(t), None, started))
        }
        Algorithm::V2 => {
            let (p, t) = solve_v2(instance);
            Ok(finish(algorithm, instance, Some(p), Some(t), None, started))
        }
        Algorithm::Greedy => {
            let p = greedy(instance);
            Ok(finish(algorithm, instance, Some(p), None, None, started))
        }
        Algorithm::Kk => {
            let (p, _residual) = kk(instance);
            Ok(finish(algorithm, instance, Some(p), None, None, started))
        }
        Algorithm::Dp | Algorithm::Hs => Err(RunError::NonIntegerInput { algorithm }),
        Algorithm::Bf => {
            let (_diff, p) =
                brute_force(instance, caps.bf_cap).map_err(|e| RunError::CapExceeded {
                    algorithm,
                    n: e.n,
                    cap: e.cap,
                })?;
            Ok(finish(algorithm, instance, Some(p), None, None, started))
        }
    }
}

/// Runs an algorithm on an instance of either mode.
pub fn run(
    algorithm: Algorithm,
    instance: &AnyInstance,
    caps: &Caps,
) -> Result<AnyRunResult, RunError> {
    match instance {
        AnyInstance::Int(i) => run_on_int(algorithm, i, caps).map(AnyRunResult::Int),
        AnyInstance::Float(f) => run_on_float(algorithm, f, caps).map(AnyRunResult::Float),
    }
}
