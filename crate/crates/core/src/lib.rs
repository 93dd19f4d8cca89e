//! Two-way number set partitioning.
//!
//! Given a multiset of numbers, split it into two sides so that the two side
//! sums are as close as possible. This crate provides:
//!
//! * two fast solvers ([`solve_v1`], [`solve_v2`]) that guarantee *local
//!   optimality*: no single element can switch sides and strictly shrink the
//!   sum gap. Both run in `O(N log N)` time and `O(N)` space and handle
//!   signed and floating point inputs;
//! * classic baselines for comparison and as exact oracles on small inputs:
//!   largest-first greedy, largest-two differencing, a pseudo-polynomial
//!   subset-sum table, meet-in-the-middle enumeration, and plain brute force;
//! * instance tooling: a line-oriented text format, a deterministic instance
//!   generator, and a JSON result schema ([`io`]).
//!
//! # Example
//!
//! ```
//! use setpart::{Instance, solve_v2, objective};
//!
//! let inst = Instance::new(vec![2i128, 3, 5, 7, 11, 13, 17, 19, 23, 29]).unwrap();
//! let (partition, trace) = solve_v2(&inst);
//! let obj = objective(&partition);
//! assert_eq!(obj.diff, 1);
//! assert_eq!(trace.steps.len(), 3);
//! ```
//!
//! # Arithmetic modes
//!
//! Instances are generic over the element type and come in two concrete
//! modes: integer ([`IntInstance`], `i128` throughout, every intermediate
//! quantity exact) and float ([`FloatInstance`], `f64` throughout, fixed
//! summation order, no epsilon comparisons). Construction rejects inputs
//! whose totals could overflow the arithmetic, so the solvers and checkers
//! never need to. See [`Element`] for the exact contract.

mod instance;
mod num;
mod partition;
mod report;
mod run;
mod trace;

pub mod baselines;
pub mod io;
pub mod solvers;

pub use instance::{AnyInstance, FloatInstance, Instance, InstanceError, IntInstance};
pub use num::{Element, Mode};
pub use partition::{
    check_partition, local_optimality_violations, objective, partition_sums, sides_from_raw,
    AssignmentError, Objective, Partition, Side,
};
pub use report::{AlgoReport, Algorithm};
pub use run::{
    run, run_on_float, run_on_int, AnyRunResult, Caps, RunError, RunResult, DEFAULT_BF_CAP,
    DEFAULT_DP_BUDGET_BITS, DEFAULT_HS_CAP,
};
pub use solvers::{solve_v1, solve_v2};
pub use trace::{SolveTrace, StopReason, TraceStep};
