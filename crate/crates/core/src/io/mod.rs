//! Instance text format, result JSON, and deterministic generation.
//!
//! Instances are plain text: one numeric literal per line, `#` starts a
//! comment (full-line or trailing), blank lines are skipped. All-integer
//! literals parse into integer mode; any float-shaped literal switches the
//! whole instance to float mode, and an explicit [`ModeChoice`] overrides
//! the inference. Results are a single JSON object with a fixed field
//! order (schema below); assignments read back from JSON either as a bare
//! array of side labels or as any object carrying an `"assignment"` array,
//! so a solve result can be piped straight into `check`.
//!
//! Result schema:
//!
//! ```json
//! {"algorithm": "v2", "n": 10, "mode": "int", "s1": 64, "s2": 65,
//!  "diff": 1, "max_sum": 65, "min_sum": 64, "locally_optimal": true,
//!  "transfers": 3, "elapsed_ns": 1234, "assignment": [1,1,2],
//!  "trace": [{"index": 9, "value": 29, "diff_after": 71}]}
//! ```
//!
//! `assignment` indices are 0-based positions in instance order; the
//! `trace` field appears only when a trace was requested; `assignment` is
//! `null` only for a dp run that had to drop reconstruction.

mod gen;

pub use gen::{generate, DistParseError, Distribution, GenError, GenSpec, SplitMix64};

use serde::Serialize;

use crate::instance::{AnyInstance, Instance, InstanceError};
use crate::num::Element;
use crate::partition::Partition;
use crate::report::AlgoReport;
use crate::trace::{SolveTrace, TraceStep};

/// Arithmetic mode selection for parsing: infer from literals or force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ModeChoice {
    #[default]
    Auto,
    Int,
    Float,
}

/// Instance text rejections. Line numbers are 1-based.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed numeric literal `{token}`")]
    Malformed { line: usize, token: String },
    #[error("line {line}: integer literal `{token}` does not fit 128 bits")]
    IntOutOfRange { line: usize, token: String },
    #[error("line {line}: literal `{token}` is not finite")]
    NonFinite { line: usize, token: String },
    #[error("no values found")]
    Empty,
    #[error("twice the sum of absolute values overflows the arithmetic")]
    Overflow,
}

fn is_int_literal(token: &str) -> bool {
    let digits = token.strip_prefix(['+', '-']).unwrap_or(token);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

/// Parses instance text. Values keep file order, so original indices are
/// line order among the value-bearing lines.
pub fn parse_instance(text: &str, mode: ModeChoice) -> Result<AnyInstance, ParseError> {
    let mut tokens: Vec<(usize, &str)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("").trim();
        if !content.is_empty() {
            tokens.push((idx + 1, content));
        }
    }
    if tokens.is_empty() {
        return Err(ParseError::Empty);
    }

    let as_int = match mode {
        ModeChoice::Int => true,
        ModeChoice::Float => false,
        ModeChoice::Auto => tokens.iter().all(|(_, t)| is_int_literal(t)),
    };

    if as_int {
        let mut values = Vec::with_capacity(tokens.len());
        for &(line, token) in &tokens {
            if !is_int_literal(token) {
                return Err(ParseError::Malformed { line, token: token.to_string() });
            }
            let v: i128 = token.parse().map_err(|_| ParseError::IntOutOfRange {
                line,
                token: token.to_string(),
            })?;
            values.push(v);
        }
        Instance::new(values).map(AnyInstance::Int).map_err(|e| match e {
            InstanceError::Overflow => ParseError::Overflow,
            InstanceError::Empty | InstanceError::NonFinite { .. } => {
                unreachable!("nonempty finite integers")
            }
        })
    } else {
        let mut values = Vec::with_capacity(tokens.len());
        for &(line, token) in &tokens {
            let v: f64 = token.parse().map_err(|_| ParseError::Malformed {
                line,
                token: token.to_string(),
            })?;
            if !v.is_finite() {
                return Err(ParseError::NonFinite { line, token: token.to_string() });
            }
            values.push(v);
        }
        Instance::new(values).map(AnyInstance::Float).map_err(|e| match e {
            InstanceError::Overflow => ParseError::Overflow,
            InstanceError::Empty | InstanceError::NonFinite { .. } => {
                unreachable!("nonempty finite floats")
            }
        })
    }
}

/// Renders an instance in the text format, one value per line. Integer
/// values print plainly; float values keep a float marker (`4.0`, `1e300`)
/// so a round-trip re-infers the same mode.
pub fn serialize_instance(instance: &AnyInstance) -> String {
    fn render<T: Element>(instance: &Instance<T>) -> String {
        let mut out = String::new();
        for &v in instance.values() {
            out.push_str(&v.render());
            out.push('\n');
        }
        out
    }
    match instance {
        AnyInstance::Int(i) => render(i),
        AnyInstance::Float(f) => render(f),
    }
}

/// Assignment JSON rejections.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AssignmentParseError {
    #[error("invalid assignment JSON: {0}")]
    Json(String),
    #[error("assignment JSON must be an array of side labels or an object with an `assignment` array")]
    Shape,
    #[error("assignment entry {index} is not an integer")]
    NotAnInteger { index: usize },
}

/// Reads a side assignment from JSON: either a bare `[1,2,...]` array or
/// any object with an `"assignment"` array (such as a solve result).
/// Side values are returned raw; range checking is the job of
/// [`check_partition`](crate::check_partition).
pub fn parse_assignment(text: &str) -> Result<Vec<i64>, AssignmentParseError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| AssignmentParseError::Json(e.to_string()))?;
    let array = match &value {
        serde_json::Value::Array(a) => a,
        serde_json::Value::Object(o) => match o.get("assignment") {
            Some(serde_json::Value::Array(a)) => a,
            _ => return Err(AssignmentParseError::Shape),
        },
        _ => return Err(AssignmentParseError::Shape),
    };
    array
        .iter()
        .enumerate()
        .map(|(index, v)| v.as_i64().ok_or(AssignmentParseError::NotAnInteger { index }))
        .collect()
}

#[derive(Serialize)]
struct ResultDoc<'a, T: Element> {
    algorithm: &'static str,
    n: usize,
    mode: &'static str,
    s1: T,
    s2: T,
    diff: T,
    max_sum: T,
    min_sum: T,
    locally_optimal: bool,
    transfers: usize,
    elapsed_ns: u64,
    assignment: Option<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<&'a [TraceStep<T>]>,
}

/// Renders one run as the result JSON object. Field order is fixed by the
/// schema; integers stay integers and floats use the shortest decimal that
/// round-trips. Without a partition (dp diff-only) the recovered sums
/// stand in for `s1`/`s2` and `assignment` is `null`.
pub fn serialize_result<T: Element>(
    report: &AlgoReport<T>,
    n: usize,
    partition: Option<&Partition<T>>,
    trace: Option<&SolveTrace<T>>,
) -> String {
    let (s1, s2) = match partition {
        Some(p) => (p.s1(), p.s2()),
        None => (report.max_sum, report.min_sum),
    };
    let doc = ResultDoc {
        algorithm: report.algorithm.as_str(),
        n,
        mode: T::MODE.as_str(),
        s1,
        s2,
        diff: report.diff,
        max_sum: report.max_sum,
        min_sum: report.min_sum,
        locally_optimal: report.locally_optimal,
        transfers: report.transfers,
        elapsed_ns: u64::try_from(report.elapsed.as_nanos()).unwrap_or(u64::MAX),
        assignment: partition.map(|p| p.sides().iter().map(|s| s.as_num()).collect()),
        trace: trace.map(|t| t.steps.as_slice()),
    };
    serde_json::to_string(&doc).expect("result serialization is infallible")
}

/// Verification summary emitted by the `check` command.
#[derive(Serialize)]
pub struct CheckDoc<T> {
    pub n: usize,
    pub mode: &'static str,
    pub s1: T,
    pub s2: T,
    pub diff: T,
    pub locally_optimal: bool,
    pub violations: Vec<usize>,
}

pub fn serialize_check<T: Element>(doc: &CheckDoc<T>) -> String {
    serde_json::to_string(doc).expect("check serialization is infallible")
}
