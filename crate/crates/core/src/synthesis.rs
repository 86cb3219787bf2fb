//! Verdicts shared by the LP and combinatorial engines.

use std::fmt;

use crate::analysis::VariableOrder;
use crate::combinatorial::interval::{DegreeInterval, ExtInt};
use crate::lpb::Lpb;

/// Result of a synthesis attempt.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SynthesisResult {
    /// An LPB over the original variable numbering.
    Success(Synthesized),
    /// A proof that no LPB exists.
    NotThreshold(Rejection),
    /// The engine gave up; the input may or may not be threshold.
    Unknown(DeadEnd),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Synthesized {
    pub lpb: Lpb,
    /// Admissible degree interval `(s, b]` (combinatorial engines only).
    pub interval: Option<DegreeInterval>,
    /// Order used internally; position `k` holds original variable `order.original(k)`.
    pub order: VariableOrder,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rejection {
    /// The swap test found a pair of variables that cannot be ordered.
    Regularity,
    /// The extremal-point linear program has no solution.
    Infeasible,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::Regularity => write!(f, "regularity"),
            Rejection::Infeasible => write!(f, "infeasible linear program"),
        }
    }
}

/// Where the combinatorial search stopped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeadEnd {
    /// 1-based index (in the internal order) of the coefficient that could
    /// not be chosen; this is also the table column of its successors.
    pub column: usize,
    /// Open bounds `lower < a < upper` that admitted no natural number.
    pub lower: ExtInt,
    pub upper: ExtInt,
    /// Coefficients fixed before the dead end, as `(index, value)` in the
    /// internal order, rightmost first.
    pub chosen: Vec<(usize, i64)>,
    /// True when the search stopped on its step budget rather than a dead end.
    pub budget_exhausted: bool,
}

impl fmt::Display for DeadEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.budget_exhausted {
            write!(f, "step budget exhausted; last dead end ")?;
        }
        write!(
            f,
            "column {}: empty interval ({},{})",
            self.column, self.lower, self.upper
        )
    }
}

/// Verdict tag without payload.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Success,
    NotThreshold,
    Unknown,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Success => "success",
            Outcome::NotThreshold => "not_threshold",
            Outcome::Unknown => "unknown",
        })
    }
}

impl SynthesisResult {
    pub fn outcome(&self) -> Outcome {
        match self {
            SynthesisResult::Success(_) => Outcome::Success,
            SynthesisResult::NotThreshold(_) => Outcome::NotThreshold,
            SynthesisResult::Unknown(_) => Outcome::Unknown,
        }
    }

    pub fn lpb(&self) -> Option<&Lpb> {
        match self {
            SynthesisResult::Success(s) => Some(&s.lpb),
            _ => None,
        }
    }

    pub fn is_success(&self) -> bool {
        matches!(self, SynthesisResult::Success(_))
    }
}
