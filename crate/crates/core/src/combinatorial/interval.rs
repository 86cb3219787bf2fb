//! Degree intervals `(s, b]` over the extended integers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

/// An integer or one of the two infinities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtInt {
    NegInf,
    Fin(i64),
    PosInf,
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Fin(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Fin(_))
    }

    /// Multiplies a finite value; infinities are fixed points.
    pub fn scale(self, factor: i64) -> Option<ExtInt> {
        match self {
            ExtInt::Fin(v) => v.checked_mul(factor).map(ExtInt::Fin),
            other => Some(other),
        }
    }

    /// Adds a finite offset; `None` on overflow.
    pub fn checked_add(self, offset: i64) -> Option<ExtInt> {
        match self {
            ExtInt::Fin(v) => v.checked_add(offset).map(ExtInt::Fin),
            other => Some(other),
        }
    }

    /// `self - other`, or `None` when undefined (same infinities) or on overflow.
    pub fn checked_sub(self, other: ExtInt) -> Option<ExtInt> {
        use ExtInt::*;
        match (self, other) {
            (Fin(a), Fin(b)) => a.checked_sub(b).map(Fin),
            (NegInf, NegInf) | (PosInf, PosInf) => None,
            (NegInf, _) | (_, PosInf) => Some(NegInf),
            (PosInf, _) | (_, NegInf) => Some(PosInf),
        }
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Fin(v)
    }
}

impl Ord for ExtInt {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtInt::*;
        match (self, other) {
            (Fin(a), Fin(b)) => a.cmp(b),
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
        }
    }
}

impl PartialOrd for ExtInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Panics on overflow; see [`ExtInt::checked_add`].
impl Add<i64> for ExtInt {
    type Output = ExtInt;
    fn add(self, rhs: i64) -> ExtInt {
        self.checked_add(rhs).expect("extended integer overflow")
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => f.write_str("-inf"),
            ExtInt::Fin(v) => write!(f, "{v}"),
            ExtInt::PosInf => f.write_str("inf"),
        }
    }
}

/// Half-open interval `(lower, upper]` of admissible degrees. Only
/// `lower < upper` is a valid interval; `lower` may be `-inf` and `upper`
/// may be `+inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DegreeInterval {
    pub lower: ExtInt,
    pub upper: ExtInt,
}

impl DegreeInterval {
    pub fn new(lower: ExtInt, upper: ExtInt) -> Self {
        Self { lower, upper }
    }

    pub fn is_empty(&self) -> bool {
        self.lower >= self.upper
    }

    pub fn contains(&self, degree: i64) -> bool {
        ExtInt::Fin(degree) > self.lower && ExtInt::Fin(degree) <= self.upper
    }

    /// Smallest integer degree in the interval. `None` only for empty or
    /// `(-inf, -inf]`-like intervals.
    pub fn least_degree(&self) -> Option<i64> {
        if self.is_empty() {
            return None;
        }
        match (self.lower, self.upper) {
            (ExtInt::Fin(s), _) => s.checked_add(1),
            (ExtInt::NegInf, ExtInt::Fin(b)) => Some(b),
            _ => None,
        }
    }

    pub fn scale(&self, factor: i64) -> Option<Self> {
        Some(Self {
            lower: self.lower.scale(factor)?,
            upper: self.upper.scale(factor)?,
        })
    }
}

impl fmt::Display for DegreeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}]", self.lower, self.upper)
    }
}
