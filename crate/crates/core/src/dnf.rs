//! Positive DNFs over `x_1..x_m`.
//!
//! A [`Dnf`] is a set of clauses, each clause a set of variables stored as a
//! bit mask. Constant true is the single empty clause, constant false the
//! empty clause set. [`Dnf::normalize`] removes duplicates and absorbed
//! clauses, which for positive DNFs yields the unique prime irredundant form.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::point::Point;

/// Largest supported number of variables (clauses and points are `u64` masks).
pub const MAX_VARS: usize = 64;

/// A conjunction of positive literals.
///
/// Clauses order by size first and then lexicographically by their sorted
/// variable lists, which is the canonical clause order of a normalized DNF.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Clause(u64);

impl Clause {
    pub const EMPTY: Clause = Clause(0);

    pub fn from_mask(mask: u64) -> Self {
        Clause(mask)
    }

    /// Builds a clause from 1-based variable indices.
    pub fn from_vars<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        Clause(vars.into_iter().fold(0, |acc, v| {
            assert!((1..=MAX_VARS).contains(&v), "variable {v} out of range");
            acc | 1 << (v - 1)
        }))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, var: usize) -> bool {
        self.0 >> (var - 1) & 1 == 1
    }

    pub fn is_subset(self, other: Clause) -> bool {
        self.0 & !other.0 == 0
    }

    /// 1-based variables in ascending order.
    pub fn vars(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let v = rest.trailing_zeros() as usize + 1;
            rest &= rest - 1;
            Some(v)
        })
    }

    pub fn highest_var(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }
}

impl Ord for Clause {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // the lowest differing variable belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Clause {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vars()).finish()
    }
}

/// A positive DNF in `num_vars` variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dnf {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl Dnf {
    /// Creates a DNF from clauses exactly as given (no normalization).
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<Self> {
        if num_vars > MAX_VARS {
            return Err(Error::TooManyVars {
                num_vars,
                limit: MAX_VARS,
            });
        }
        for c in &clauses {
            if let Some(v) = c.highest_var().filter(|&v| v > num_vars) {
                return Err(Error::VarOutOfRange { var: v, num_vars });
            }
        }
        Ok(Self { num_vars, clauses })
    }

    /// Convenience constructor from 1-based index lists.
    pub fn from_clauses<C: AsRef<[usize]>>(num_vars: usize, clauses: &[C]) -> Result<Self> {
        for c in clauses {
            for &v in c.as_ref() {
                if v == 0 || v > num_vars {
                    return Err(Error::VarOutOfRange { var: v, num_vars });
                }
            }
        }
        Self::new(
            num_vars,
            clauses
                .iter()
                .map(|c| Clause::from_vars(c.as_ref().iter().copied()))
                .collect(),
        )
    }

    pub fn constant_true(num_vars: usize) -> Self {
        Self {
            num_vars,
            clauses: vec![Clause::EMPTY],
        }
    }

    pub fn constant_false(num_vars: usize) -> Self {
        Self {
            num_vars,
            clauses: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn is_false(&self) -> bool {
        self.clauses.is_empty()
    }

    /// True if some clause is empty (the DNF is a tautology).
    pub fn is_true(&self) -> bool {
        self.clauses.iter().any(|c| c.is_empty())
    }

    pub fn is_constant(&self) -> bool {
        self.is_false() || self.is_true()
    }

    /// Total number of literal occurrences.
    pub fn literal_count(&self) -> usize {
        self.clauses.iter().map(|c| c.len()).sum()
    }

    /// Duplicate- and absorption-free form with clauses in canonical order.
    pub fn normalize(&self) -> Dnf {
        normalize_clauses(self.num_vars, self.clauses.clone())
    }

    /// True if the clause list is already in normalized canonical form.
    pub fn is_normalized(&self) -> bool {
        self.clauses.windows(2).all(|w| w[0] < w[1])
            && self
                .clauses
                .iter()
                .enumerate()
                .all(|(i, c)| self.clauses[..i].iter().all(|d| !d.is_subset(*c)))
    }

    pub fn eval(&self, point: &Point) -> Result<bool> {
        if point.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: point.len(),
            });
        }
        Ok(self.eval_mask(point.mask()))
    }

    pub(crate) fn eval_mask(&self, mask: u64) -> bool {
        self.clauses.iter().any(|c| c.mask() & !mask == 0)
    }

    /// Renames every variable through `map` (1-based to 1-based) and normalizes.
    pub fn rename(&self, map: impl Fn(usize) -> usize) -> Dnf {
        let clauses = self
            .clauses
            .iter()
            .map(|c| Clause::from_vars(c.vars().map(&map)))
            .collect();
        normalize_clauses(self.num_vars, clauses)
    }

    /// Exchanges variables `i` and `j` in every clause.
    pub fn swap_vars(&self, i: usize, j: usize) -> Dnf {
        self.rename(|v| {
            if v == i {
                j
            } else if v == j {
                i
            } else {
                v
            }
        })
    }

    /// Human-readable formula such as `x1x2 | x3`, `true` or `false`.
    pub fn formula(&self) -> String {
        if self.is_false() {
            return "false".into();
        }
        if self.is_true() {
            return "true".into();
        }
        self.clauses
            .iter()
            .map(|c| c.vars().map(|v| format!("x{v}")).collect::<String>())
            .collect::<Vec<_>>()
            .join(" | ")
    }

    /// Parses the DNF text format; the result is not normalized.
    pub fn parse(text: &str) -> Result<Dnf> {
        let mut num_vars = None;
        let mut clauses = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some(m) = num_vars else {
                num_vars = Some(parse_header(line, line_no)?);
                continue;
            };
            clauses.push(parse_clause(line, line_no, m)?);
        }
        let num_vars = num_vars.ok_or_else(|| Error::Syntax {
            line: 0,
            message: "missing header `p dnf <m>`".into(),
        })?;
        Dnf::new(num_vars, clauses)
    }
}

fn parse_header(line: &str, line_no: usize) -> Result<usize> {
    let syntax = |message: String| Error::Syntax {
        line: line_no,
        message,
    };
    let tokens: Vec<&str> = line.split_whitespace().collect();
    match tokens.as_slice() {
        ["p", "dnf", m] => {
            let m: usize = m
                .parse()
                .map_err(|_| syntax(format!("invalid variable count `{m}`")))?;
            if m > MAX_VARS {
                return Err(Error::TooManyVars {
                    num_vars: m,
                    limit: MAX_VARS,
                });
            }
            Ok(m)
        }
        _ => Err(syntax(format!("expected `p dnf <m>`, found `{line}`"))),
    }
}

fn parse_clause(line: &str, line_no: usize, num_vars: usize) -> Result<Clause> {
    let syntax = |message: String| Error::Syntax {
        line: line_no,
        message,
    };
    let mut vars = Vec::new();
    let mut terminated = false;
    for tok in line.split_whitespace() {
        if terminated {
            return Err(syntax(format!("unexpected `{tok}` after terminating 0")));
        }
        let value: i64 = tok
            .parse()
            .map_err(|_| syntax(format!("invalid literal `{tok}`")))?;
        match value {
            0 => terminated = true,
            v if v < 0 => {
                return Err(Error::NegativeLiteral {
                    line: line_no,
                    var: v.unsigned_abs() as usize,
                })
            }
            v => {
                let v = v as usize;
                if v > num_vars {
                    return Err(Error::VarOutOfRange { var: v, num_vars });
                }
                vars.push(v);
            }
        }
    }
    if !terminated {
        return Err(syntax("clause not terminated by 0".into()));
    }
    Ok(Clause::from_vars(vars))
}

pub(crate) fn normalize_clauses(num_vars: usize, mut clauses: Vec<Clause>) -> Dnf {
    if clauses.iter().any(|c| c.is_empty()) {
        return Dnf::constant_true(num_vars);
    }
    clauses.sort_unstable();
    clauses.dedup();
    let mut kept: Vec<Clause> = Vec::with_capacity(clauses.len());
    for c in clauses {
        // sorted by size, so any absorbing clause was seen already
        if !kept.iter().any(|k| k.is_subset(c)) {
            kept.push(c);
        }
    }
    Dnf {
        num_vars,
        clauses: kept,
    }
}

impl FromStr for Dnf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Dnf::parse(s)
    }
}

/// Writes the DNF text format.
impl fmt::Display for Dnf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p dnf {}", self.num_vars)?;
        for c in &self.clauses {
            for v in c.vars() {
                write!(f, "{v} ")?;
            }
            writeln!(f, "0")?;
        }
        Ok(())
    }
}
