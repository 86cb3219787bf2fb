//! Linear pseudo-Boolean constraints `a_1 x_1 + ... + a_m x_m >= d`.

use std::fmt;
use std::str::FromStr;

use crate::dnf::{normalize_clauses, Clause, Dnf, MAX_VARS};
use crate::error::{Error, Result};
use crate::point::Point;

/// Default bound on the number of clauses [`Lpb::to_dnf`] may produce.
pub const DEFAULT_CLAUSE_CAP: usize = 1 << 20;

/// A linear pseudo-Boolean constraint with non-negative integer coefficients.
/// A degree `<= 0` makes the constraint a tautology.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lpb {
    coefficients: Vec<u64>,
    degree: i64,
}

impl Lpb {
    pub fn new(coefficients: Vec<u64>, degree: i64) -> Result<Self> {
        if coefficients.len() > MAX_VARS {
            return Err(Error::TooManyVars {
                num_vars: coefficients.len(),
                limit: MAX_VARS,
            });
        }
        Ok(Self {
            coefficients,
            degree,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn with_degree(&self, degree: i64) -> Lpb {
        Lpb {
            coefficients: self.coefficients.clone(),
            degree,
        }
    }

    pub fn coefficient_sum(&self) -> i128 {
        self.coefficients.iter().map(|&a| a as i128).sum()
    }

    pub fn eval(&self, point: &Point) -> Result<bool> {
        if point.len() != self.num_vars() {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars(),
                found: point.len(),
            });
        }
        Ok(self.eval_mask(point.mask()))
    }

    pub(crate) fn eval_mask(&self, mask: u64) -> bool {
        let sum: i128 = Clause::from_mask(mask)
            .vars()
            .map(|v| self.coefficients[v - 1] as i128)
            .sum();
        sum >= self.degree as i128
    }

    /// Prime irredundant DNF of the represented function, using the default
    /// clause cap.
    pub fn to_dnf(&self) -> Result<Dnf> {
        self.to_dnf_capped(DEFAULT_CLAUSE_CAP)
    }

    /// Enumerates the minimal true points by a depth-first include/exclude
    /// branch over the variables in descending coefficient order. A branch
    /// stops as soon as its sum reaches the degree (supersets are not
    /// minimal) or when the remaining coefficients cannot reach it.
    pub fn to_dnf_capped(&self, cap: usize) -> Result<Dnf> {
        let m = self.num_vars();
        let degree = self.degree as i128;
        if degree <= 0 {
            return Ok(Dnf::constant_true(m));
        }
        if self.coefficient_sum() < degree {
            return Ok(Dnf::constant_false(m));
        }
        let mut order: Vec<usize> = (0..m).filter(|&i| self.coefficients[i] > 0).collect();
        order.sort_by(|&i, &j| {
            self.coefficients[j]
                .cmp(&self.coefficients[i])
                .then(i.cmp(&j))
        });
        let weights: Vec<i128> = order
            .iter()
            .map(|&i| self.coefficients[i] as i128)
            .collect();
        let mut suffix = vec![0i128; weights.len() + 1];
        for i in (0..weights.len()).rev() {
            suffix[i] = suffix[i + 1] + weights[i];
        }

        let mut search = Expansion {
            order: &order,
            weights: &weights,
            suffix: &suffix,
            degree,
            cap,
            found: Vec::new(),
        };
        search.branch(0, 0, 0)?;
        Ok(normalize_clauses(m, search.found))
    }
}

struct Expansion<'a> {
    order: &'a [usize],
    weights: &'a [i128],
    suffix: &'a [i128],
    degree: i128,
    cap: usize,
    found: Vec<Clause>,
}

impl Expansion<'_> {
    fn branch(&mut self, pos: usize, sum: i128, mask: u64) -> Result<()> {
        if pos == self.order.len() || sum + self.suffix[pos] < self.degree {
            return Ok(());
        }
        let with = sum + self.weights[pos];
        let bit = 1u64 << self.order[pos];
        if with >= self.degree {
            // `sum` is below the degree on every branch and the new weight is
            // the smallest in the set, so the set is a minimal true point
            if self.found.len() == self.cap {
                return Err(Error::ClauseCap { cap: self.cap });
            }
            self.found.push(Clause::from_mask(mask | bit));
        } else {
            self.branch(pos + 1, with, mask | bit)?;
        }
        self.branch(pos + 1, sum, mask)
    }
}

impl fmt::Display for Lpb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.coefficients {
            write!(f, "{a} ")?;
        }
        write!(f, ">= {}", self.degree)
    }
}

/// Parses `"<a_1> ... <a_m> >= <d>"`.
impl FromStr for Lpb {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let line = s
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .unwrap_or("");
        let syntax = |message: String| Error::Syntax { line: 1, message };
        let (lhs, rhs) = line
            .split_once(">=")
            .ok_or_else(|| syntax(format!("expected `<a_1> ... <a_m> >= <d>`, found `{line}`")))?;
        let coefficients = lhs
            .split_whitespace()
            .map(|t| {
                t.parse::<u64>()
                    .map_err(|_| syntax(format!("invalid coefficient `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        let rhs = rhs.trim();
        let degree = rhs
            .parse::<i64>()
            .map_err(|_| syntax(format!("invalid degree `{rhs}`")))?;
        Lpb::new(coefficients, degree)
    }
}
