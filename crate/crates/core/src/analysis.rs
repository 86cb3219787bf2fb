//! Occurrence patterns, the induced variable order, symmetry and regularity.
//!
//! The occurrence pattern of a variable counts, for every clause size `j`,
//! how many clauses of size `j` contain it. Patterns compare
//! lexicographically, so a variable that occurs in more short clauses is
//! stronger. This is the row of the Winder matrix for that variable.

use std::cmp::Ordering;

use crate::dnf::Dnf;
use crate::error::{Error, Result};
use crate::lpb::Lpb;
use crate::oracle::Membership;
use crate::point::Point;

/// Clause-size counts `n_1..n_m` of one variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OccurrencePattern {
    counts: Vec<usize>,
}

impl OccurrencePattern {
    /// `counts[j - 1]` is the number of clauses of size `j` containing the variable.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

impl Ord for OccurrencePattern {
    fn cmp(&self, other: &Self) -> Ordering {
        self.counts.cmp(&other.counts)
    }
}

impl PartialOrd for OccurrencePattern {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Patterns of all variables in one pass; entry `v - 1` belongs to `x_v`.
pub fn occurrence_patterns(dnf: &Dnf) -> Vec<OccurrencePattern> {
    let m = dnf.num_vars();
    let mut counts = vec![vec![0usize; m]; m];
    for c in dnf.clauses() {
        let size = c.len();
        for v in c.vars() {
            counts[v - 1][size - 1] += 1;
        }
    }
    counts
        .into_iter()
        .map(|counts| OccurrencePattern { counts })
        .collect()
}

pub fn occurrence_pattern(dnf: &Dnf, var: usize) -> Result<OccurrencePattern> {
    check_var(dnf, var)?;
    let m = dnf.num_vars();
    let mut counts = vec![0usize; m];
    for c in dnf.clauses().iter().filter(|c| c.contains(var)) {
        counts[c.len() - 1] += 1;
    }
    Ok(OccurrencePattern { counts })
}

fn check_var(dnf: &Dnf, var: usize) -> Result<()> {
    if var == 0 || var > dnf.num_vars() {
        return Err(Error::VarOutOfRange {
            var,
            num_vars: dnf.num_vars(),
        });
    }
    Ok(())
}

/// A permutation of the variables. Position `k` (1-based) holds the
/// original variable `original(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableOrder {
    to_original: Vec<usize>,
    to_position: Vec<usize>,
}

impl VariableOrder {
    pub fn identity(num_vars: usize) -> Self {
        let seq: Vec<usize> = (1..=num_vars).collect();
        Self {
            to_original: seq.clone(),
            to_position: seq,
        }
    }

    /// Builds an order from the sequence of original variables, strongest first.
    pub fn from_sequence(sequence: Vec<usize>) -> Result<Self> {
        let m = sequence.len();
        let mut to_position = vec![0usize; m];
        for (k, &v) in sequence.iter().enumerate() {
            if v == 0 || v > m || to_position[v - 1] != 0 {
                return Err(Error::VarOutOfRange {
                    var: v,
                    num_vars: m,
                });
            }
            to_position[v - 1] = k + 1;
        }
        Ok(Self {
            to_original: sequence,
            to_position,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.to_original.len()
    }

    pub fn original(&self, position: usize) -> usize {
        self.to_original[position - 1]
    }

    pub fn position(&self, var: usize) -> usize {
        self.to_position[var - 1]
    }

    pub fn sequence(&self) -> &[usize] {
        &self.to_original
    }

    pub fn is_identity(&self) -> bool {
        self.to_original
            .iter()
            .enumerate()
            .all(|(k, &v)| v == k + 1)
    }

    pub fn inverse(&self) -> VariableOrder {
        Self {
            to_original: self.to_position.clone(),
            to_position: self.to_original.clone(),
        }
    }

    /// Renames original variables to their positions.
    pub fn renumber(&self, dnf: &Dnf) -> Dnf {
        dnf.rename(|v| self.position(v))
    }

    /// Maps a point over original variables to one over positions.
    pub fn renumber_point(&self, point: &Point) -> Point {
        let mask = (1..=point.len())
            .filter(|&v| point.get(v))
            .fold(0u64, |acc, v| acc | 1 << (self.position(v) - 1));
        Point::from_mask(mask, point.len())
    }

    /// Maps an LPB over positions back to the original variables.
    pub fn restore(&self, lpb: &Lpb) -> Lpb {
        let coefficients = (1..=self.num_vars())
            .map(|v| lpb.coefficients()[self.position(v) - 1])
            .collect();
        Lpb::new(coefficients, lpb.degree()).expect("same dimension")
    }
}

/// Variables sorted by descending occurrence pattern, ties by ascending index.
pub fn op_order(dnf: &Dnf) -> VariableOrder {
    let patterns = occurrence_patterns(dnf);
    let mut seq: Vec<usize> = (1..=dnf.num_vars()).collect();
    seq.sort_by(|&i, &j| patterns[j - 1].cmp(&patterns[i - 1]).then(i.cmp(&j)));
    VariableOrder::from_sequence(seq).expect("permutation")
}

/// True iff exchanging `i` and `j` maps the clause set onto itself.
pub fn symmetric(dnf: &Dnf, i: usize, j: usize) -> Result<bool> {
    check_var(dnf, i)?;
    check_var(dnf, j)?;
    if i == j {
        return Ok(true);
    }
    let normalized = dnf.normalize();
    Ok(normalized.swap_vars(i, j) == normalized)
}

/// Length of the longest run of variables at order positions
/// `start, start + 1, ...` that are pairwise symmetric with equal
/// occurrence patterns. Always at least 1.
pub fn symmetry_prefix(dnf: &Dnf, start: usize, order: &VariableOrder) -> Result<usize> {
    check_var(dnf, start)?;
    let normalized = dnf.normalize();
    let patterns = occurrence_patterns(&normalized);
    let first = order.original(start);
    let mut len = 1;
    while start + len <= dnf.num_vars() {
        let v = order.original(start + len);
        // symmetries form a group, so checking against `first` is enough
        if patterns[v - 1] != patterns[first - 1] || normalized.swap_vars(first, v) != normalized {
            break;
        }
        len += 1;
    }
    Ok(len)
}

/// Swap test: for every minimal true point `p` and every pair of order
/// positions `i < j` with `p` false at `i` and true at `j`, moving the 1 from
/// `j` to `i` must keep the point true.
pub fn regularity_check(dnf: &Dnf, order: &VariableOrder, mtps: &[Point]) -> bool {
    let oracle = Membership::new(dnf);
    let m = dnf.num_vars();
    mtps.iter().all(|p| {
        (1..=m).all(|i| {
            let vi = order.original(i);
            p.get(vi)
                || (i + 1..=m).all(|j| {
                    let vj = order.original(j);
                    !p.get(vj) || oracle.contains(p.with(vj, false).with(vi, true).mask())
                })
        })
    })
}
