//! Minimal true points and maximal false points of positive DNFs.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::dnf::Dnf;
use crate::error::Result;
use crate::oracle::{Membership, TruthTable};
use crate::point::{full_mask, Point};

/// Minimal true and maximal false points, each in ascending mask order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalSets {
    pub mtps: Vec<Point>,
    pub mfps: Vec<Point>,
}

/// A candidate survived filtering but is not a maximal false point.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("maximal false point verification failed at {point}; the input is not regular in the given order")]
pub struct VerificationError {
    pub point: Point,
}

/// One point per clause of a normalized DNF: the clause's characteristic vector.
pub fn minimal_true_points(dnf: &Dnf) -> Vec<Point> {
    let mut pts: Vec<Point> = dnf
        .clauses()
        .iter()
        .map(|c| Point::from_mask(c.mask(), dnf.num_vars()))
        .collect();
    pts.sort_unstable();
    pts
}

/// Maximal false points of a DNF that is regular in index order.
///
/// Candidates are `(p_1, .., p_{i-1}, 0, 1, .., 1)` for every minimal true
/// point `p` and every `i` with `p_i = 1`. False candidates that no other
/// false candidate strictly contains are kept, and each survivor must pass
/// the neighbour test (every 0 -> 1 flip is true).
pub fn maximal_false_points(dnf: &Dnf, mtps: &[Point]) -> Result<Vec<Point>, VerificationError> {
    let m = dnf.num_vars();
    if mtps.is_empty() {
        return Ok(vec![Point::ones(m)]);
    }
    let oracle = Membership::new(dnf);
    let all = full_mask(m);
    let mut candidates = BTreeSet::new();
    for p in mtps {
        for i in 1..=m {
            if !p.get(i) {
                continue;
            }
            let prefix = p.mask() & full_mask(i - 1);
            let tail = all & !full_mask(i);
            let c = prefix | tail;
            if !oracle.contains(c) {
                candidates.insert(c);
            }
        }
    }

    // largest first: anything containing a candidate was seen before it
    let mut by_size: Vec<u64> = candidates.into_iter().collect();
    by_size.sort_by_key(|c| std::cmp::Reverse(c.count_ones()));
    let mut kept: Vec<u64> = Vec::new();
    for c in by_size {
        if !kept.iter().any(|&k| c & !k == 0) {
            kept.push(c);
        }
    }

    for &c in &kept {
        let maximal = (0..m)
            .filter(|b| c >> b & 1 == 0)
            .all(|b| oracle.contains(c | 1 << b));
        if !maximal {
            return Err(VerificationError {
                point: Point::from_mask(c, m),
            });
        }
    }
    kept.sort_unstable();
    Ok(kept.into_iter().map(|c| Point::from_mask(c, m)).collect())
}

/// Exact extremal sets by scanning all `2^m` points.
pub fn brute_force_extremal(dnf: &Dnf, max_vars: usize) -> Result<ExtremalSets> {
    let table = TruthTable::of_dnf(dnf, max_vars)?;
    let m = dnf.num_vars();
    let mut mtps = Vec::new();
    let mut mfps = Vec::new();
    for mask in 0..(1u64 << m) {
        let value = table.get(mask);
        let neighbours_flip = (0..m).all(|b| {
            let bit = 1u64 << b;
            if value && mask & bit != 0 {
                !table.get(mask & !bit)
            } else if !value && mask & bit == 0 {
                table.get(mask | bit)
            } else {
                true
            }
        });
        if neighbours_flip {
            let p = Point::from_mask(mask, m);
            if value {
                mtps.push(p);
            } else {
                mfps.push(p);
            }
        }
    }
    Ok(ExtremalSets { mtps, mfps })
}

/// Extremal sets of a regular DNF, checked against the neighbour test.
pub fn extremal_sets(dnf: &Dnf) -> Result<ExtremalSets, VerificationError> {
    let mtps = minimal_true_points(dnf);
    let mfps = maximal_false_points(dnf, &mtps)?;
    Ok(ExtremalSets { mtps, mfps })
}
