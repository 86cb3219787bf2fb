//! Brute-force truth tables and the equivalence oracle.

use crate::dnf::Dnf;
use crate::error::{Error, Result};
use crate::lpb::Lpb;

/// Default dimension limit for exhaustive checks (about 10^6 points).
pub const DEFAULT_ORACLE_CAP: usize = 20;

/// Truth table indexed by point mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthTable {
    num_vars: usize,
    values: Vec<bool>,
}

impl TruthTable {
    /// Table of a positive DNF: mark every clause, then close upwards one
    /// variable at a time.
    pub fn of_dnf(dnf: &Dnf, max_vars: usize) -> Result<Self> {
        let m = check_dimension(dnf.num_vars(), max_vars)?;
        let mut values = vec![false; 1 << m];
        for c in dnf.clauses() {
            values[c.mask() as usize] = true;
        }
        for bit in 0..m {
            let step = 1usize << bit;
            for mask in 0..values.len() {
                if mask & step == 0 && values[mask] {
                    values[mask | step] = true;
                }
            }
        }
        Ok(Self {
            num_vars: m,
            values,
        })
    }

    pub fn of_lpb(lpb: &Lpb, max_vars: usize) -> Result<Self> {
        let m = check_dimension(lpb.num_vars(), max_vars)?;
        let mut sums = vec![0i128; 1 << m];
        for mask in 1..sums.len() {
            let low = mask.trailing_zeros() as usize;
            sums[mask] = sums[mask & (mask - 1)] + lpb.coefficients()[low] as i128;
        }
        let degree = lpb.degree() as i128;
        Ok(Self {
            num_vars: m,
            values: sums.into_iter().map(|s| s >= degree).collect(),
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn get(&self, mask: u64) -> bool {
        self.values[mask as usize]
    }

    pub fn count_true(&self) -> usize {
        self.values.iter().filter(|&&v| v).count()
    }

    /// First point mask on which the two tables differ.
    pub fn first_difference(&self, other: &TruthTable) -> Option<u64> {
        self.values
            .iter()
            .zip(&other.values)
            .position(|(a, b)| a != b)
            .map(|i| i as u64)
    }
}

fn check_dimension(num_vars: usize, max_vars: usize) -> Result<usize> {
    if num_vars > max_vars {
        return Err(Error::TooManyVars {
            num_vars,
            limit: max_vars,
        });
    }
    Ok(num_vars)
}

/// True iff the DNF and the LPB agree on all `2^m` points.
pub fn equivalent(dnf: &Dnf, lpb: &Lpb, max_vars: usize) -> Result<bool> {
    if dnf.num_vars() != lpb.num_vars() {
        return Err(Error::DimensionMismatch {
            expected: dnf.num_vars(),
            found: lpb.num_vars(),
        });
    }
    let lhs = TruthTable::of_dnf(dnf, max_vars)?;
    let rhs = TruthTable::of_lpb(lpb, max_vars)?;
    Ok(lhs.first_difference(&rhs).is_none())
}

/// Point-membership queries on a DNF, backed by a truth table when the
/// dimension allows it and by clause scanning otherwise.
pub(crate) enum Membership<'a> {
    Table(TruthTable),
    Scan(&'a Dnf),
}

impl<'a> Membership<'a> {
    pub(crate) fn new(dnf: &'a Dnf) -> Self {
        match TruthTable::of_dnf(dnf, DEFAULT_ORACLE_CAP) {
            Ok(t) => Membership::Table(t),
            Err(_) => Membership::Scan(dnf),
        }
    }

    pub(crate) fn contains(&self, mask: u64) -> bool {
        match self {
            Membership::Table(t) => t.get(mask),
            Membership::Scan(d) => d.eval_mask(mask),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::Point;

    fn ex2() -> Dnf {
        Dnf::from_clauses(4, &[&[1, 2][..], &[1, 3], &[1, 4], &[2, 3, 4]]).unwrap()
    }

    fn lpb(a: &[u64], d: i64) -> Lpb {
        Lpb::new(a.to_vec(), d).unwrap()
    }

    #[test]
    fn worked_examples() {
        assert!(equivalent(&ex2(), &lpb(&[2, 1, 1, 1], 3), 20).unwrap());
        let ex3 = Dnf::from_clauses(4, &[&[1, 2][..], &[1, 3, 4], &[2, 3, 4]]).unwrap();
        assert!(equivalent(&ex3, &lpb(&[2, 2, 1, 1], 4), 20).unwrap());
        assert!(!equivalent(&ex2(), &lpb(&[1, 1, 1, 1], 3), 20).unwrap());
    }

    #[test]
    fn difference_point() {
        let a = TruthTable::of_dnf(&ex2(), 20).unwrap();
        let b = TruthTable::of_lpb(&lpb(&[1, 1, 1, 1], 3), 20).unwrap();
        // (1,1,0,0) is the smallest disagreeing mask
        assert_eq!(a.first_difference(&b), Some(0b0011));
    }

    #[test]
    fn tables_match_pointwise_eval() {
        let d = ex2();
        let l = lpb(&[3, 1, 2, 1], 4);
        let td = TruthTable::of_dnf(&d, 20).unwrap();
        let tl = TruthTable::of_lpb(&l, 20).unwrap();
        for mask in 0..16u64 {
            let p = Point::from_mask(mask, 4);
            assert_eq!(td.get(mask), d.eval(&p).unwrap());
            assert_eq!(tl.get(mask), l.eval(&p).unwrap());
        }
    }

    #[test]
    fn dimension_checks() {
        let d = Dnf::constant_true(21);
        let l = Lpb::new(vec![0; 21], 0).unwrap();
        assert!(matches!(
            equivalent(&d, &l, 20),
            Err(Error::TooManyVars { .. })
        ));
        assert!(matches!(
            equivalent(&ex2(), &lpb(&[1, 1], 1), 20),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(equivalent(&Dnf::constant_false(0), &lpb(&[], 1), 20).unwrap());
    }
}
