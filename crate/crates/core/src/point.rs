use std::fmt;

use crate::dnf::MAX_VARS;

/// A 0/1 assignment to the variables `x_1..x_m`. Bit `i - 1` of the mask
/// holds the value of `x_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    mask: u64,
    len: usize,
}

impl Point {
    /// Builds a point from a mask; bits at or above `len` are discarded.
    pub fn from_mask(mask: u64, len: usize) -> Self {
        assert!(len <= MAX_VARS, "point dimension {len} exceeds {MAX_VARS}");
        Self {
            mask: mask & full_mask(len),
            len,
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mask = bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .fold(0u64, |acc, (i, _)| acc | (1 << i));
        Self::from_mask(mask, bits.len())
    }

    pub fn zeros(len: usize) -> Self {
        Self::from_mask(0, len)
    }

    pub fn ones(len: usize) -> Self {
        Self::from_mask(u64::MAX, len)
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Value of variable `x_var` (1-based).
    pub fn get(&self, var: usize) -> bool {
        debug_assert!((1..=self.len).contains(&var));
        self.mask >> (var - 1) & 1 == 1
    }

    pub fn with(&self, var: usize, value: bool) -> Self {
        debug_assert!((1..=self.len).contains(&var));
        let bit = 1u64 << (var - 1);
        let mask = if value {
            self.mask | bit
        } else {
            self.mask & !bit
        };
        Self {
            mask,
            len: self.len,
        }
    }

    pub fn count_ones(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn bits(&self) -> Vec<bool> {
        (1..=self.len).map(|v| self.get(v)).collect()
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Point) -> bool {
        self.mask & !other.mask == 0
    }
}

pub(crate) fn full_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for v in 1..=self.len {
            if v > 1 {
                write!(f, ",")?;
            }
            write!(f, "{}", u8::from(self.get(v)))?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bits_round_trip() {
        let p = Point::from_bits(&[true, false, true, true]);
        assert_eq!(p.mask(), 0b1101);
        assert_eq!(p.bits(), vec![true, false, true, true]);
        assert_eq!(p.to_string(), "(1,0,1,1)");
    }

    #[test]
    fn ones_respects_length() {
        assert_eq!(Point::ones(3).mask(), 0b111);
        assert_eq!(Point::ones(64).mask(), u64::MAX);
        assert!(Point::zeros(0).is_empty());
    }

    #[test]
    fn flipping() {
        let p = Point::zeros(3).with(2, true);
        assert!(p.get(2) && !p.get(1));
        assert_eq!(p.with(2, false), Point::zeros(3));
        assert!(Point::zeros(3).le(&p) && !p.le(&Point::zeros(3)));
    }
}
