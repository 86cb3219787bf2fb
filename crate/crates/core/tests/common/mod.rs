#![allow(dead_code)]

use std::collections::BTreeSet;

use threshold_synth::{Clause, Dnf, Lpb};

pub fn dnf(m: usize, clauses: &[&[usize]]) -> Dnf {
    Dnf::from_clauses(m, clauses).unwrap()
}

pub fn lpb(a: &[u64], d: i64) -> Lpb {
    Lpb::new(a.to_vec(), d).unwrap()
}

/// x1x2 | x1x3 | x1x4 | x2x3x4
pub fn single_block_example() -> Dnf {
    dnf(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3, 4]])
}

/// x1x2 | x1x3x4 | x2x3x4
pub fn equidistant_example() -> Dnf {
    dnf(4, &[&[1, 2], &[1, 3, 4], &[2, 3, 4]])
}

/// The five-variable function whose table has twelve final nodes.
pub fn five_variable_example() -> Dnf {
    dnf(
        5,
        &[
            &[1, 2],
            &[1, 3],
            &[1, 4],
            &[1, 5],
            &[2, 3],
            &[2, 4],
            &[3, 4, 5],
        ],
    )
}

/// Six variables; smallest-first choices run into an empty interval.
pub fn dead_end_example() -> Dnf {
    dnf(
        6,
        &[
            &[1, 2],
            &[1, 3],
            &[1, 4, 5],
            &[2, 3, 4],
            &[2, 3, 5],
            &[2, 4, 5],
            &[3, 4, 5, 6],
        ],
    )
}

/// x1x2 | x3x4
pub fn split_pairs() -> Dnf {
    dnf(4, &[&[1, 2], &[3, 4]])
}

/// Truth table as a bit set over point masks (m <= 6).
pub fn table_bits(eval: impl Fn(u64) -> bool, m: usize) -> u64 {
    (0..1u64 << m)
        .filter(|&p| eval(p))
        .fold(0, |acc, p| acc | 1 << p)
}

/// Minimal DNF of a monotone truth table.
pub fn dnf_of_table(bits: u64, m: usize) -> Dnf {
    let truth = |p: u64| bits >> p & 1 == 1;
    let clauses = (0..1u64 << m)
        .filter(|&p| truth(p) && (0..m).all(|b| p >> b & 1 == 0 || !truth(p & !(1 << b))))
        .map(Clause::from_mask)
        .collect();
    Dnf::new(m, clauses).unwrap().normalize()
}

/// Every monotone Boolean function of `m <= 4` variables.
pub fn monotone_functions(m: usize) -> Vec<Dnf> {
    assert!(m <= 4);
    let points = 1u64 << m;
    (0..1u64 << points)
        .filter(|&bits| {
            (0..points).all(|p| (0..m).all(|b| bits >> p & 1 == 0 || bits >> (p | 1 << b) & 1 == 1))
        })
        .map(|bits| dnf_of_table(bits, m))
        .collect()
}

/// Truth tables of all LPBs with weights in `0..=max_weight` (m <= 4).
pub fn threshold_tables(m: usize, max_weight: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut weights = vec![0u64; m];
    loop {
        let sum: u64 = weights.iter().sum();
        for d in 0..=sum as i64 + 1 {
            let l = Lpb::new(weights.clone(), d).unwrap();
            out.insert(table_bits(|p| lpb_eval(&l, p), m));
        }
        // odometer
        let mut i = 0;
        loop {
            if i == m {
                return out;
            }
            if weights[i] < max_weight {
                weights[i] += 1;
                break;
            }
            weights[i] = 0;
            i += 1;
        }
    }
}

pub fn lpb_eval(l: &Lpb, mask: u64) -> bool {
    let s: u64 = (0..l.num_vars())
        .filter(|&b| mask >> b & 1 == 1)
        .map(|b| l.coefficients()[b])
        .sum();
    s as i128 >= l.degree() as i128
}

pub fn dnf_eval(d: &Dnf, mask: u64) -> bool {
    d.clauses().iter().any(|c| c.mask() & !mask == 0)
}

pub fn dnf_bits(d: &Dnf) -> u64 {
    table_bits(|p| dnf_eval(d, p), d.num_vars())
}
