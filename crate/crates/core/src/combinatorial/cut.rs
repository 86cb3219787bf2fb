use crate::dnf::{normalize_clauses, Clause, Dnf};

/// Splits the variables `block` away from `dnf`, keeping the clauses that
/// contain exactly `min(k, k_max)` of them, where `k_max` is the length of
/// the longest clause inside `block` (unbounded when there is none). The
/// block variables are deleted from the kept clauses and the result is
/// normalized.
pub fn cut(dnf: &Dnf, block: &[usize], k: usize) -> Dnf {
    cut_mask(dnf, Clause::from_vars(block.iter().copied()).mask(), k)
}

pub(crate) fn cut_mask(dnf: &Dnf, block: u64, k: usize) -> Dnf {
    let k_max = dnf
        .clauses()
        .iter()
        .filter(|c| c.mask() & !block == 0)
        .map(|c| c.len())
        .max();
    let wanted = k_max.map_or(k, |km| k.min(km));
    let kept = dnf
        .clauses()
        .iter()
        .filter(|c| (c.mask() & block).count_ones() as usize == wanted)
        .map(|c| Clause::from_mask(c.mask() & !block))
        .collect();
    normalize_clauses(dnf.num_vars(), kept)
}
