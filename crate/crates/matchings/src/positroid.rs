//! Positroids as sets of boundary values, and the necklace membership test.

use std::collections::BTreeSet;

use dimer_core::{Dimer, Subset};
use strands::necklaces;

use crate::error::MatchingError;
use crate::matching::{boundary_value, enumerate_matchings};

/// The set of boundary values of all perfect matchings.
pub type PositroidSet = BTreeSet<Subset>;

pub fn positroid(d: &Dimer) -> PositroidSet {
    enumerate_matchings(d)
        .iter()
        .map(|m| boundary_value(d, m))
        .collect()
}

/// The `i`-shifted linear order on `1..=n`, smallest first: `i, i-1, …, 1, n, …, i+1`.
///
/// Marked points are numbered clockwise here, so the shifted order that makes
/// the necklace entry at `i` minimal runs anticlockwise from `i`.
pub fn shifted_order(n: usize, i: u32) -> Vec<u32> {
    let n = n as u32;
    (0..n).map(|s| (i + n - 1 - s) % n + 1).collect()
}

/// Gale order: `j ≥ k` iff the `r`-th smallest element of `j` is at least the
/// `r`-th smallest of `k` for every `r`, in the linear order `order`.
pub fn gale_geq(j: &[u32], k: &[u32], order: &[u32]) -> bool {
    let rank = |x: u32| {
        order
            .iter()
            .position(|&y| y == x)
            .expect("element outside the order")
    };
    let ranked = |s: &[u32]| {
        let mut r: Vec<usize> = s.iter().map(|&x| rank(x)).collect();
        r.sort_unstable();
        r
    };
    let (rj, rk) = (ranked(j), ranked(k));
    rj.len() == rk.len() && rj.iter().zip(&rk).all(|(a, b)| a >= b)
}

/// Whether `j` dominates every source-necklace entry in its shifted Gale order.
pub fn positroid_contains_necklace_test(d: &Dimer, j: &[u32]) -> Result<bool, MatchingError> {
    let (necklace, _) = necklaces(d)?;
    let k = necklace.first().map_or(0, Vec::len);
    if j.len() != k || j.iter().any(|&x| x == 0 || x as usize > d.n()) {
        return Err(MatchingError::WrongSize {
            subset: j.to_vec(),
            expected: k,
            got: j.len(),
        });
    }
    Ok(necklace
        .iter()
        .enumerate()
        .all(|(idx, entry)| gale_geq(j, entry, &shifted_order(d.n(), idx as u32 + 1))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifted_order_runs_down_from_i() {
        assert_eq!(shifted_order(5, 2), vec![2, 1, 5, 4, 3]);
        assert_eq!(shifted_order(3, 3), vec![3, 2, 1]);
    }

    #[test]
    fn gale_compares_sorted_ranks() {
        let order = [1, 2, 3, 4];
        assert!(gale_geq(&[2, 4], &[1, 3], &order));
        assert!(!gale_geq(&[1, 4], &[2, 3], &order));
        assert!(gale_geq(&[1, 3], &[1, 3], &order));
    }
}
