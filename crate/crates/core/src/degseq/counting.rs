//! Counting the distinct degree sequences of `k`-families on `[n]`.

use std::collections::HashSet;

use log::debug;

use super::partition::{extend_down_set, rearrangements};
use crate::error::Result;
use crate::families::IdealWalker;

/// The weakly decreasing degree sequences of all `k`-families on `[n]`: the
/// union of the dominance down-sets of shifted degree sequences.
pub fn sorted_degree_sequences(n: usize, k: usize) -> Result<HashSet<Vec<usize>>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    if k == 0 || k > n {
        seen.insert(vec![0; n]);
        return Ok(seen);
    }
    let mut walker = IdealWalker::new(n, k)?;
    let mut families = 0u64;
    walker.walk(None, |fam| {
        families += 1;
        extend_down_set(&fam.degree_sequence(), &mut seen);
    })?;
    debug!("n={n} k={k}: {families} shifted families, {} sorted sequences", seen.len());
    Ok(seen)
}

/// `|{d(K) : K a k-family on [n]}|`.
pub fn count_degree_sequences(n: usize, k: usize) -> Result<u128> {
    Ok(sorted_degree_sequences(n, k)?.iter().map(|d| rearrangements(d)).sum())
}
