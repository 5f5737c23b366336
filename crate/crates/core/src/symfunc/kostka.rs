//! Kostka numbers by peeling horizontal strips.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::degseq::partition::majorizes;
use crate::degseq::Partition;
use crate::error::{domain, Result};

type Key = (Vec<usize>, Vec<usize>);

fn cache() -> &'static RwLock<HashMap<Key, u128>> {
    static CACHE: OnceLock<RwLock<HashMap<Key, u128>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `K_{λ,μ}`: column-strict tableaux of shape `λ` and content `μ`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u128> {
    if lambda.weight() != mu.weight() {
        return domain(format!("|{lambda}| != |{mu}|"));
    }
    Ok(kostka_parts(lambda.parts(), mu.parts()))
}

/// Same as [`kostka`] for weakly decreasing slices of equal weight.
pub(crate) fn kostka_parts(lambda: &[usize], mu: &[usize]) -> u128 {
    if mu.is_empty() {
        return u128::from(lambda.is_empty());
    }
    if !majorizes(lambda, mu) {
        return 0;
    }
    if lambda.len() <= 1 || mu.len() == 1 {
        // a single row, or a single value filling a horizontal strip
        return u128::from(lambda.len() <= 1);
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = cache().read().expect("kostka cache").get(&key) {
        return v;
    }
    // the largest entry occupies a horizontal strip of size μ_last
    let (&last, rest) = mu.split_last().expect("nonempty");
    let mut total = 0u128;
    let mut nu = lambda.to_vec();
    strips(lambda, 0, last, &mut nu, &mut |inner| {
        let trimmed: Vec<usize> = inner.iter().copied().take_while(|&x| x > 0).collect();
        total += kostka_parts(&trimmed, rest);
    });
    cache().write().expect("kostka cache").insert(key, total);
    total
}

/// Calls `f` on every `ν ⊆ λ` with `λ/ν` a horizontal strip of `r` boxes.
fn strips(lambda: &[usize], row: usize, r: usize, nu: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if row == lambda.len() {
        if r == 0 {
            f(nu);
        }
        return;
    }
    let floor = lambda.get(row + 1).copied().unwrap_or(0);
    let room = lambda[row] - floor;
    // what later rows can still absorb
    let later: usize = (row + 1..lambda.len()).map(|i| lambda[i] - lambda.get(i + 1).copied().unwrap_or(0)).sum();
    for take in 0..=room.min(r) {
        if r - take > later {
            continue;
        }
        nu[row] = lambda[row] - take;
        strips(lambda, row + 1, r - take, nu, f);
    }
    nu[row] = lambda[row];
}
