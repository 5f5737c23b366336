//! Cancellation conditions `CC_t` (tuples with repetition) and `DCC_t`
//! (distinct sets), checked by exhaustive search under a node budget.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{KFamily, Subset};

pub const DEFAULT_TUPLE_BUDGET: u64 = 50_000_000;

/// `t` members and `t` non-members with equal characteristic-vector sums.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CancellationViolation {
    pub members: Vec<Subset>,
    pub non_members: Vec<Subset>,
}

pub fn cc_violation(fam: &KFamily, t: usize) -> Result<Option<CancellationViolation>> {
    violation(fam, t, true, DEFAULT_TUPLE_BUDGET)
}

pub fn dcc_violation(fam: &KFamily, t: usize) -> Result<Option<CancellationViolation>> {
    violation(fam, t, false, DEFAULT_TUPLE_BUDGET)
}

pub fn satisfies_cc(fam: &KFamily, t: usize) -> Result<bool> {
    Ok(cc_violation(fam, t)?.is_none())
}

pub fn satisfies_dcc(fam: &KFamily, t: usize) -> Result<bool> {
    Ok(dcc_violation(fam, t)?.is_none())
}

/// Searches for a violation of `CC_t` (`repeat = true`) or `DCC_t`.
pub fn violation(fam: &KFamily, t: usize, repeat: bool, budget: u64) -> Result<Option<CancellationViolation>> {
    if t == 0 {
        return Err(Error::Domain("t must be positive".into()));
    }
    let members: Vec<Subset> = fam.iter().collect();
    let others: Vec<Subset> = fam.complement().iter().collect();
    let n = fam.n();
    let mut used = 0u64;
    let mut sums: HashMap<Vec<u8>, Vec<Subset>> = HashMap::new();
    let (small, large, small_is_members) =
        if members.len() <= others.len() { (&members, &others, true) } else { (&others, &members, false) };
    tuples(small, t, repeat, n, &mut used, budget, &mut |key, tuple| {
        sums.entry(key.to_vec()).or_insert_with(|| tuple.to_vec());
        false
    })?;
    let mut found: Option<CancellationViolation> = None;
    tuples(large, t, repeat, n, &mut used, budget, &mut |key, tuple| {
        if let Some(other) = sums.get(key) {
            let (m, o) = if small_is_members { (other.clone(), tuple.to_vec()) } else { (tuple.to_vec(), other.clone()) };
            found = Some(CancellationViolation { members: m, non_members: o });
            return true;
        }
        false
    })?;
    Ok(found)
}

/// Visits `t`-tuples (nondecreasing indices with `repeat`, increasing without)
/// together with their characteristic-vector sums. Stops when `visit` returns true.
fn tuples(
    sets: &[Subset],
    t: usize,
    repeat: bool,
    n: usize,
    used: &mut u64,
    budget: u64,
    visit: &mut dyn FnMut(&[u8], &[Subset]) -> bool,
) -> Result<bool> {
    fn go(
        sets: &[Subset],
        start: usize,
        left: usize,
        repeat: bool,
        sum: &mut Vec<u8>,
        tuple: &mut Vec<Subset>,
        used: &mut u64,
        budget: u64,
        visit: &mut dyn FnMut(&[u8], &[Subset]) -> bool,
    ) -> Result<bool> {
        if left == 0 {
            *used += 1;
            if *used > budget {
                return Err(Error::Budget(format!("cancellation search exceeded {budget} tuples")));
            }
            return Ok(visit(sum, tuple));
        }
        for idx in start..sets.len() {
            let s = sets[idx];
            for v in s.iter() {
                sum[v - 1] += 1;
            }
            tuple.push(s);
            let next = if repeat { idx } else { idx + 1 };
            let stop = go(sets, next, left - 1, repeat, sum, tuple, used, budget, visit)?;
            tuple.pop();
            for v in s.iter() {
                sum[v - 1] -= 1;
            }
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
    let mut sum = vec![0u8; n];
    go(sets, 0, t, repeat, &mut sum, &mut Vec::new(), used, budget, visit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::threshold::is_threshold;
    use crate::degseq::is_uniquely_realizable;

    fn fam(n: usize, k: usize, sets: &[&str]) -> KFamily {
        KFamily::from_digit_strings(n, k, sets).unwrap()
    }

    #[test]
    fn staircase_example() {
        let k = fam(5, 3, &["123", "134", "145"]);
        assert!(satisfies_cc(&k, 3).unwrap());
        assert!(satisfies_dcc(&k, 3).unwrap());
        let v = dcc_violation(&k, 2).unwrap().expect("fails DCC_2");
        let mut sum = [0; 5];
        for s in &v.members {
            assert!(k.contains(*s));
            s.iter().for_each(|x| sum[x - 1] += 1);
        }
        for s in &v.non_members {
            assert!(!k.contains(*s));
            s.iter().for_each(|x| sum[x - 1] -= 1);
        }
        assert!(sum.iter().all(|&x| x == 0));
    }

    #[test]
    fn one_set_never_cancels() {
        for g in KFamily::all(4, 2).unwrap() {
            assert!(satisfies_cc(&g, 1).unwrap());
            assert!(satisfies_dcc(&g, 1).unwrap());
        }
    }

    #[test]
    fn perfect_matching_fails_cc2() {
        let v = cc_violation(&fam(4, 2, &["12", "34"]), 2).unwrap().unwrap();
        assert_eq!(v.members.len(), 2);
    }

    #[test]
    fn cc_implies_dcc_and_characterizations() {
        // two families with the same degrees differ in at most 5 sets on [5]
        // when k = 3, so DCC_t for t <= 5 decides unique realizability
        for g in KFamily::all(5, 3).unwrap() {
            let cc: Vec<bool> = (1..=5).map(|t| satisfies_cc(&g, t).unwrap()).collect();
            let dcc: Vec<bool> = (1..=5).map(|t| satisfies_dcc(&g, t).unwrap()).collect();
            for t in 0..5 {
                assert!(!cc[t] || dcc[t]);
            }
            if is_threshold(&g).is_some() {
                assert!(cc.iter().all(|&x| x));
            }
            if is_uniquely_realizable(&g) {
                assert!(dcc.iter().all(|&x| x), "{g}");
            } else {
                assert!(dcc.iter().any(|&x| !x), "{g}");
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let g = KFamily::complete(6, 3).unwrap();
        let half = KFamily::from_subsets(6, 3, g.iter().take(10)).unwrap();
        assert!(matches!(violation(&half, 3, true, 100), Err(Error::Budget(_))));
    }
}
