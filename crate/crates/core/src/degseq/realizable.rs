//! Realizability of degree sequences: labelled realization counting and the
//! shifted-majorization test.

use std::collections::HashMap;

use crate::families::{binomial, shifted::lower_covers, KFamily, Subset, SubsetCodec};
use crate::error::{domain, Result};

use super::partition::majorizes;

/// Number of `k`-families on `[n]` (n = `d.len()`) with degree sequence exactly `d`,
/// saturating at `cap` when given.
pub fn count_realizations(d: &[usize], k: usize, cap: Option<u128>) -> u128 {
    let mut counter = RealizationCounter::new(k, cap.unwrap_or(u128::MAX));
    counter.count(d)
}

/// Memoized counter. Vertices are eliminated one at a time, smallest positive
/// residual degree first; the count for the remaining residual vector depends
/// only on its multiset of values, which is the memo key.
pub struct RealizationCounter {
    k: usize,
    cap: u128,
    memo: HashMap<Vec<usize>, u128>,
}

impl RealizationCounter {
    pub fn new(k: usize, cap: u128) -> RealizationCounter {
        RealizationCounter { k, cap, memo: HashMap::new() }
    }

    pub fn count(&mut self, d: &[usize]) -> u128 {
        if self.k == 0 {
            // the families are ∅ and {∅}, both with all-zero degrees
            return if d.iter().all(|&x| x == 0) { 2.min(self.cap) } else { 0 };
        }
        let mut key: Vec<usize> = d.iter().copied().filter(|&x| x > 0).collect();
        key.sort_unstable();
        self.count_sorted(key)
    }

    fn count_sorted(&mut self, r: Vec<usize>) -> u128 {
        if r.is_empty() {
            return 1;
        }
        if !plausible(&r, self.k) {
            return 0;
        }
        if let Some(&c) = self.memo.get(&r) {
            return c;
        }
        // r is ascending; eliminate the vertex with the smallest residual
        let need = r[0];
        let others: Vec<usize> = r[1..].to_vec();
        let mut total: u128 = 0;
        let cap = self.cap;
        let mut residual = others.clone();
        let sets = SubsetCodec::new(others.len(), self.k - 1).map(|c| c.subsets().collect::<Vec<Subset>>());
        if let Ok(sets) = sets {
            self.choose(&sets, 0, need, &mut residual, &mut total);
        }
        let total = total.min(cap);
        self.memo.insert(r, total);
        total
    }

    fn choose(
        &mut self,
        sets: &[Subset],
        from: usize,
        need: usize,
        residual: &mut Vec<usize>,
        total: &mut u128,
    ) {
        if *total >= self.cap {
            return;
        }
        if need == 0 {
            let mut rest: Vec<usize> = residual.iter().copied().filter(|&x| x > 0).collect();
            rest.sort_unstable();
            let c = self.count_sorted(rest);
            *total = total.saturating_add(c);
            return;
        }
        for idx in from..sets.len() {
            if sets.len() - idx < need {
                break;
            }
            let s = sets[idx];
            if s.iter().any(|v| residual[v - 1] == 0) {
                continue;
            }
            for v in s.iter() {
                residual[v - 1] -= 1;
            }
            self.choose(sets, idx + 1, need - 1, residual, total);
            for v in s.iter() {
                residual[v - 1] += 1;
            }
            if *total >= self.cap {
                return;
            }
        }
    }
}

/// Cheap necessary conditions on an ascending residual vector.
fn plausible(r: &[usize], k: usize) -> bool {
    let n = r.len();
    let sum: usize = r.iter().sum();
    if !sum.is_multiple_of(k) || n < k {
        return false;
    }
    let max_deg = binomial(n - 1, k - 1) as usize;
    if r[n - 1] > max_deg {
        return false;
    }
    // the top-j vertices meet each of the m sets in at most min(j, k) points,
    // and only C(j,t)C(n-j,k-t) sets meet them in exactly t points
    let m = sum / k;
    let mut prefix = 0usize;
    for j in 1..n {
        prefix += r[n - j];
        let mut left = m;
        let mut bound = 0usize;
        for t in (1..=k.min(j)).rev() {
            if left == 0 {
                break;
            }
            let avail = (binomial(j, t) * binomial(n - j, k - t)) as usize;
            let take = avail.min(left);
            bound += take * t;
            left -= take;
        }
        if prefix > bound {
            return false;
        }
    }
    true
}

/// Up to `limit` families on `[d.len()]` with degree sequence exactly `d`.
pub fn find_realizations(d: &[usize], k: usize, limit: usize) -> Result<Vec<KFamily>> {
    let n = d.len();
    let codec = SubsetCodec::new(n, k)?;
    let mut out = Vec::new();
    if limit == 0 || d.iter().sum::<usize>() % k.max(1) != 0 {
        return Ok(out);
    }
    let mut feasibility = RealizationCounter::new(k, 1);
    let mut residual = d.to_vec();
    let mut current = KFamily::empty_with(codec);
    let all: Vec<Subset> = codec.subsets().collect();
    search_labelled(&all, &mut residual, &mut current, &mut feasibility, limit, &mut out);
    Ok(out)
}

fn search_labelled(
    all: &[Subset],
    residual: &mut Vec<usize>,
    current: &mut KFamily,
    feasibility: &mut RealizationCounter,
    limit: usize,
    out: &mut Vec<KFamily>,
) {
    if out.len() >= limit {
        return;
    }
    if feasibility.count(residual) == 0 {
        return;
    }
    // lowest-labelled vertex with positive residual; its remaining sets all use
    // higher labels in the same search order, which keeps branches disjoint
    let Some(v) = residual.iter().position(|&x| x > 0).map(|p| p + 1) else {
        out.push(current.clone());
        return;
    };
    for &s in all {
        if s.contains(v) && !current.contains(s) && s.iter().all(|u| residual[u - 1] > 0 && u >= v) {
            // sets through v are added in increasing colex order only
            if current.iter().any(|t| t.iter().next() == Some(v) && t > s) {
                continue;
            }
            for u in s.iter() {
                residual[u - 1] -= 1;
            }
            current.insert(s);
            search_labelled(all, residual, current, feasibility, limit, out);
            current.remove(s);
            for u in s.iter() {
                residual[u - 1] += 1;
            }
            if out.len() >= limit {
                return;
            }
        }
    }
}

/// Whether `d` is the degree sequence of some `k`-family on `[d.len()]`,
/// decided by searching for a shifted family whose degree sequence majorizes
/// the weakly decreasing rearrangement of `d`. The zero vector always is one
/// (the empty family), even when `k > d.len()`.
pub fn is_degree_sequence(d: &[usize], k: usize) -> bool {
    d.iter().all(|&x| x == 0) || shifted_majorant(d, k).is_some()
}

/// A shifted family on `[d.len()]` whose degree sequence majorizes sorted `d`.
pub fn shifted_majorant(d: &[usize], k: usize) -> Option<KFamily> {
    let n = d.len();
    let total: usize = d.iter().sum();
    if k == 0 {
        return (total == 0).then(|| KFamily::empty(n, 0).expect("k = 0"));
    }
    if !total.is_multiple_of(k) || k > n {
        return None;
    }
    let mut target = d.to_vec();
    target.sort_unstable_by(|a, b| b.cmp(a));
    if target[0] > binomial(n - 1, k - 1) as usize {
        return None;
    }
    let search = LexIdealSearch::new(n, k);
    search.find(&target, total / k)
}

/// Ideals of the componentwise order visited in lexicographic order, so that
/// once every set with minimum below `a` has been decided the degrees of
/// vertices `1..a` are final.
struct LexIdealSearch {
    n: usize,
    k: usize,
    sets: Vec<Subset>,
    lower: Vec<Vec<usize>>,
    codec: SubsetCodec,
}

impl LexIdealSearch {
    fn new(n: usize, k: usize) -> LexIdealSearch {
        let codec = SubsetCodec::new(n, k).expect("k <= n checked by caller");
        let mut sets: Vec<Subset> = codec.subsets().collect();
        sets.sort_by_key(|s| s.elements());
        let pos: HashMap<Subset, usize> = sets.iter().enumerate().map(|(p, &s)| (s, p)).collect();
        let lower = sets.iter().map(|&s| lower_covers(s).map(|t| pos[&t]).collect()).collect();
        LexIdealSearch { n, k, sets, lower, codec }
    }

    fn find(&self, target: &[usize], m: usize) -> Option<KFamily> {
        let mut target_prefix = vec![0usize; self.n + 1];
        for j in 0..self.n {
            target_prefix[j + 1] = target_prefix[j] + target[j];
        }
        let mut state = SearchState {
            included: vec![false; self.sets.len()],
            degrees: vec![0; self.n],
            count: 0,
        };
        if self.descend(0, m, target, &target_prefix, &mut state) {
            let members = (0..self.sets.len()).filter(|&p| state.included[p]).map(|p| self.sets[p]);
            let mut fam = KFamily::empty_with(self.codec);
            for s in members {
                fam.insert(s);
            }
            Some(fam)
        } else {
            None
        }
    }

    fn descend(&self, pos: usize, m: usize, target: &[usize], target_prefix: &[usize], st: &mut SearchState) -> bool {
        if st.count == m {
            return majorizes(&st.degrees, target);
        }
        if self.sets.len() - pos < m - st.count {
            return false;
        }
        let a = self.sets[pos].iter().next().expect("k >= 1");
        let left = m - st.count;
        let mut acc = 0;
        for j in 1..=self.n {
            acc += st.degrees[j - 1];
            let reach = if j + 1 > a { (j + 1 - a).min(self.k) } else { 0 };
            if acc + left * reach < target_prefix[j] {
                return false;
            }
        }
        if self.lower[pos].iter().all(|&q| st.included[q]) {
            let s = self.sets[pos];
            st.included[pos] = true;
            st.count += 1;
            for v in s.iter() {
                st.degrees[v - 1] += 1;
            }
            if self.descend(pos + 1, m, target, target_prefix, st) {
                return true;
            }
            for v in s.iter() {
                st.degrees[v - 1] -= 1;
            }
            st.count -= 1;
            st.included[pos] = false;
        }
        self.descend(pos + 1, m, target, target_prefix, st)
    }
}

struct SearchState {
    included: Vec<bool>,
    degrees: Vec<usize>,
    count: usize,
}

/// Whether `fam` is the only family with its degree sequence.
pub fn is_uniquely_realizable(fam: &KFamily) -> bool {
    count_realizations(&fam.degree_sequence(), fam.k(), Some(2)) == 1
}

/// Checks the length and divisibility preconditions shared by the CLI entry points.
pub fn check_degree_input(d: &[usize], k: usize) -> Result<()> {
    if k > 0 && d.iter().sum::<usize>() % k != 0 {
        return domain(format!("sum of {d:?} is not divisible by k = {k}"));
    }
    Ok(())
}
