//! Integer partitions, dominance order and the diagonal cut of a Ferrers diagram.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Accepts weakly decreasing input; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("{parts:?} is not weakly decreasing"));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts into weakly decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Partition {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        Partition(conjugate(&self.0))
    }

    pub fn trace(&self) -> usize {
        trace(&self.0)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = crate::Error;

    fn try_from(v: Vec<usize>) -> Result<Partition> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Column lengths of the diagram of a weakly decreasing sequence.
pub fn conjugate(d: &[usize]) -> Vec<usize> {
    let width = d.first().copied().unwrap_or(0);
    (1..=width).map(|c| d.iter().take_while(|&&x| x >= c).count()).collect()
}

/// `|{j : d_j >= j}|` for weakly decreasing `d`.
pub fn trace(d: &[usize]) -> usize {
    d.iter().enumerate().take_while(|(j, &x)| x > *j).count()
}

fn prefix_ge(a: &[usize], b: &[usize]) -> bool {
    let (mut sa, mut sb) = (0usize, 0usize);
    for p in 0..a.len().max(b.len()) {
        sa += a.get(p).copied().unwrap_or(0);
        sb += b.get(p).copied().unwrap_or(0);
        if sa < sb {
            return false;
        }
    }
    true
}

/// `a ⊵ b`: equal sums and every prefix sum of `a` at least that of `b`.
/// Sequences are compared as given (shorter ones padded with zeros).
pub fn majorizes(a: &[usize], b: &[usize]) -> bool {
    a.iter().sum::<usize>() == b.iter().sum::<usize>() && prefix_ge(a, b)
}

/// `a ⊳ b`.
pub fn strictly_majorizes(a: &[usize], b: &[usize]) -> bool {
    majorizes(a, b) && trimmed(a) != trimmed(b)
}

/// Prefix-sum domination with `|a| >= |b|`.
pub fn weakly_majorizes(a: &[usize], b: &[usize]) -> bool {
    prefix_ge(a, b)
}

fn trimmed(a: &[usize]) -> &[usize] {
    let end = a.iter().rposition(|&x| x != 0).map_or(0, |p| p + 1);
    &a[..end]
}

/// All partitions of `w` in decreasing lexicographic order.
pub fn partitions(w: usize) -> Vec<Partition> {
    partitions_bounded(w, usize::MAX, usize::MAX)
}

/// Partitions of `w` with at most `max_len` parts, each at most `max_part`,
/// in decreasing lexicographic order.
pub fn partitions_bounded(w: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
    fn go(rest: usize, cap: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            // remaining slots must be able to absorb what is left
            if p.saturating_mul(max_len - cur.len()) < rest {
                break;
            }
            cur.push(p);
            go(rest - p, p, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(w, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// Weakly decreasing length-`len` sequences obtained from `d` by one unit
/// transfer to a later position. Every cover in dominance order is such a move.
pub fn lower_transfers(d: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let n = d.len();
    (0..n).flat_map(move |i| {
        (i + 1..n).filter_map(move |j| {
            // keep the result weakly decreasing: take from the last copy of d_i
            // and give to the first copy of d_j
            let i_last = i + 1 == n || d[i + 1] < d[i];
            let j_first = d[j - 1] > d[j];
            if d[i] >= d[j] + 2 && i_last && j_first {
                let mut e = d.to_vec();
                e[i] -= 1;
                e[j] += 1;
                Some(e)
            } else {
                None
            }
        })
    })
}

/// Adds the dominance down-set of the weakly decreasing `d` to `seen`,
/// skipping anything already present. Returns the number of new sequences.
pub fn extend_down_set(d: &[usize], seen: &mut HashSet<Vec<usize>>) -> usize {
    let mut added = 0;
    if !seen.insert(d.to_vec()) {
        return 0;
    }
    added += 1;
    let mut stack = vec![d.to_vec()];
    while let Some(cur) = stack.pop() {
        for e in lower_transfers(&cur) {
            if seen.insert(e.clone()) {
                added += 1;
                stack.push(e);
            }
        }
    }
    added
}

/// Every weakly decreasing sequence of length `len` dominated by `d`.
pub fn partitions_dominated_by(d: &[usize], len: usize) -> Vec<Vec<usize>> {
    let mut start = d.to_vec();
    start.sort_unstable_by(|a, b| b.cmp(a));
    start.resize(len.max(start.len()), 0);
    let mut seen = HashSet::new();
    extend_down_set(&start, &mut seen);
    let mut out: Vec<Vec<usize>> = seen.into_iter().collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Number of distinct rearrangements: `n! / Π mult_v!`.
pub fn rearrangements(d: &[usize]) -> u128 {
    let mut sorted = d.to_vec();
    sorted.sort_unstable();
    let mut count: u128 = 1;
    let mut placed: u128 = 0;
    let mut run: u128 = 0;
    for (p, v) in sorted.iter().enumerate() {
        if p > 0 && sorted[p - 1] == *v {
            run += 1;
        } else {
            run = 1;
        }
        placed += 1;
        // multiply by C(placed, run) incrementally: placed/run keeps it integral
        count = count * placed / run;
    }
    count
}

/// Complement of `λ` inside the `rows × cols` rectangle, rotated a half turn.
pub fn complement_in_rectangle(lambda: &Partition, rows: usize, cols: usize) -> Result<Partition> {
    if lambda.len() > rows || lambda.part(0) > cols {
        return domain(format!("{lambda} does not fit in a {rows}x{cols} rectangle"));
    }
    Partition::new((0..rows).rev().map(|r| cols - lambda.part(r)).collect())
}
