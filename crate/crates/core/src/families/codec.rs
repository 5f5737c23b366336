//! Subsets of `[n]` as bitmasks, and the colexicographic ranking of `k`-subsets.

use std::fmt;

use crate::error::{domain, Result};

/// Largest ground set supported by the bitmask representation.
pub const MAX_N: usize = 62;

const fn binomial_table() -> [[u64; 64]; 64] {
    let mut t = [[0u64; 64]; 64];
    let mut n = 0;
    while n < 64 {
        t[n][0] = 1;
        let mut k = 1;
        while k <= n {
            t[n][k] = t[n - 1][k - 1].wrapping_add(if k < n { t[n - 1][k] } else { 0 });
            k += 1;
        }
        n += 1;
    }
    t
}

static BINOMIAL: [[u64; 64]; 64] = binomial_table();

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n || n >= 64 {
        if n >= 64 && k <= n {
            return binomial_big(n as u64, k as u64);
        }
        return 0;
    }
    BINOMIAL[n][k]
}

fn binomial_big(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// A finite subset of `{1, .., 62}` stored as a bitmask (bit `v-1` for vertex `v`).
///
/// The derived ordering compares masks as integers, which is exactly the
/// colexicographic order on sets.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_elements(elements: &[usize]) -> Result<Subset> {
        let mut mask = 0u64;
        for &v in elements {
            if v == 0 || v > MAX_N {
                return domain(format!("vertex {v} outside 1..={MAX_N}"));
            }
            let bit = 1u64 << (v - 1);
            if mask & bit != 0 {
                return domain(format!("repeated vertex {v}"));
            }
            mask |= bit;
        }
        Ok(Subset(mask))
    }

    /// Parses the compact digit notation `"235"` used for small ground sets.
    pub fn from_digits(s: &str) -> Result<Subset> {
        let digits: Option<Vec<usize>> = s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect();
        match digits {
            Some(d) => Subset::from_elements(&d),
            None => domain(format!("not a digit string: {s:?}")),
        }
    }

    pub fn singleton(v: usize) -> Subset {
        Subset(1u64 << (v - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=64).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn with(self, v: usize) -> Subset {
        Subset(self.0 | (1u64 << (v - 1)))
    }

    pub fn without(self, v: usize) -> Subset {
        Subset(self.0 & !(1u64 << (v - 1)))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest element, if any.
    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }

    /// Elements in increasing order.
    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    pub fn elements(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Number of elements strictly between `lo` and `hi`.
    pub fn count_between(self, lo: usize, hi: usize) -> usize {
        let (lo, hi) = if lo < hi { (lo, hi) } else { (hi, lo) };
        if hi <= lo + 1 {
            return 0;
        }
        // bits lo .. hi-2 hold vertices lo+1 .. hi-1
        let width = hi - lo - 1;
        let window = ((1u64 << width) - 1) << lo;
        (self.0 & window).count_ones() as usize
    }
}

pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Serialized as the ascending list of elements.
impl serde::Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_seq(self.iter())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        if Subset::max(*self).unwrap_or(0) < 10 {
            for v in self.iter() {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.iter().map(|v| v.to_string()).collect();
            write!(f, "{{{}}}", parts.join(","))
        }
    }
}

/// Bijection between the `k`-subsets of `[n]` and `0 .. C(n,k)` in colex order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetCodec {
    n: usize,
    k: usize,
}

impl SubsetCodec {
    pub fn new(n: usize, k: usize) -> Result<SubsetCodec> {
        if k > n {
            return domain(format!("k = {k} exceeds n = {n}"));
        }
        if n > MAX_N {
            return domain(format!("n = {n} exceeds the supported maximum {MAX_N}"));
        }
        Ok(SubsetCodec { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `C(n, k)`.
    pub fn len(&self) -> usize {
        binomial(self.n, self.k) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Whether `s` is a `k`-subset of `[n]`.
    pub fn accepts(&self, s: Subset) -> bool {
        s.len() == self.k && s.max().is_none_or(|m| m <= self.n)
    }

    pub fn rank(&self, s: Subset) -> usize {
        debug_assert!(self.accepts(s), "{s} is not a {}-subset of [{}]", self.k, self.n);
        s.iter()
            .enumerate()
            .map(|(i, v)| binomial(v - 1, i + 1) as usize)
            .sum()
    }

    pub fn unrank(&self, mut r: usize) -> Subset {
        debug_assert!(r < self.len());
        let mut mask = 0u64;
        let mut v = self.n;
        for i in (1..=self.k).rev() {
            // largest v with C(v-1, i) <= r
            while binomial(v - 1, i) as usize > r {
                v -= 1;
            }
            r -= binomial(v - 1, i) as usize;
            mask |= 1u64 << (v - 1);
            v -= 1;
        }
        Subset(mask)
    }

    /// All `k`-subsets of `[n]` in colex (= rank) order.
    pub fn subsets(&self) -> ColexSubsets {
        ColexSubsets {
            next: if self.k == 0 { Some(0) } else { Some((1u64 << self.k) - 1) },
            limit: if self.n >= 64 { u64::MAX } else { 1u64 << self.n },
            k: self.k,
        }
    }
}

/// Gosper's-hack walk over `k`-bit masks, which visits subsets in colex order.
pub struct ColexSubsets {
    next: Option<u64>,
    limit: u64,
    k: usize,
}

impl Iterator for ColexSubsets {
    type Item = Subset;
    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        if cur >= self.limit && !(cur == 0 && self.k == 0) {
            self.next = None;
            return None;
        }
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(Subset(cur))
    }
}
