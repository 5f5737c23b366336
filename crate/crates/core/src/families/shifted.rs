//! Shifted families: order ideals of the componentwise (Gale) order on `k`-subsets.

use std::collections::BTreeSet;

use super::codec::{Subset, SubsetCodec};
use super::family::KFamily;
use crate::error::{domain, Error, Result};

/// Default node budget for ideal enumeration.
pub const DEFAULT_NODE_BUDGET: u64 = 2_000_000_000;

/// Componentwise comparison of two sets of equal size written as increasing tuples.
pub fn gale_le(a: Subset, b: Subset) -> bool {
    a.len() == b.len() && a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

/// Sets covered by `s` in the componentwise order: lower one entry by one.
pub fn lower_covers(s: Subset) -> impl Iterator<Item = Subset> {
    s.iter()
        .filter(move |&v| v > 1 && !s.contains(v - 1))
        .map(move |v| s.without(v).with(v - 1))
}

/// Sets covering `s` inside `[n]`.
pub fn upper_covers(s: Subset, n: usize) -> impl Iterator<Item = Subset> {
    s.iter()
        .filter(move |&v| v < n && !s.contains(v + 1))
        .map(move |v| s.without(v).with(v + 1))
}

pub fn is_shifted(fam: &KFamily) -> bool {
    fam.iter().all(|s| lower_covers(s).all(|t| fam.contains(t)))
}

/// The smallest shifted family on `[n]` containing every generator.
pub fn shifted_generate(n: usize, k: usize, generators: &[Subset]) -> Result<KFamily> {
    let mut fam = KFamily::empty(n, k)?;
    let mut stack: Vec<Subset> = Vec::new();
    for &g in generators {
        if !fam.codec().accepts(g) {
            return domain(format!("generator {g} is not a {k}-subset of [{n}]"));
        }
        if fam.insert(g) {
            stack.push(g);
        }
    }
    while let Some(s) = stack.pop() {
        for t in lower_covers(s) {
            if fam.insert(t) {
                stack.push(t);
            }
        }
    }
    Ok(fam)
}

/// The antichain of componentwise-maximal members (the generators of a shifted family).
pub fn shifted_generators(fam: &KFamily) -> Vec<Subset> {
    let n = fam.n();
    fam.iter().filter(|&s| upper_covers(s, n).all(|t| !fam.contains(t))).collect()
}

/// Parses `"235,146"` style lists, or `"{1,2,10} {3,4,11}"` once vertices
/// reach 10 (the form [`Subset`] prints).
pub fn parse_generators(text: &str) -> Result<Vec<Subset>> {
    if !text.contains('{') {
        return text.split([',', ' ']).filter(|p| !p.is_empty()).map(Subset::from_digits).collect();
    }
    let mut sets = Vec::new();
    let mut rest = text.trim();
    while let Some(open) = rest.find('{') {
        if !rest[..open].chars().all(|c| c == ',' || c.is_whitespace()) {
            return domain(format!("unexpected {:?} in set list", &rest[..open]));
        }
        let close = rest[open..].find('}').ok_or_else(|| Error::Domain(format!("unclosed brace in {text:?}")))? + open;
        let elements: std::result::Result<Vec<usize>, _> =
            rest[open + 1..close].split(',').map(|v| v.trim()).filter(|v| !v.is_empty()).map(str::parse).collect();
        let elements = elements.map_err(|e| Error::Domain(format!("bad vertex in {text:?}: {e}")))?;
        sets.push(Subset::from_elements(&elements)?);
        rest = &rest[close + 1..];
    }
    if !rest.chars().all(|c| c == ',' || c.is_whitespace()) {
        return domain(format!("trailing {rest:?} in set list"));
    }
    Ok(sets)
}

/// Depth-first enumeration of the order ideals of the Gale order on the
/// `k`-subsets of `[n]`.
///
/// Elements are visited in colex order, which is a linear extension of the
/// Gale order, and each element is either included (allowed only when all of
/// its lower covers already are) or excluded. Every ideal is therefore reached
/// along exactly one path.
pub struct IdealWalker {
    codec: SubsetCodec,
    subsets: Vec<Subset>,
    lower: Vec<Vec<usize>>,
    node_budget: u64,
    nodes: u64,
}

impl IdealWalker {
    pub fn new(n: usize, k: usize) -> Result<IdealWalker> {
        let codec = SubsetCodec::new(n, k)?;
        let subsets: Vec<Subset> = codec.subsets().collect();
        let lower = subsets.iter().map(|&s| lower_covers(s).map(|t| codec.rank(t)).collect()).collect();
        Ok(IdealWalker { codec, subsets, lower, node_budget: DEFAULT_NODE_BUDGET, nodes: 0 })
    }

    pub fn with_node_budget(mut self, budget: u64) -> IdealWalker {
        self.node_budget = budget;
        self
    }

    /// Number of search nodes visited so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Calls `visit` on every ideal, or only on ideals of exactly `size`
    /// members when given.
    pub fn walk(&mut self, size: Option<usize>, mut visit: impl FnMut(&KFamily)) -> Result<()> {
        let mut current = KFamily::empty_with(self.codec);
        self.descend(0, size, &mut current, &mut visit)
    }

    fn descend(
        &mut self,
        pos: usize,
        size: Option<usize>,
        current: &mut KFamily,
        visit: &mut impl FnMut(&KFamily),
    ) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_budget {
            return Err(Error::Budget(format!(
                "shifted-family enumeration on [{}] exceeded {} search nodes",
                self.codec.n(),
                self.node_budget
            )));
        }
        if let Some(m) = size {
            if current.len() == m {
                visit(current);
                return Ok(());
            }
            if current.len() + (self.subsets.len() - pos) < m {
                return Ok(());
            }
        }
        if pos == self.subsets.len() {
            visit(current);
            return Ok(());
        }
        let allowed = self.lower[pos].iter().all(|&r| current.contains_rank(r));
        if allowed {
            let s = self.subsets[pos];
            current.insert(s);
            self.descend(pos + 1, size, current, visit)?;
            current.remove(s);
        }
        self.descend(pos + 1, size, current, visit)
    }
}

/// Every shifted `k`-family with exactly `m` members, on the ground set
/// `[max(m + k - 1, k)]`.
///
/// A shifted family of size `m` never uses a vertex above `m + k - 1`: a member
/// containing `v` forces `{1, .., k-1, w}` into the family for every `k <= w <= v`.
pub fn enumerate_shifted(k: usize, m: usize) -> Result<Vec<KFamily>> {
    enumerate_shifted_with_budget(k, m, DEFAULT_NODE_BUDGET)
}

pub fn enumerate_shifted_with_budget(k: usize, m: usize, node_budget: u64) -> Result<Vec<KFamily>> {
    if k == 0 {
        // the only 0-subset is the empty set
        return match m {
            0 => Ok(vec![KFamily::empty(0, 0)?]),
            1 => Ok(vec![KFamily::complete(0, 0)?]),
            _ => Ok(Vec::new()),
        };
    }
    let n = (m + k).saturating_sub(1).max(k);
    let mut walker = IdealWalker::new(n, k)?.with_node_budget(node_budget);
    let mut out = Vec::new();
    walker.walk(Some(m), |f| out.push(f.clone()))?;
    Ok(out)
}

/// Every shifted `k`-family on `[n]` (all sizes), in enumeration order.
pub fn shifted_families_on(n: usize, k: usize) -> Result<Vec<KFamily>> {
    let mut walker = IdealWalker::new(n, k)?;
    let mut out = Vec::new();
    walker.walk(None, |f| out.push(f.clone()))?;
    Ok(out)
}

/// Brute-force list of shifted families among all `2^C(n,k)` families; test oracle.
pub fn shifted_families_brute_force(n: usize, k: usize) -> Result<BTreeSet<KFamily>> {
    Ok(KFamily::all(n, k)?.filter(is_shifted).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subsets(text: &str) -> Vec<Subset> {
        parse_generators(text).unwrap()
    }

    #[test]
    fn set_lists() {
        let big = Subset::from_elements(&[1, 2, 10]).unwrap();
        assert_eq!(subsets("{1,2,10} {3,4,11}")[0], big);
        assert_eq!(subsets(&format!("{big}, {{3, 4, 11}}")).len(), 2);
        assert_eq!(subsets("123 145,"), subsets("123,145"));
        assert!(parse_generators("{1,2").is_err());
        assert!(parse_generators("12 {3,4}").is_err());
        assert!(parse_generators("1a").is_err());
    }

    #[test]
    fn first_shifted_example() {
        let k = shifted_generate(6, 3, &subsets("235,146")).unwrap();
        let listed: Vec<String> = {
            let mut v: Vec<Subset> = k.members();
            v.sort_by_key(|s| s.elements());
            v.iter().map(|s| s.to_string()).collect()
        };
        assert_eq!(listed, ["123", "124", "125", "126", "134", "135", "136", "145", "146", "234", "235"]);
        assert_eq!(k.degree_sequence(), vec![9, 6, 6, 5, 4, 3]);
        assert!(is_shifted(&k));
        let mut gens = shifted_generators(&k);
        gens.sort();
        assert_eq!(gens, {
            let mut g = subsets("235,146");
            g.sort();
            g
        });
    }

    #[test]
    fn generate_from_456_is_everything_below() {
        let k = shifted_generate(6, 3, &subsets("456")).unwrap();
        let codec = SubsetCodec::new(6, 3).unwrap();
        let top = Subset::from_digits("456").unwrap();
        let brute = codec.subsets().filter(|&s| gale_le(s, top)).count();
        assert_eq!(k.len(), brute);
        assert_eq!(k.len(), 20);
    }

    #[test]
    fn shiftedness_examples() {
        let bipyramid = KFamily::from_digit_strings(5, 3, &["124", "125", "134", "135", "234", "235"]).unwrap();
        assert!(!is_shifted(&bipyramid));
        assert!(is_shifted(&KFamily::empty(5, 3).unwrap()));
        assert!(is_shifted(&KFamily::from_digit_strings(5, 3, &["123"]).unwrap()));
        let minimal = shifted_generate(5, 3, &subsets("123")).unwrap();
        assert_eq!(minimal.len(), 1);
    }

    #[test]
    fn removing_a_generator_shrinks_the_ideal() {
        let gens = subsets("178,239,456");
        let full = shifted_generate(9, 3, &gens).unwrap();
        for skip in 0..gens.len() {
            let rest: Vec<Subset> = gens.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, g)| *g).collect();
            assert!(shifted_generate(9, 3, &rest).unwrap().len() < full.len());
        }
    }

    #[test]
    fn colex_is_a_linear_extension_of_gale() {
        let codec = SubsetCodec::new(7, 3).unwrap();
        let all: Vec<Subset> = codec.subsets().collect();
        for &a in &all {
            for &b in &all {
                if gale_le(a, b) {
                    assert!(a <= b);
                }
            }
        }
    }

    #[test]
    fn small_enumerations() {
        let two_two = enumerate_shifted(2, 2).unwrap();
        assert_eq!(two_two.len(), 1);
        assert_eq!(two_two[0].to_string(), "{12,13}");
        let empty = enumerate_shifted(2, 0).unwrap();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].is_empty());
        let mut three: Vec<String> = enumerate_shifted(2, 3).unwrap().iter().map(|f| f.to_string()).collect();
        three.sort();
        assert_eq!(three, ["{12,13,14}", "{12,13,23}"]);
    }

    #[test]
    fn walker_matches_brute_force() {
        for (n, k) in [(4, 2), (5, 2), (5, 3), (4, 1), (4, 4), (6, 3)] {
            let walked: BTreeSet<KFamily> = shifted_families_on(n, k).unwrap().into_iter().collect();
            let brute = shifted_families_brute_force(n, k).unwrap();
            assert_eq!(walked, brute, "n={n} k={k}");
        }
    }

    #[test]
    fn support_bound_gives_same_counts_as_larger_ground_set() {
        for k in 1..=3 {
            for m in 0..=6 {
                let bounded = enumerate_shifted(k, m).unwrap().len();
                let mut wide = 0usize;
                IdealWalker::new(m + k, k).unwrap().walk(Some(m), |_| wide += 1).unwrap();
                assert_eq!(bounded, wide, "k={k} m={m}");
            }
        }
    }

    #[test]
    fn budget_overflow_is_reported() {
        let err = enumerate_shifted_with_budget(3, 6, 10).unwrap_err();
        assert!(matches!(err, Error::Budget(_)));
    }
}
