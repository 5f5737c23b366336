use std::collections::BTreeMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::codec::{Subset, SubsetCodec};
use crate::error::{domain, Result};

/// A `k`-family on `[n]`: a set of distinct `k`-subsets, stored as a bitset
/// over colex ranks.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KFamily {
    codec: SubsetCodec,
    members: FixedBitSet,
    size: usize,
}

/// Vertex-degree vector, indexed from vertex 1.
pub type DegreeSequence = Vec<usize>;

impl KFamily {
    pub fn empty(n: usize, k: usize) -> Result<KFamily> {
        let codec = SubsetCodec::new(n, k)?;
        Ok(KFamily::empty_with(codec))
    }

    pub fn empty_with(codec: SubsetCodec) -> KFamily {
        KFamily { codec, members: FixedBitSet::with_capacity(codec.len()), size: 0 }
    }

    /// Every `k`-subset of `[n]`.
    pub fn complete(n: usize, k: usize) -> Result<KFamily> {
        let mut fam = KFamily::empty(n, k)?;
        fam.members.insert_range(..);
        fam.size = fam.codec.len();
        Ok(fam)
    }

    pub fn from_subsets(n: usize, k: usize, sets: impl IntoIterator<Item = Subset>) -> Result<KFamily> {
        let mut fam = KFamily::empty(n, k)?;
        for s in sets {
            if !fam.codec.accepts(s) {
                return domain(format!("{s} is not a {k}-subset of [{n}]"));
            }
            fam.insert(s);
        }
        Ok(fam)
    }

    /// Builds a family from digit strings such as `["123", "145"]`.
    pub fn from_digit_strings(n: usize, k: usize, sets: &[&str]) -> Result<KFamily> {
        let subsets = sets.iter().map(|s| Subset::from_digits(s)).collect::<Result<Vec<_>>>()?;
        KFamily::from_subsets(n, k, subsets)
    }

    pub fn from_lists(n: usize, k: usize, sets: &[Vec<usize>]) -> Result<KFamily> {
        let subsets = sets.iter().map(|s| Subset::from_elements(s)).collect::<Result<Vec<_>>>()?;
        KFamily::from_subsets(n, k, subsets)
    }

    /// The family whose member ranks are the set bits of `mask`.
    pub fn from_rank_mask(codec: SubsetCodec, mask: u64) -> KFamily {
        let mut fam = KFamily::empty_with(codec);
        let mut bits = mask;
        while bits != 0 {
            let r = bits.trailing_zeros() as usize;
            fam.members.insert(r);
            bits &= bits - 1;
        }
        fam.size = mask.count_ones() as usize;
        fam
    }

    /// All `2^C(n,k)` families on `[n]`; only sensible for tiny `C(n,k)`.
    pub fn all(n: usize, k: usize) -> Result<impl Iterator<Item = KFamily>> {
        let codec = SubsetCodec::new(n, k)?;
        if codec.len() > 30 {
            return Err(crate::Error::Budget(format!("2^{} families on [{n}] is too many to list", codec.len())));
        }
        Ok((0u64..(1u64 << codec.len())).map(move |mask| KFamily::from_rank_mask(codec, mask)))
    }

    pub fn codec(&self) -> SubsetCodec {
        self.codec
    }

    pub fn n(&self) -> usize {
        self.codec.n()
    }

    pub fn k(&self) -> usize {
        self.codec.k()
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.codec.accepts(s) && self.members.contains(self.codec.rank(s))
    }

    pub fn contains_rank(&self, r: usize) -> bool {
        self.members.contains(r)
    }

    /// Inserts `s`, returning whether it was new.
    pub fn insert(&mut self, s: Subset) -> bool {
        let r = self.codec.rank(s);
        if self.members.put(r) {
            false
        } else {
            self.size += 1;
            true
        }
    }

    /// Removes `s`, returning whether it was present.
    pub fn remove(&mut self, s: Subset) -> bool {
        if !self.codec.accepts(s) {
            return false;
        }
        let r = self.codec.rank(s);
        if self.members.contains(r) {
            self.members.set(r, false);
            self.size -= 1;
            true
        } else {
            false
        }
    }

    /// Members in colex order.
    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.members.ones().map(move |r| self.codec.unrank(r))
    }

    pub fn ranks(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn members(&self) -> Vec<Subset> {
        self.iter().collect()
    }

    /// `{k`-subsets of `[n]} \ K`.
    pub fn complement(&self) -> KFamily {
        let mut members = self.members.clone();
        members.toggle_range(..);
        KFamily { codec: self.codec, size: self.codec.len() - self.size, members }
    }

    /// `d_i(K) = |{S in K : i in S}|`.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d = vec![0usize; self.n()];
        for s in self.iter() {
            for v in s.iter() {
                d[v - 1] += 1;
            }
        }
        d
    }

    /// Applies a vertex relabelling; `perm[v-1]` is the new label of `v`.
    pub fn relabel(&self, perm: &[usize]) -> Result<KFamily> {
        if perm.len() != self.n() {
            return domain("permutation length differs from n");
        }
        let mut out = KFamily::empty_with(self.codec);
        for s in self.iter() {
            let image = Subset::from_elements(&s.iter().map(|v| perm[v - 1]).collect::<Vec<_>>())?;
            out.insert(image);
        }
        Ok(out)
    }

    /// The link `N_K(T) = {S : S ∪ T ∈ K, S ∩ T = ∅}`.
    pub fn link(&self, t: Subset) -> Result<Vec<Subset>> {
        if t.max().is_some_and(|m| m > self.n()) {
            return domain(format!("{t} is not a subset of [{}]", self.n()));
        }
        if t.len() > self.k() {
            return Ok(Vec::new());
        }
        Ok(self.iter().filter(|s| t.is_subset_of(*s)).map(|s| s.minus(t)).collect())
    }

    /// The `i`-degree function `T ↦ |N_K(T)|` over all `i`-subsets `T` of `[n]`.
    pub fn i_degree_function(&self, i: usize) -> Result<BTreeMap<Subset, usize>> {
        if i > self.k() {
            return domain(format!("i = {i} exceeds k = {}", self.k()));
        }
        let codec = SubsetCodec::new(self.n(), i)?;
        let mut out: BTreeMap<Subset, usize> = codec.subsets().map(|t| (t, 0)).collect();
        for s in self.iter() {
            // every i-subset of s
            for t in SubsetCodec::new(s.len(), i)?.subsets() {
                let elems = s.elements();
                let image = Subset(t.iter().fold(0u64, |acc, p| acc | 1u64 << (elems[p - 1] - 1)));
                *out.get_mut(&image).expect("i-subset of a member lies in [n]") += 1;
            }
        }
        Ok(out)
    }

    /// Open neighborhood `N_K(i)` as a set of `(k-1)`-subsets.
    pub fn open_neighborhood(&self, i: usize) -> Vec<Subset> {
        self.iter().filter(|s| s.contains(i)).map(|s| s.without(i)).collect()
    }

    /// Closed neighborhood `N_K[i] = N_K(i) ∪ {A ∋ i : A ∪ {j} ∈ K for some j}`.
    pub fn closed_neighborhood(&self, i: usize) -> Vec<Subset> {
        let mut out: Vec<Subset> = self.open_neighborhood(i);
        for s in self.iter().filter(|s| s.contains(i)) {
            for j in s.iter().filter(|&j| j != i) {
                out.push(s.without(j));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Replaces member `remove` by non-member `add` in place.
    pub(crate) fn exchange(&mut self, remove: Subset, add: Subset) {
        let removed = self.remove(remove);
        let added = self.insert(add);
        debug_assert!(removed && added);
    }
}

impl fmt::Debug for KFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for KFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|s| s.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// JSON form: `{"n": 6, "k": 3, "members": [[1,2,3], ...]}` with members in colex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub n: usize,
    pub k: usize,
    pub members: Vec<Vec<usize>>,
}

impl From<&KFamily> for FamilyJson {
    fn from(fam: &KFamily) -> FamilyJson {
        FamilyJson { n: fam.n(), k: fam.k(), members: fam.iter().map(|s| s.elements()).collect() }
    }
}

impl TryFrom<FamilyJson> for KFamily {
    type Error = crate::Error;
    fn try_from(json: FamilyJson) -> Result<KFamily> {
        KFamily::from_lists(json.n, json.k, &json.members)
    }
}

impl Serialize for KFamily {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FamilyJson::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for KFamily {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let json = FamilyJson::deserialize(deserializer)?;
        KFamily::try_from(json).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, k: usize, sets: &[&str]) -> KFamily {
        KFamily::from_digit_strings(n, k, sets).unwrap()
    }

    #[test]
    fn degree_sequences() {
        let path = fam(4, 2, &["12", "23", "34"]);
        assert_eq!(path.degree_sequence(), vec![1, 2, 2, 1]);
        assert_eq!(KFamily::empty(4, 2).unwrap().degree_sequence(), vec![0; 4]);
    }

    #[test]
    fn link_examples() {
        let k = fam(5, 3, &["123", "124", "125"]);
        let t = Subset::from_digits("12").unwrap();
        let link: Vec<String> = k.link(t).unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(link, vec!["3", "4", "5"]);
        // full-size T in K gives {∅}
        assert_eq!(k.link(Subset::from_digits("124").unwrap()).unwrap(), vec![Subset::EMPTY]);
        let tri = fam(4, 2, &["12", "13", "23"]);
        assert!(tri.link(Subset::singleton(4)).unwrap().is_empty());
        assert!(tri.link(Subset::singleton(9)).is_err());
    }

    #[test]
    fn i_degree_functions() {
        let k4 = fam(4, 3, &["123", "124", "134", "234"]);
        let d2 = k4.i_degree_function(2).unwrap();
        assert_eq!(d2.len(), 6);
        assert!(d2.values().all(|&c| c == 2));
        let d3 = k4.i_degree_function(3).unwrap();
        assert!(d3.values().all(|&c| c == 1));
        assert!(k4.i_degree_function(4).is_err());
        let d0 = k4.i_degree_function(0).unwrap();
        assert_eq!(d0[&Subset::EMPTY], 4);
    }

    #[test]
    fn closed_neighborhoods() {
        let k = fam(3, 2, &["12", "13"]);
        let n1: Vec<String> = k.closed_neighborhood(1).iter().map(|s| s.to_string()).collect();
        assert_eq!(n1, vec!["1", "2", "3"]);
        let k = fam(3, 3, &["123"]);
        let n1: Vec<String> = k.closed_neighborhood(1).iter().map(|s| s.to_string()).collect();
        assert_eq!(n1, vec!["12", "13", "23"]);
        assert!(KFamily::empty(3, 2).unwrap().closed_neighborhood(1).is_empty());
    }

    #[test]
    fn json_roundtrip_is_colex_sorted() {
        let k = fam(6, 3, &["235", "146", "123"]);
        let text = serde_json::to_string(&k).unwrap();
        assert_eq!(text, r#"{"n":6,"k":3,"members":[[1,2,3],[2,3,5],[1,4,6]]}"#);
        let back: KFamily = serde_json::from_str(&text).unwrap();
        assert_eq!(back, k);
        assert!(serde_json::from_str::<KFamily>(r#"{"n":3,"k":2,"members":[[1,4]]}"#).is_err());
    }
}
