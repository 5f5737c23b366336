//! Cube-stack pictures of a `k`-family.
//!
//! The prism over a `(k-1)`-simplex is cut into `k` simplices `σ_1, …, σ_k`,
//! with `σ_j = f_j(σ_k)` where `f_j` moves coordinate `j` to the end. Dilating
//! and shifting those maps gives two disjoint decompositions of lattice boxes,
//! one whose last-coordinate fibers count vertex degrees and one whose
//! first-`(k-1)`-coordinate fibers count subfacet degrees. A family is shifted
//! exactly when its image is an order ideal of the box.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::families::{binomial, is_shifted, IdealWalker, KFamily, Subset, SubsetCodec};

/// Which lattice box a cell set lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CellDomain {
    /// `C([n-1], k-1) × [1, n]`
    Vert,
    /// `C([n], k-1) × [k, n]`
    Subf,
}

/// Variant of the triangulation map `f_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapVariant {
    Plain,
    Vert,
    Subf,
}

/// The map `f_j` (or its shifted versions) on `Z^k`.
#[derive(Clone, Copy, Debug)]
pub struct AffineMap {
    pub j: usize,
    pub k: usize,
    pub variant: MapVariant,
}

impl AffineMap {
    pub fn new(j: usize, k: usize, variant: MapVariant) -> Result<AffineMap> {
        if j == 0 || j > k {
            return domain(format!("map index j = {j} outside 1..={k}"));
        }
        Ok(AffineMap { j, k, variant })
    }

    pub fn apply(&self, x: &[usize]) -> Vec<usize> {
        let (j, k) = (self.j, self.k);
        let mut y: Vec<usize> = Vec::with_capacity(k);
        y.extend_from_slice(&x[..j - 1]);
        for &v in &x[j..] {
            y.push(if self.variant == MapVariant::Vert { v - 1 } else { v });
        }
        let last = x[j - 1] + if self.variant == MapVariant::Subf { k - j } else { 0 };
        y.push(last);
        y
    }

    /// Inverse map; `None` when the result would leave the positive orthant.
    pub fn invert(&self, y: &[usize]) -> Option<Vec<usize>> {
        let (j, k) = (self.j, self.k);
        let moved = match self.variant {
            MapVariant::Subf => y[k - 1].checked_sub(k - j)?,
            _ => y[k - 1],
        };
        let mut x: Vec<usize> = Vec::with_capacity(k);
        x.extend_from_slice(&y[..j - 1]);
        x.push(moved);
        for &v in &y[j - 1..k - 1] {
            x.push(if self.variant == MapVariant::Vert { v + 1 } else { v });
        }
        if x.contains(&0) {
            return None;
        }
        Some(x)
    }
}

/// A finite set of lattice points in one of the two boxes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellSet {
    pub n: usize,
    pub k: usize,
    pub domain: CellDomain,
    pub cells: BTreeSet<Vec<usize>>,
}

impl CellSet {
    pub fn new(n: usize, k: usize, domain: CellDomain) -> Result<CellSet> {
        if k == 0 || k > n {
            return domain_err(n, k);
        }
        Ok(CellSet { n, k, domain, cells: BTreeSet::new() })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, x: &[usize]) -> bool {
        self.cells.contains(x)
    }

    /// Adds a cell, rejecting points outside the box.
    pub fn insert(&mut self, x: Vec<usize>) -> Result<bool> {
        if !self.in_box(&x) {
            return domain(format!("cell {x:?} lies outside the {:?} box for n={}, k={}", self.domain, self.n, self.k));
        }
        Ok(self.cells.insert(x))
    }

    pub fn in_box(&self, x: &[usize]) -> bool {
        if x.len() != self.k {
            return false;
        }
        let head = &x[..self.k - 1];
        let head_max = match self.domain {
            CellDomain::Vert => self.n - 1,
            CellDomain::Subf => self.n,
        };
        let head_ok = head.windows(2).all(|w| w[0] < w[1])
            && head.first().is_none_or(|&a| a >= 1)
            && head.last().is_none_or(|&b| b <= head_max);
        let last = x[self.k - 1];
        let last_ok = match self.domain {
            CellDomain::Vert => (1..=self.n).contains(&last),
            CellDomain::Subf => (self.k..=self.n).contains(&last),
        };
        head_ok && last_ok
    }

    /// Number of cells whose first `k-1` coordinates are `t`.
    pub fn head_fiber(&self, t: &[usize]) -> usize {
        self.cells.iter().filter(|x| &x[..self.k - 1] == t).count()
    }

    /// Number of cells whose last coordinate is `i`.
    pub fn last_fiber(&self, i: usize) -> usize {
        self.cells.iter().filter(|x| x[self.k - 1] == i).count()
    }
}

fn domain_err<T>(n: usize, k: usize) -> Result<T> {
    domain(format!("cube decompositions need 1 <= k <= n, got n={n}, k={k}"))
}

fn tuple(s: Subset) -> Vec<usize> {
    s.elements()
}

fn in_sigma(domain: CellDomain, j: usize, n: usize, k: usize, x: &[usize]) -> bool {
    let head = &x[..k - 1];
    let last = x[k - 1];
    if j == k {
        return x.windows(2).all(|w| w[0] < w[1]) && x[0] >= 1 && last <= n;
    }
    let below = if j >= 2 { head[j - 2] } else { 0 };
    let above = head[j - 1];
    match domain {
        CellDomain::Vert => below < last && last <= above,
        CellDomain::Subf => last >= k - j && below < last - (k - j) && last - (k - j) < above,
    }
}

/// The unique `j` with `x ∈ σ_j` of the given decomposition, testing `j = k, k-1, …, 1`.
pub fn classify_cell(domain: CellDomain, n: usize, k: usize, x: &[usize]) -> Result<usize> {
    let hits: Vec<usize> = (1..=k).rev().filter(|&j| in_sigma(domain, j, n, k, x)).collect();
    match hits.as_slice() {
        [j] => Ok(*j),
        [] => Err(Error::InternalConsistency(format!("cell {x:?} lies in no simplex of the {domain:?} decomposition"))),
        _ => Err(Error::InternalConsistency(format!("cell {x:?} lies in simplices {hits:?}"))),
    }
}

fn pi(fam: &KFamily, domain: CellDomain) -> Result<CellSet> {
    let (n, k) = (fam.n(), fam.k());
    let mut out = CellSet::new(n, k, domain)?;
    let variant = match domain {
        CellDomain::Vert => MapVariant::Vert,
        CellDomain::Subf => MapVariant::Subf,
    };
    for j in 1..=k {
        let f = AffineMap::new(j, k, variant)?;
        for s in fam.iter() {
            let y = f.apply(&tuple(s));
            if !out.insert(y.clone())? {
                return Err(Error::InternalConsistency(format!("image collision at {y:?} (j = {j}, set {s})")));
            }
        }
    }
    Ok(out)
}

/// `π^vert(K)`: the union of the images `f_j^vert(K)`.
pub fn pi_vert(fam: &KFamily) -> Result<CellSet> {
    pi(fam, CellDomain::Vert)
}

/// `π^subf(K)`: the union of the images `f_j^subf(K)`.
pub fn pi_subf(fam: &KFamily) -> Result<CellSet> {
    pi(fam, CellDomain::Subf)
}

/// Whether lowering any coordinate of any cell by one, when that stays in the
/// box, lands back in the set.
pub fn is_componentwise_ideal(c: &CellSet) -> bool {
    c.cells.iter().all(|x| {
        (0..c.k).all(|p| {
            if x[p] == 0 {
                return true;
            }
            let mut y = x.clone();
            y[p] -= 1;
            !c.in_box(&y) || c.contains(&y)
        })
    })
}

/// `λ(π)`: every head fiber is pushed down to an initial segment of `[k, n]`.
pub fn pushdown(c: &CellSet) -> Result<CellSet> {
    if c.domain != CellDomain::Subf {
        return domain("pushdown is defined on subfacet cell sets");
    }
    let mut fibers: BTreeMap<&[usize], usize> = BTreeMap::new();
    for x in &c.cells {
        *fibers.entry(&x[..c.k - 1]).or_default() += 1;
    }
    let mut out = CellSet::new(c.n, c.k, c.domain)?;
    for (head, count) in fibers {
        for h in 0..count {
            let mut y = head.to_vec();
            y.push(c.k + h);
            out.insert(y)?;
        }
    }
    Ok(out)
}

/// `α_j = (f_j^subf)^{-1}(λ ∩ σ_j^subf)` for `j = 1..k` (index 0 holds `α_1`).
pub fn alpha_sets(fam: &KFamily) -> Result<Vec<KFamily>> {
    let (n, k) = (fam.n(), fam.k());
    let lambda = pushdown(&pi_subf(fam)?)?;
    let mut alphas: Vec<KFamily> = (0..k).map(|_| KFamily::empty(n, k)).collect::<Result<_>>()?;
    for x in &lambda.cells {
        let j = classify_cell(CellDomain::Subf, n, k, x)?;
        let f = AffineMap::new(j, k, MapVariant::Subf)?;
        let pre = f
            .invert(x)
            .ok_or_else(|| Error::InternalConsistency(format!("cell {x:?} has no preimage under f_{j}")))?;
        let s = Subset::from_elements(&pre)?;
        if s.len() != k || !alphas[j - 1].codec().accepts(s) {
            return Err(Error::InternalConsistency(format!("preimage {pre:?} of {x:?} is not a {k}-subset of [{n}]")));
        }
        alphas[j - 1].insert(s);
    }
    Ok(alphas)
}

/// The four conditions that each characterize shiftedness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftedEquivalence {
    pub shifted: bool,
    pub subf_ideal: bool,
    pub vert_ideal: bool,
    pub alphas_equal: bool,
    /// Indices `j` with `α_j ≠ K`.
    pub failing_j: Vec<usize>,
}

/// Evaluates all four conditions and errors if they disagree.
pub fn shifted_equivalence_check(fam: &KFamily) -> Result<ShiftedEquivalence> {
    let alphas = alpha_sets(fam)?;
    let failing_j: Vec<usize> = alphas.iter().enumerate().filter(|(_, a)| *a != fam).map(|(i, _)| i + 1).collect();
    let report = ShiftedEquivalence {
        shifted: is_shifted(fam),
        subf_ideal: is_componentwise_ideal(&pi_subf(fam)?),
        vert_ideal: is_componentwise_ideal(&pi_vert(fam)?),
        alphas_equal: failing_j.is_empty(),
        failing_j,
    };
    let all = [report.shifted, report.subf_ideal, report.vert_ideal, report.alphas_equal];
    if all.iter().any(|&b| b != report.shifted) {
        return Err(Error::InternalConsistency(format!("shiftedness characterizations disagree on {fam}: {report:?}")));
    }
    Ok(report)
}

/// Vertex degree of `i` read off as a fiber of `π^vert(K)`.
pub fn fiber_degree_vert(fam: &KFamily, i: usize) -> Result<usize> {
    if i == 0 || i > fam.n() {
        return domain(format!("vertex {i} outside [{}]", fam.n()));
    }
    Ok(pi_vert(fam)?.last_fiber(i))
}

/// Subfacet degree of the `(k-1)`-set `t` read off as a fiber of `π^subf(K)`.
pub fn fiber_degree_subf(fam: &KFamily, t: Subset) -> Result<usize> {
    if t.len() + 1 != fam.k() || t.max().is_some_and(|m| m > fam.n()) {
        return domain(format!("{t} is not a {}-subset of [{}]", fam.k() - 1, fam.n()));
    }
    Ok(pi_subf(fam)?.head_fiber(&tuple(t)))
}

/// Largest `C(n, k-1)` for which ideal enumeration is attempted.
pub const IDEAL_POSET_LIMIT: u64 = 20;

/// An order ideal of `C([n], k-1)` on which `Σ d_A > Σ d_B`.
#[derive(Clone, Debug, Serialize)]
pub struct IdealViolation {
    pub generators: Vec<Subset>,
    pub lhs: usize,
    pub rhs: usize,
}

/// `(Σ_{S∈I} d_A(S), Σ_{S∈I} d_B(S))` for a `(k-1)`-family `I`.
pub fn ideal_sums(a: &KFamily, b: &KFamily, ideal: &KFamily) -> Result<(usize, usize)> {
    let k = a.k();
    let da = a.i_degree_function(k - 1)?;
    let db = b.i_degree_function(k - 1)?;
    Ok((ideal.iter().map(|s| da[&s]).sum(), ideal.iter().map(|s| db[&s]).sum()))
}

/// Whether `Σ_{S∈I} d_A^{(k-1)}(S) <= Σ_{S∈I} d_B^{(k-1)}(S)` for every order
/// ideal `I` of the componentwise order on `C([n], k-1)`, i.e. whether `B`
/// weakly majorizes `A` in the generalized sense. Returns a violating ideal
/// when it fails.
pub fn ideal_majorization_violation(a: &KFamily, b: &KFamily) -> Result<Option<IdealViolation>> {
    if a.n() != b.n() || a.k() != b.k() {
        return domain("families must share n and k");
    }
    let (n, k) = (a.n(), a.k());
    if k == 0 {
        return domain("k must be positive");
    }
    if binomial(n, k - 1) > IDEAL_POSET_LIMIT {
        return Err(Error::Budget(format!(
            "C({n},{}) = {} exceeds the ideal-enumeration limit {IDEAL_POSET_LIMIT}",
            k - 1,
            binomial(n, k - 1)
        )));
    }
    let codec = SubsetCodec::new(n, k - 1)?;
    let da = a.i_degree_function(k - 1)?;
    let db = b.i_degree_function(k - 1)?;
    let wa: Vec<usize> = codec.subsets().map(|s| da[&s]).collect();
    let wb: Vec<usize> = codec.subsets().map(|s| db[&s]).collect();
    let mut found: Option<IdealViolation> = None;
    IdealWalker::new(n, k - 1)?.walk(None, |ideal| {
        if found.is_some() {
            return;
        }
        let lhs: usize = ideal.ranks().map(|r| wa[r]).sum();
        let rhs: usize = ideal.ranks().map(|r| wb[r]).sum();
        if lhs > rhs {
            found = Some(IdealViolation { generators: crate::families::shifted::shifted_generators(ideal), lhs, rhs });
        }
    })?;
    Ok(found)
}

pub fn generalized_weak_majorizes(a: &KFamily, b: &KFamily) -> Result<bool> {
    Ok(ideal_majorization_violation(a, b)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degseq::{alpha_beta, weakly_majorizes};
    use crate::families::{shifted_families_on, shifted_generate};

    fn fam(n: usize, k: usize, sets: &[&str]) -> KFamily {
        KFamily::from_digit_strings(n, k, sets).unwrap()
    }

    #[test]
    fn maps_invert() {
        let k = 4;
        for s in SubsetCodec::new(7, k).unwrap().subsets() {
            let x = s.elements();
            for j in 1..=k {
                for v in [MapVariant::Plain, MapVariant::Vert, MapVariant::Subf] {
                    let f = AffineMap::new(j, k, v).unwrap();
                    assert_eq!(f.invert(&f.apply(&x)).unwrap(), x);
                    if j == k {
                        assert_eq!(f.apply(&x), x);
                    }
                }
            }
        }
    }

    #[test]
    fn single_triple_by_hand() {
        let c = pi_subf(&fam(3, 3, &["123"])).unwrap();
        let want: BTreeSet<Vec<usize>> = [vec![2, 3, 3], vec![1, 3, 3], vec![1, 2, 3]].into_iter().collect();
        assert_eq!(c.cells, want);
        let v = pi_vert(&fam(3, 3, &["123"])).unwrap();
        let want: BTreeSet<Vec<usize>> = [vec![1, 2, 1], vec![1, 2, 2], vec![1, 2, 3]].into_iter().collect();
        assert_eq!(v.cells, want);
    }

    #[test]
    fn decomposition_example() {
        let k = fam(5, 3, &["123", "124", "134", "234", "125"]);
        let v = pi_vert(&k).unwrap();
        let s = pi_subf(&k).unwrap();
        assert_eq!((v.len(), s.len()), (15, 15));
        assert!(is_componentwise_ideal(&v) && is_componentwise_ideal(&s));
        let d = k.degree_sequence();
        for i in 1..=5 {
            assert_eq!(v.last_fiber(i), d[i - 1]);
        }
        assert_eq!(pushdown(&s).unwrap(), s);
    }

    #[test]
    fn empty_family() {
        let e = KFamily::empty(5, 3).unwrap();
        assert!(pi_vert(&e).unwrap().is_empty());
        assert!(is_componentwise_ideal(&pi_subf(&e).unwrap()));
        assert_eq!(fiber_degree_vert(&e, 2).unwrap(), 0);
    }

    #[test]
    fn non_shifted_vert_image_is_not_ideal() {
        assert!(!is_componentwise_ideal(&pi_vert(&fam(4, 3, &["124"])).unwrap()));
    }

    #[test]
    fn pushdown_single_cell_and_fibers() {
        let mut c = CellSet::new(5, 3, CellDomain::Subf).unwrap();
        c.insert(vec![2, 4, 5]).unwrap();
        assert_eq!(pushdown(&c).unwrap().cells.into_iter().collect::<Vec<_>>(), vec![vec![2, 4, 3]]);

        let p = pi_subf(&fam(4, 3, &["124"])).unwrap();
        let l = pushdown(&p).unwrap();
        assert_eq!(p.len(), l.len());
        for t in SubsetCodec::new(4, 2).unwrap().subsets() {
            assert_eq!(p.head_fiber(&t.elements()), l.head_fiber(&t.elements()));
        }
        assert!(l.cells.iter().all(|x| x[2] == 3));
    }

    #[test]
    fn alpha_examples() {
        let show = |a: &[KFamily]| a.iter().map(|f| f.to_string()).collect::<Vec<_>>();
        let a4 = alpha_sets(&fam(5, 3, &["123", "145"])).unwrap();
        assert_eq!(a4[0], fam(5, 3, &["123", "145"]));
        assert_eq!(a4[1], fam(5, 3, &["123", "124", "125"]));
        assert_eq!(a4[2], fam(5, 3, &["123"]));

        let a5 = alpha_sets(&fam(6, 3, &["123", "456"])).unwrap();
        assert_eq!(a5[0], fam(6, 3, &["123", "145", "146", "156"]), "{:?}", show(&a5));
        assert_eq!(a5[1], fam(6, 3, &["123"]));
        assert_eq!(a5[2], fam(6, 3, &["123"]));

        let a6 = alpha_sets(&fam(5, 3, &["123", "124", "135"])).unwrap();
        assert_eq!(a6[0], fam(5, 3, &["123", "124", "135"]));
        assert_eq!(a6[1], fam(5, 3, &["123", "125", "124"]));
        assert_eq!(a6[2], fam(5, 3, &["123", "124", "134"]));
    }

    #[test]
    fn failing_indices() {
        let check = |sets: &[&str]| shifted_equivalence_check(&fam(4, 3, sets)).unwrap();
        let r1 = check(&["124"]);
        assert!(!r1.shifted);
        assert_eq!(r1.failing_j, vec![3]);
        assert_eq!(check(&["123", "134"]).failing_j, vec![2]);
        assert_eq!(check(&["123", "124", "234"]).failing_j, vec![1]);
    }

    #[test]
    fn four_way_equivalence_exhaustive() {
        for (n, k) in [(5, 3), (5, 2), (4, 1), (4, 4)] {
            for f in KFamily::all(n, k).unwrap() {
                let v = pi_vert(&f).unwrap();
                let s = pi_subf(&f).unwrap();
                assert_eq!(v.len(), k * f.len());
                assert_eq!(s.len(), k * f.len());
                shifted_equivalence_check(&f).unwrap();
                for a in alpha_sets(&f).unwrap() {
                    assert_eq!(a.n(), n);
                }
            }
        }
    }

    #[test]
    fn fibers_are_degrees() {
        for f in KFamily::all(5, 3).unwrap() {
            let v = pi_vert(&f).unwrap();
            let s = pi_subf(&f).unwrap();
            let d = f.degree_sequence();
            for i in 1..=5 {
                assert_eq!(v.last_fiber(i), d[i - 1]);
            }
            for (t, deg) in f.i_degree_function(2).unwrap() {
                assert_eq!(s.head_fiber(&t.elements()), deg);
            }
        }
        let g = shifted_generate(6, 3, &[Subset::from_digits("235").unwrap(), Subset::from_digits("146").unwrap()])
            .unwrap();
        assert_eq!(fiber_degree_vert(&g, 1).unwrap(), 9);
        let h = fam(4, 3, &["123", "124"]);
        assert_eq!(fiber_degree_subf(&h, Subset::from_digits("12").unwrap()).unwrap(), 2);
    }

    #[test]
    fn graphs_reduce_to_merris_roby() {
        for n in 2..=6 {
            for g in shifted_families_on(n, 2).unwrap() {
                let v = pi_vert(&g).unwrap();
                let mut rows = vec![0usize; n + 1];
                let mut cols = vec![0usize; n + 1];
                for x in &v.cells {
                    match classify_cell(CellDomain::Vert, n, 2, x).unwrap() {
                        1 => rows[x[1]] += 1,
                        _ => cols[x[0]] += 1,
                    }
                }
                let nonzero = |w: Vec<usize>| w.into_iter().filter(|&c| c > 0).collect::<Vec<_>>();
                let (alpha, beta) = alpha_beta(&g.degree_sequence());
                assert_eq!(nonzero(rows), alpha, "{g}");
                assert_eq!(nonzero(cols), nonzero(beta), "{g}");
            }
        }
    }

    #[test]
    fn k6_alpha3_not_below_alpha2() {
        let a6 = alpha_sets(&fam(5, 3, &["123", "124", "135"])).unwrap();
        assert!(!generalized_weak_majorizes(&a6[2], &a6[1]).unwrap());
        let ideal = shifted_generate(5, 2, &[Subset::from_digits("34").unwrap()]).unwrap();
        let (lhs, rhs) = ideal_sums(&a6[2], &a6[1], &ideal).unwrap();
        assert!(lhs > rhs, "{lhs} <= {rhs}");
        assert!(generalized_weak_majorizes(&a6[1], &a6[1]).unwrap());
    }

    #[test]
    fn graphs_match_prefix_majorization() {
        for n in 2..=5 {
            let all: Vec<KFamily> = KFamily::all(n, 2).unwrap().collect();
            for a in all.iter().step_by(3) {
                for b in all.iter().step_by(5) {
                    let want = weakly_majorizes(&b.degree_sequence(), &a.degree_sequence());
                    assert_eq!(generalized_weak_majorizes(a, b).unwrap(), want, "{a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn ideal_limit() {
        let a = KFamily::empty(7, 3).unwrap();
        assert!(matches!(generalized_weak_majorizes(&a, &a), Err(Error::Budget(_))));
    }
}
