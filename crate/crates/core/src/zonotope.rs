//! The zonotope `D_n(k)`: the Minkowski sum of the segments `[0, χ_S]` over all
//! `k`-subsets `S` of `[n]`, i.e. the convex hull of all degree sequences.

use std::collections::HashSet;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::threshold::is_threshold;
use crate::degseq::partition::rearrangements;
use crate::degseq::{count_realizations, find_realizations, sorted_degree_sequences};
use crate::error::{domain, Result};
use crate::families::{binomial, KFamily, Subset, SubsetCodec};
use crate::lp::{feasible, maximize, q, Feasibility, Optimum, Q};

/// Generators of `D_n(k)`.
#[derive(Clone, Copy, Debug)]
pub struct ZonotopeSpec {
    pub n: usize,
    pub k: usize,
}

impl ZonotopeSpec {
    pub fn new(n: usize, k: usize) -> Result<ZonotopeSpec> {
        SubsetCodec::new(n, k)?;
        Ok(ZonotopeSpec { n, k })
    }

    pub fn generators(&self) -> impl Iterator<Item = Subset> {
        SubsetCodec::new(self.n, self.k).expect("validated in new").subsets()
    }

    fn check(&self, d: &[usize]) -> Result<()> {
        if d.len() != self.n {
            return domain(format!("vector has {} entries, expected {}", d.len(), self.n));
        }
        Ok(())
    }

    /// Whether `d = Σ λ_S χ_S` for some `0 <= λ <= 1`, decided exactly.
    pub fn membership(&self, d: &[usize]) -> Result<bool> {
        self.check(d)?;
        if self.support_cut(d) {
            return Ok(false);
        }
        let (m, r) = self.fiber_system(d);
        Ok(matches!(feasible(&m, &r), Feasibility::Feasible(_)))
    }

    /// `{Σ λ_S χ_S = d, λ_S + μ_S = 1, λ, μ >= 0}` with variables `(λ, μ)`.
    fn fiber_system(&self, d: &[usize]) -> (Vec<Vec<Q>>, Vec<Q>) {
        let gens: Vec<Subset> = self.generators().collect();
        let g = gens.len();
        let mut m = Vec::with_capacity(self.n + g);
        let mut r = Vec::with_capacity(self.n + g);
        for v in 1..=self.n {
            let mut row = vec![Q::zero(); 2 * g];
            for (c, s) in gens.iter().enumerate() {
                if s.contains(v) {
                    row[c] = Q::one();
                }
            }
            m.push(row);
            r.push(q(d[v - 1] as i64));
        }
        for c in 0..g {
            let mut row = vec![Q::zero(); 2 * g];
            row[c] = Q::one();
            row[g + c] = Q::one();
            m.push(row);
            r.push(Q::one());
        }
        (m, r)
    }

    /// True when a direction `χ_A - χ_B` (top `a` against bottom `b` entries of
    /// `d`) already separates `d` from the zonotope: its value at `d` exceeds
    /// the support function `Σ_S max(0, w(χ_S))`.
    fn support_cut(&self, d: &[usize]) -> bool {
        let n = self.n;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(d[i]));
        let gens: Vec<Subset> = self.generators().collect();
        for a in 0..=n {
            for b in 0..=n - a {
                if a + b == 0 {
                    continue;
                }
                let mut w = vec![0i64; n];
                order[..a].iter().for_each(|&i| w[i] = 1);
                order[n - b..].iter().for_each(|&i| w[i] = -1);
                let at_d: i64 = (0..n).map(|i| w[i] * d[i] as i64).sum();
                let support: i64 = gens.iter().map(|s| s.iter().map(|v| w[v - 1]).sum::<i64>().max(0)).sum();
                if at_d > support {
                    return true;
                }
            }
        }
        false
    }

    /// Vertex test through the equivalence chain: a unique realization that is threshold.
    pub fn is_vertex(&self, d: &[usize]) -> Result<bool> {
        self.check(d)?;
        if count_realizations(d, self.k, Some(2)) != 1 {
            return Ok(false);
        }
        let fam = find_realizations(d, self.k, 1)?.pop().expect("one realization");
        Ok(is_threshold(&fam).is_some())
    }

    /// Geometric vertex test: `d` is a vertex exactly when its fiber in the cube
    /// `[0,1]^{C(n,k)}` is a single point (necessarily a 0/1 point).
    pub fn is_vertex_geometric(&self, d: &[usize]) -> Result<bool> {
        self.check(d)?;
        let (m, r) = self.fiber_system(d);
        let Feasibility::Feasible(point) = feasible(&m, &r) else {
            return Ok(false);
        };
        let g = point.len() / 2;
        let lambda = &point[..g];
        if lambda.iter().any(|x| !x.is_zero() && !x.is_one()) {
            return Ok(false);
        }
        // maximize the distance from the 0/1 point within the fiber
        let c: Vec<Q> = (0..2 * g)
            .map(|j| if j >= g { Q::zero() } else if lambda[j].is_one() { q(-1) } else { Q::one() })
            .collect();
        let ones = lambda.iter().filter(|x| x.is_one()).count() as i64;
        match maximize(&m, &r, &c) {
            Optimum::Optimal(v, _) => Ok(v == q(-ones)),
            _ => unreachable!("the fiber is nonempty and bounded"),
        }
    }
}

pub fn membership(d: &[usize], k: usize) -> Result<bool> {
    ZonotopeSpec::new(d.len(), k)?.membership(d)
}

pub fn is_vertex(d: &[usize], k: usize) -> Result<bool> {
    ZonotopeSpec::new(d.len(), k)?.is_vertex(d)
}

/// Koren's inequalities `Σ_S d - Σ_T d <= |S|(n-1-|T|)` over disjoint `S, T`
/// (for `k = 2`). For each pair of sizes the worst case takes `S` as the
/// largest and `T` as the smallest entries.
pub fn koren_system(d: &[usize]) -> bool {
    let n = d.len() as i64;
    let mut sorted: Vec<i64> = d.iter().map(|&x| x as i64).collect();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let len = sorted.len();
    for s in 0..=len {
        let top: i64 = sorted[..s].iter().sum();
        for t in 0..=len - s {
            let bottom: i64 = sorted[len - t..].iter().sum();
            if top - bottom > s as i64 * (n - 1 - t as i64) {
                return false;
            }
        }
    }
    true
}

/// Erdős–Gallai: `Σ_{i<=r} d_i <= r(r-1) + Σ_{i>r} min(r, d_i)` for sorted `d` with even sum.
pub fn erdos_gallai(d: &[usize]) -> bool {
    let mut s: Vec<usize> = d.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    if s.iter().sum::<usize>() % 2 != 0 {
        return false;
    }
    (1..=s.len()).all(|r| {
        let lhs: usize = s[..r].iter().sum();
        let rhs = r * (r - 1) + s[r..].iter().map(|&x| x.min(r)).sum::<usize>();
        lhs <= rhs
    })
}

/// A lattice point of `D_n(k)` with coordinate sum divisible by `k` that is not
/// a degree sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hole {
    pub vector: Vec<usize>,
    /// Number of distinct rearrangements, all of which are holes too.
    pub orbit: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct HolesReport {
    pub n: usize,
    pub k: usize,
    pub candidates: usize,
    pub realizable: usize,
    pub lp_checked: usize,
    pub holes: Vec<Hole>,
}

/// Scans weakly decreasing candidates with entries in `[0, C(n-1,k-1)]` and sum
/// divisible by `k`. Realizable ones come from the shifted-family down-sets;
/// the rest are tested for membership.
pub fn holes_report(n: usize, k: usize) -> Result<HolesReport> {
    let spec = ZonotopeSpec::new(n, k)?;
    let realizable: HashSet<Vec<usize>> = sorted_degree_sequences(n, k)?;
    let cap = if k == 0 { 0 } else { binomial(n - 1, k - 1) as usize };
    let mut candidates = Vec::new();
    let mut cur = Vec::with_capacity(n);
    weakly_decreasing(n, cap, &mut cur, &mut candidates);
    let candidates: Vec<Vec<usize>> =
        candidates.into_iter().filter(|d| k == 0 || d.iter().sum::<usize>() % k == 0).collect();
    let unrealized: Vec<&Vec<usize>> = candidates.iter().filter(|d| !realizable.contains(*d)).collect();
    let verdicts: Vec<Result<bool>> = unrealized.par_iter().map(|d| spec.membership(d)).collect();
    let mut holes = Vec::new();
    for (d, v) in unrealized.iter().zip(verdicts) {
        if v? {
            holes.push(Hole { vector: d.to_vec(), orbit: rearrangements(d) });
        }
    }
    holes.sort_by(|a, b| b.vector.cmp(&a.vector));
    Ok(HolesReport {
        n,
        k,
        candidates: candidates.len(),
        realizable: candidates.len() - unrealized.len(),
        lp_checked: unrealized.len(),
        holes,
    })
}

fn weakly_decreasing(n: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    let top = cur.last().copied().unwrap_or(cap);
    for v in 0..=top {
        cur.push(v);
        weakly_decreasing(n, cap, cur, out);
        cur.pop();
    }
}

/// Degree sequence of `K` as a point of `D_n(k)`; convenience for callers holding families.
pub fn family_is_vertex(fam: &KFamily) -> Result<bool> {
    ZonotopeSpec::new(fam.n(), fam.k())?.is_vertex_geometric(&fam.degree_sequence())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degseq::{count_realizations, ruch_gutman_graphical};

    #[test]
    fn membership_examples() {
        let z = ZonotopeSpec::new(5, 3).unwrap();
        let k = KFamily::from_digit_strings(5, 3, &["123", "145"]).unwrap();
        assert!(z.membership(&k.degree_sequence()).unwrap());
        assert!(z.membership(&[6; 5]).unwrap());
        assert!(!z.membership(&[30, 0, 0, 0, 0]).unwrap());
        assert!(z.membership(&[0; 5]).unwrap());
        assert!(z.membership(&[4, 2, 0, 0, 0]).is_ok());
        assert!(z.membership(&[1, 1]).is_err());
    }

    #[test]
    fn support_cut_never_rejects_members() {
        let z = ZonotopeSpec::new(5, 3).unwrap();
        for fam in KFamily::all(5, 3).unwrap() {
            assert!(!z.support_cut(&fam.degree_sequence()));
        }
    }

    #[test]
    fn membership_is_permutation_invariant() {
        let z = ZonotopeSpec::new(4, 2).unwrap();
        let mut cur = Vec::new();
        let mut all = Vec::new();
        weakly_decreasing(4, 3, &mut cur, &mut all);
        for d in all {
            let mut rev = d.clone();
            rev.reverse();
            let mut rot = d.clone();
            rot.rotate_left(1);
            let m = z.membership(&d).unwrap();
            assert_eq!(z.membership(&rev).unwrap(), m);
            assert_eq!(z.membership(&rot).unwrap(), m);
        }
    }

    #[test]
    fn vertex_examples() {
        let z = ZonotopeSpec::new(6, 2).unwrap();
        assert!(!z.is_vertex(&[2; 6]).unwrap());
        assert!(!z.is_vertex_geometric(&[2; 6]).unwrap());
        assert!(z.is_vertex(&[5; 6]).unwrap());
        assert!(z.is_vertex_geometric(&[5; 6]).unwrap());
        assert!(!z.is_vertex(&[3, 3, 0, 0, 0, 0]).unwrap());
    }

    #[test]
    fn vertices_are_threshold_degree_sequences() {
        for fam in KFamily::all(5, 3).unwrap() {
            let d = fam.degree_sequence();
            let thr = is_threshold(&fam).is_some();
            assert_eq!(is_vertex(&d, 3).unwrap(), thr, "{fam}");
            assert_eq!(family_is_vertex(&fam).unwrap(), thr, "{fam}");
        }
    }

    fn brute_koren(d: &[usize]) -> bool {
        let n = d.len();
        let mut labels = vec![0u8; n];
        loop {
            let (mut sum, mut s, mut t) = (0i64, 0i64, 0i64);
            for i in 0..n {
                match labels[i] {
                    1 => {
                        sum += d[i] as i64;
                        s += 1
                    }
                    2 => {
                        sum -= d[i] as i64;
                        t += 1
                    }
                    _ => {}
                }
            }
            if sum > s * (n as i64 - 1 - t) {
                return false;
            }
            let mut p = 0;
            while p < n && labels[p] == 2 {
                labels[p] = 0;
                p += 1;
            }
            if p == n {
                return true;
            }
            labels[p] += 1;
        }
    }

    #[test]
    fn koren_examples_and_equivalences() {
        assert!(koren_system(&[2, 2, 2]));
        assert!(!koren_system(&[3, 3, 0, 0]));
        assert!(koren_system(&[0, 0, 0, 0]));
        for n in 1..=6usize {
            let z = ZonotopeSpec::new(n, 2.min(n)).unwrap();
            let mut cur = Vec::new();
            let mut all = Vec::new();
            weakly_decreasing(n, n.saturating_sub(1), &mut cur, &mut all);
            for d in all {
                let kor = koren_system(&d);
                assert_eq!(kor, brute_koren(&d), "{d:?}");
                if n >= 2 {
                    assert_eq!(kor, z.membership(&d).unwrap(), "{d:?}");
                }
                if d.iter().sum::<usize>() % 2 == 0 {
                    let graphical = count_realizations(&d, 2, Some(1)) > 0;
                    assert_eq!(kor, ruch_gutman_graphical(&d).unwrap(), "{d:?}");
                    assert_eq!(kor && n >= 2 || d.iter().all(|&x| x == 0), graphical, "{d:?}");
                    assert_eq!(erdos_gallai(&d), graphical, "{d:?}");
                }
            }
        }
    }

    #[test]
    fn no_holes_small() {
        for (n, k) in [(4, 1), (5, 1), (4, 2), (5, 2), (6, 2), (4, 3), (5, 3)] {
            let r = holes_report(n, k).unwrap();
            assert!(r.holes.is_empty(), "n={n} k={k}: {:?}", r.holes);
            assert!(r.candidates > 0);
        }
    }
}
