//! The two complementation symmetries of Schur coefficients in `n` variables.
//!
//! Complementing a family inside `C([n], k)` turns `d` into `R - d` with `R`
//! the `n × C(n-1, k-1)` rectangle; complementing every member inside `[n]`
//! turns a `k`-family with `m` members into an `(n-k)`-family with `m`
//! members and `d` into `M - d` with `M` the `n × m` rectangle.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::plethysm::schur_sum_of_degrees;
use super::poly::{mono_to_schur_in, Basis, SymPoly};
use crate::degseq::{complement_in_rectangle, count_realizations, partitions_bounded, Partition};
use crate::error::Result;
use crate::families::{binomial, shifted_families_on};

/// Schur expansion of `e_m[e_k](x_1, …, x_n)`, i.e. `a_{λ,k}` for `ℓ(λ) <= n`.
pub fn plethysm_in(n: usize, k: usize, m: usize) -> SymPoly {
    if k == 0 || k > n {
        // only the empty set (k = 0) or nothing at all is available
        let families = if k == 0 { 2 } else { 1 };
        return if m < families { SymPoly::one(Basis::Schur) } else { SymPoly::zero(Basis::Schur) };
    }
    let cap = m.min(binomial(n - 1, k - 1) as usize);
    let terms: Vec<(Partition, BigInt)> = partitions_bounded(k * m, n, cap)
        .into_par_iter()
        .map(|mu| {
            let c = count_realizations(mu.parts(), k, None);
            (mu, BigInt::from(c))
        })
        .collect();
    mono_to_schur_in(&SymPoly::from_terms(Basis::Monomial, terms), n)
}

/// `Φ_{k,m}(x_1, …, x_n)` for every `m`, from the shifted families on `[n]`.
pub fn phi_by_size_in(n: usize, k: usize) -> Result<Vec<SymPoly>> {
    if k > n {
        return Ok(vec![SymPoly::one(Basis::Schur)]);
    }
    let families = shifted_families_on(n, k)?;
    let top = families.iter().map(|f| f.len()).max().unwrap_or(0);
    Ok((0..=top).map(|m| schur_sum_of_degrees(families.iter().filter(|f| f.len() == m))).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryMismatch {
    pub m: usize,
    pub shifted: bool,
    pub lambda: Partition,
    pub image: Option<Partition>,
    pub coefficient: String,
    pub image_coefficient: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryReport {
    pub k: usize,
    pub n: usize,
    pub comparisons: usize,
    pub mismatches: Vec<SymmetryMismatch>,
}

impl SymmetryReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares `a[λ]` with `b[complement of λ in rows × cols]` over the support of `a`,
/// and checks that the two supports have equal size.
fn compare(
    report: &mut SymmetryReport,
    m: usize,
    shifted: bool,
    a: &SymPoly,
    b: &SymPoly,
    rows: usize,
    cols: usize,
) {
    for (lambda, c) in a.terms() {
        report.comparisons += 1;
        let image = complement_in_rectangle(lambda, rows, cols).ok();
        let other = image.as_ref().map(|l| b.coeff(l)).unwrap_or_default();
        if &other != c {
            report.mismatches.push(SymmetryMismatch {
                m,
                shifted,
                lambda: lambda.clone(),
                image,
                coefficient: c.to_string(),
                image_coefficient: other.to_string(),
            });
        }
    }
    if a.len() != b.len() {
        report.mismatches.push(SymmetryMismatch {
            m,
            shifted,
            lambda: Partition::empty(),
            image: None,
            coefficient: format!("{} terms", a.len()),
            image_coefficient: format!("{} terms", b.len()),
        });
    }
}

/// `a_{λ,k} = a_{R∖λ,k}` and `a'_{λ,k} = a'_{R∖λ,k}` for `m <= mmax`, with
/// `R` the `n × C(n-1, k-1)` rectangle and the image in degree `C(n,k) - m`.
pub fn check_symmetry_one(k: usize, n: usize, mmax: usize) -> Result<SymmetryReport> {
    let mut report = SymmetryReport { k, n, comparisons: 0, mismatches: Vec::new() };
    if k == 0 || k > n {
        return Ok(report);
    }
    let total = binomial(n, k) as usize;
    let cols = binomial(n - 1, k - 1) as usize;
    let top = mmax.min(total);
    let needed: Vec<usize> = (0..=total).filter(|&m| m <= top || total - m <= top).collect();
    let full: Vec<(usize, SymPoly)> = needed.par_iter().map(|&m| (m, plethysm_in(n, k, m))).collect();
    let get = |m: usize| &full.iter().find(|(x, _)| *x == m).expect("computed").1;
    let shifted = phi_by_size_in(n, k)?;
    for m in 0..=top {
        compare(&mut report, m, false, get(m), get(total - m), n, cols);
        compare(&mut report, m, true, &shifted[m], &shifted[total - m], n, cols);
    }
    Ok(report)
}

/// `a_{λ,k} = a_{M∖λ,n-k}` and the same for `a'`, with `M` the `n × m`
/// rectangle, for every `m <= C(n,k)`.
pub fn check_symmetry_two(k: usize, n: usize) -> Result<SymmetryReport> {
    let mut report = SymmetryReport { k, n, comparisons: 0, mismatches: Vec::new() };
    if k > n {
        return Ok(report);
    }
    let total = binomial(n, k) as usize;
    let pairs: Vec<(SymPoly, SymPoly)> =
        (0..=total).into_par_iter().map(|m| (plethysm_in(n, k, m), plethysm_in(n, n - k, m))).collect();
    let shifted = phi_by_size_in(n, k)?;
    let dual = phi_by_size_in(n, n - k)?;
    for (m, (a, b)) in pairs.iter().enumerate() {
        compare(&mut report, m, false, a, b, n, m);
        compare(&mut report, m, true, &shifted[m], &dual[m], n, m);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degseq::Partition;
    use crate::families::KFamily;
    use std::collections::BTreeMap;

    // n-variable monomial coefficients by running over all families on [n]
    fn brute(n: usize, k: usize, m: usize) -> SymPoly {
        let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
        for f in KFamily::all(n, k).unwrap().filter(|f| f.len() == m) {
            let d = f.degree_sequence();
            if d.windows(2).all(|w| w[0] >= w[1]) {
                *counts.entry(Partition::from_unsorted(d)).or_default() += 1;
            }
        }
        mono_to_schur_in(&SymPoly::from_terms(Basis::Monomial, counts.into_iter().map(|(l, c)| (l, c.into()))), n)
    }

    #[test]
    fn finite_plethysm_matches_brute_force() {
        for (n, k) in [(4, 2), (5, 2), (4, 3), (5, 3), (3, 1)] {
            for m in 0..=binomial(n, k) as usize {
                assert_eq!(plethysm_in(n, k, m), brute(n, k, m), "n={n} k={k} m={m}");
            }
        }
    }

    #[test]
    fn shifted_graphs_on_four_vertices() {
        for m in 0..=6 {
            let ph = &phi_by_size_in(4, 2).unwrap()[m];
            assert_eq!(ph, &plethysm_in(4, 2, m), "m={m}");
        }
    }

    #[test]
    fn symmetries_small() {
        for n in 1..=5 {
            for k in 1..=3.min(n) {
                let one = check_symmetry_one(k, n, usize::MAX).unwrap();
                assert!(one.holds(), "{one:?}");
                let two = check_symmetry_two(k, n).unwrap();
                assert!(two.holds(), "{two:?}");
            }
        }
    }

    #[test]
    fn first_part_bounded() {
        for m in 0..=10 {
            let a = plethysm_in(5, 3, m);
            assert!(a.terms().all(|(l, _)| l.part(0) <= 6));
        }
    }
}
