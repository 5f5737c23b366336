//! `e_m[e_k]` from family counts, the shifted-family analogue `Φ_{k,m}`, and
//! the correction terms `Υ_{k,m}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::poly::{multiply, Basis, SymPoly};
use crate::degseq::{count_realizations, partitions, Partition};
use crate::error::{domain, Error, Result};
use crate::families::{enumerate_shifted, KFamily};

/// Largest `km` attempted by default for `e_m[e_k]`.
pub const DEFAULT_PLETHYSM_DEGREE: usize = 12;
/// Largest `m + k - 1` (the support bound) attempted by default for `Φ_{k,m}`.
pub const DEFAULT_PHI_SUPPORT: usize = 12;

/// `c_{μ,k}`: labeled `k`-families on `[ℓ(μ)]` with degree sequence exactly `μ`.
pub fn count_families_with_degree(mu: &Partition, k: usize) -> Result<u128> {
    if k == 0 {
        return domain("k must be positive");
    }
    if !mu.weight().is_multiple_of(k) {
        return domain(format!("|{mu}| is not divisible by k = {k}"));
    }
    Ok(count_realizations(mu.parts(), k, None))
}

/// Monomial expansion of `e_m[e_k]`.
pub fn plethysm_monomial(m: usize, k: usize, max_degree: usize) -> Result<SymPoly> {
    if k == 0 {
        return domain("k must be positive");
    }
    if k * m > max_degree {
        return Err(Error::Budget(format!("km = {} exceeds the plethysm degree limit {max_degree}", k * m)));
    }
    let terms: Vec<(Partition, BigInt)> = partitions(k * m)
        .into_par_iter()
        .filter(|mu| mu.part(0) <= m)
        .map(|mu| {
            let c = count_realizations(mu.parts(), k, None);
            (mu, BigInt::from(c))
        })
        .collect();
    Ok(SymPoly::from_terms(Basis::Monomial, terms))
}

/// Schur expansion of `e_m[e_k]` with the default degree limit.
pub fn plethysm_em_ek(m: usize, k: usize) -> Result<SymPoly> {
    plethysm_em_ek_with_budget(m, k, DEFAULT_PLETHYSM_DEGREE)
}

pub fn plethysm_em_ek_with_budget(m: usize, k: usize, max_degree: usize) -> Result<SymPoly> {
    let s = plethysm_monomial(m, k, max_degree)?.to_schur();
    if let Some((l, c)) = s.negative_terms().into_iter().next() {
        return Err(Error::InternalConsistency(format!("e_{m}[e_{k}] has coefficient {c} on s{l}")));
    }
    Ok(s)
}

/// `Σ s_{d(K)}` over the given families.
pub fn schur_sum_of_degrees<'a>(families: impl IntoIterator<Item = &'a KFamily>) -> SymPoly {
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    for f in families {
        *counts.entry(Partition::from_unsorted(f.degree_sequence())).or_default() += 1;
    }
    SymPoly::from_terms(Basis::Schur, counts.into_iter().map(|(l, c)| (l, BigInt::from(c))))
}

/// `Φ_{k,m}`: the sum of `s_{d(K)}` over shifted `k`-families with `m` members.
pub fn phi(k: usize, m: usize) -> Result<SymPoly> {
    phi_with_budget(k, m, DEFAULT_PHI_SUPPORT)
}

pub fn phi_with_budget(k: usize, m: usize, max_support: usize) -> Result<SymPoly> {
    if m > 0 && m + k - 1 > max_support {
        return Err(Error::Budget(format!("m + k - 1 = {} exceeds the support limit {max_support}", m + k - 1)));
    }
    Ok(schur_sum_of_degrees(&enumerate_shifted(k, m)?))
}

/// `Υ_{k,1}, …, Υ_{k,m}` (index 0 holds `Υ_{k,1}`), computed by the
/// defining recursion.
pub fn upsilon_series(k: usize, m: usize) -> Result<Vec<SymPoly>> {
    upsilon_series_with_budget(k, m, DEFAULT_PLETHYSM_DEGREE, DEFAULT_PHI_SUPPORT)
}

pub fn upsilon_series_with_budget(k: usize, m: usize, max_degree: usize, max_support: usize) -> Result<Vec<SymPoly>> {
    if m == 0 {
        return domain("Υ is defined for m >= 1");
    }
    let phis: Vec<SymPoly> = (0..=m).map(|i| phi_with_budget(k, i, max_support)).collect::<Result<_>>()?;
    let mut ups: Vec<SymPoly> = Vec::with_capacity(m);
    for j in 1..=m {
        let mut u = plethysm_em_ek_with_budget(j, k, max_degree)?.sub(&phis[j]);
        for i in 1..=j.saturating_sub(2) {
            u = u.sub(&multiply(&ups[j - i - 1], &phis[i]));
        }
        ups.push(u);
    }
    Ok(ups)
}

/// `Υ_{k,m}`.
pub fn upsilon(k: usize, m: usize) -> Result<SymPoly> {
    Ok(upsilon_series(k, m)?.pop().expect("m >= 1"))
}

/// Whether every Schur coefficient is nonnegative.
pub fn is_schur_positive(p: &SymPoly) -> bool {
    p.to_schur().negative_terms().is_empty()
}

/// The Schur terms of `p` with negative coefficient.
pub fn schur_negative_terms(p: &SymPoly) -> Vec<(Partition, BigInt)> {
    p.to_schur().negative_terms()
}

/// `(-1)^m Υ_{k,m}`.
pub fn signed_upsilon(k: usize, m: usize) -> Result<SymPoly> {
    let u = upsilon(k, m)?;
    Ok(if m.is_multiple_of(2) { u } else { u.scale(&BigInt::from(-1)) })
}
