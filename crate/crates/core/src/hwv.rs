//! The exterior algebra `Λ^m(Λ^k V)` with `V = C^n`: wedge basis vectors
//! `E_K`, the raising operators `A_{i,j}` and highest-weight multiplicities.
//!
//! `E_K` wedges the members of `K` in colex order, so every sign below is
//! relative to that order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::degseq::{count_realizations, find_realizations, Partition};
use crate::error::{domain, Error, Result};
use crate::families::{is_shifted, DegreeSequence, KFamily, Subset};

/// Largest weight space handled by [`hw_space_dimension`].
pub const DEFAULT_WEIGHT_SPACE_LIMIT: u128 = 50_000;

/// An integer combination of wedge basis vectors `E_K` with `|K| = m`.
#[derive(Clone, PartialEq, Eq)]
pub struct ExteriorVector {
    n: usize,
    k: usize,
    m: usize,
    terms: BTreeMap<KFamily, i64>,
}

impl ExteriorVector {
    pub fn zero(n: usize, k: usize, m: usize) -> ExteriorVector {
        ExteriorVector { n, k, m, terms: BTreeMap::new() }
    }

    /// `E_K`.
    pub fn basis(fam: &KFamily) -> ExteriorVector {
        let mut v = ExteriorVector::zero(fam.n(), fam.k(), fam.len());
        v.terms.insert(fam.clone(), 1);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&KFamily, i64)> {
        self.terms.iter().map(|(f, &c)| (f, c))
    }

    pub fn coeff(&self, fam: &KFamily) -> i64 {
        self.terms.get(fam).copied().unwrap_or(0)
    }

    fn add(&mut self, fam: KFamily, c: i64) {
        let e = self.terms.entry(fam.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&fam);
        }
    }

    /// Shape `(n, k, m)`.
    pub fn shape(&self) -> (usize, usize, usize) {
        (self.n, self.k, self.m)
    }
}

impl fmt::Display for ExteriorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(fam, c)| format!("{c:+}·E{fam}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for ExteriorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The weight `d(K)` of a single basis vector.
pub fn weight(v: &ExteriorVector) -> Result<DegreeSequence> {
    match (v.terms.len(), v.m) {
        (0, 0) => Ok(vec![0; v.n]),
        (1, _) => Ok(v.terms.keys().next().expect("one term").degree_sequence()),
        _ => domain(format!("weight is defined on basis vectors, got {v}")),
    }
}

// colex order on subsets is numeric order of the bitmasks
fn colex_between(lo: Subset, hi: Subset, t: Subset) -> bool {
    lo.0 < t.0 && t.0 < hi.0
}

/// `A_{i,j}` applied by the Leibniz rule on both exterior layers.
pub fn raising(i: usize, j: usize, v: &ExteriorVector) -> Result<ExteriorVector> {
    if i == 0 || i >= j || j > v.n {
        return domain(format!("raising operator needs 1 <= i < j <= n, got i={i}, j={j}, n={}", v.n));
    }
    let mut out = ExteriorVector::zero(v.n, v.k, v.m);
    for (fam, &c) in &v.terms {
        let mut produced: BTreeSet<KFamily> = BTreeSet::new();
        for s in fam.iter() {
            if !s.contains(j) || s.contains(i) {
                continue;
            }
            let s2 = s.without(j).with(i);
            if fam.contains(s2) {
                // e_{S'} already occurs in the wedge
                continue;
            }
            // move e_i from j's slot to its sorted place inside e_S
            let inner = s.count_between(i, j);
            // move e_{S'} from S's slot to its colex place among the members
            let outer = fam.iter().filter(|&t| colex_between(s2, s, t)).count();
            let sign = if (inner + outer) % 2 == 0 { c } else { -c };
            let mut image = fam.clone();
            image.exchange(s, s2);
            assert!(produced.insert(image.clone()), "two Leibniz terms of A_{i},{j} E{fam} coincide");
            out.add(image, sign);
        }
    }
    Ok(out)
}

/// Whether `E_K` is killed by every `A_{i,j}`; checked against shiftedness.
pub fn is_highest_weight(fam: &KFamily) -> Result<bool> {
    let v = ExteriorVector::basis(fam);
    let n = fam.n();
    let mut killed = true;
    'outer: for j in 2..=n {
        for i in 1..j {
            if !raising(i, j, &v)?.is_zero() {
                killed = false;
                break 'outer;
            }
        }
    }
    if killed != is_shifted(fam) {
        return Err(Error::InternalConsistency(format!(
            "E{fam}: highest weight = {killed} but shifted = {}",
            is_shifted(fam)
        )));
    }
    Ok(killed)
}

/// Rank of a list of sparse integer rows by fraction-free elimination,
/// dividing each reduced row by the gcd of its entries.
fn rank(rows: impl IntoIterator<Item = BTreeMap<usize, BigInt>>, cols: usize) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, BigInt>> = BTreeMap::new();
    for mut row in rows {
        loop {
            let Some((&lead, _)) = row.iter().next() else { break };
            let Some(p) = pivots.get(&lead) else { break };
            let a = p[&lead].clone();
            let b = row[&lead].clone();
            let mut next: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (&c, x) in &row {
                next.insert(c, x * &a);
            }
            for (&c, y) in p {
                let e = next.entry(c).or_default();
                *e -= y * &b;
            }
            next.retain(|_, x| !x.is_zero());
            row = normalize(next);
        }
        if let Some((&lead, _)) = row.iter().next() {
            pivots.insert(lead, row);
            if pivots.len() == cols {
                break;
            }
        }
    }
    pivots.len()
}

fn normalize(row: BTreeMap<usize, BigInt>) -> BTreeMap<usize, BigInt> {
    let g = row.values().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g == BigInt::from(1) {
        return row;
    }
    row.into_iter().map(|(c, x)| (c, x / &g)).collect()
}

/// Dimension of the space of highest weight vectors of weight `λ` in
/// `Λ^m(Λ^k C^n)`, i.e. the multiplicity of `W^λ`.
pub fn hw_space_dimension(lambda: &Partition, k: usize, n: usize) -> Result<usize> {
    hw_space_dimension_with_limit(lambda, k, n, DEFAULT_WEIGHT_SPACE_LIMIT)
}

pub fn hw_space_dimension_with_limit(lambda: &Partition, k: usize, n: usize, limit: u128) -> Result<usize> {
    if k == 0 {
        return domain("k must be positive");
    }
    if !lambda.weight().is_multiple_of(k) {
        return domain(format!("|{lambda}| is not divisible by k = {k}"));
    }
    if lambda.len() > n {
        return domain(format!("{lambda} has more than n = {n} parts"));
    }
    if k > n {
        return Ok(usize::from(lambda.is_empty()));
    }
    let d = lambda.padded(n);
    let size = count_realizations(&d, k, Some(limit + 1));
    if size > limit {
        return Err(Error::Budget(format!("weight space of {lambda} has more than {limit} basis vectors")));
    }
    let basis = find_realizations(&d, k, size as usize)?;
    if basis.is_empty() {
        return Ok(0);
    }
    let index: BTreeMap<&KFamily, usize> = basis.iter().enumerate().map(|(p, f)| (f, p)).collect();
    // one row per (i, j, target basis vector), one column per source basis vector
    let mut rows: BTreeMap<(usize, usize, KFamily), BTreeMap<usize, BigInt>> = BTreeMap::new();
    for j in 2..=n {
        for i in 1..j {
            for fam in &basis {
                let image = raising(i, j, &ExteriorVector::basis(fam))?;
                for (target, c) in image.terms() {
                    rows.entry((i, j, target.clone())).or_default().insert(index[fam], BigInt::from(c));
                }
            }
        }
    }
    let r = rank(rows.into_values(), basis.len());
    Ok(basis.len() - r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::shifted_generate;
    use crate::symfunc::plethysm_em_ek;

    fn fam(n: usize, k: usize, sets: &[&str]) -> KFamily {
        KFamily::from_digit_strings(n, k, sets).unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&ExteriorVector::basis(&fam(3, 2, &["12", "13"]))).unwrap(), vec![2, 1, 1]);
        assert_eq!(weight(&ExteriorVector::basis(&KFamily::empty(4, 2).unwrap())).unwrap(), vec![0; 4]);
        let g = shifted_generate(6, 3, &[Subset::from_digits("235").unwrap(), Subset::from_digits("146").unwrap()])
            .unwrap();
        assert_eq!(weight(&ExteriorVector::basis(&g)).unwrap(), vec![9, 6, 6, 5, 4, 3]);
        let mut two = ExteriorVector::basis(&fam(3, 2, &["12"]));
        two.add(fam(3, 2, &["13"]), 1);
        assert!(weight(&two).is_err());
    }

    #[test]
    fn single_set() {
        let v = raising(3, 4, &ExteriorVector::basis(&fam(4, 3, &["124"]))).unwrap();
        assert_eq!(v.terms().count(), 1);
        assert_eq!(v.coeff(&fam(4, 3, &["123"])), 1);
        // A_{1,3} e_2∧e_3 = e_2∧e_1 = -e_1∧e_2
        let w = raising(1, 3, &ExteriorVector::basis(&fam(3, 2, &["23"]))).unwrap();
        assert_eq!(w.coeff(&fam(3, 2, &["12"])), -1);
    }

    #[test]
    fn outer_sign() {
        // colex order 23 < 14; A_{3,4}: e_23∧e_14 ↦ e_23∧e_13 = -e_13∧e_23
        let v = raising(3, 4, &ExteriorVector::basis(&fam(4, 2, &["14", "23"]))).unwrap();
        assert_eq!(v.coeff(&fam(4, 2, &["13", "23"])), -1);
        assert_eq!(v.coeff(&fam(4, 2, &["13", "14"])), 0);
        // A_{1,4}: e_23∧e_24 ↦ e_23∧e_21 = -e_23∧e_12 = e_12∧e_23
        let v = raising(1, 4, &ExteriorVector::basis(&fam(4, 2, &["23", "24"]))).unwrap();
        assert_eq!(v.coeff(&fam(4, 2, &["12", "23"])), 1);
        // A_{1,2}: e_23∧e_14 ↦ e_13∧e_14 with no reordering
        let v = raising(1, 2, &ExteriorVector::basis(&fam(4, 2, &["14", "23"]))).unwrap();
        assert_eq!(v.coeff(&fam(4, 2, &["13", "14"])), 1);
    }

    // A_{i,j} as a derivation: check A_{i,j}(A_{j,l} E) - A_{j,l}(A_{i,j} E) = A_{i,l} E
    #[test]
    fn commutator_relation() {
        for f in KFamily::all(4, 2).unwrap().filter(|f| f.len() == 3) {
            let e = ExteriorVector::basis(&f);
            for (i, j, l) in [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)] {
                let lhs = {
                    let a = apply(i, j, &raising(j, l, &e).unwrap());
                    let b = apply(j, l, &raising(i, j, &e).unwrap());
                    sub(&a, &b)
                };
                assert_eq!(lhs, raising(i, l, &e).unwrap(), "{f} ({i},{j},{l})");
            }
        }
    }

    fn apply(i: usize, j: usize, v: &ExteriorVector) -> ExteriorVector {
        raising(i, j, v).unwrap()
    }

    fn sub(a: &ExteriorVector, b: &ExteriorVector) -> ExteriorVector {
        let mut out = a.clone();
        for (f, c) in b.terms() {
            out.add(f.clone(), -c);
        }
        out
    }

    fn is_signed_basis_sum(v: &ExteriorVector) -> bool {
        v.terms().all(|(_, c)| c.abs() == 1)
    }

    #[test]
    fn images_shift_weight() {
        for f in KFamily::all(5, 3).unwrap().filter(|f| f.len() == 3) {
            let d = f.degree_sequence();
            for j in 2..=5 {
                for i in 1..j {
                    let img = raising(i, j, &ExteriorVector::basis(&f)).unwrap();
                    assert!(is_signed_basis_sum(&img));
                    for (g, _) in img.terms() {
                        let mut want = d.clone();
                        want[i - 1] += 1;
                        want[j - 1] -= 1;
                        assert_eq!(g.degree_sequence(), want);
                    }
                }
            }
        }
    }

    #[test]
    fn highest_weight_iff_shifted() {
        for (n, k) in [(5, 3), (5, 2), (4, 1)] {
            for f in KFamily::all(n, k).unwrap() {
                is_highest_weight(&f).unwrap();
            }
        }
        assert!(!is_highest_weight(&fam(4, 3, &["124"])).unwrap());
        assert!(is_highest_weight(&KFamily::empty(4, 3).unwrap()).unwrap());
        let g = shifted_generate(6, 3, &[Subset::from_digits("235").unwrap(), Subset::from_digits("146").unwrap()])
            .unwrap();
        assert!(is_highest_weight(&g).unwrap());
    }

    #[test]
    fn multiplicities() {
        assert_eq!(hw_space_dimension(&p(&[2, 1, 1]), 2, 3).unwrap(), 1);
        assert_eq!(hw_space_dimension(&p(&[2, 2, 2]), 2, 3).unwrap(), 1);
        assert_eq!(hw_space_dimension(&p(&[1, 1, 1]), 3, 3).unwrap(), 1);
        assert_eq!(hw_space_dimension(&p(&[2, 2]), 2, 4).unwrap(), 0);
        for (m, k) in [(2, 2), (3, 2), (4, 2), (2, 3), (2, 4), (3, 3)] {
            let s = plethysm_em_ek(m, k).unwrap();
            for lambda in crate::degseq::partitions(k * m) {
                let n = lambda.len().max(1);
                let a = s.coeff(&lambda);
                assert_eq!(BigInt::from(hw_space_dimension(&lambda, k, n).unwrap()), a, "{lambda} k={k}");
            }
        }
    }

    #[test]
    fn extra_variables_do_not_change_multiplicity() {
        let l = p(&[2, 2, 1, 1]);
        let a = hw_space_dimension(&l, 2, 4).unwrap();
        assert_eq!(hw_space_dimension(&l, 2, 5).unwrap(), a);
    }
}
