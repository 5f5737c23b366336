//! Symmetric functions with integer coefficients in the monomial or Schur basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::Serialize;

use super::kostka::kostka_parts;
use crate::degseq::{partitions, partitions_bounded, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Schur,
}

/// A finite integer combination of `m_μ` or `s_λ`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymPoly {
    basis: Basis,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SymPoly {
    pub fn zero(basis: Basis) -> SymPoly {
        SymPoly { basis, coeffs: BTreeMap::new() }
    }

    /// The constant `1 = m_∅ = s_∅`.
    pub fn one(basis: Basis) -> SymPoly {
        SymPoly::term(basis, Partition::empty(), 1)
    }

    pub fn term(basis: Basis, lambda: Partition, c: impl Into<BigInt>) -> SymPoly {
        let mut p = SymPoly::zero(basis);
        p.add_term(lambda, c.into());
        p
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, BigInt)>) -> SymPoly {
        let mut p = SymPoly::zero(basis);
        for (l, c) in terms {
            p.add_term(l, c);
        }
        p
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in reverse lexicographic order of the partitions (largest first).
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter().rev()
    }

    /// The common weight of all terms, `None` when empty or inhomogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut weights = self.coeffs.keys().map(|l| l.weight());
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lambda.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    /// `self + sign·other`, converting `other` to this basis first.
    fn combine(&self, other: &SymPoly, negate: bool) -> SymPoly {
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        for (l, c) in other.coeffs {
            out.add_term(l, if negate { -c } else { c });
        }
        out
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        self.combine(other, true)
    }

    pub fn scale(&self, c: &BigInt) -> SymPoly {
        SymPoly::from_terms(self.basis, self.coeffs.iter().map(|(l, x)| (l.clone(), x * c)))
    }

    /// Keeps only the terms with at most `n` parts.
    pub fn truncate(&self, n: usize) -> SymPoly {
        SymPoly::from_terms(self.basis, self.coeffs.iter().filter(|(l, _)| l.len() <= n).map(|(l, c)| (l.clone(), c.clone())))
    }

    pub fn to_basis(&self, basis: Basis) -> SymPoly {
        match (self.basis, basis) {
            (a, b) if a == b => self.clone(),
            (Basis::Monomial, Basis::Schur) => mono_to_schur(self),
            _ => schur_to_mono(self),
        }
    }

    pub fn to_schur(&self) -> SymPoly {
        self.to_basis(Basis::Schur)
    }

    pub fn to_monomial(&self) -> SymPoly {
        self.to_basis(Basis::Monomial)
    }

    /// Terms with negative coefficient.
    pub fn negative_terms(&self) -> Vec<(Partition, BigInt)> {
        self.terms().filter(|(_, c)| c.is_negative()).map(|(l, c)| (l.clone(), c.clone())).collect()
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let letter = match self.basis {
            Basis::Monomial => "m",
            Basis::Schur => "s",
        };
        for (i, (l, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else if i > 0 { "+" } else { "" };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            let a = c.abs();
            if a != BigInt::from(1) {
                write!(f, "{a}")?;
            }
            write!(f, "{letter}{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// JSON form: `[{"partition": [..], "coeff": c}, ..]`, largest partition first.
/// Coefficients outside the `i64` range are written as decimal strings.
impl Serialize for SymPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            partition: &'a Partition,
            coeff: serde_json::Value,
        }
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for (l, c) in self.terms() {
            let coeff = match c.to_i64() {
                Some(v) => serde_json::Value::from(v),
                None => serde_json::Value::from(c.to_string()),
            };
            seq.serialize_element(&Term { partition: l, coeff })?;
        }
        seq.end()
    }
}

fn by_weight(p: &SymPoly) -> BTreeMap<usize, Vec<(&Partition, &BigInt)>> {
    let mut out: BTreeMap<usize, Vec<(&Partition, &BigInt)>> = BTreeMap::new();
    for (l, c) in &p.coeffs {
        out.entry(l.weight()).or_default().push((l, c));
    }
    out
}

fn shapes(w: usize, nvars: Option<usize>) -> Vec<Partition> {
    match nvars {
        None => partitions(w),
        Some(n) => partitions_bounded(w, n, usize::MAX),
    }
}

/// Solves `c_μ = Σ_λ a_λ K_{λ,μ}` for `a`, walking partitions in decreasing
/// lexicographic order (a linear extension of dominance).
fn mono_to_schur_impl(p: &SymPoly, nvars: Option<usize>) -> SymPoly {
    assert_eq!(p.basis, Basis::Monomial);
    let mut out = SymPoly::zero(Basis::Schur);
    for (w, terms) in by_weight(p) {
        let c: HashMap<&Partition, &BigInt> = terms.into_iter().collect();
        let mut found: Vec<(Partition, BigInt)> = Vec::new();
        for mu in shapes(w, nvars) {
            let mut a = c.get(&mu).map(|&x| x.clone()).unwrap_or_default();
            for (lambda, al) in &found {
                let k = kostka_parts(lambda.parts(), mu.parts());
                if k != 0 {
                    a -= al * BigInt::from(k);
                }
            }
            if !a.is_zero() {
                found.push((mu, a));
            }
        }
        for (l, a) in found {
            out.add_term(l, a);
        }
    }
    out
}

fn schur_to_mono_impl(p: &SymPoly, nvars: Option<usize>) -> SymPoly {
    assert_eq!(p.basis, Basis::Schur);
    let mut out = SymPoly::zero(Basis::Monomial);
    for (w, terms) in by_weight(p) {
        for mu in shapes(w, nvars) {
            let mut c = BigInt::zero();
            for (lambda, a) in &terms {
                let k = kostka_parts(lambda.parts(), mu.parts());
                if k != 0 {
                    c += *a * BigInt::from(k);
                }
            }
            out.add_term(mu, c);
        }
    }
    out
}

pub fn mono_to_schur(p: &SymPoly) -> SymPoly {
    mono_to_schur_impl(p, None)
}

pub fn schur_to_mono(p: &SymPoly) -> SymPoly {
    schur_to_mono_impl(p, None)
}

/// Schur expansion of a symmetric polynomial in `n` variables given by its
/// monomial coefficients for partitions with at most `n` parts.
pub fn mono_to_schur_in(p: &SymPoly, n: usize) -> SymPoly {
    mono_to_schur_impl(&p.truncate(n), Some(n))
}

/// Monomial expansion in `n` variables.
pub fn schur_to_mono_in(p: &SymPoly, n: usize) -> SymPoly {
    schur_to_mono_impl(&p.truncate(n), Some(n))
}

/// Coefficient of `m_λ` in `m_μ·m_ν`: the number of pairs of rearrangements
/// `(α, β)` of `μ`, `ν` (padded with zeros) with `α + β = λ`.
fn monomial_product_coeff(lambda: &[usize], mu: &[usize], nu: &[usize]) -> u128 {
    fn multiset(v: &[usize], len: usize) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &x in v {
            *m.entry(x).or_insert(0) += 1;
        }
        *m.entry(0).or_insert(0) += len - v.len();
        m
    }
    fn go(lambda: &[usize], pos: usize, a: &mut BTreeMap<usize, usize>, b: &mut BTreeMap<usize, usize>) -> u128 {
        if pos == lambda.len() {
            return 1;
        }
        let target = lambda[pos];
        let choices: Vec<usize> = a.iter().filter(|(&x, &c)| c > 0 && x <= target).map(|(&x, _)| x).collect();
        let mut total = 0;
        for x in choices {
            let y = target - x;
            if b.get(&y).copied().unwrap_or(0) == 0 {
                continue;
            }
            *a.get_mut(&x).expect("present") -= 1;
            *b.get_mut(&y).expect("present") -= 1;
            total += go(lambda, pos + 1, a, b);
            *a.get_mut(&x).expect("present") += 1;
            *b.get_mut(&y).expect("present") += 1;
        }
        total
    }
    let len = lambda.len();
    if mu.len() > len || nu.len() > len {
        return 0;
    }
    go(lambda, 0, &mut multiset(mu, len), &mut multiset(nu, len))
}

fn monomial_product(mu: &Partition, nu: &Partition) -> Vec<(Partition, u128)> {
    let w = mu.weight() + nu.weight();
    let max_len = mu.len() + nu.len();
    let max_part = mu.part(0) + nu.part(0);
    partitions_bounded(w, max_len, max_part)
        .into_iter()
        .filter(|l| l.len() >= mu.len().max(nu.len()))
        .filter_map(|l| {
            let c = monomial_product_coeff(l.parts(), mu.parts(), nu.parts());
            (c > 0).then_some((l, c))
        })
        .collect()
}

/// Product of two symmetric functions, returned in the basis of `p`.
pub fn multiply(p: &SymPoly, q: &SymPoly) -> SymPoly {
    let a = p.to_monomial();
    let b = q.to_monomial();
    let mut out = SymPoly::zero(Basis::Monomial);
    let mut memo: HashMap<(&Partition, &Partition), Vec<(Partition, u128)>> = HashMap::new();
    for (mu, c) in &a.coeffs {
        for (nu, d) in &b.coeffs {
            let (x, y) = if mu <= nu { (mu, nu) } else { (nu, mu) };
            let prod = memo.entry((x, y)).or_insert_with(|| monomial_product(x, y));
            let cd = c * d;
            for (l, k) in prod.iter() {
                out.add_term(l.clone(), &cd * BigInt::from(*k));
            }
        }
    }
    out.to_basis(p.basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn basis_change_small() {
        let s2 = SymPoly::term(Basis::Schur, p(&[2]), 1);
        let m = s2.to_monomial();
        assert_eq!(m, SymPoly::from_terms(Basis::Monomial, [(p(&[2]), 1.into()), (p(&[1, 1]), 1.into())]));
        assert_eq!(m.to_schur(), s2);
    }

    #[test]
    fn products() {
        let m1 = SymPoly::term(Basis::Monomial, p(&[1]), 1);
        let sq = multiply(&m1, &m1);
        assert_eq!(sq, SymPoly::from_terms(Basis::Monomial, [(p(&[2]), 1.into()), (p(&[1, 1]), 2.into())]));
        let s1 = SymPoly::term(Basis::Schur, p(&[1]), 1);
        let sq = multiply(&s1, &s1);
        assert_eq!(sq, SymPoly::from_terms(Basis::Schur, [(p(&[2]), 1.into()), (p(&[1, 1]), 1.into())]));
        let one = SymPoly::one(Basis::Schur);
        let x = SymPoly::term(Basis::Schur, p(&[2, 1]), 3);
        assert_eq!(multiply(&x, &one), x);
        // Pieri: s_(2,1)·s_(1) = s_(3,1) + s_(2,2) + s_(2,1,1)
        let want = SymPoly::from_terms(Basis::Schur, [(p(&[3, 1]), 3.into()), (p(&[2, 2]), 3.into()), (p(&[2, 1, 1]), 3.into())]);
        assert_eq!(multiply(&x, &s1), want);
    }

    #[test]
    fn monomial_product_by_expansion() {
        // m_(1,1)·m_(1) = m_(2,1) + 3 m_(1,1,1)
        let c = monomial_product(&p(&[1, 1]), &p(&[1]));
        assert_eq!(c, vec![(p(&[2, 1]), 1), (p(&[1, 1, 1]), 3)]);
        // m_(1)·m_(1) in two variables via explicit count: (x+y)^2
        assert_eq!(monomial_product_coeff(&[1, 1], &[1], &[1]), 2);
    }

    #[test]
    fn finite_variables() {
        let s111 = SymPoly::term(Basis::Schur, p(&[1, 1, 1]), 1);
        assert!(schur_to_mono_in(&s111, 2).is_zero());
        let e2 = SymPoly::term(Basis::Monomial, p(&[1, 1]), 1);
        assert_eq!(mono_to_schur_in(&e2, 2), SymPoly::term(Basis::Schur, p(&[1, 1]), 1));
    }

    #[test]
    fn display_and_json() {
        let x = SymPoly::from_terms(Basis::Schur, [(p(&[2]), 1.into()), (p(&[1, 1]), (-2).into())]);
        assert_eq!(x.to_string(), "s(2) - 2s(1,1)");
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"[{"partition":[2],"coeff":1},{"partition":[1,1],"coeff":-2}]"#);
        assert_eq!(x.negative_terms(), vec![(p(&[1, 1]), BigInt::from(-2))]);
    }

    proptest! {
        #[test]
        fn round_trip(w in 0usize..9, seed in proptest::collection::vec(-5i64..6, 30)) {
            let terms: Vec<(Partition, BigInt)> =
                partitions(w).into_iter().zip(seed).map(|(l, c)| (l, BigInt::from(c))).collect();
            let m = SymPoly::from_terms(Basis::Monomial, terms);
            prop_assert_eq!(schur_to_mono(&mono_to_schur(&m)), m.clone());
            let s = SymPoly::from_terms(Basis::Schur, m.coeffs.clone());
            prop_assert_eq!(mono_to_schur(&schur_to_mono(&s)), s);
        }
    }
}
