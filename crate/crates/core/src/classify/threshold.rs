//! Threshold and positive-threshold recognition by exact linear programming.

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{domain, Result};
use crate::families::{is_shifted, KFamily, Subset, SubsetCodec};
use crate::lp::{format_q, q, solve_inequalities, Q};

/// `w(x) = Σ c_i x_i`, with an optional threshold `t` for the positive variant.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearFunctional {
    pub coefficients: Vec<Q>,
    pub threshold: Option<Q>,
}

impl LinearFunctional {
    pub fn from_integers(coefficients: &[i64], threshold: Option<i64>) -> LinearFunctional {
        LinearFunctional { coefficients: coefficients.iter().map(|&c| q(c)).collect(), threshold: threshold.map(q) }
    }

    /// `w(χ_S)`.
    pub fn eval(&self, s: Subset) -> Q {
        s.iter().map(|v| self.coefficients[v - 1].clone()).sum()
    }

    /// `w(χ_S) - t`, with `t = 0` for the homogeneous form.
    fn margin(&self, s: Subset) -> Q {
        let t = self.threshold.clone().unwrap_or_else(Q::zero);
        self.eval(s) - t
    }

    /// `S ∈ K` iff `w(χ_S) > t`, checked over every `k`-subset.
    pub fn certifies(&self, fam: &KFamily) -> bool {
        self.coefficients.len() == fam.n() && fam.codec().subsets().all(|s| fam.contains(s) == self.margin(s).is_positive())
    }

    /// Members strictly above the threshold and non-members strictly below it.
    pub fn strictly_separates(&self, fam: &KFamily) -> bool {
        self.coefficients.len() == fam.n()
            && fam.codec().subsets().all(|s| {
                let m = self.margin(s);
                if fam.contains(s) {
                    m.is_positive()
                } else {
                    m.is_negative()
                }
            })
    }

    /// Positive coefficients, positive threshold, and `certifies`.
    pub fn certifies_positive(&self, fam: &KFamily) -> bool {
        self.coefficients.iter().all(|c| c.is_positive())
            && self.threshold.as_ref().is_some_and(|t| t.is_positive())
            && self.certifies(fam)
    }
}

impl Serialize for LinearFunctional {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("LinearFunctional", 2)?;
        let coeffs: Vec<String> = self.coefficients.iter().map(format_q).collect();
        st.serialize_field("coefficients", &coeffs)?;
        st.serialize_field("threshold", &self.threshold.as_ref().map(format_q))?;
        st.end()
    }
}

fn chi_row(s: Subset, n: usize, sign: i64) -> Vec<Q> {
    (1..=n).map(|v| if s.contains(v) { q(sign) } else { Q::zero() }).collect()
}

/// A functional with `w(χ_S) >= 1` on members and `<= -1` elsewhere, if any.
pub fn is_threshold(fam: &KFamily) -> Option<LinearFunctional> {
    let n = fam.n();
    let mut a = Vec::new();
    for s in fam.codec().subsets() {
        a.push(chi_row(s, n, if fam.contains(s) { 1 } else { -1 }));
    }
    let b = vec![Q::one(); a.len()];
    let w = solve_inequalities(&a, &b).ok()?;
    let lf = LinearFunctional { coefficients: w, threshold: None };
    debug_assert!(lf.strictly_separates(fam));
    Some(lf)
}

/// Positive coefficients `c` and threshold `t` with `c·χ_S >= t + 1` on members,
/// `<= t - 1` elsewhere, `c_i >= 1` and `t >= 1`, if any.
pub fn is_positive_threshold(fam: &KFamily) -> Option<LinearFunctional> {
    let n = fam.n();
    let mut a = Vec::new();
    for s in fam.codec().subsets() {
        let sign = if fam.contains(s) { 1 } else { -1 };
        let mut row = chi_row(s, n, sign);
        row.push(q(-sign));
        a.push(row);
    }
    for v in 0..=n {
        let mut row = vec![Q::zero(); n + 1];
        row[v] = Q::one();
        a.push(row);
    }
    let b = vec![Q::one(); a.len()];
    let mut x = solve_inequalities(&a, &b).ok()?;
    let t = x.pop().expect("threshold variable");
    let lf = LinearFunctional { coefficients: x, threshold: Some(t) };
    debug_assert!(lf.certifies_positive(fam) && lf.strictly_separates(fam));
    Some(lf)
}

/// `H_m^k`: the `k`-subsets of `{-m, .., m}` with positive sum, on `[2m+1]`
/// through `v ↦ v - m - 1`.
pub fn hypersimplex_family(m: usize, k: usize) -> Result<KFamily> {
    let n = 2 * m + 1;
    let codec = SubsetCodec::new(n, k)?;
    let value = |s: Subset| s.iter().map(|v| v as i64 - m as i64 - 1).sum::<i64>();
    KFamily::from_subsets(n, k, codec.subsets().filter(|&s| value(s) > 0))
}

/// The functional `Σ i·x_i` on the labels `{-m, .., m}` of `H_m^k`.
pub fn hypersimplex_functional(m: usize) -> LinearFunctional {
    let coeffs: Vec<i64> = (1..=2 * m as i64 + 1).map(|v| v - m as i64 - 1).collect();
    LinearFunctional::from_integers(&coeffs, None)
}

/// Positive integer weights `a` and threshold `t` with `ij ∈ K` iff
/// `a_i + a_j > t`, for a shifted graph, by peeling an isolated last vertex or
/// a coning first vertex.
pub fn chvatal_hammer_weights(fam: &KFamily) -> Result<LinearFunctional> {
    if fam.k() != 2 || !is_shifted(fam) {
        return domain("Chvátal–Hammer weights need a shifted 2-family");
    }
    let n = fam.n();
    let mut weights = vec![0i64; n];
    let mut t: i64;
    // peel vertices, remembering the order and the kind of each step
    let mut alive: Vec<usize> = (1..=n).collect();
    let mut steps: Vec<(usize, bool)> = Vec::new();
    let edge = |a: usize, b: usize| fam.contains(Subset::singleton(a).with(b));
    while alive.len() > 1 {
        let last = *alive.last().unwrap();
        let first = alive[0];
        if alive.iter().all(|&u| u == last || !edge(u, last)) {
            steps.push((last, false));
            alive.pop();
        } else if alive.iter().all(|&u| u == first || edge(u, first)) {
            steps.push((first, true));
            alive.remove(0);
        } else {
            return domain("graph has neither an isolated nor a coning vertex");
        }
    }
    if let Some(&v) = alive.first() {
        weights[v - 1] = 1;
        t = 2;
    } else {
        t = 2;
    }
    for &(v, cone) in steps.iter().rev() {
        if cone {
            weights[v - 1] = t;
        } else {
            for w in weights.iter_mut() {
                *w *= 2;
            }
            weights[v - 1] = 1;
            t = 2 * t + 1;
        }
    }
    let lf = LinearFunctional::from_integers(&weights, Some(t));
    debug_assert!(lf.certifies_positive(fam));
    Ok(lf)
}
