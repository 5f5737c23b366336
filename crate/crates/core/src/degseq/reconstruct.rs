//! Recovering a shifted family from its subfacet-degree function.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::families::{is_shifted, KFamily, Subset};

/// For each `(k-1)`-set `T` the link of `T` in a shifted family is an initial
/// segment of `[n] \ T`, so `f(T)` alone determines it.
pub fn reconstruct_shifted_from_subfacet_degrees(
    f: &BTreeMap<Subset, usize>,
    n: usize,
    k: usize,
) -> Result<KFamily> {
    let bad = |msg: String| Error::NotShiftedSubfacetFunction(msg);
    if k == 0 {
        return Err(bad("k must be positive".into()));
    }
    let mut fam = KFamily::empty(n, k)?;
    for (&t, &count) in f {
        if count == 0 {
            continue;
        }
        if t.len() != k - 1 || t.max().is_some_and(|m| m > n) {
            return Err(bad(format!("{t} is not a {}-subset of [{n}]", k - 1)));
        }
        let free: Vec<usize> = (1..=n).filter(|&v| !t.contains(v)).take(count).collect();
        if free.len() < count {
            return Err(bad(format!("f({t}) = {count} exceeds the room outside {t}")));
        }
        for v in free {
            fam.insert(t.with(v));
        }
    }
    if !is_shifted(&fam) {
        return Err(bad(format!("assembled family {fam} is not shifted")));
    }
    let back = fam.i_degree_function(k - 1)?;
    for (t, &c) in &back {
        if f.get(t).copied().unwrap_or(0) != c {
            return Err(bad(format!("assembled family has f({t}) = {c}")));
        }
    }
    if f.iter().any(|(t, &c)| c > 0 && !back.contains_key(t)) {
        return Err(bad("function is supported outside the (k-1)-subsets".into()));
    }
    Ok(fam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{shifted::parse_generators, shifted_families_on, shifted_generate};

    #[test]
    fn round_trip_first_example() {
        let k = shifted_generate(6, 3, &parse_generators("235,146").unwrap()).unwrap();
        let f = k.i_degree_function(2).unwrap();
        assert_eq!(reconstruct_shifted_from_subfacet_degrees(&f, 6, 3).unwrap(), k);
    }

    #[test]
    fn zero_function_gives_empty_family() {
        let f = BTreeMap::new();
        assert!(reconstruct_shifted_from_subfacet_degrees(&f, 5, 3).unwrap().is_empty());
    }

    #[test]
    fn non_shifted_input_is_rejected() {
        let bip = KFamily::from_digit_strings(5, 3, &["124", "125", "134", "135", "234", "235"]).unwrap();
        let f = bip.i_degree_function(2).unwrap();
        assert!(matches!(
            reconstruct_shifted_from_subfacet_degrees(&f, 5, 3),
            Err(Error::NotShiftedSubfacetFunction(_))
        ));
    }

    #[test]
    fn every_shifted_family_round_trips() {
        for (n, k) in [(5, 2), (6, 3), (5, 4)] {
            for fam in shifted_families_on(n, k).unwrap() {
                let f = fam.i_degree_function(k - 1).unwrap();
                assert_eq!(reconstruct_shifted_from_subfacet_degrees(&f, n, k).unwrap(), fam);
            }
        }
    }
}
