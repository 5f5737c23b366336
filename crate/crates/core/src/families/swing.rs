//! Swings, reverse swings, and degree-sorting relabellings.

use super::codec::Subset;
use super::family::{DegreeSequence, KFamily};
use crate::degseq::partition::majorizes;
use crate::error::{domain, Error, Result};

/// Replaces `A∪{j}` by `A∪{i}` for `i < j`.
pub fn swing(fam: &KFamily, a: Subset, i: usize, j: usize) -> Result<KFamily> {
    let bad = |why: &str| Err(Error::InvalidSwing(format!("swing of {a} with ({i},{j}): {why}")));
    if i >= j {
        return bad("needs i < j");
    }
    if a.len() + 1 != fam.k() || a.contains(i) || a.contains(j) {
        return bad("A must be a (k-1)-set avoiding i and j");
    }
    if j > fam.n() {
        return bad("vertex outside [n]");
    }
    if !fam.contains(a.with(j)) {
        return bad("A∪{j} is not a member");
    }
    if fam.contains(a.with(i)) {
        return bad("A∪{i} is already a member");
    }
    let mut out = fam.clone();
    out.exchange(a.with(j), a.with(i));
    Ok(out)
}

/// Every legal swing `(A, i, j)`; empty exactly when the family is shifted.
pub fn legal_swings(fam: &KFamily) -> Vec<(Subset, usize, usize)> {
    let mut out = Vec::new();
    for s in fam.iter() {
        for j in s.iter() {
            let a = s.without(j);
            for i in (1..j).filter(|&i| !a.contains(i)) {
                if !fam.contains(a.with(i)) {
                    out.push((a, i, j));
                }
            }
        }
    }
    out
}

/// Relabels vertices in weakly decreasing order of degree (ties by label).
pub fn sort_by_degree(fam: &KFamily) -> KFamily {
    let d = fam.degree_sequence();
    let mut order: Vec<usize> = (1..=fam.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(d[v - 1]));
    let mut perm = vec![0; fam.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v - 1] = pos + 1;
    }
    fam.relabel(&perm).expect("a permutation of [n]")
}

/// A family with degree sequence `target`, reached from `fam` by reverse swings.
///
/// Each step moves one unit of degree from the first index `i` where the current
/// sequence exceeds `target` to the next index `j > i` where it falls short. The
/// current prefix sums stay above those of `target`, and `d_i > d_j` guarantees a
/// set `A` with `A∪{i}` in the family and `A∪{j}` outside it.
pub fn realize_majorized(fam: &KFamily, target: &[usize]) -> Result<KFamily> {
    let mut d = fam.degree_sequence();
    if target.len() != d.len() {
        return domain(format!("target has {} entries, expected {}", target.len(), d.len()));
    }
    if target.windows(2).any(|w| w[0] < w[1]) {
        return domain("target must be weakly decreasing");
    }
    if !majorizes(&d, target) {
        return domain(format!("{d:?} does not majorize {target:?}"));
    }
    let mut cur = fam.clone();
    while d != target {
        let i = (0..d.len()).find(|&p| d[p] > target[p]).expect("sequences differ");
        let j = (i + 1..d.len()).find(|&p| d[p] < target[p]).expect("equal sums force a deficit");
        let (vi, vj) = (i + 1, j + 1);
        let a = cur
            .iter()
            .filter(|s| s.contains(vi) && !s.contains(vj))
            .map(|s| s.without(vi))
            .filter(|a| !cur.contains(a.with(vj)))
            .min()
            .ok_or_else(|| Error::Infeasible(format!("no reverse swing from {vi} to {vj} in {cur}")))?;
        cur.exchange(a.with(vi), a.with(vj));
        d[i] -= 1;
        d[j] += 1;
    }
    Ok(cur)
}

/// The degree sequence sorted into weakly decreasing order.
pub fn sorted_degrees(fam: &KFamily) -> DegreeSequence {
    let mut d = fam.degree_sequence();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::shifted::{is_shifted, shifted_families_on};

    fn set(s: &str) -> Subset {
        Subset::from_digits(s).unwrap()
    }

    #[test]
    fn swing_sequence_reaches_shifted_family() {
        let k = KFamily::from_digit_strings(6, 3, &["123", "124", "145", "156"]).unwrap();
        let k = swing(&k, set("15"), 2, 4).unwrap();
        assert!(k.contains(set("125")) && !k.contains(set("145")));
        let k = swing(&k, set("16"), 3, 5).unwrap();
        let k = swing(&k, set("13"), 4, 6).unwrap();
        let expected = KFamily::from_digit_strings(6, 3, &["123", "124", "134", "125"]).unwrap();
        assert_eq!(k, expected);
        assert!(is_shifted(&k));
        assert!(legal_swings(&k).is_empty());
    }

    #[test]
    fn illegal_swings_are_rejected() {
        let k = KFamily::from_digit_strings(4, 2, &["12", "34"]).unwrap();
        assert!(matches!(swing(&k, set("2"), 3, 4), Err(Error::InvalidSwing(_))));
        assert!(matches!(swing(&k, set("1"), 3, 2), Err(Error::InvalidSwing(_))));
        assert!(matches!(swing(&k, set("34"), 1, 2), Err(Error::InvalidSwing(_))));
        assert!(swing(&k, set("3"), 2, 4).is_ok());
        let star = KFamily::from_digit_strings(4, 2, &["12", "13"]).unwrap();
        assert!(matches!(swing(&star, set("1"), 2, 3), Err(Error::InvalidSwing(_))));
    }

    #[test]
    fn swings_exist_iff_not_shifted() {
        for fam in KFamily::all(5, 2).unwrap() {
            assert_eq!(legal_swings(&fam).is_empty(), is_shifted(&fam), "{fam}");
        }
        for fam in shifted_families_on(6, 3).unwrap() {
            assert!(legal_swings(&fam).is_empty());
        }
    }

    #[test]
    fn sort_by_degree_example() {
        let k = KFamily::from_digit_strings(4, 2, &["13", "23", "24"]).unwrap();
        let sorted = sort_by_degree(&k);
        assert_eq!(sorted.degree_sequence(), vec![2, 2, 1, 1]);
        let bip = KFamily::from_digit_strings(5, 3, &["124", "125", "134", "135", "234", "235"]).unwrap();
        assert_eq!(sorted_degrees(&sort_by_degree(&bip)), sorted_degrees(&bip));
        assert_eq!(sort_by_degree(&sort_by_degree(&bip)).degree_sequence(), sort_by_degree(&bip).degree_sequence());
    }

    #[test]
    fn realize_majorized_examples() {
        let k = KFamily::from_digit_strings(5, 3, &["123", "124", "125"]).unwrap();
        let r = realize_majorized(&k, &[3, 2, 2, 1, 1]).unwrap();
        assert_eq!(r.degree_sequence(), vec![3, 2, 2, 1, 1]);
        assert_eq!(r.to_string(), "{123,134,125}");
        assert_eq!(realize_majorized(&k, &[3, 3, 1, 1, 1]).unwrap(), k);
        assert!(realize_majorized(&k, &[4, 2, 1, 1, 1]).is_err());

        let star = KFamily::from_digit_strings(4, 2, &["12", "13"]).unwrap();
        let r = realize_majorized(&star, &[1, 1, 1, 1]).unwrap();
        assert_eq!(r.degree_sequence(), vec![1, 1, 1, 1]);
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn swings_raise_majorization() {
        use crate::degseq::partition::majorizes;
        for fam in KFamily::all(5, 3).unwrap().filter(|f| f.len() == 4) {
            let fam = sort_by_degree(&fam);
            let before = fam.degree_sequence();
            for (a, i, j) in legal_swings(&fam) {
                let after = sorted_degrees(&swing(&fam, a, i, j).unwrap());
                assert!(majorizes(&after, &before) && after != before, "{fam} ({a},{i},{j})");
            }
        }
    }

    #[test]
    fn realize_every_majorized_partition() {
        use crate::degseq::partition::partitions_dominated_by;
        let k = crate::families::shifted::shifted_generate(6, 3, &[set("235"), set("146")]).unwrap();
        let d = k.degree_sequence();
        let mut seen = 0;
        for target in partitions_dominated_by(&d, d.len()) {
            let r = realize_majorized(&k, &target).unwrap();
            assert_eq!(r.degree_sequence(), target);
            seen += 1;
        }
        assert!(seen > 10);
    }
}
