//! Degree-maximality.

use serde::Serialize;

use crate::degseq::{is_degree_sequence, shifted_majorant};
use crate::families::{realize_majorized, sorted_degrees, KFamily};

#[derive(Clone, Debug, Serialize)]
pub struct DegreeMaximality {
    pub maximal: bool,
    /// A family whose degree sequence strictly majorizes the input's.
    pub witness: Option<KFamily>,
}

/// Weakly decreasing sequences one unit transfer above `d` (from a later to an
/// earlier position), in decreasing lexicographic order. These are the upper
/// covers of `d` in dominance order.
pub fn upper_transfers(d: &[usize]) -> Vec<Vec<usize>> {
    let n = d.len();
    let mut out = Vec::new();
    for i in 0..n {
        if i > 0 && d[i - 1] == d[i] {
            continue;
        }
        for j in i + 1..n {
            if d[j] == 0 || (j + 1 < n && d[j + 1] == d[j]) {
                continue;
            }
            let mut e = d.to_vec();
            e[i] += 1;
            e[j] -= 1;
            out.push(e);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Whether, after sorting vertices by degree, no family on `[n]` has a degree
/// sequence strictly majorizing `d(K)`.
///
/// It suffices to test the upper covers of the sorted sequence, since
/// realizable sequences form a down-set in dominance order.
pub fn is_degree_maximal(fam: &KFamily) -> DegreeMaximality {
    let d = sorted_degrees(fam);
    for up in upper_transfers(&d) {
        if is_degree_sequence(&up, fam.k()) {
            let top = shifted_majorant(&up, fam.k()).expect("realizable");
            let witness = realize_majorized(&top, &up).expect("majorant dominates the cover");
            return DegreeMaximality { maximal: false, witness: Some(witness) };
        }
    }
    DegreeMaximality { maximal: true, witness: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degseq::{count_realizations, partitions_bounded, strictly_majorizes};
    use crate::families::binomial;

    #[test]
    fn small_example() {
        let k = KFamily::from_digit_strings(5, 3, &["124", "125", "135"]).unwrap();
        let r = is_degree_maximal(&k);
        assert!(!r.maximal);
        assert_eq!(r.witness.unwrap().degree_sequence(), vec![3, 3, 1, 1, 1]);
        let k2 = KFamily::from_digit_strings(5, 3, &["123", "124", "125"]).unwrap();
        assert!(is_degree_maximal(&k2).maximal);
        assert!(is_degree_maximal(&KFamily::complete(5, 3).unwrap()).maximal);
        assert!(is_degree_maximal(&KFamily::empty(5, 3).unwrap()).maximal);
    }

    #[test]
    fn degrees_are_compared_after_sorting() {
        let k = KFamily::from_digit_strings(4, 2, &["13", "23", "24"]).unwrap();
        let r = is_degree_maximal(&k);
        assert!(!r.maximal);
        assert_eq!(r.witness.unwrap().degree_sequence(), vec![3, 1, 1, 1]);
        let relabelled = KFamily::from_digit_strings(5, 3, &["345", "245", "235"]).unwrap();
        assert!(is_degree_maximal(&relabelled).maximal);
    }

    /// Brute force: compare against every realizable sorted sequence of the same weight.
    #[test]
    fn agrees_with_full_scan() {
        for fam in KFamily::all(5, 3).unwrap() {
            let fam = crate::families::sort_by_degree(&fam);
            let d = fam.degree_sequence();
            let w: usize = d.iter().sum();
            let dominated = partitions_bounded(w, 5, binomial(4, 2) as usize)
                .into_iter()
                .map(|p| p.padded(5))
                .any(|p| strictly_majorizes(&p, &d) && count_realizations(&p, 3, Some(1)) > 0);
            let r = is_degree_maximal(&fam);
            assert_eq!(r.maximal, !dominated, "{fam}");
            if let Some(wit) = r.witness {
                assert!(strictly_majorizes(&wit.degree_sequence(), &d));
            }
        }
    }
}
