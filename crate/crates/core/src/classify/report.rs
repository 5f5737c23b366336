//! The full classification of a family, with certificates and witnesses.

use serde::Serialize;

use super::cancellation::{cc_violation, dcc_violation, CancellationViolation};
use super::maximal::is_degree_maximal;
use super::threshold::{is_positive_threshold, is_threshold, LinearFunctional};
use crate::degseq::{count_realizations, find_realizations};
use crate::error::{Error, Result};
use crate::families::{
    is_shifted, rrst_violations, shifted_relabeling, vicinal_preorder, KFamily, RrstViolation,
};
use crate::zonotope::family_is_vertex;

#[derive(Clone, Debug, Serialize)]
pub struct CancellationCheck {
    pub t: usize,
    pub holds: bool,
    pub violation: Option<CancellationViolation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct HierarchyReport {
    pub family: KFamily,
    pub degree_sequence: Vec<usize>,
    pub positive_threshold: bool,
    pub positive_threshold_certificate: Option<LinearFunctional>,
    pub threshold: bool,
    pub threshold_certificate: Option<LinearFunctional>,
    pub zonotope_vertex: bool,
    pub uniquely_realizable: bool,
    /// Another family with the same degree sequence.
    pub other_realization: Option<KFamily>,
    /// Degree-maximal after sorting vertices by degree.
    pub degree_maximal: bool,
    pub majorizing_family: Option<KFamily>,
    pub vicinal_total: bool,
    pub rrst: bool,
    pub rrst_violation: Option<RrstViolation>,
    pub shifted: bool,
    pub shifted_isomorphic: bool,
    /// `relabeling[v-1]` is the new label of `v` making the family shifted.
    pub shifted_relabeling: Option<Vec<usize>>,
    pub cc: Vec<CancellationCheck>,
    pub dcc: Vec<CancellationCheck>,
}

pub fn hierarchy_report(fam: &KFamily, budget_t: usize) -> Result<HierarchyReport> {
    let d = fam.degree_sequence();
    let positive = is_positive_threshold(fam);
    let threshold = is_threshold(fam);
    let zonotope_vertex = family_is_vertex(fam)?;

    let count = count_realizations(&d, fam.k(), Some(2));
    let other_realization = if count > 1 {
        find_realizations(&d, fam.k(), 2)?.into_iter().find(|g| g != fam)
    } else {
        None
    };

    let maximal = is_degree_maximal(fam);
    let vicinal_total = vicinal_preorder(fam).is_total();
    let rrst_violation = rrst_violations(fam).into_iter().next();
    let relabel = shifted_relabeling(fam);

    let mut cc = Vec::new();
    let mut dcc = Vec::new();
    for t in 1..=budget_t {
        let v = cc_violation(fam, t)?;
        cc.push(CancellationCheck { t, holds: v.is_none(), violation: v });
        let v = dcc_violation(fam, t)?;
        dcc.push(CancellationCheck { t, holds: v.is_none(), violation: v });
    }

    let report = HierarchyReport {
        family: fam.clone(),
        degree_sequence: d,
        positive_threshold: positive.is_some(),
        positive_threshold_certificate: positive,
        threshold: threshold.is_some(),
        threshold_certificate: threshold,
        zonotope_vertex,
        uniquely_realizable: count == 1,
        other_realization,
        degree_maximal: maximal.maximal,
        majorizing_family: maximal.witness,
        vicinal_total,
        rrst: rrst_violation.is_none(),
        rrst_violation,
        shifted: is_shifted(fam),
        shifted_isomorphic: relabel.is_some(),
        shifted_relabeling: relabel.map(|(perm, _)| perm),
        cc,
        dcc,
    };
    report.check_chain()?;
    Ok(report)
}

impl HierarchyReport {
    /// The implications among the flags; a failure means a bug or a counterexample.
    pub fn check_chain(&self) -> Result<()> {
        let r = self;
        let rules: [(&str, bool); 10] = [
            ("positive threshold => threshold", !r.positive_threshold || r.threshold),
            ("threshold <=> zonotope vertex", r.threshold == r.zonotope_vertex),
            ("threshold => uniquely realizable", !r.threshold || r.uniquely_realizable),
            ("uniquely realizable => degree-maximal", !r.uniquely_realizable || r.degree_maximal),
            ("degree-maximal => shifted-isomorphic", !r.degree_maximal || r.shifted_isomorphic),
            ("vicinal total <=> shifted-isomorphic", r.vicinal_total == r.shifted_isomorphic),
            ("RRST <=> shifted-isomorphic", r.rrst == r.shifted_isomorphic),
            ("shifted => shifted-isomorphic", !r.shifted || r.shifted_isomorphic),
            ("threshold => every CC_t", !r.threshold || r.cc.iter().all(|c| c.holds)),
            ("uniquely realizable => every DCC_t", !r.uniquely_realizable || r.dcc.iter().all(|c| c.holds)),
        ];
        for (name, ok) in rules {
            if !ok {
                return Err(Error::InternalConsistency(format!("{name} fails for {}", r.family)));
            }
        }
        for (c, d) in r.cc.iter().zip(&r.dcc) {
            if c.holds && !d.holds {
                return Err(Error::InternalConsistency(format!("CC_{} without DCC_{} for {}", c.t, d.t, r.family)));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{shifted::parse_generators, shifted_generate};

    #[test]
    fn first_shifted_example_report() {
        let k = shifted_generate(6, 3, &parse_generators("235,146").unwrap()).unwrap();
        let r = hierarchy_report(&k, 2).unwrap();
        assert!(r.shifted && r.shifted_isomorphic && r.vicinal_total && r.rrst);
    }

    #[test]
    fn triangle_is_everything() {
        let k = KFamily::from_digit_strings(3, 2, &["12", "13", "23"]).unwrap();
        let r = hierarchy_report(&k, 3).unwrap();
        assert!(r.positive_threshold && r.threshold && r.uniquely_realizable && r.degree_maximal);
    }

    #[test]
    fn staircase_is_not_uniquely_realizable() {
        let k = KFamily::from_digit_strings(5, 3, &["123", "134", "145"]).unwrap();
        let r = hierarchy_report(&k, 3).unwrap();
        assert!(!r.uniquely_realizable && !r.threshold);
        let other = r.other_realization.unwrap();
        assert_eq!(other.degree_sequence(), k.degree_sequence());
        assert!(r.cc[2].holds && r.dcc[2].holds && !r.dcc[1].holds);
    }

    #[test]
    fn report_json_has_certificates() {
        let k = KFamily::from_digit_strings(5, 3, &["123", "124", "125"]).unwrap();
        let json = serde_json::to_value(hierarchy_report(&k, 2).unwrap()).unwrap();
        assert_eq!(json["threshold"], true);
        assert!(json["threshold_certificate"]["coefficients"][0].as_str().unwrap().contains('/'));
        assert_eq!(json["family"]["members"], serde_json::json!([[1, 2, 3], [1, 2, 4], [1, 2, 5]]));
    }
}
