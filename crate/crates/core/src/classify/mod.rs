//! Where a `k`-family sits among the threshold, uniquely realizable,
//! degree-maximal and shifted-isomorphic classes.

pub mod cancellation;
pub mod maximal;
pub mod report;
pub mod threshold;

pub use crate::degseq::{count_realizations, is_uniquely_realizable};
pub use cancellation::{cc_violation, dcc_violation, satisfies_cc, satisfies_dcc, CancellationViolation};
pub use maximal::{is_degree_maximal, DegreeMaximality};
pub use report::{hierarchy_report, HierarchyReport};
pub use threshold::{
    chvatal_hammer_weights, hypersimplex_family, hypersimplex_functional, is_positive_threshold, is_threshold,
    LinearFunctional,
};
