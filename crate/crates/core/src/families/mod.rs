//! `k`-families on `[n]`: representation, degree data, shiftedness, vicinal
//! preorder, swings, and enumeration of shifted families.

pub mod codec;
pub mod family;
pub mod shifted;
pub mod swing;
pub mod vicinal;

pub use codec::{binomial, Subset, SubsetCodec};
pub use family::{DegreeSequence, FamilyJson, KFamily};
pub use shifted::{enumerate_shifted, is_shifted, shifted_families_on, shifted_generate, IdealWalker};
pub use swing::{legal_swings, realize_majorized, sort_by_degree, sorted_degrees, swing};
pub use vicinal::{is_total, rrst_violations, shifted_relabeling, vicinal_preorder, Preorder, RrstViolation};
