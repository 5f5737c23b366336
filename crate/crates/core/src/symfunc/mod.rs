//! Symmetric functions: Kostka numbers, monomial and Schur expansions, the
//! plethysm `e_m[e_k]` and its shifted-family lower bound.

pub mod kostka;
pub mod plethysm;
pub mod poly;
pub mod symmetry;

pub use kostka::kostka;
pub use plethysm::{
    count_families_with_degree, is_schur_positive, phi, phi_with_budget, plethysm_em_ek, plethysm_em_ek_with_budget,
    plethysm_monomial, schur_negative_terms, signed_upsilon, upsilon, upsilon_series, upsilon_series_with_budget,
    DEFAULT_PHI_SUPPORT, DEFAULT_PLETHYSM_DEGREE,
};
pub use poly::{mono_to_schur, mono_to_schur_in, multiply, schur_to_mono, schur_to_mono_in, Basis, SymPoly};
pub use symmetry::{check_symmetry_one, check_symmetry_two, phi_by_size_in, plethysm_in, SymmetryReport};
