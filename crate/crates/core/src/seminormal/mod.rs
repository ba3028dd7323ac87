//! Young's seminormal basis `f_t` by four independent constructions, the
//! base change to `e_t`, and denominator certificates.

mod action;
mod basechange;
mod certificate;
mod derive;
mod fast;
mod projector;
mod stepwise;
mod tracked;
mod vector;

pub use action::{axial_distance, c_up, diagonal_coeff, gamma_recursion, seminormal_gen_action};
pub use basechange::{base_change, f_via, f_via_gram_schmidt, BaseChange, Method};
pub use certificate::{certificate_for_node, certificate_for_tableau, denominator_certificate, DenominatorCertificate};
pub use derive::{ascent_pairs, derive_ascent, fit_c_up, AscentInstance, CupForm};
pub use fast::{fat_hook_fn, general_fn, general_ft, james_murphy_factors, FastExpansion, FatHookExpansion, GeneralFt, JamesMurphyFactors};
pub use projector::{f_via_projector, f_via_projector_with, ResidueSet};
pub use stepwise::{f_via_stepwise, row_step, row_step_element, StepwiseResult};
pub use vector::SeminormalVector;
