//! Endomorphism rings, module centers and endomorphism towers of finite
//! modules over `Z`, `Z/n` and finite rings given by structure constants.

pub mod center;
pub mod classify;
pub mod error;
pub mod group;
pub mod hom;
pub mod int;
mod lattice;
pub mod matrix;
pub mod module;
pub mod ring;
pub mod snf;
pub mod subgroup;
pub mod tower;

pub use error::{Error, Result};
pub use group::{
    abelian_groups_of_order, abelian_groups_up_to, direct_sum_group, group_from_presentation, DirectSum,
    Element, FinAbGroup, PresentedGroup,
};
pub use hom::{hom_group, AbHom, HomGroup};
pub use matrix::Matrix;
pub use snf::{smith_diagonal, smith_normal_form, SmithForm};
pub use subgroup::{
    enumerate_invariant_subgroups, enumerate_subgroups, image, image_of, kernel, preimage, socle_and_essential,
    Quotient, Subgroup,
};
pub use module::{
    annihilator_and_faithful, direct_sum_action, end_of_direct_sum_check, end_ring, hom_module, is_balanced,
    validate_action, Annihilator, BaseRing, Bounds, DirectSumModule, EndRingResult, HomModule, ModuleAction,
};
pub use ring::{ring_center, ring_is_commutative, ring_validate, scalar_ring_as_finring, FinRing, ScalarRing};
pub use center::{
    center_of_fully_invariant_submodule_check, center_of_module, commutator_image, essential_center_lemma_check,
    fully_invariant_submodules, is_endo_commutative, is_fully_invariant, main_theorem_report, CenterReport, CheckOutcome,
};
pub use classify::{
    classifier_report, is_comultiplication, is_d_module, is_dissimilar_semisimple, is_endo_extendable,
    is_multiplication, is_quasi_injective, is_self_generator, s_module_multiplication_check,
    submodule_lattice_comparison, torsion_subset, trace_ideal_and_generator, ClassifierReport, LatticeComparison,
    TraceIdeal,
};
pub use tower::{biend, ecdim, endo_tower, tower_classification, tower_summary, Ecdim, TowerClass, TowerResult, TowerSummary};
