//! Hodge types and weights of degenerations of variations of Hodge structure
//! over a Picard modular surface at a Baily-Borel cusp, computed with exact
//! integer arithmetic.
//!
//! The pipeline is: a dominant weight `λ` of `GL3 x Gm` ([`weights`]), the
//! characters of `H^k(W, F_λ)` from Kostant's theorem ([`kostant`]), their
//! restriction to Deligne's torus ([`degeneration`]). For the cohomology of
//! fibre powers of the universal abelian scheme, [`character`] decomposes
//! exterior powers into irreducibles and [`verify`] checks the closed-form
//! weight ranges against that decomposition.

pub mod character;
pub mod degeneration;
pub mod error;
pub mod kostant;
pub mod report;
pub mod verify;
pub mod weights;

pub use character::{
    decompose, exterior_power_weights, irrep_character, irrep_dimension, IrrepDecomposition,
    WeightMultiset,
};
pub use degeneration::{
    avoidance_list, closed_form_bounds, computed_weight_sets, degeneration_report,
    degeneration_types, degeneration_weights, deligne_exponents, is_generic, lemma_predicate,
    lemma_support, predicted_weight_sets, vhs_weight, ClosedFormBounds, DegenerationReport,
    HodgeType, WeightSets,
};
pub use error::{Error, Result};
pub use kostant::{kostant_cohomology, kostant_table, KostantLayer};
pub use weights::{
    is_dominant, rho_shift, weyl_length, DominantWeight, TorusCharacter, WeylElement,
};
