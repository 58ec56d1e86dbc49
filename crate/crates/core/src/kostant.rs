//! Lie algebra cohomology of the unipotent radical of the Borel of
//! `GL3 x Gm` with coefficients in an irreducible representation.
//!
//! Every irreducible representation of the Levi quotient is a character, so
//! `H^k` is a list of torus characters: `σ(λ + ρ) − ρ` for the `σ` of length
//! `k`.

use serde::{Deserialize, Serialize};

use crate::weights::{rho_shift, DominantWeight, TorusCharacter, WeylElement};

/// Highest possible cohomological degree (the length of the longest element).
pub const TOP_DEGREE: u32 = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostantLayer {
    pub degree: u32,
    pub characters: Vec<TorusCharacter>,
}

/// The characters of `H^k(W, F_λ)`, sorted lexicographically. Empty for
/// `k > 3`.
pub fn kostant_cohomology(lambda: &DominantWeight, k: u32) -> Vec<TorusCharacter> {
    let lambda = lambda.character();
    let mut out: Vec<_> = WeylElement::ALL
        .iter()
        .filter(|s| s.length() == k)
        .map(|s| rho_shift(s, &lambda))
        .collect();
    out.sort();
    out
}

/// Layers for degrees `0..=3`.
pub fn kostant_table(lambda: &DominantWeight) -> Vec<KostantLayer> {
    (0..=TOP_DEGREE)
        .map(|degree| KostantLayer {
            degree,
            characters: kostant_cohomology(lambda, degree),
        })
        .collect()
}
