//! Hodge types and weights of the degenerations `R^k i^* j_* μ(F_λ)` at a
//! Baily-Borel cusp.
//!
//! The Levi quotient at the cusp receives Deligne's torus through
//! `(z1, z2) ↦ (z1 z2, z1, 1, z1 z2)`, so a character `(x, y, z, w)` restricts
//! to `z1^{x+y+w} z2^{x+w}`. The Hodge type of the degeneration is the
//! negative of that bidegree, taken over the characters of `H^k(W, F_λ)`.
//!
//! For the relative cohomology `R^p f_* Q` of the `r`-fold fibre power of the
//! universal abelian threefold, the weight sets are computed twice: from the
//! closed-form bounds `c_p`, `C_p`, `M_p` and from an honest decomposition of
//! `∧^p(F_{0,0,-1,0}^r ⊕ F_{1,0,0,-1}^r)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::character::{decompose, exterior_power_weights};
use crate::error::{Error, Result};
use crate::kostant::{kostant_cohomology, TOP_DEGREE};
use crate::weights::{DominantWeight, TorusCharacter};

/// A Hodge type `(p, q)`; its weight is `p + q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct HodgeType {
    pub p: i64,
    pub q: i64,
}

impl HodgeType {
    pub const fn new(p: i64, q: i64) -> Self {
        HodgeType { p, q }
    }

    pub const fn weight(&self) -> i64 {
        self.p + self.q
    }

    pub const fn swapped(&self) -> HodgeType {
        HodgeType::new(self.q, self.p)
    }
}

impl From<[i64; 2]> for HodgeType {
    fn from([p, q]: [i64; 2]) -> Self {
        HodgeType::new(p, q)
    }
}

impl From<HodgeType> for [i64; 2] {
    fn from(t: HodgeType) -> Self {
        [t.p, t.q]
    }
}

impl fmt::Display for HodgeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Bidegree of `χ` pulled back along `(z1, z2) ↦ (z1 z2, z1, 1, z1 z2)`.
pub fn deligne_exponents(chi: &TorusCharacter) -> (i64, i64) {
    (chi.x + chi.y + chi.w, chi.x + chi.w)
}

fn type_of(chi: &TorusCharacter) -> HodgeType {
    let (e1, e2) = deligne_exponents(chi);
    HodgeType::new(-e1, -e2)
}

/// Hodge types of `R^k i^* j_* μ(F_λ)`, one per character of `H^k`, in the
/// same order as [`kostant_cohomology`].
pub fn degeneration_types(lambda: &DominantWeight, k: u32) -> Vec<HodgeType> {
    kostant_cohomology(lambda, k).iter().map(type_of).collect()
}

pub fn degeneration_weights(lambda: &DominantWeight, k: u32) -> Vec<i64> {
    degeneration_types(lambda, k)
        .iter()
        .map(HodgeType::weight)
        .collect()
}

/// Weight of the variation `μ(F_{a,b,c,d})` itself: `-(a + b + c + 2d)`.
pub fn vhs_weight(lambda: &DominantWeight) -> i64 {
    -(lambda.a() + lambda.b() + lambda.c() + 2 * lambda.d())
}

/// The multiset `{k - w_k^i + w̄}` over all degrees and all weights, sorted
/// ascending. Weights `-1` and `0` are avoided iff none of these is `-1`
/// or `0`.
pub fn avoidance_list(lambda: &DominantWeight) -> Vec<i64> {
    let vhs = vhs_weight(lambda);
    let mut out: Vec<i64> = (0..=TOP_DEGREE)
        .flat_map(|k| {
            degeneration_weights(lambda, k)
                .into_iter()
                .map(move |w| i64::from(k) - w + vhs)
        })
        .collect();
    out.sort_unstable();
    out
}

/// True iff the avoidance list misses both `-1` and `0`.
pub fn is_generic(lambda: &DominantWeight) -> bool {
    !avoidance_list(lambda).iter().any(|&v| v == -1 || v == 0)
}

/// A character of `H^k` together with the Hodge type it restricts to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypedCharacter {
    pub character: TorusCharacter,
    pub hodge_type: HodgeType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeEntry {
    pub degree: u32,
    pub sources: Vec<TypedCharacter>,
    pub weights: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerationReport {
    pub lambda: DominantWeight,
    pub degrees: Vec<DegreeEntry>,
}

pub fn degeneration_report(lambda: &DominantWeight) -> DegenerationReport {
    let degrees = (0..=TOP_DEGREE)
        .map(|degree| {
            let sources: Vec<_> = kostant_cohomology(lambda, degree)
                .into_iter()
                .map(|character| TypedCharacter {
                    character,
                    hodge_type: type_of(&character),
                })
                .collect();
            let weights = sources.iter().map(|s| s.hodge_type.weight()).collect();
            DegreeEntry {
                degree,
                sources,
                weights,
            }
        })
        .collect();
    DegenerationReport {
        lambda: *lambda,
        degrees,
    }
}

/// Membership test for the irreducible constituents of
/// `∧^p(F_{0,0,-1,0}^r ⊕ F_{1,0,0,-1}^r)`:
///
/// 1. `r >= a >= b >= c >= -r`,
/// 2. `3r + a₋ + b₋ + c₋ >= -d >= a₊ + b₊ + c₊`,
/// 3. `a + b + c + 2d = -p`,
///
/// with `x₊ = max(x, 0)` and `x₋ = min(x, 0)`.
pub fn lemma_predicate(lambda: &DominantWeight, r: u32, p: u32) -> bool {
    let r = i64::from(r);
    let (a, b, c, d) = (lambda.a(), lambda.b(), lambda.c(), lambda.d());
    let pos = |x: i64| x.max(0);
    let neg = |x: i64| x.min(0);

    let bounded = r >= a && c >= -r;
    let d_window = 3 * r + neg(a) + neg(b) + neg(c) >= -d && -d >= pos(a) + pos(b) + pos(c);
    let degree = a + b + c + 2 * d == -i64::from(p);
    bounded && d_window && degree
}

/// All dominant weights satisfying [`lemma_predicate`]. Condition (1) bounds
/// `a, b, c` to `[-r, r]` and condition (3) then fixes `d`.
pub fn lemma_support(r: u32, p: u32) -> BTreeSet<DominantWeight> {
    let ri = i64::from(r);
    let mut out = BTreeSet::new();
    for a in -ri..=ri {
        for b in -ri..=a {
            for c in -ri..=b {
                let twice_d = -i64::from(p) - a - b - c;
                if twice_d % 2 != 0 {
                    continue;
                }
                let lambda =
                    DominantWeight::new(a, b, c, twice_d / 2).expect("a >= b >= c by construction");
                if lemma_predicate(&lambda, r, p) {
                    out.insert(lambda);
                }
            }
        }
    }
    out
}

/// `(a, b, c, d) ↦ (-c, -b, -a, -3r - d)`, which exchanges the constituents
/// of `∧^p` and `∧^{6r-p}`.
pub fn exterior_duality(lambda: &DominantWeight, r: u32) -> DominantWeight {
    let (a, b, c, d) = (lambda.a(), lambda.b(), lambda.c(), lambda.d());
    DominantWeight::new(-c, -b, -a, -3 * i64::from(r) - d).expect("negated reversal stays dominant")
}

/// The integers `c_p`, `C_p`, `M_p` governing the weight ranges of the
/// degenerations of `R^p f_* Q` on the `r`-fold fibre power.
///
/// Degrees 0 and 3 range over `j ∈ [edge_start, edge_end]`, degrees 1 and 2
/// over `j ∈ [0, middle_end]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormBounds {
    pub r: u32,
    pub p: u32,
    /// `c_p`: 1 for `p ∈ {1, 6r - 1}`, else 0.
    pub edge_start: u32,
    /// `C_p = min{p, 2r, |6r - p|}`.
    pub edge_end: u32,
    /// `M_p`.
    pub middle_end: u32,
}

pub fn closed_form_bounds(r: u32, p: u32) -> Result<ClosedFormBounds> {
    let (r64, p64) = (u64::from(r), u64::from(p));
    if p64 > 6 * r64 {
        return Err(Error::DegreeOutOfRange { r, p });
    }
    // The `6r - 1` end point is the image of `p = 1` under p ↦ 6r - p.
    let edge_start = u32::from(p64 == 1 || p64 + 1 == 6 * r64);
    let edge_end = p64.min(2 * r64).min(6 * r64 - p64);
    let middle_end = if p64 <= r64 {
        p64
    } else if p64 <= 3 * r64 {
        r64 + (p64 - r64) / 2
    } else if p64 <= 5 * r64 {
        r64 + (5 * r64 - p64) / 2
    } else {
        6 * r64 - p64
    };
    Ok(ClosedFormBounds {
        r,
        p,
        edge_start,
        edge_end: edge_end as u32,
        middle_end: middle_end as u32,
    })
}

/// Degree `k` to the set of weights occurring in `R^k i^* j_*` of some
/// variation. Absent keys mean vanishing.
pub type WeightSets = BTreeMap<u32, BTreeSet<i64>>;

/// Weight sets given by the closed-form bounds. Empty when `p > 6r`.
pub fn predicted_weight_sets(r: u32, p: u32) -> WeightSets {
    let Ok(bounds) = closed_form_bounds(r, p) else {
        return WeightSets::new();
    };
    let p = i64::from(p);
    let edge = i64::from(bounds.edge_start)..=i64::from(bounds.edge_end);
    let middle = 0..=i64::from(bounds.middle_end);

    let mut sets = WeightSets::new();
    sets.insert(0, edge.clone().map(|j| p - j).collect());
    sets.insert(1, middle.clone().map(|j| p + 1 - j).collect());
    sets.insert(2, middle.map(|j| p + 3 + j).collect());
    sets.insert(3, edge.map(|j| p + 4 + j).collect());
    sets
}

/// Union of [`degeneration_weights`] over a set of highest weights.
pub fn weight_sets_of<'a>(support: impl IntoIterator<Item = &'a DominantWeight>) -> WeightSets {
    let mut sets = WeightSets::new();
    for lambda in support {
        for k in 0..=TOP_DEGREE {
            sets.entry(k)
                .or_default()
                .extend(degeneration_weights(lambda, k));
        }
    }
    sets
}

/// Weight sets obtained by decomposing `∧^p` into irreducibles and running
/// each constituent through the degeneration pipeline.
pub fn computed_weight_sets(r: u32, p: u32) -> Result<WeightSets> {
    let decomposition = decompose(&exterior_power_weights(r, p))?;
    Ok(weight_sets_of(&decomposition.support()))
}
