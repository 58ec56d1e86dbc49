//! Case-by-case verification for the abelian-scheme family: for each
//! `(r, p)` with `0 <= p <= 6r`, compare the decomposition of `∧^p` against
//! the closed-form weight sets, the constituent predicate, the duality
//! `p ↔ 6r - p`, and the dimension count `binom(6r, p)`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::character::{decompose, exterior_power_weights, IrrepDecomposition};
use crate::degeneration::{
    exterior_duality, lemma_support, predicted_weight_sets, weight_sets_of, WeightSets,
};
use crate::error::Result;
use crate::kostant::TOP_DEGREE;
use crate::weights::DominantWeight;

/// A degree where the two routes to the weight set disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeMismatch {
    pub k: u32,
    pub predicted: Vec<i64>,
    pub computed: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseVerdict {
    pub r: u32,
    pub p: u32,
    /// Computed and closed-form weight sets agree in every degree.
    pub weights_match: bool,
    pub mismatches: Vec<DegreeMismatch>,
    /// Decomposition support equals the set cut out by the constituent
    /// predicate.
    pub support_match: bool,
    /// The duality map carries `(r, p)` onto `(r, 6r - p)` with multiplicities.
    pub duality_match: bool,
    /// `Σ mult · dim = binom(6r, p)`.
    pub dimension_match: bool,
}

impl CaseVerdict {
    pub fn passed(&self) -> bool {
        self.weights_match && self.support_match && self.duality_match && self.dimension_match
    }
}

/// Binomial coefficient by the multiplicative formula.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

/// Degrees whose sets differ; a degree missing from one side counts as the
/// empty set.
pub fn weight_set_mismatches(predicted: &WeightSets, computed: &WeightSets) -> Vec<DegreeMismatch> {
    let empty = Default::default();
    let max_k = predicted
        .keys()
        .chain(computed.keys())
        .copied()
        .max()
        .unwrap_or(0)
        .max(TOP_DEGREE + 1);
    (0..=max_k)
        .filter_map(|k| {
            let pred = predicted.get(&k).unwrap_or(&empty);
            let comp = computed.get(&k).unwrap_or(&empty);
            (pred != comp).then(|| DegreeMismatch {
                k,
                predicted: pred.iter().copied().collect(),
                computed: comp.iter().copied().collect(),
            })
        })
        .collect()
}

fn multiplicities(d: &IrrepDecomposition) -> BTreeMap<DominantWeight, BigUint> {
    d.terms.iter().cloned().collect()
}

fn check_case(
    r: u32,
    p: u32,
    here: &IrrepDecomposition,
    dual_side: &IrrepDecomposition,
) -> CaseVerdict {
    let support = here.support();
    let mismatches = weight_set_mismatches(&predicted_weight_sets(r, p), &weight_sets_of(&support));

    let mapped: BTreeMap<_, _> = here
        .terms
        .iter()
        .map(|(lambda, m)| (exterior_duality(lambda, r), m.clone()))
        .collect();

    CaseVerdict {
        r,
        p,
        weights_match: mismatches.is_empty(),
        mismatches,
        support_match: support == lemma_support(r, p),
        duality_match: mapped == multiplicities(dual_side),
        dimension_match: here.total_dimension() == binomial(6 * u64::from(r), u64::from(p)),
    }
}

/// All `6r + 1` cases for one rank, in increasing `p`.
pub fn verify_rank(r: u32) -> Result<Vec<CaseVerdict>> {
    let top = 6 * r;
    let decompositions: Vec<IrrepDecomposition> = (0..=top)
        .into_par_iter()
        .map(|p| decompose(&exterior_power_weights(r, p)))
        .collect::<Result<_>>()?;
    Ok((0..=top)
        .into_par_iter()
        .map(|p| {
            check_case(
                r,
                p,
                &decompositions[p as usize],
                &decompositions[(top - p) as usize],
            )
        })
        .collect())
}

/// A single case, decomposing both `∧^p` and `∧^{6r-p}`.
pub fn verify_case(r: u32, p: u32) -> Result<CaseVerdict> {
    let here = decompose(&exterior_power_weights(r, p))?;
    let dual_p = (6 * r).saturating_sub(p);
    let dual_side = decompose(&exterior_power_weights(r, dual_p))?;
    Ok(check_case(r, p, &here, &dual_side))
}

/// Every case for `r = 1..=r_max`, ordered by `(r, p)`.
pub fn verify_up_to(r_max: u32) -> Result<Vec<CaseVerdict>> {
    let per_rank: Vec<Vec<CaseVerdict>> = (1..=r_max)
        .into_par_iter()
        .map(verify_rank)
        .collect::<Result<_>>()?;
    Ok(per_rank.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), BigUint::from(15u32));
        assert_eq!(binomial(24, 12), BigUint::from(2_704_156u32));
        assert_eq!(binomial(3, 4), BigUint::default());
        assert_eq!(binomial(0, 0), BigUint::from(1u32));
    }

    #[test]
    fn rank_one_passes() {
        let cases = verify_up_to(1).unwrap();
        assert_eq!(cases.len(), 7);
        assert!(cases.iter().all(CaseVerdict::passed));
        assert_eq!(
            cases.iter().map(|c| c.p).collect::<Vec<_>>(),
            (0..=6).collect::<Vec<_>>()
        );
    }

    #[test]
    fn single_case_agrees_with_sweep() {
        let sweep = verify_rank(2).unwrap();
        assert_eq!(verify_case(2, 5).unwrap(), sweep[5]);
    }

    #[test]
    fn mismatch_reports_offending_degree() {
        let predicted = predicted_weight_sets(1, 1);
        let mut computed = predicted.clone();
        computed.get_mut(&2).unwrap().insert(99);
        let m = weight_set_mismatches(&predicted, &computed);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].k, 2);
        assert_eq!(m[0].computed, vec![4, 5, 99]);
    }
}
