//! Exact character arithmetic for `GL3 x Gm`.
//!
//! Characters are sparse multisets of torus weights with arbitrary-precision
//! multiplicities. Irreducible characters come from Gelfand-Tsetlin patterns,
//! exterior powers of the standard package `F_{0,0,-1,0}^r ⊕ F_{1,0,0,-1}^r`
//! from a capacity-bounded DP, and decomposition into irreducibles from
//! peeling off highest weights.

use std::collections::btree_map::{self, Entry};
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::weights::{DominantWeight, TorusCharacter, WeylElement};

/// A finite multiset of torus weights; every stored multiplicity is positive.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    entries: BTreeMap<TorusCharacter, BigUint>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(chi: TorusCharacter, mult: impl Into<BigUint>) -> Self {
        let mut m = Self::new();
        m.add(chi, mult.into());
        m
    }

    /// Adds `mult` copies of `chi`. Adding zero is a no-op.
    pub fn add(&mut self, chi: TorusCharacter, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        *self.entries.entry(chi).or_default() += mult;
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &WeightMultiset, factor: &BigUint) {
        if factor.is_zero() {
            return;
        }
        for (chi, m) in &other.entries {
            *self.entries.entry(*chi).or_default() += m * factor;
        }
    }

    /// `self -= factor * other`, failing if some multiplicity would go
    /// negative. On failure `self` may be partially modified.
    pub fn sub_scaled(&mut self, other: &WeightMultiset, factor: &BigUint) -> Result<()> {
        for (chi, m) in &other.entries {
            let delta = m * factor;
            match self.entries.entry(*chi) {
                Entry::Occupied(mut e) => {
                    if *e.get() < delta {
                        return Err(Error::NotACharacter(format!(
                            "multiplicity of {chi} would become negative"
                        )));
                    }
                    *e.get_mut() -= delta;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
                Entry::Vacant(_) => {
                    if !delta.is_zero() {
                        return Err(Error::NotACharacter(format!(
                            "weight {chi} missing while subtracting"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn multiplicity(&self, chi: &TorusCharacter) -> BigUint {
        self.entries.get(chi).cloned().unwrap_or_default()
    }

    /// Sum of multiplicities, i.e. the dimension of the module.
    pub fn mass(&self) -> BigUint {
        self.entries.values().sum()
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, TorusCharacter, BigUint> {
        self.entries.iter()
    }

    /// Lexicographically greatest dominant weight in the support.
    pub fn greatest_dominant(&self) -> Option<(TorusCharacter, &BigUint)> {
        self.entries
            .iter()
            .rev()
            .find(|(chi, _)| chi.is_dominant())
            .map(|(chi, m)| (*chi, m))
    }

    /// Applies a Weyl element to every weight.
    pub fn permuted(&self, sigma: &WeylElement) -> WeightMultiset {
        self.entries
            .iter()
            .map(|(chi, m)| (sigma.act(chi), m.clone()))
            .collect()
    }
}

impl FromIterator<(TorusCharacter, BigUint)> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = (TorusCharacter, BigUint)>>(iter: I) -> Self {
        let mut m = WeightMultiset::new();
        for (chi, mult) in iter {
            m.add(chi, mult);
        }
        m
    }
}

impl<'a> IntoIterator for &'a WeightMultiset {
    type Item = (&'a TorusCharacter, &'a BigUint);
    type IntoIter = btree_map::Iter<'a, TorusCharacter, BigUint>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// A representation written as a sum of irreducibles with multiplicities.
/// Terms appear in peel order (decreasing lexicographic highest weight).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IrrepDecomposition {
    pub terms: Vec<(DominantWeight, BigUint)>,
}

impl IrrepDecomposition {
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> BTreeSet<DominantWeight> {
        self.terms.iter().map(|(lambda, _)| *lambda).collect()
    }

    pub fn multiplicity(&self, lambda: &DominantWeight) -> BigUint {
        self.terms
            .iter()
            .find(|(l, _)| l == lambda)
            .map(|(_, m)| m.clone())
            .unwrap_or_default()
    }

    /// `Σ mult · dim`.
    pub fn total_dimension(&self) -> BigUint {
        self.terms
            .iter()
            .map(|(lambda, m)| m * BigUint::from(irrep_dimension(lambda)))
            .sum()
    }

    /// `Σ mult · character`.
    pub fn reconstruct(&self) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (lambda, m) in &self.terms {
            out.add_scaled(&irrep_character(lambda), m);
        }
        out
    }
}

/// Weyl dimension formula for `GL3`: `(a-b+1)(b-c+1)(a-c+2)/2`.
pub fn irrep_dimension(lambda: &DominantWeight) -> u64 {
    let (a, b, c) = (
        i128::from(lambda.a()),
        i128::from(lambda.b()),
        i128::from(lambda.c()),
    );
    let dim = (a - b + 1) * (b - c + 1) * (a - c + 2) / 2;
    u64::try_from(dim).expect("dimension does not fit in u64")
}

/// Weight multiset of `F_λ`.
///
/// The `GL3` part is shifted by `N = max(0, -c)` to a partition, Gelfand-Tsetlin
/// patterns with that top row are enumerated, and each pattern's weight is
/// shifted back. The `Gm` coordinate is `d` on every weight.
pub fn irrep_character(lambda: &DominantWeight) -> WeightMultiset {
    let shift = (-lambda.c()).max(0);
    let [l1, l2, l3] = [lambda.a() + shift, lambda.b() + shift, lambda.c() + shift];
    let top_sum = l1 + l2 + l3;

    let mut out = WeightMultiset::new();
    for m1 in l2..=l1 {
        for m2 in l3..=l2 {
            for n in m2..=m1 {
                let weight = TorusCharacter::new(
                    n - shift,
                    m1 + m2 - n - shift,
                    top_sum - m1 - m2 - shift,
                    lambda.d(),
                );
                out.add(weight, BigUint::one());
            }
        }
    }
    out
}

/// Weights of the standard package: the three weights of `F_{0,0,-1,0}`
/// followed by the three weights of `F_{1,0,0,-1}`.
pub const PACKAGE_WEIGHTS: [TorusCharacter; 6] = [
    TorusCharacter::new(-1, 0, 0, 0),
    TorusCharacter::new(0, -1, 0, 0),
    TorusCharacter::new(0, 0, -1, 0),
    TorusCharacter::new(1, 0, 0, -1),
    TorusCharacter::new(0, 1, 0, -1),
    TorusCharacter::new(0, 0, 1, -1),
];

fn binomial_row(n: u32) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for k in 1..=n {
        let next = &row[k as usize - 1] * BigUint::from(n - k + 1) / BigUint::from(k);
        row.push(next);
    }
    row
}

/// Weight multiset of `∧^p(F_{0,0,-1,0}^{⊕r} ⊕ F_{1,0,0,-1}^{⊕r})`.
///
/// Each of the six distinct basis weights has `r` copies. Choosing `k_i`
/// copies of weight `i` contributes `Π binom(r, k_i)` basis vectors of weight
/// `Σ k_i w_i`; the DP runs over the six classes with state
/// `(vectors chosen so far, partial weight)`. Empty when `p > 6r`.
pub fn exterior_power_weights(r: u32, p: u32) -> WeightMultiset {
    if u64::from(p) > 6 * u64::from(r) {
        return WeightMultiset::new();
    }
    let binom = binomial_row(r);

    let mut states: BTreeMap<(u32, TorusCharacter), BigUint> = BTreeMap::new();
    states.insert((0, TorusCharacter::ZERO), BigUint::one());
    for basis_weight in PACKAGE_WEIGHTS {
        let mut next: BTreeMap<(u32, TorusCharacter), BigUint> = BTreeMap::new();
        for ((chosen, weight), mult) in &states {
            for k in 0..=r.min(p - chosen) {
                let key = (chosen + k, weight.add_scaled(basis_weight, i64::from(k)));
                *next.entry(key).or_default() += mult * &binom[k as usize];
            }
        }
        states = next;
    }

    states
        .into_iter()
        .filter(|((chosen, _), _)| *chosen == p)
        .map(|((_, weight), mult)| (weight, mult))
        .collect()
}

/// Splits a character into irreducibles by repeatedly removing the
/// irreducible whose highest weight is the lexicographically greatest
/// dominant weight still present.
pub fn decompose(m: &WeightMultiset) -> Result<IrrepDecomposition> {
    let mut rest = m.clone();
    let mut terms = Vec::new();
    while !rest.is_empty() {
        let (chi, mult) = rest.greatest_dominant().ok_or_else(|| {
            Error::NotACharacter("no dominant weight left in a nonempty multiset".into())
        })?;
        let mult = mult.clone();
        let lambda = DominantWeight::try_from(chi)?;
        rest.sub_scaled(&irrep_character(&lambda), &mult)?;
        terms.push((lambda, mult));
    }
    Ok(IrrepDecomposition { terms })
}
