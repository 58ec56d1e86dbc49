//! Brute-force oracles for the character computations. None of these go
//! through Gelfand-Tsetlin patterns or the exterior-power DP.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use picard_hodge::character::{
    decompose, exterior_power_weights, irrep_character, irrep_dimension, PACKAGE_WEIGHTS,
};
use picard_hodge::weights::{DominantWeight, TorusCharacter};

type Counts = BTreeMap<TorusCharacter, u64>;

fn to_counts(m: &picard_hodge::WeightMultiset) -> Counts {
    m.iter()
        .map(|(chi, mult)| (*chi, u64::try_from(mult.clone()).unwrap()))
        .collect()
}

/// Semistandard tableaux of partition shape `rows` with entries in `1..=3`,
/// enumerated cell by cell in row-major order. Returns the content of each
/// tableau as `(#1, #2, #3)`.
fn ssyt_contents(rows: [usize; 3]) -> Vec<[i64; 3]> {
    let cells: Vec<(usize, usize)> = (0..3)
        .flat_map(|r| (0..rows[r]).map(move |c| (r, c)))
        .collect();
    let mut grid = vec![vec![0u8; rows[0]]; 3];
    let mut out = Vec::new();

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u8>>,
        out: &mut Vec<[i64; 3]>,
    ) {
        if idx == cells.len() {
            let mut content = [0i64; 3];
            for &(r, c) in cells {
                content[grid[r][c] as usize - 1] += 1;
            }
            out.push(content);
            return;
        }
        let (r, c) = cells[idx];
        for v in 1..=3u8 {
            let row_ok = c == 0 || grid[r][c - 1] <= v;
            let col_ok = r == 0 || grid[r - 1][c] < v;
            if row_ok && col_ok {
                grid[r][c] = v;
                fill(idx + 1, cells, grid, out);
            }
        }
        grid[r][c] = 0;
    }

    fill(0, &cells, &mut grid, &mut out);
    out
}

/// Character of `F_{a,b,c,d}` from tableaux: shift to a partition, read off
/// contents, shift back.
fn tableau_character(a: i64, b: i64, c: i64, d: i64) -> Counts {
    let shift = (-c).max(0);
    let rows = [
        (a + shift) as usize,
        (b + shift) as usize,
        (c + shift) as usize,
    ];
    let mut out = Counts::new();
    for [n1, n2, n3] in ssyt_contents(rows) {
        *out.entry(TorusCharacter::new(n1 - shift, n2 - shift, n3 - shift, d))
            .or_default() += 1;
    }
    out
}

#[test]
fn irreducible_characters_match_tableaux() {
    for a in -3i64..=3 {
        for b in -3..=a {
            for c in -3..=b {
                let d = a - c;
                let lambda = DominantWeight::new(a, b, c, d).unwrap();
                let oracle = tableau_character(a, b, c, d);
                let total: u64 = oracle.values().sum();
                assert_eq!(irrep_dimension(&lambda), total, "dim of {lambda}");
                assert_eq!(
                    to_counts(&irrep_character(&lambda)),
                    oracle,
                    "char of {lambda}"
                );
            }
        }
    }
}

#[test]
fn frozen_dimensions() {
    // Tableau counts for shapes (1,0,0) and (2,1,0).
    assert_eq!(ssyt_contents([1, 0, 0]).len(), 3);
    assert_eq!(ssyt_contents([2, 1, 0]).len(), 8);
    assert_eq!(
        ssyt_contents([2, 1, 0])
            .iter()
            .filter(|c| **c == [1, 1, 1])
            .count(),
        2
    );
}

/// Weights of `∧^p` by walking every `p`-subset of the `6r` basis vectors.
fn subset_character(r: u32, p: u32) -> Counts {
    let basis: Vec<TorusCharacter> = PACKAGE_WEIGHTS
        .iter()
        .flat_map(|w| std::iter::repeat_n(*w, r as usize))
        .collect();
    let n = basis.len();
    let mut out = Counts::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() != p {
            continue;
        }
        let weight = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .fold(TorusCharacter::ZERO, |acc, i| acc + basis[i]);
        *out.entry(weight).or_default() += 1;
    }
    out
}

#[test]
fn exterior_powers_match_subset_enumeration() {
    for r in 1..=2u32 {
        for p in 0..=6 * r {
            assert_eq!(
                to_counts(&exterior_power_weights(r, p)),
                subset_character(r, p),
                "r={r} p={p}"
            );
        }
    }
}

#[test]
fn top_exterior_power_is_sum_of_basis() {
    let sum = PACKAGE_WEIGHTS
        .iter()
        .fold(TorusCharacter::ZERO, |acc, w| acc + *w);
    let top = exterior_power_weights(1, 6);
    assert_eq!(top.len(), 1);
    assert_eq!(top.multiplicity(&sum), BigUint::from(1u32));
}

/// `∧²(U ⊕ W) = ∧²U ⊕ (U ⊗ W) ⊕ ∧²W` with `U = F_{0,0,-1,0}` and
/// `W = F_{1,0,0,-1}`: `∧²U = F_{0,-1,-1,0}`, `∧²W = F_{1,1,0,-2}`,
/// `U ⊗ W = F_{1,0,-1,-1} ⊕ F_{0,0,0,-1}`.
#[test]
fn second_exterior_power_by_hand() {
    let d = decompose(&exterior_power_weights(1, 2)).unwrap();
    let mut got: Vec<_> = d
        .terms
        .iter()
        .map(|(l, m)| (l.character().to_array(), u64::try_from(m.clone()).unwrap()))
        .collect();
    got.sort();
    assert_eq!(
        got,
        vec![
            ([0, -1, -1, 0], 1),
            ([0, 0, 0, -1], 1),
            ([1, 0, -1, -1], 1),
            ([1, 1, 0, -2], 1),
        ]
    );
    let dims: u64 = d.terms.iter().map(|(l, _)| irrep_dimension(l)).sum();
    assert_eq!(dims, 15);
}
