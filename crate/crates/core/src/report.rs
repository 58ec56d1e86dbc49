//! Structured records produced by the command-line tool, and their plain-text
//! rendering. One [`OutputRecord`] per invocation; the JSON form is stable.

use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::character::{decompose, exterior_power_weights, irrep_dimension, IrrepDecomposition};
use crate::degeneration::{
    avoidance_list, degeneration_report, is_generic, predicted_weight_sets, vhs_weight,
    weight_sets_of, DegreeEntry, WeightSets,
};
use crate::error::Result;
use crate::verify::{binomial, verify_up_to, weight_set_mismatches, CaseVerdict, DegreeMismatch};
use crate::weights::DominantWeight;

/// Multiplicities are written as JSON numbers when they fit in `u64` and as
/// decimal strings otherwise.
mod big {
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        match n.to_u64() {
            Some(small) => s.serialize_u64(small),
            None => s.serialize_str(&n.to_string()),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Small(u64),
        Digits(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Small(n) => Ok(BigUint::from(n)),
            Repr::Digits(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Weight sets are written as a list of `{"k": .., "weights": [..]}` entries.
mod degree_sets {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::degeneration::WeightSets;

    #[derive(Serialize, Deserialize)]
    struct Entry {
        k: u32,
        weights: Vec<i64>,
    }

    pub fn serialize<S: Serializer>(sets: &WeightSets, s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<Entry> = sets
            .iter()
            .map(|(k, w)| Entry {
                k: *k,
                weights: w.iter().copied().collect(),
            })
            .collect();
        entries.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<WeightSets, D::Error> {
        let entries = Vec::<Entry>::deserialize(d)?;
        Ok(entries
            .into_iter()
            .map(|e| (e.k, e.weights.into_iter().collect()))
            .collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    /// The invocation, normalised, e.g. `"abelian 1 2"`.
    pub command: String,
    pub result: CommandResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CommandResult {
    Types(TypesResult),
    Abelian(AbelianResult),
    Decompose(DecomposeResult),
    Verify(VerifyResult),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypesResult {
    pub lambda: DominantWeight,
    pub dimension: u64,
    pub vhs_weight: i64,
    pub degrees: Vec<DegreeEntry>,
    pub avoidance_list: Vec<i64>,
    pub generic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub highest_weight: DominantWeight,
    #[serde(with = "big")]
    pub multiplicity: BigUint,
    pub dimension: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeResult {
    pub r: u32,
    pub p: u32,
    pub vanishes: bool,
    pub terms: Vec<TermRecord>,
    #[serde(with = "big")]
    pub total_dimension: BigUint,
    #[serde(with = "big")]
    pub expected_dimension: BigUint,
}

impl DecomposeResult {
    pub fn dimension_match(&self) -> bool {
        self.total_dimension == self.expected_dimension
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianResult {
    pub decomposition: DecomposeResult,
    #[serde(with = "degree_sets")]
    pub predicted: WeightSets,
    #[serde(with = "degree_sets")]
    pub computed: WeightSets,
    pub mismatches: Vec<DegreeMismatch>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyResult {
    pub r_max: u32,
    pub cases: Vec<CaseVerdict>,
    pub passed: usize,
    pub failed: usize,
}

impl VerifyResult {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

impl OutputRecord {
    /// Whether the record reports a verification failure.
    pub fn is_failure(&self) -> bool {
        match &self.result {
            CommandResult::Types(_) => false,
            CommandResult::Abelian(a) => !a.matches || !a.decomposition.dimension_match(),
            CommandResult::Decompose(d) => !d.dimension_match(),
            CommandResult::Verify(v) => !v.all_passed(),
        }
    }

    /// Process exit status for this record: 1 on a verification failure,
    /// 0 otherwise. Usage errors (status 2) never produce a record.
    pub fn exit_code(&self) -> u8 {
        u8::from(self.is_failure())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("records always serialize");
        s.push('\n');
        s
    }
}

pub fn types_record(lambda: &DominantWeight) -> OutputRecord {
    let report = degeneration_report(lambda);
    OutputRecord {
        command: format!(
            "types {} {} {} {}",
            lambda.a(),
            lambda.b(),
            lambda.c(),
            lambda.d()
        ),
        result: CommandResult::Types(TypesResult {
            lambda: *lambda,
            dimension: irrep_dimension(lambda),
            vhs_weight: vhs_weight(lambda),
            degrees: report.degrees,
            avoidance_list: avoidance_list(lambda),
            generic: is_generic(lambda),
        }),
    }
}

fn term_records(d: &IrrepDecomposition) -> Vec<TermRecord> {
    d.terms
        .iter()
        .map(|(lambda, m)| TermRecord {
            highest_weight: *lambda,
            multiplicity: m.clone(),
            dimension: irrep_dimension(lambda),
        })
        .collect()
}

fn decompose_result(r: u32, p: u32) -> Result<(DecomposeResult, IrrepDecomposition)> {
    let decomposition = decompose(&exterior_power_weights(r, p))?;
    let result = DecomposeResult {
        r,
        p,
        vanishes: decomposition.is_empty(),
        terms: term_records(&decomposition),
        total_dimension: decomposition.total_dimension(),
        expected_dimension: binomial(6 * u64::from(r), u64::from(p)),
    };
    Ok((result, decomposition))
}

pub fn decompose_record(r: u32, p: u32) -> Result<OutputRecord> {
    let (result, _) = decompose_result(r, p)?;
    Ok(OutputRecord {
        command: format!("decompose {r} {p}"),
        result: CommandResult::Decompose(result),
    })
}

pub fn abelian_record(r: u32, p: u32) -> Result<OutputRecord> {
    let (decomposition, irreps) = decompose_result(r, p)?;
    let predicted = predicted_weight_sets(r, p);
    let computed = weight_sets_of(&irreps.support());
    let mismatches = weight_set_mismatches(&predicted, &computed);
    Ok(OutputRecord {
        command: format!("abelian {r} {p}"),
        result: CommandResult::Abelian(AbelianResult {
            decomposition,
            predicted,
            computed,
            matches: mismatches.is_empty(),
            mismatches,
        }),
    })
}

pub fn verify_record(r_max: u32) -> Result<OutputRecord> {
    let cases = verify_up_to(r_max)?;
    let passed = cases.iter().filter(|c| c.passed()).count();
    Ok(OutputRecord {
        command: format!("verify {r_max}"),
        result: CommandResult::Verify(VerifyResult {
            r_max,
            failed: cases.len() - passed,
            passed,
            cases,
        }),
    })
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn render_set(set: Option<&std::collections::BTreeSet<i64>>) -> String {
    format!("{{{}}}", join(set.into_iter().flatten(), ", "))
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn render_terms(out: &mut String, d: &DecomposeResult) {
    if d.vanishes {
        let _ = writeln!(out, "vanishes (p > 6r)");
        return;
    }
    let _ = writeln!(out, "{:<20} {:>6} {:>6}", "irreducible", "mult", "dim");
    for t in &d.terms {
        let _ = writeln!(
            out,
            "{:<20} {:>6} {:>6}",
            format!("F{}", t.highest_weight),
            t.multiplicity.to_string(),
            t.dimension
        );
    }
    let _ = writeln!(
        out,
        "{} terms, total dimension {} (binom(6r,p) = {}) {}",
        d.terms.len(),
        d.total_dimension,
        d.expected_dimension,
        pass_fail(d.dimension_match())
    );
}

/// Human-readable table for a record.
pub fn render_text(record: &OutputRecord) -> String {
    let mut out = String::new();
    match &record.result {
        CommandResult::Types(t) => {
            let _ = writeln!(
                out,
                "F{}  dim {}  vhs weight {}",
                t.lambda, t.dimension, t.vhs_weight
            );
            let _ = writeln!(out, "{:<3} {:<18} {:<12} weight", "k", "character", "type");
            for entry in &t.degrees {
                for (s, w) in entry.sources.iter().zip(&entry.weights) {
                    let _ = writeln!(
                        out,
                        "{:<3} {:<18} {:<12} {}",
                        entry.degree,
                        s.character.to_string(),
                        s.hodge_type.to_string(),
                        w
                    );
                }
            }
            let _ = writeln!(out, "k>=4 vanishes");
            let _ = writeln!(out, "avoidance list: [{}]", join(&t.avoidance_list, ", "));
            let _ = writeln!(out, "generic: {}", t.generic);
        }
        CommandResult::Decompose(d) => {
            let _ = writeln!(out, "exterior power r={} p={}", d.r, d.p);
            render_terms(&mut out, d);
        }
        CommandResult::Abelian(a) => {
            let d = &a.decomposition;
            let _ = writeln!(out, "R^{} f_* Q on the {}-fold fibre power", d.p, d.r);
            render_terms(&mut out, d);
            if !d.vanishes {
                let _ = writeln!(out, "{:<3} {:<28} computed", "k", "predicted");
                for k in 0..=3u32 {
                    let _ = writeln!(
                        out,
                        "{:<3} {:<28} {}",
                        k,
                        render_set(a.predicted.get(&k)),
                        render_set(a.computed.get(&k))
                    );
                }
            }
            for m in &a.mismatches {
                let _ = writeln!(
                    out,
                    "mismatch at k={}: predicted [{}] computed [{}]",
                    m.k,
                    join(&m.predicted, ", "),
                    join(&m.computed, ", ")
                );
            }
            let _ = writeln!(
                out,
                "weight sets: {}",
                if a.matches { "match" } else { "MISMATCH" }
            );
        }
        CommandResult::Verify(v) => {
            for c in &v.cases {
                let _ = writeln!(
                    out,
                    "r={} p={:<3} weights {} support {} duality {} dimension {}  {}",
                    c.r,
                    c.p,
                    pass_fail(c.weights_match),
                    pass_fail(c.support_match),
                    pass_fail(c.duality_match),
                    pass_fail(c.dimension_match),
                    pass_fail(c.passed())
                );
                for m in &c.mismatches {
                    let _ = writeln!(
                        out,
                        "  mismatch r={} p={} k={}: predicted [{}] computed [{}]",
                        c.r,
                        c.p,
                        m.k,
                        join(&m.predicted, ", "),
                        join(&m.computed, ", ")
                    );
                }
            }
            let _ = writeln!(
                out,
                "{} cases: {} passed, {} failed",
                v.cases.len(),
                v.passed,
                v.failed
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn big_multiplicities_roundtrip_as_strings() {
        let huge = BigUint::from(u64::MAX) * BigUint::from(3u32);
        let term = TermRecord {
            highest_weight: DominantWeight::new(0, 0, 0, 0).unwrap(),
            multiplicity: huge.clone(),
            dimension: 1,
        };
        let json = serde_json::to_string(&term).unwrap();
        assert!(json.contains(&format!("\"{huge}\"")));
        assert_eq!(serde_json::from_str::<TermRecord>(&json).unwrap(), term);
    }

    #[test]
    fn non_dominant_weight_does_not_deserialize() {
        let json = r#"{"highest_weight":[0,1,0,0],"multiplicity":1,"dimension":3}"#;
        assert!(serde_json::from_str::<TermRecord>(json).is_err());
    }

    #[test]
    fn vanishing_abelian_record() {
        let rec = abelian_record(1, 7).unwrap();
        let CommandResult::Abelian(a) = &rec.result else {
            panic!()
        };
        assert!(a.decomposition.vanishes);
        assert!(a.predicted.is_empty() && a.computed.is_empty());
        assert!(!rec.is_failure());
        assert!(render_text(&rec).contains("vanishes"));
    }

    proptest! {
        #[test]
        fn types_record_roundtrips(a in -4i64..4, db in 0i64..4, dc in 0i64..4, d in -6i64..6) {
            let lambda = DominantWeight::new(a, a - db, a - db - dc, d).unwrap();
            let rec = types_record(&lambda);
            let back: OutputRecord = serde_json::from_str(&rec.to_json()).unwrap();
            prop_assert_eq!(back, rec);
        }

        #[test]
        fn abelian_record_roundtrips(r in 1u32..=2, p in 0u32..14) {
            let rec = abelian_record(r, p).unwrap();
            let back: OutputRecord = serde_json::from_str(&rec.to_json()).unwrap();
            prop_assert_eq!(back, rec);
        }
    }
}
