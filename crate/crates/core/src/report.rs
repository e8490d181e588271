//! Machine-readable reports.
//!
//! Every report is a plain struct serialized in declaration order, so equal
//! inputs give byte-identical JSON. Integers that fit in `i64` are JSON
//! numbers, larger ones are decimal strings. Timing is opt-in
//! (`elapsed_ms: None` omits the field) so that reports stay reproducible.

use serde::Serialize;
use serde_json::Value;

use crate::abelian::FinAbGroup;
use crate::cohomology::{CohomologyResult, ScanReport, Witness};
use crate::input::{bigint_json, matrix_json};
use crate::picard::{RowReport, SearchHit};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupJson {
    pub invariant_factors: Vec<Value>,
    pub free_rank: usize,
    /// `null` for infinite groups.
    pub order: Value,
    pub pretty: String,
}

impl From<&FinAbGroup> for GroupJson {
    fn from(g: &FinAbGroup) -> Self {
        GroupJson {
            invariant_factors: g.invariant_factors().iter().map(bigint_json).collect(),
            free_rank: g.free_rank(),
            order: g.order().as_ref().map_or(Value::Null, bigint_json),
            pretty: g.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessJson {
    pub kind: &'static str,
    pub numerator: Value,
    pub denominator: Value,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        match w {
            Witness::Norm { kernel, image } => WitnessJson {
                kind: "norm",
                numerator: matrix_json(kernel),
                denominator: matrix_json(image),
            },
            Witness::Cocycle {
                cocycles,
                coboundaries,
            } => WitnessJson {
                kind: "cocycle",
                numerator: matrix_json(cocycles),
                denominator: matrix_json(coboundaries),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComputeReport {
    pub command: &'static str,
    pub input: Value,
    pub group_order: usize,
    pub h0_rank: usize,
    pub h1: GroupJson,
    pub method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

pub fn h1_verdict(h1: &FinAbGroup) -> String {
    if h1.is_trivial() {
        "H^1 vanishes".to_string()
    } else {
        "H^1 nonzero: stable linearization obstructed".to_string()
    }
}

impl ComputeReport {
    pub fn new(input: Value, r: &CohomologyResult) -> Self {
        ComputeReport {
            command: "compute",
            input,
            group_order: r.group_order,
            h0_rank: r.h0_rank,
            h1: (&r.h1).into(),
            method: r.method.as_str(),
            witness: r.witness.as_ref().map(Into::into),
            verdict: h1_verdict(&r.h1),
            elapsed_ms: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubgroupJson {
    pub generator_index: usize,
    pub order: usize,
    pub h1: GroupJson,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanJson {
    pub command: &'static str,
    pub input: Value,
    pub group_order: usize,
    pub h0_rank: usize,
    pub h1: GroupJson,
    pub method: &'static str,
    pub subgroups: Vec<SubgroupJson>,
    pub obstructed: bool,
    pub witnesses: Vec<String>,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl ScanJson {
    pub fn new(input: Value, s: &ScanReport) -> Self {
        ScanJson {
            command: "scan",
            input,
            group_order: s.full.group_order,
            h0_rank: s.full.h0_rank,
            h1: (&s.full.h1).into(),
            method: s.full.method.as_str(),
            subgroups: s
                .subgroups
                .iter()
                .map(|r| SubgroupJson {
                    generator_index: r.generator_index,
                    order: r.order,
                    h1: (&r.h1).into(),
                })
                .collect(),
            obstructed: s.obstructed,
            witnesses: s.witnesses.clone(),
            verdict: s.verdict().to_string(),
            elapsed_ms: None,
        }
    }
}

/// A built-in action on a Picard lattice.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BuiltinReport {
    pub command: &'static str,
    pub action: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<u32>,
    pub k_squared: i64,
    pub basis: Vec<String>,
    pub gram: Value,
    pub matrix: Value,
    pub group_order: usize,
    pub h0_rank: usize,
    pub h1: GroupJson,
    pub h1_q: GroupJson,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchJson {
    pub command: &'static str,
    pub degree: i64,
    pub prime: u64,
    pub seed: u64,
    pub max_trials: u64,
    pub trial: u64,
    pub word_length: usize,
    pub matrix: Value,
    pub char_poly_q: String,
    pub h0_rank: usize,
    pub h1: GroupJson,
    pub h1_q: GroupJson,
    pub charpoly_order: Value,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl SearchJson {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        hit: &SearchHit,
        prime: u64,
        seed: u64,
        max_trials: u64,
        char_poly_q: String,
        h1: &CohomologyResult,
        h1_q: &FinAbGroup,
        charpoly_order: &num_bigint::BigInt,
    ) -> Self {
        SearchJson {
            command: "search",
            degree: hit.picard.degree(),
            prime,
            seed,
            max_trials,
            trial: hit.trial,
            word_length: hit.word_length,
            matrix: matrix_json(hit.matrix()),
            char_poly_q,
            h0_rank: h1.h0_rank,
            h1: (&h1.h1).into(),
            h1_q: h1_q.into(),
            charpoly_order: bigint_json(charpoly_order),
            verdict: h1_verdict(&h1.h1),
            elapsed_ms: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RowJson {
    pub case: String,
    pub p: u64,
    pub g: u32,
    pub k_squared: i64,
    pub model: &'static str,
    pub action: &'static str,
    pub h1: GroupJson,
    pub h1_q: GroupJson,
    pub expected: GroupJson,
    pub fixed_rank: usize,
    pub charpoly_order: Option<Value>,
    pub search_trial: Option<u64>,
    pub seed: Option<u64>,
    pub checks: Vec<CheckJson>,
    pub status: &'static str,
}

impl RowJson {
    pub fn new(r: &RowReport, seed: u64) -> Self {
        RowJson {
            case: r.case.to_string(),
            p: r.case.prime(),
            g: r.case.genus(),
            k_squared: r.case.k_squared(),
            model: r.case.model(),
            action: r.case.action_name(),
            h1: (&r.h1).into(),
            h1_q: (&r.h1_q).into(),
            expected: (&r.expected).into(),
            fixed_rank: r.fixed_rank,
            charpoly_order: r.charpoly_order.as_ref().map(bigint_json),
            search_trial: r.search_trial,
            seed: r.search_trial.map(|_| seed),
            checks: r
                .checks
                .iter()
                .map(|c| CheckJson {
                    name: c.name.clone(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect(),
            status: if r.passed() { "PASS" } else { "FAIL" },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableJson {
    pub command: &'static str,
    pub genus_max: u32,
    pub rows: Vec<RowJson>,
    pub passed: bool,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// Pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn group_json_shapes() {
        let g = FinAbGroup::from_orders(&[2, 2, 4], 1);
        let j = serde_json::to_value(GroupJson::from(&g)).unwrap();
        assert_eq!(j["invariant_factors"], serde_json::json!([2, 2, 4]));
        assert_eq!(j["free_rank"], 1);
        assert_eq!(j["order"], Value::Null);
    }

    #[test]
    fn big_values_become_strings() {
        let big = BigInt::from(1u8) << 80;
        assert_eq!(bigint_json(&big), Value::String(big.to_string()));
        assert_eq!(bigint_json(&BigInt::from(-7)), serde_json::json!(-7));
    }

    #[test]
    fn field_order_is_declaration_order() {
        let g = FinAbGroup::trivial();
        let s = serde_json::to_string(&GroupJson::from(&g)).unwrap();
        let pos = |k: &str| s.find(k).unwrap();
        assert!(pos("invariant_factors") < pos("free_rank"));
        assert!(pos("free_rank") < pos("order"));
        assert!(pos("order") < pos("pretty"));
    }
}
