//! Machine-readable run reports: what was built and which claims it meets.

use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Stable identifiers for the claims a check can cite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Anchor {
    ExpansionDefinition,
    TuranNumberDefinition,
    ShadowCodegree,
    FullSubgraphLemma,
    CrosscutDefinition,
    CrosscutConstruction,
    NormFiberSize,
    NormRatioSolutions,
    NormGraphDefinition,
    NormGraphTriangleCount,
    NormGraphKstFree,
    QuotientNormGraph,
    QuotientNormGraphK3tFree,
    HtPattern,
    GirthLayeredConstruction,
    RandomDeletionConstruction,
    OctahedronColoring,
    EvenWheelColoring,
    TreewidthTwo,
}

impl Anchor {
    pub const ALL: [Anchor; 19] = [
        Anchor::ExpansionDefinition,
        Anchor::TuranNumberDefinition,
        Anchor::ShadowCodegree,
        Anchor::FullSubgraphLemma,
        Anchor::CrosscutDefinition,
        Anchor::CrosscutConstruction,
        Anchor::NormFiberSize,
        Anchor::NormRatioSolutions,
        Anchor::NormGraphDefinition,
        Anchor::NormGraphTriangleCount,
        Anchor::NormGraphKstFree,
        Anchor::QuotientNormGraph,
        Anchor::QuotientNormGraphK3tFree,
        Anchor::HtPattern,
        Anchor::GirthLayeredConstruction,
        Anchor::RandomDeletionConstruction,
        Anchor::OctahedronColoring,
        Anchor::EvenWheelColoring,
        Anchor::TreewidthTwo,
    ];

    pub fn id(self) -> String {
        serde_json::to_value(self)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .expect("anchors serialize as strings")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub claim: String,
    pub cited_location: Anchor,
    pub measured: Value,
    pub bound: Value,
    pub pass: bool,
}

impl Check {
    pub fn new(
        claim: impl Into<String>,
        cited: Anchor,
        measured: impl Serialize,
        bound: impl Serialize,
        pass: bool,
    ) -> Self {
        Check {
            claim: claim.into(),
            cited_location: cited,
            measured: json!(measured),
            bound: json!(bound),
            pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConstructionReport {
    pub name: String,
    pub params: BTreeMap<String, Value>,
    pub n: usize,
    pub m: usize,
    pub checks: Vec<Check>,
}

impl ConstructionReport {
    pub fn new(name: impl Into<String>, n: usize, m: usize) -> Self {
        ConstructionReport {
            name: name.into(),
            params: BTreeMap::new(),
            n,
            m,
            checks: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.params.insert(key.to_string(), json!(value));
        self
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn check(&self, claim: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.claim == claim)
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// Validates the shape of a serialized report: required keys, types, and
/// that every cited location is a known anchor.
pub fn validate_report_json(v: &Value) -> Result<(), String> {
    let obj = v.as_object().ok_or("report is not an object")?;
    for key in ["name", "params", "n", "m", "checks"] {
        if !obj.contains_key(key) {
            return Err(format!("missing key `{key}`"));
        }
    }
    obj["name"].as_str().ok_or("`name` is not a string")?;
    obj["params"].as_object().ok_or("`params` is not an object")?;
    obj["n"].as_u64().ok_or("`n` is not a count")?;
    obj["m"].as_u64().ok_or("`m` is not a count")?;
    let known: Vec<String> = Anchor::ALL.iter().map(|a| a.id()).collect();
    for c in obj["checks"].as_array().ok_or("`checks` is not an array")? {
        let c = c.as_object().ok_or("check is not an object")?;
        for key in ["claim", "cited_location", "measured", "bound", "pass"] {
            if !c.contains_key(key) {
                return Err(format!("check missing `{key}`"));
            }
        }
        let loc = c["cited_location"].as_str().ok_or("`cited_location` is not a string")?;
        if !known.iter().any(|k| k == loc) {
            return Err(format!("unknown cited location `{loc}`"));
        }
        c["pass"].as_bool().ok_or("`pass` is not a boolean")?;
    }
    Ok(())
}
