//! Provenance trace of a pipeline run, exported as JSON.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AssertionRecord {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

/// One step record: step name, the branch taken if any, the sizes relevant
/// at that point, and the assertion outcomes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceStep {
    pub depth: u32,
    pub step: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    pub sizes: BTreeMap<String, i64>,
    pub assertions: Vec<AssertionRecord>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Trace {
    pub steps: Vec<TraceStep>,
}

impl Trace {
    pub fn push(
        &mut self,
        depth: u32,
        step: &str,
        branch: Option<&str>,
        sizes: &[(&str, i64)],
        assertions: Vec<AssertionRecord>,
    ) {
        self.steps.push(TraceStep {
            depth,
            step: step.to_string(),
            branch: branch.map(|b| b.to_string()),
            sizes: sizes
                .iter()
                .map(|&(k, v)| (k.to_string(), v))
                .collect(),
            assertions,
        });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.steps).expect("trace serializes")
    }
}
