use serde::Serialize;

use crate::width::Guards;

/// Machine-readable result of a computation.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub parameter: String,
    pub value: usize,
    pub witness: serde_json::Value,
    pub method: String,
    pub elapsed_ms: u64,
    pub guards: Guards,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
