//! Suite reports: JSON lines (one per violation, then a summary) or CSV.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub case: usize,
    /// Enough to replay the case: graph6 strings, vertex lists, parameters.
    pub input: Value,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub config: Value,
    pub cases: usize,
    pub violations: Vec<Violation>,
    /// Counters that are reported but not judged.
    pub stats: BTreeMap<String, u64>,
    pub elapsed_ms: u64,
}

impl SuiteReport {
    pub fn clean(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> Value {
        json!({
            "suite": self.suite,
            "seed": self.seed,
            "config": self.config,
            "cases": self.cases,
            "violations": self.violations.len(),
            "stats": self.stats,
            "elapsed_ms": self.elapsed_ms,
        })
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for v in &self.violations {
            out.push_str(&serde_json::to_string(v).expect("violation serializes"));
            out.push('\n');
        }
        out.push_str(&self.summary().to_string());
        out.push('\n');
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,case,message,input\n");
        for v in &self.violations {
            out.push_str(&format!(
                "{},{},{},{}\n",
                self.suite,
                v.case,
                csv_field(&v.message),
                csv_field(&v.input.to_string())
            ));
        }
        out
    }
}

pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
