use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub label: String,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencyCheck {
    pub identity: String,
    pub pass: bool,
}

/// Result of a pipeline: the final integer plus the intermediate classes that produced it.
///
/// The last trace entry is always `integral`, holding `count` as a decimal string.
#[derive(Clone, Debug, PartialEq)]
pub struct CountReport {
    pub pipeline: String,
    pub inputs: BTreeMap<String, Value>,
    pub count: BigInt,
    pub trace: Vec<TraceEntry>,
    pub consistency: Vec<ConsistencyCheck>,
}

/// Wire form of a [`CountReport`]: one JSON object per invocation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructuredReport {
    pub pipeline: String,
    pub inputs: BTreeMap<String, Value>,
    pub count: String,
    pub consistency: Vec<ConsistencyCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceEntry>>,
}

impl CountReport {
    pub fn builder(pipeline: &str) -> ReportBuilder {
        ReportBuilder {
            pipeline: pipeline.to_string(),
            inputs: BTreeMap::new(),
            trace: Vec::new(),
            consistency: Vec::new(),
        }
    }

    pub fn trace_value(&self, label: &str) -> Option<&Value> {
        self.trace
            .iter()
            .find(|t| t.label == label)
            .map(|t| &t.value)
    }

    pub fn all_consistent(&self) -> bool {
        self.consistency.iter().all(|c| c.pass)
    }

    pub fn to_structured(&self, with_trace: bool) -> StructuredReport {
        StructuredReport {
            pipeline: self.pipeline.clone(),
            inputs: self.inputs.clone(),
            count: self.count.to_string(),
            consistency: self.consistency.clone(),
            trace: with_trace.then(|| self.trace.clone()),
        }
    }

    pub fn to_json(&self, with_trace: bool) -> String {
        serde_json::to_string_pretty(&self.to_structured(with_trace)).expect("report serializes")
    }

    /// Plain text: the count on the first line, then consistency checks and optionally the trace.
    pub fn to_plain(&self, with_trace: bool) -> String {
        let mut s = format!("{}\n", self.count);
        for c in &self.consistency {
            let mark = if c.pass { "pass" } else { "FAIL" };
            let _ = writeln!(s, "[{mark}] {}", c.identity);
        }
        if with_trace {
            for t in &self.trace {
                let v = match &t.value {
                    Value::String(x) => x.clone(),
                    other => other.to_string(),
                };
                let _ = writeln!(s, "{}: {v}", t.label);
            }
        }
        s
    }
}

pub struct ReportBuilder {
    pipeline: String,
    inputs: BTreeMap<String, Value>,
    trace: Vec<TraceEntry>,
    consistency: Vec<ConsistencyCheck>,
}

impl ReportBuilder {
    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn trace(&mut self, label: impl Into<String>, value: impl Into<Value>) {
        self.trace.push(TraceEntry {
            label: label.into(),
            value: value.into(),
        });
    }

    pub fn check(&mut self, identity: impl Into<String>, pass: bool) {
        self.consistency.push(ConsistencyCheck {
            identity: identity.into(),
            pass,
        });
    }

    pub fn passed(&self) -> usize {
        self.consistency.iter().filter(|c| c.pass).count()
    }

    pub fn finish(mut self, count: BigInt) -> CountReport {
        self.trace("integral", count.to_string());
        CountReport {
            pipeline: self.pipeline,
            inputs: self.inputs,
            count,
            trace: self.trace,
            consistency: self.consistency,
        }
    }
}
