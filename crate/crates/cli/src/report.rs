use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub series: Option<Vec<i64>>,
    pub flags: BTreeMap<String, bool>,
    pub witnesses: Vec<String>,
    pub data: serde_json::Value,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.to_string(), data: serde_json::Value::Null, ..Default::default() }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn flag(&mut self, key: &str, value: bool) {
        self.flags.insert(key.to_string(), value);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(out, "{} {}", self.command, params.join(" ")).unwrap();
        if let Some(series) = &self.series {
            let s: Vec<String> = series.iter().map(ToString::to_string).collect();
            writeln!(out, "series: {}", s.join(", ")).unwrap();
        }
        if let serde_json::Value::Object(map) = &self.data {
            for (k, v) in map {
                match v {
                    serde_json::Value::String(s) => writeln!(out, "{k}: {s}").unwrap(),
                    serde_json::Value::Number(_) | serde_json::Value::Bool(_) => writeln!(out, "{k}: {v}").unwrap(),
                    _ => {}
                }
            }
        }
        for (k, v) in &self.flags {
            writeln!(out, "{k}: {}", if *v { "yes" } else { "no" }).unwrap();
        }
        for w in &self.witnesses {
            writeln!(out, "  {w}").unwrap();
        }
        writeln!(out, "elapsed: {} ms", self.elapsed_ms).unwrap();
        out
    }
}
