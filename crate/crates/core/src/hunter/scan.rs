use std::collections::BTreeMap;
use std::io::{self, BufRead};
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{
    filter_minimal_counterexample, FilterVerdict, HunterError, Rule, Witness, RULES_NOT_IMPLEMENTED,
};
use crate::graph::parse_graph6;
use crate::solver::Budget;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EntryVerdict {
    Eliminated(Rule, Witness),
    Survivor,
    KnownException(String),
    Disconnected,
    ParseError(String),
}

impl EntryVerdict {
    pub fn label(&self) -> String {
        match self {
            EntryVerdict::Eliminated(r, _) => r.as_str().to_string(),
            EntryVerdict::Survivor => "survivor".into(),
            EntryVerdict::KnownException(_) => "known-exception".into(),
            EntryVerdict::Disconnected => "disconnected".into(),
            EntryVerdict::ParseError(_) => "parse-error".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanEntry {
    /// 1-based line number in the stream.
    pub line: usize,
    pub graph6: String,
    pub verdict: EntryVerdict,
    pub elapsed_ms: u128,
}

impl ScanEntry {
    pub fn to_json(&self) -> Value {
        let witness = match &self.verdict {
            EntryVerdict::Eliminated(_, w) => w.to_json(),
            EntryVerdict::KnownException(name) => json!({"exception": name}),
            EntryVerdict::ParseError(msg) => json!({"error": msg}),
            _ => Value::Null,
        };
        json!({
            "graph6": self.graph6,
            "verdict": self.verdict.label(),
            "witness": witness,
            "elapsed_ms": self.elapsed_ms,
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ScanSummary {
    /// In stream order.
    pub entries: Vec<ScanEntry>,
    /// Entry count per verdict label.
    pub counts: BTreeMap<String, usize>,
    pub survivors: Vec<String>,
}

impl ScanSummary {
    pub fn parse_errors(&self) -> usize {
        self.counts.get("parse-error").copied().unwrap_or(0)
    }

    pub fn summary_json(&self) -> Value {
        json!({
            "summary": {
                "graphs": self.entries.len(),
                "counts": self.counts,
                "survivors": self.survivors,
                "rules_not_implemented": RULES_NOT_IMPLEMENTED,
            }
        })
    }

    /// One JSON object per entry, then the summary object.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&e.to_json().to_string());
            out.push('\n');
        }
        out.push_str(&self.summary_json().to_string());
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!(
                "{}\t{}\t{}ms\n",
                e.graph6,
                e.verdict.label(),
                e.elapsed_ms
            ));
        }
        out.push_str(&format!("graphs: {}\n", self.entries.len()));
        for (k, v) in &self.counts {
            out.push_str(&format!("{k}: {v}\n"));
        }
        for s in &self.survivors {
            out.push_str(&format!("survivor {s}\n"));
        }
        out.push_str(&format!(
            "rules not implemented: {}\n",
            RULES_NOT_IMPLEMENTED.join(", ")
        ));
        out
    }
}

fn classify(text: &str, b: Budget) -> EntryVerdict {
    let g = match parse_graph6(text) {
        Ok(g) => g,
        Err(e) => return EntryVerdict::ParseError(e.to_string()),
    };
    match filter_minimal_counterexample(&g, b) {
        Ok(FilterVerdict {
            eliminated_by: Some(r),
            witness: Some(w),
        }) => EntryVerdict::Eliminated(r, w),
        Ok(_) => EntryVerdict::Survivor,
        Err(HunterError::Disconnected) => EntryVerdict::Disconnected,
        Err(HunterError::KnownException(name)) => EntryVerdict::KnownException(name),
    }
}

/// Filters every non-blank line of a graph6 stream, in parallel across
/// graphs. Malformed lines become parse-error entries.
pub fn scan_stream<R: BufRead>(input: R, b: Budget) -> io::Result<ScanSummary> {
    let mut lines = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if !t.is_empty() {
            lines.push((i + 1, t.to_string()));
        }
    }
    let entries: Vec<ScanEntry> = lines
        .into_par_iter()
        .map(|(line, graph6)| {
            let started = Instant::now();
            let verdict = classify(&graph6, b);
            ScanEntry {
                line,
                graph6,
                verdict,
                elapsed_ms: started.elapsed().as_millis(),
            }
        })
        .collect();
    let mut counts = BTreeMap::new();
    let mut survivors = Vec::new();
    for e in &entries {
        *counts.entry(e.verdict.label()).or_insert(0) += 1;
        if e.verdict == EntryVerdict::Survivor {
            survivors.push(e.graph6.clone());
        }
    }
    Ok(ScanSummary {
        entries,
        counts,
        survivors,
    })
}
