//! Report types and their CSV / JSON renderings.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    NoSCycle,
    SCycleFound,
    KOrdered,
    NotKOrdered,
    NotHamiltonian,
    Certified,
    Failed,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::NoSCycle => "no_s_cycle",
            Outcome::SCycleFound => "s_cycle_found",
            Outcome::KOrdered => "k_ordered",
            Outcome::NotKOrdered => "not_k_ordered",
            Outcome::NotHamiltonian => "not_hamiltonian",
            Outcome::Certified => "certified",
            Outcome::Failed => "failed",
        }
    }
}

/// One instance of an experiment.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub index: usize,
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    pub outcome: Outcome,
    pub witness: Option<Vec<usize>>,
    /// The row contradicts what the experiment expects.
    pub violation: bool,
    /// Only filled when timings are requested, so default reports stay
    /// byte-identical across runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_us: Option<u64>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub info: BTreeMap<String, String>,
}

impl Row {
    pub fn new(index: usize, n: usize, k: usize, delta: usize, outcome: Outcome) -> Self {
        Row {
            index,
            n,
            k,
            delta,
            outcome,
            witness: None,
            violation: false,
            wall_us: None,
            info: BTreeMap::new(),
        }
    }

    pub fn info(mut self, key: &str, value: impl ToString) -> Self {
        self.info.insert(key.to_string(), value.to_string());
        self
    }
}

/// Per-δ tallies for threshold scans.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeltaSummary {
    pub delta: usize,
    pub trials: usize,
    pub hamiltonian: usize,
    pub k_ordered: usize,
    pub ore: usize,
    pub fraction: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Aggregate {
    pub rows: usize,
    pub outcomes: BTreeMap<String, usize>,
    pub violations: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub by_delta: Vec<DeltaSummary>,
}

impl Aggregate {
    pub fn of(rows: &[Row]) -> Self {
        let mut outcomes = BTreeMap::new();
        for r in rows {
            *outcomes.entry(r.outcome.as_str().to_string()).or_insert(0) += 1;
        }
        Aggregate {
            rows: rows.len(),
            outcomes,
            violations: rows.iter().filter(|r| r.violation).count(),
            by_delta: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub experiment: String,
    pub seed: u64,
    pub parameters: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub rows: Vec<Row>,
    pub aggregate: Aggregate,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub traces: Vec<Value>,
}

impl ExperimentReport {
    pub fn new(
        experiment: &str,
        seed: u64,
        parameters: BTreeMap<String, Value>,
        rows: Vec<Row>,
    ) -> Self {
        let aggregate = Aggregate::of(&rows);
        ExperimentReport {
            experiment: experiment.to_string(),
            seed,
            parameters,
            label: None,
            rows,
            aggregate,
            notes: Vec::new(),
            traces: Vec::new(),
        }
    }

    pub fn violations(&self) -> usize {
        self.aggregate.violations
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Rows only. `info` keys become extra columns, sorted by name.
    pub fn to_csv(&self) -> String {
        let keys: BTreeSet<&String> = self.rows.iter().flat_map(|r| r.info.keys()).collect();
        let timed = self.rows.iter().any(|r| r.wall_us.is_some());
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![
            "index",
            "n",
            "k",
            "delta",
            "outcome",
            "witness",
            "violation",
        ];
        if timed {
            header.push("wall_us");
        }
        header.extend(keys.iter().map(|k| k.as_str()));
        w.write_record(&header).expect("write to Vec");
        for r in &self.rows {
            let mut rec = vec![
                r.index.to_string(),
                r.n.to_string(),
                r.k.to_string(),
                r.delta.to_string(),
                r.outcome.as_str().to_string(),
                r.witness.as_deref().map(join).unwrap_or_default(),
                r.violation.to_string(),
            ];
            if timed {
                rec.push(r.wall_us.map(|t| t.to_string()).unwrap_or_default());
            }
            rec.extend(
                keys.iter()
                    .map(|k| r.info.get(*k).cloned().unwrap_or_default()),
            );
            w.write_record(&rec).expect("write to Vec");
        }
        String::from_utf8(w.into_inner().expect("flush to Vec")).expect("csv is utf-8")
    }
}

/// Space-separated vertex list.
pub fn join(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
