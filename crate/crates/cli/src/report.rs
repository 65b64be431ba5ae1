//! JSON reports.
//!
//! Keys are emitted in sorted order and timings live under a single
//! `timingMs` key, so two runs on the same input differ only there.

use std::time::Instant;

use hypercert::oracle::{MonteCarloEstimate, OracleResult};
use hypercert::{to_f64, Certificate, Coloring, Rational, SpectralSummary};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub const REPORT_VERSION: u64 = 1;

/// `sha256:<hex>` digest of the raw input bytes.
pub fn content_hash(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

pub fn rational(r: Rational) -> Value {
    json!({
        "exact": format!("{}/{}", r.numer(), r.denom()),
        "value": to_f64(r),
    })
}

pub fn certificate(c: &Certificate, input_hash: &str) -> Value {
    let mut quantities = Map::new();
    for (name, value) in c.quantities() {
        quantities.insert(name.to_string(), json!(value));
    }
    quantities.insert("avg_degree_exact".into(), rational(c.average_degree)["exact"].clone());
    quantities.insert("edges".into(), json!(c.edges));
    let mut annotations = Vec::new();
    if c.tight {
        annotations.push("TIGHT");
    }
    json!({
        "kind": "certificate",
        "theorem": c.theorem.id(),
        "verdict": c.verdict.as_str(),
        "annotations": annotations,
        "quantities": quantities,
        "tolerance": { "eigen": c.eigen_tolerance, "margin": c.margin_tolerance },
        "inputHash": input_hash,
    })
}

pub fn spectrum(s: &SpectralSummary, target: &str) -> Value {
    json!({
        "kind": "spectrum",
        "target": target,
        "lambdaMin": s.lambda_min,
        "lambdaMax": s.lambda_max,
        "tolerance": s.tolerance,
        "n": s.n,
        "averageDegree": s.average_degree.map(rational),
    })
}

pub fn coloring(c: &Coloring) -> Value {
    json!({ "k": c.k(), "colors": c.colors() })
}

pub fn oracle<T: Into<Value> + Clone>(query: &str, r: &OracleResult<T>) -> Value {
    json!({
        "kind": "oracle",
        "query": query,
        "answer": r.answer.clone().into(),
        "witness": r.witness.as_ref().map(coloring),
        "exhaustive": r.exhaustive,
        "workDone": r.work,
    })
}

pub fn monte_carlo(m: &MonteCarloEstimate) -> Value {
    json!({
        "kind": "monteCarlo",
        "mean": m.mean,
        "stdError": m.std_error,
        "trials": m.trials,
        "seed": m.seed,
    })
}

/// Top-level report for one command.
#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub input_hash: Option<String>,
    pub results: Vec<Value>,
    pub seed: Option<u64>,
    timings: Vec<(String, f64)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            input_hash: None,
            results: Vec::new(),
            seed: None,
            timings: Vec::new(),
        }
    }

    /// Runs `f`, recording its wall time under `stage`.
    pub fn time<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timings
            .push((stage.to_string(), start.elapsed().as_secs_f64() * 1e3));
        out
    }

    pub fn to_json(&self) -> Value {
        let timing: Map<String, Value> = self
            .timings
            .iter()
            .map(|(k, v)| (k.clone(), json!(v)))
            .collect();
        let mut out = json!({
            "specVersion": REPORT_VERSION,
            "command": self.command,
            "results": self.results,
            "timingMs": timing,
        });
        if let Some(h) = &self.input_hash {
            out["inputHash"] = json!(h);
        }
        if let Some(s) = self.seed {
            out["seed"] = json!(s);
        }
        out
    }
}
