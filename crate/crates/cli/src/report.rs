//! Versioned JSON reports.

use std::collections::BTreeMap;

use metric_clifford::suites::Check;
use metric_clifford::{BasisPair, Extensor64, Multivector64};
use serde::{Deserialize, Serialize};

pub const FORMAT: u32 = 1;

/// One named result value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Output {
    Multivector { n: usize, terms: Vec<(u32, f64)> },
    Extensor { n: usize, rows: Vec<Vec<f64>> },
    Scalar { value: f64 },
    Values { values: Vec<f64> },
    Signature { p: usize, q: usize },
    Basis { lower: Vec<Vec<f64>>, upper: Vec<Vec<f64>> },
}

impl Output {
    pub fn multivector(x: &Multivector64) -> Self {
        Output::Multivector {
            n: x.dim(),
            terms: x.to_sparse(),
        }
    }

    pub fn extensor(t: &Extensor64) -> Self {
        Output::Extensor {
            n: t.dim(),
            rows: t.rows(),
        }
    }

    pub fn basis(pair: &BasisPair<f64>) -> Self {
        let comps = |list: &[Multivector64]| list.iter().map(|v| v.vector_components().unwrap_or_default()).collect();
        Output::Basis {
            lower: comps(&pair.lower),
            upper: comps(&pair.upper),
        }
    }

    /// Re-reads a multivector output.
    pub fn to_multivector(&self) -> Option<Multivector64> {
        match self {
            Output::Multivector { n, terms } => Multivector64::from_sparse(*n, terms).ok(),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: String,
    pub name: String,
    /// `null` when the residual is not finite.
    pub residual: Option<f64>,
    pub tolerance: f64,
    pub trials: usize,
    pub pass: bool,
}

impl From<&Check> for CheckRecord {
    fn from(c: &Check) -> Self {
        CheckRecord {
            suite: c.suite.to_string(),
            name: c.name.clone(),
            residual: c.residual.is_finite().then_some(c.residual),
            tolerance: c.tolerance,
            trials: c.trials,
            pass: c.pass,
        }
    }
}

impl CheckRecord {
    pub fn single(suite: &str, name: &str, residual: f64, tolerance: f64) -> Self {
        CheckRecord {
            suite: suite.to_string(),
            name: name.to_string(),
            residual: residual.is_finite().then_some(residual),
            tolerance,
            trials: 1,
            pass: residual <= tolerance,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub format: u32,
    pub command: BTreeMap<String, serde_json::Value>,
    pub outputs: BTreeMap<String, Output>,
    pub checks: Vec<CheckRecord>,
    pub passed: bool,
    pub wall_time_ms: f64,
}

impl Report {
    pub fn new(command: BTreeMap<String, serde_json::Value>) -> Self {
        Report {
            format: FORMAT,
            command,
            outputs: BTreeMap::new(),
            checks: Vec::new(),
            passed: true,
            wall_time_ms: 0.0,
        }
    }

    pub fn output(&mut self, name: &str, value: Output) {
        self.outputs.insert(name.to_string(), value);
    }

    pub fn check(&mut self, record: CheckRecord) {
        self.passed &= record.pass;
        self.checks.push(record);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
