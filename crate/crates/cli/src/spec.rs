//! Problem files: a metric, named multivectors and run parameters.
//!
//! ```json
//! {
//!   "n": 2,
//!   "metric": [2, 0, 0, 3],
//!   "multivectors": { "x": [[1, 1.0]], "y": [[3, 1.0]] },
//!   "seed": 42,
//!   "tolerance": 1e-10
//! }
//! ```
//!
//! Multivectors are sparse `(mask, coefficient)` lists; bit `i` of the mask
//! selects basis vector `i + 1`.

use std::collections::BTreeMap;
use std::fmt;

use metric_clifford::{dimension_cap, BasisPair, Extensor64, Multivector64};
use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer};

use crate::CliError;

/// Symmetry tolerance used when the file gives none.
pub const DEFAULT_INPUT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub n: Option<usize>,
    /// Row-major `n × n` entries.
    pub metric: Option<Vec<f64>>,
    #[serde(default)]
    pub multivectors: Labels,
    pub seed: Option<u64>,
    pub tolerance: Option<f64>,
    /// Lower basis vectors `e_k`, one component list each.
    pub basis: Option<Vec<Vec<f64>>>,
    /// Row-major frame extensor `f`.
    pub frame: Option<Vec<f64>>,
}

/// Label map that rejects duplicate keys.
#[derive(Debug, Clone, Default)]
pub struct Labels(pub BTreeMap<String, Vec<(u32, f64)>>);

impl<'de> Deserialize<'de> for Labels {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Labels;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from label to [[mask, coefficient], ...]")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Labels, A::Error> {
                let mut out = BTreeMap::new();
                while let Some((k, v)) = map.next_entry::<String, Vec<(u32, f64)>>()? {
                    if out.contains_key(&k) {
                        return Err(serde::de::Error::custom(format!("duplicate label `{k}`")));
                    }
                    out.insert(k, v);
                }
                Ok(Labels(out))
            }
        }
        d.deserialize_map(V)
    }
}

/// A parsed and checked problem.
#[derive(Debug, Clone)]
pub struct Problem {
    pub n: usize,
    pub metric: Extensor64,
    /// Whether the metric came from the input rather than the identity default.
    pub metric_given: bool,
    pub multivectors: BTreeMap<String, Multivector64>,
    pub seed: Option<u64>,
    pub tolerance: Option<f64>,
    pub basis: BasisPair<f64>,
    pub frame: Extensor64,
}

impl ProblemSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    /// Resolves defaults and validates shapes. `fallback_n` applies when the
    /// file fixes neither `n` nor a metric.
    pub fn resolve(self, fallback_n: Option<usize>) -> Result<Problem, CliError> {
        let from_metric = self.metric.as_ref().map(|m| (m.len() as f64).sqrt().round() as usize);
        let n = self.n.or(from_metric).or(fallback_n).unwrap_or(3);
        if n == 0 || n > dimension_cap() {
            return Err(CliError::Parse(format!("n = {n} outside 1..={}", dimension_cap())));
        }
        let metric_given = self.metric.is_some();
        let metric = match self.metric {
            Some(m) => {
                if m.len() != n * n {
                    return Err(CliError::Parse(format!("metric has {} entries, expected {}", m.len(), n * n)));
                }
                Extensor64::from_row_major(n, m)?
            }
            None => Extensor64::identity(n)?,
        };
        let tol = self.tolerance.unwrap_or(DEFAULT_INPUT_TOL);
        if !(tol > 0.0) {
            return Err(CliError::Parse("tolerance must be positive".into()));
        }
        let asym = metric.asymmetry();
        if !(asym <= tol * metric.norm_inf().max(1.0)) {
            return Err(CliError::Parse(format!("metric not symmetric (residual {asym:e})")));
        }
        let mut multivectors = BTreeMap::new();
        for (label, terms) in self.multivectors.0 {
            if let Some((mask, _)) = terms.iter().find(|(m, _)| (*m as u64) >= (1u64 << n)) {
                return Err(CliError::Parse(format!("label `{label}`: mask {mask} out of range for n = {n}")));
            }
            multivectors.insert(label, Multivector64::from_sparse(n, &terms)?);
        }
        let basis = match self.basis {
            Some(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(CliError::Parse(format!("basis must be {n} vectors of length {n}")));
                }
                let lower = rows.iter().map(|r| Multivector64::vector(r)).collect::<Result<_, _>>()?;
                BasisPair::from_lower(lower)?
            }
            None => BasisPair::fiducial(n)?,
        };
        let frame = match self.frame {
            Some(f) => {
                if f.len() != n * n {
                    return Err(CliError::Parse(format!("frame has {} entries, expected {}", f.len(), n * n)));
                }
                Extensor64::from_row_major(n, f)?
            }
            None => Extensor64::identity(n)?,
        };
        Ok(Problem {
            n,
            metric,
            metric_given,
            multivectors,
            seed: self.seed,
            tolerance: self.tolerance,
            basis,
            frame,
        })
    }
}

impl Problem {
    pub fn label(&self, name: &str) -> Result<&Multivector64, CliError> {
        self.multivectors
            .get(name)
            .ok_or_else(|| CliError::Usage(format!("unknown label `{name}`")))
    }
}
