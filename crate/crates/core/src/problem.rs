//! JSON problem files.
//!
//! ```json
//! {
//!   "universe": ["u1", "u2"],
//!   "parameters": ["x1", "x2"],
//!   "x_degrees": { "x1": [0.7, 0.2] },
//!   "omega": { "x1": { "u1": [0.4, 0.3] } },
//!   "relaxed": false
//! }
//! ```
//!
//! Every pair is `[mu, nu]`. Omitted parameters and alternatives mean `(0, 1)`.
//! `relaxed` is optional and skips the "outside X means empty" check.

use std::path::Path;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ifset::{IFSet, IFValue};
use crate::omega::OmegaSet;
use crate::soft::{IFSoftSet, PairedIFSoftSet};
use crate::universe::Universe;

pub type Pair = [f64; 2];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub universe: Vec<String>,
    pub parameters: Vec<String>,
    #[serde(default)]
    pub x_degrees: IndexMap<String, Pair>,
    #[serde(default)]
    pub omega: IndexMap<String, IndexMap<String, Pair>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub relaxed: bool,
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text).map_err(|e| e.at(path.display().to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("problem files always serialize");
        out.push('\n');
        out
    }

    /// Every invariant breach in the file, in document order. The
    /// structural check is skipped when `relaxed` is set here or in the file.
    pub fn diagnostics(&self, relaxed: bool) -> Vec<Error> {
        let mut out = Vec::new();
        let universe = check_labels(&self.universe, "universe", &mut out);
        let parameters = check_labels(&self.parameters, "parameters", &mut out);

        for (x, pair) in &self.x_degrees {
            if !parameters.contains(x) {
                out.push(Error::UnknownLabel(x.clone()).at(format!("x_degrees.{x}")));
            }
            if let Err(e) = value(pair) {
                out.push(e.at(format!("x_degrees.{x}")));
            }
        }
        for (x, entries) in &self.omega {
            if !parameters.contains(x) {
                out.push(Error::UnknownLabel(x.clone()).at(format!("omega.{x}")));
            }
            for (u, pair) in entries {
                if !universe.contains(u) {
                    out.push(Error::UnknownLabel(u.clone()).at(format!("omega.{x}.{u}")));
                }
                if let Err(e) = value(pair) {
                    out.push(e.at(format!("omega.{x}.{u}")));
                }
            }
        }

        if !(relaxed || self.relaxed) {
            for (x, entries) in &self.omega {
                let outside = match self.x_degrees.get(x) {
                    None => true,
                    Some(pair) => value(pair).map(IFValue::is_empty_value).unwrap_or(false),
                };
                let non_empty = entries
                    .values()
                    .any(|p| value(p).map(|v| !v.is_empty_value()).unwrap_or(false));
                if outside && non_empty {
                    out.push(Error::ConstraintViolation(x.clone()).at(format!("omega.{x}")));
                }
            }
        }
        out
    }

    /// Builds the Ω-set, failing with the first diagnostic.
    pub fn to_omega(&self, relaxed: bool) -> Result<OmegaSet> {
        if let Some(first) = self.diagnostics(relaxed).into_iter().next() {
            return Err(first);
        }
        let universe = Universe::new(&self.universe)?;
        let parameters = Universe::new(&self.parameters)?;
        let degrees = IFSet::from_pairs(&parameters, self.x_degrees.iter().map(|(x, p)| (x, raw(p))))?;
        let omega = self
            .omega
            .iter()
            .map(|(x, entries)| {
                IFSet::from_pairs(&universe, entries.iter().map(|(u, p)| (u, raw(p)))).map(|s| (x, s))
            })
            .collect::<Result<Vec<_>>>()?;
        if relaxed || self.relaxed {
            OmegaSet::new_relaxed(&universe, degrees, omega)
        } else {
            OmegaSet::new(&universe, degrees, omega)
        }
    }

    /// Reads only the approximation as a soft set; parameter degrees are
    /// validated but otherwise ignored.
    pub fn to_soft_set(&self) -> Result<IFSoftSet> {
        Ok(self.to_omega(true)?.to_soft_set())
    }

    /// Sparse serialization of an Ω-set. Only exact `(0, 1)` entries are
    /// omitted; relaxed sets keep their marker.
    pub fn from_omega(set: &OmegaSet) -> Self {
        let mut x_degrees = IndexMap::new();
        let mut omega = IndexMap::new();
        for (x, degree, approx) in set.iter() {
            if degree != IFValue::EMPTY {
                x_degrees.insert(x.to_string(), pair(degree));
            }
            let entries = sparse(approx);
            if !entries.is_empty() {
                omega.insert(x.to_string(), entries);
            }
        }
        ProblemFile {
            universe: labels(set.universe()),
            parameters: labels(set.parameters()),
            x_degrees,
            omega,
            relaxed: set.is_relaxed(),
        }
    }
}

/// Output format for ∧/∨ products: parameter pairs instead of parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairedFile {
    pub universe: Vec<String>,
    pub parameters: Vec<String>,
    pub pairs: Vec<PairEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairEntry {
    pub x: String,
    pub y: String,
    pub set: IndexMap<String, Pair>,
}

impl PairedFile {
    /// Pairs mapping to the exact empty set are omitted.
    pub fn from_paired(set: &PairedIFSoftSet) -> Self {
        let pairs = set
            .iter()
            .filter_map(|((x, y), s)| {
                let entries = sparse(s);
                (!entries.is_empty()).then(|| PairEntry {
                    x: x.to_string(),
                    y: y.to_string(),
                    set: entries,
                })
            })
            .collect();
        PairedFile {
            universe: labels(set.universe()),
            parameters: labels(set.parameters()),
            pairs,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("paired files always serialize");
        out.push('\n');
        out
    }
}

fn check_labels(names: &[String], field: &str, out: &mut Vec<Error>) -> std::collections::HashSet<String> {
    let mut seen = std::collections::HashSet::new();
    for (i, name) in names.iter().enumerate() {
        if name.is_empty() {
            out.push(Error::EmptyLabel.at(format!("{field}[{i}]")));
        } else if !seen.insert(name.clone()) {
            out.push(Error::DuplicateLabel(name.clone()).at(format!("{field}[{i}]")));
        }
    }
    seen
}

fn value(p: &Pair) -> Result<IFValue> {
    IFValue::new(p[0], p[1])
}

// Only called after diagnostics came back clean.
fn raw(p: &Pair) -> IFValue {
    value(p).expect("validated")
}

fn pair(v: IFValue) -> Pair {
    [v.mu(), v.nu()]
}

fn sparse(set: &IFSet) -> IndexMap<String, Pair> {
    set.iter()
        .filter(|(_, v)| *v != IFValue::EMPTY)
        .map(|(u, v)| (u.to_string(), pair(v)))
        .collect()
}

fn labels(u: &Universe) -> Vec<String> {
    u.labels().iter().map(|l| l.to_string()).collect()
}
