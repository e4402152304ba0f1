//! Link catalogs: JSON records carrying Alexander polynomials, flags and
//! sublink references.
//!
//! A record looks like
//!
//! ```json
//! {
//!   "name": "whitehead",
//!   "n": 2,
//!   "linking": [[0, 0], [0, 0]],
//!   "alexander": [[[-1, -1], -1], [[-1, 1], 1], [[1, -1], 1], [[1, 1], -1]],
//!   "flags": { "lspace": true, "brunnian": true, "unknotted_components": true },
//!   "sublinks": { "1": "unknot", "2": "unknot" },
//!   "expected": { "a2": "1", "detect": "Whitehead" }
//! }
//! ```
//!
//! Exponents are doubled. `hprime` and `chi_prime` are optional tables of
//! `[point, value]` pairs for links whose H-function is not determined by the
//! polynomial.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::alexander::{build_model, AlexanderError, BuildError, ChiPrimeTable, NormalizedAlexander};
use crate::invariants::{parse_rational, Rational};
use crate::laurent::LaurentPoly;
use crate::lattice::{HModel, HPrimeTable, SublinkId, MAX_COMPONENTS};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LinkFlags {
    pub lspace: bool,
    /// For two components: linking number zero and unknotted components.
    pub brunnian: bool,
    pub unknotted_components: bool,
    pub split: bool,
    /// Some `(+-1, +-1)` surgery yields the Poincare homology sphere.
    pub poincare_surgery: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkRecord {
    pub name: String,
    pub n: usize,
    pub linking: Vec<Vec<i64>>,
    pub alexander: LaurentPoly,
    pub flags: LinkFlags,
    pub sublinks: BTreeMap<SublinkId, String>,
    pub chi_prime: Option<ChiPrimeTable>,
    pub hprime: Option<HPrimeTable>,
    /// Golden values: invariant name to printed value.
    pub expected: BTreeMap<String, String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecord {
    name: String,
    n: usize,
    #[serde(default)]
    linking: Option<Vec<Vec<i64>>>,
    alexander: Value,
    #[serde(default)]
    flags: LinkFlags,
    #[serde(default)]
    sublinks: BTreeMap<String, String>,
    #[serde(default)]
    chi_prime: Option<Value>,
    #[serde(default)]
    hprime: Option<Value>,
    #[serde(default)]
    expected: BTreeMap<String, Value>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error{}: {message}", record.as_ref().map(|r| format!(" in {r}")).unwrap_or_default())]
    ParseError {
        record: Option<String>,
        message: String,
    },
    #[error("duplicate record {0}")]
    DuplicateRecord(String),
    #[error("{record}: not algebraically split (linking[{i}][{j}] = {value})")]
    NotAlgebraicallySplit {
        record: String,
        i: usize,
        j: usize,
        value: i64,
    },
    #[error("{record}: sublink {sublink} refers to missing record {target:?}")]
    MissingSublink {
        record: String,
        sublink: SublinkId,
        target: String,
    },
    #[error("{record}: sublink references form a cycle")]
    SublinkCycle { record: String },
    #[error("{record}: validation failed: {cause}")]
    ValidationFailed { record: String, cause: BuildError },
}

fn parse_err(record: &str, message: impl Into<String>) -> CatalogError {
    CatalogError::ParseError {
        record: Some(record.to_string()),
        message: message.into(),
    }
}

impl LinkRecord {
    pub fn from_json(value: &Value) -> Result<Self, CatalogError> {
        let raw: RawRecord = serde_json::from_value(value.clone()).map_err(|e| CatalogError::ParseError {
            record: value.get("name").and_then(Value::as_str).map(str::to_string),
            message: e.to_string(),
        })?;
        let name = raw.name;
        let n = raw.n;
        if n == 0 || n > MAX_COMPONENTS {
            return Err(parse_err(&name, format!("component count {n} out of range")));
        }
        let linking = raw.linking.unwrap_or_else(|| vec![vec![0; n]; n]);
        if linking.len() != n || linking.iter().any(|row| row.len() != n) {
            return Err(parse_err(&name, format!("linking matrix must be {n}x{n}")));
        }
        let alexander =
            LaurentPoly::from_json(n, &raw.alexander).map_err(|e| parse_err(&name, format!("alexander: {e}")))?;
        let mut sublinks = BTreeMap::new();
        for (key, target) in raw.sublinks {
            let id: SublinkId = key
                .parse()
                .map_err(|e| parse_err(&name, format!("sublink key {key:?}: {e}")))?;
            if id.is_empty() || !id.is_subset_of(SublinkId::full(n)) || id == SublinkId::full(n) {
                return Err(parse_err(&name, format!("sublink {key:?} is not a proper sublink")));
            }
            sublinks.insert(id, target);
        }
        let chi_prime = raw
            .chi_prime
            .map(|v| {
                let t = HPrimeTable::from_json(n, &v).map_err(|e| parse_err(&name, format!("chi_prime: {e}")))?;
                ChiPrimeTable::new(t).map_err(|e| parse_err(&name, format!("chi_prime: {e}")))
            })
            .transpose()?;
        let hprime = raw
            .hprime
            .map(|v| HPrimeTable::from_json(n, &v).map_err(|e| parse_err(&name, format!("hprime: {e}"))))
            .transpose()?;
        let mut expected = BTreeMap::new();
        for (k, v) in raw.expected {
            let text = match v {
                Value::String(s) => s,
                Value::Number(x) => x.to_string(),
                other => return Err(parse_err(&name, format!("expected {k}: unsupported value {other}"))),
            };
            expected.insert(k, text);
        }
        Ok(LinkRecord {
            name,
            n,
            linking,
            alexander,
            flags: raw.flags,
            sublinks,
            chi_prime,
            hprime,
            expected,
        })
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "name": self.name,
            "n": self.n,
            "linking": self.linking,
            "alexander": self.alexander.to_json(),
            "flags": self.flags,
            "sublinks": self.sublinks.iter().map(|(k, t)| (k.to_string(), t.clone())).collect::<BTreeMap<_, _>>(),
            "expected": self.expected,
        });
        if let Some(c) = &self.chi_prime {
            v["chi_prime"] = c.table().to_json();
        }
        if let Some(h) = &self.hprime {
            v["hprime"] = h.to_json();
        }
        v
    }

    /// First nonzero off-diagonal linking number, if any.
    pub fn linking_witness(&self) -> Option<(usize, usize, i64)> {
        for (i, row) in self.linking.iter().enumerate() {
            for (j, &value) in row.iter().enumerate() {
                if i != j && value != 0 {
                    return Some((i, j, value));
                }
            }
        }
        None
    }

    pub fn normalized_alexander(&self) -> Result<NormalizedAlexander, AlexanderError> {
        NormalizedAlexander::new(self.alexander.clone())
    }

    pub fn expected_integer(&self, key: &str) -> Option<i64> {
        self.expected.get(key)?.trim().parse().ok()
    }

    pub fn expected_rational(&self, key: &str) -> Option<Rational> {
        parse_rational(self.expected.get(key)?)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Catalog {
    records: BTreeMap<String, LinkRecord>,
}

impl Catalog {
    /// Parses records without building models. Only the JSON shape and
    /// duplicate names are checked.
    pub fn parse(text: &str) -> Result<Self, CatalogError> {
        let value: Value = serde_json::from_str(text).map_err(|e| CatalogError::ParseError {
            record: None,
            message: e.to_string(),
        })?;
        let items = value
            .get("links")
            .and_then(Value::as_array)
            .ok_or_else(|| CatalogError::ParseError {
                record: None,
                message: "top level must be {\"links\": [...]}".into(),
            })?;
        let mut records = BTreeMap::new();
        for item in items {
            let r = LinkRecord::from_json(item)?;
            if records.contains_key(&r.name) {
                return Err(CatalogError::DuplicateRecord(r.name));
            }
            records.insert(r.name.clone(), r);
        }
        Ok(Catalog { records })
    }

    /// Parses, checks structure and builds every model, failing on the
    /// first problem.
    pub fn load_str(text: &str) -> Result<Self, CatalogError> {
        let catalog = Self::parse(text)?;
        catalog.check_structure()?;
        for r in catalog.records() {
            catalog.model(r)?;
        }
        Ok(catalog)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, CatalogError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| CatalogError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::load_str(&text)
    }

    pub fn from_records(records: impl IntoIterator<Item = LinkRecord>) -> Self {
        Catalog {
            records: records.into_iter().map(|r| (r.name.clone(), r)).collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "links": self.records.values().map(LinkRecord::to_json).collect::<Vec<_>>() })
    }

    pub fn record(&self, name: &str) -> Option<&LinkRecord> {
        self.records.get(name)
    }

    pub fn records(&self) -> impl Iterator<Item = &LinkRecord> {
        self.records.values()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.records.keys().map(String::as_str)
    }

    /// Linking matrices, sublink references and reference cycles.
    pub fn check_structure(&self) -> Result<(), CatalogError> {
        for r in self.records() {
            self.check_record(r)?;
        }
        Ok(())
    }

    pub fn check_record(&self, r: &LinkRecord) -> Result<(), CatalogError> {
        if let Some((i, j, value)) = r.linking_witness() {
            return Err(CatalogError::NotAlgebraicallySplit {
                record: r.name.clone(),
                i,
                j,
                value,
            });
        }
        for (&sublink, target) in &r.sublinks {
            if !self.records.contains_key(target) {
                return Err(CatalogError::MissingSublink {
                    record: r.name.clone(),
                    sublink,
                    target: target.clone(),
                });
            }
        }
        let mut seen = BTreeSet::new();
        let mut stack = vec![r.name.as_str()];
        while let Some(name) = stack.pop() {
            let Some(rec) = self.records.get(name) else { continue };
            for target in rec.sublinks.values() {
                if target == &r.name {
                    return Err(CatalogError::SublinkCycle { record: r.name.clone() });
                }
                if seen.insert(target.as_str()) {
                    stack.push(target);
                }
            }
        }
        Ok(())
    }

    /// Builds and validates the model of `r`.
    pub fn model(&self, r: &LinkRecord) -> Result<HModel, CatalogError> {
        build_model(r, self).map_err(|cause| match cause {
            BuildError::MissingSublink { record, sublink } => CatalogError::MissingSublink {
                record,
                sublink,
                target: String::new(),
            },
            cause => CatalogError::ValidationFailed {
                record: r.name.clone(),
                cause,
            },
        })
    }

    /// Torsion tables of every nonempty sublink of `r` that has one.
    pub fn sublink_chi(&self, r: &LinkRecord) -> BTreeMap<SublinkId, ChiPrimeTable> {
        let mut out = BTreeMap::new();
        if let Some(c) = &r.chi_prime {
            out.insert(SublinkId::full(r.n), c.clone());
        }
        for (&id, target) in &r.sublinks {
            if let Some(c) = self.record(target).and_then(|t| t.chi_prime.clone()) {
                out.insert(id, c);
            }
        }
        out
    }
}
