//! H-functions of algebraically split links on the lattice `Z^n`.
//!
//! A model stores, for every nonempty sublink `I`, the finitely supported
//! table `h'_I`. Everything else is reconstructed pointwise:
//!
//! ```text
//! h(s) = sum over nonempty I of h'_I(s_I)
//! H(s) = h(s) + H_O(s_1) + ... + H_O(s_n),   H_O(s) = max(0, -s)
//! ```
//!
//! Because each table is finite, the reconstruction is exact on all of
//! `Z^n`, and sending a coordinate to `+infinity` recovers the model of the
//! complementary sublink.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use thiserror::Error;

/// Largest supported component count.
pub const MAX_COMPONENTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("lattice point has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the empty sublink has no model")]
    EmptySublink,
    #[error("sublink {sublink} is not contained in a {n}-component link")]
    SublinkOutOfRange { sublink: SublinkId, n: usize },
    #[error("table for sublink {sublink} has arity {got}, expected {expected}")]
    ArityMismatch {
        sublink: SublinkId,
        expected: usize,
        got: usize,
    },
    #[error("component count {0} is outside 1..={MAX_COMPONENTS}")]
    BadComponentCount(usize),
    #[error("malformed model data: {0}")]
    Format(String),
}

/// A set of link components, stored as a bitmask (component 1 is bit 0).
///
/// Written as a comma separated list of one-based component indices,
/// e.g. `"1,3"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SublinkId(u32);

impl SublinkId {
    pub fn empty() -> Self {
        SublinkId(0)
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_COMPONENTS);
        SublinkId(((1u64 << n) - 1) as u32)
    }

    /// Sublink made of the single zero-based component `i`.
    pub fn singleton(i: usize) -> Self {
        SublinkId(1 << i)
    }

    pub fn from_bits(bits: u32) -> Self {
        SublinkId(bits)
    }

    /// From zero-based component indices.
    pub fn from_components(components: &[usize]) -> Self {
        SublinkId(components.iter().fold(0, |acc, &c| acc | (1 << c)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_subset_of(self, other: SublinkId) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn without(self, i: usize) -> Self {
        SublinkId(self.0 & !(1 << i))
    }

    /// Zero-based component indices in increasing order.
    pub fn components(self) -> Vec<usize> {
        (0..32).filter(|&i| self.contains(i)).collect()
    }

    /// All subsets, the empty one included, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = SublinkId> {
        let mask = self.0;
        (0..=mask).filter(move |b| b & !mask == 0).map(SublinkId)
    }

    /// Nonempty subsets in increasing bitmask order.
    pub fn nonempty_subsets(self) -> impl Iterator<Item = SublinkId> {
        self.subsets().filter(|s| !s.is_empty())
    }

    /// Coordinates of `point` belonging to this sublink, in component order.
    pub fn project(self, point: &[i64]) -> Vec<i64> {
        point
            .iter()
            .enumerate()
            .filter(|(i, _)| self.contains(*i))
            .map(|(_, &x)| x)
            .collect()
    }
}

impl fmt::Display for SublinkId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components().iter().map(|c| (c + 1).to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for SublinkId {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut bits = 0u32;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let c: usize = part
                .parse()
                .map_err(|_| LatticeError::Format(format!("bad sublink component {part:?}")))?;
            if c == 0 || c > MAX_COMPONENTS {
                return Err(LatticeError::Format(format!("component {c} out of range")));
            }
            bits |= 1 << (c - 1);
        }
        Ok(SublinkId(bits))
    }
}

impl Serialize for SublinkId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SublinkId {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `H` of the unknot.
pub fn unknot_h(s: i64) -> i64 {
    (-s).max(0)
}

/// Every point of the cube `[-radius, radius]^n`, last coordinate fastest.
pub fn box_points(n: usize, radius: i64) -> impl Iterator<Item = Vec<i64>> {
    let side = (2 * radius + 1).max(0) as u64;
    let total = side.checked_pow(n as u32).unwrap_or(0);
    (0..total).map(move |mut idx| {
        let mut p = vec![0i64; n];
        for k in (0..n).rev() {
            p[k] = (idx % side) as i64 - radius;
            idx /= side;
        }
        p
    })
}

/// Finitely supported integer function on `Z^arity`; zero values are not
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HPrimeTable {
    arity: usize,
    values: BTreeMap<Vec<i64>, i64>,
}

impl HPrimeTable {
    pub fn new(arity: usize) -> Self {
        HPrimeTable {
            arity,
            values: BTreeMap::new(),
        }
    }

    pub fn from_entries<I>(arity: usize, entries: I) -> Result<Self, LatticeError>
    where
        I: IntoIterator<Item = (Vec<i64>, i64)>,
    {
        let mut t = Self::new(arity);
        for (p, v) in entries {
            if p.len() != arity {
                return Err(LatticeError::DimensionMismatch {
                    expected: arity,
                    got: p.len(),
                });
            }
            t.add(p, v);
        }
        Ok(t)
    }

    /// The table with value 1 at the origin and 0 elsewhere.
    pub fn delta(arity: usize) -> Self {
        let mut t = Self::new(arity);
        t.add(vec![0; arity], 1);
        t
    }

    pub fn add(&mut self, point: Vec<i64>, value: i64) {
        debug_assert_eq!(point.len(), self.arity);
        if value == 0 {
            return;
        }
        let slot = self.values.entry(point.clone()).or_insert(0);
        *slot += value;
        if *slot == 0 {
            self.values.remove(&point);
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, point: &[i64]) -> i64 {
        self.values.get(point).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<i64>, i64)> {
        self.values.iter().map(|(p, &v)| (p, v))
    }

    pub fn sum(&self) -> i64 {
        self.values.values().sum()
    }

    pub fn negated(&self) -> Self {
        HPrimeTable {
            arity: self.arity,
            values: self.values.iter().map(|(p, &v)| (p.clone(), -v)).collect(),
        }
    }

    /// Largest `|s_i|` over the support; 0 for the empty table.
    pub fn support_radius(&self) -> i64 {
        self.values
            .keys()
            .flat_map(|p| p.iter().map(|x| x.abs()))
            .max()
            .unwrap_or(0)
    }

    /// A point `s` with `table(-s) != table(s)`, if any.
    pub fn symmetry_witness(&self) -> Option<Vec<i64>> {
        self.values.iter().find_map(|(p, &v)| {
            let mirror: Vec<i64> = p.iter().map(|x| -x).collect();
            (self.get(&mirror) != v).then(|| p.clone())
        })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.values.iter().map(|(p, v)| json!([p, v])).collect())
    }

    pub fn from_json(arity: usize, value: &Value) -> Result<Self, LatticeError> {
        let entries: Vec<(Vec<i64>, i64)> = serde_json::from_value(value.clone())
            .map_err(|e| LatticeError::Format(format!("table entries: {e}")))?;
        Self::from_entries(arity, entries)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    FromAlexander,
    Manual,
}

/// Which H-function property a lattice point violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    /// `H(s) >= 0`.
    HNonnegative,
    /// `H(s - e_i) - H(s)` is 0 or 1.
    HStep,
    /// `H(-s) = H(s) + sum(s)`.
    HSymmetry,
    /// `H` with one coordinate pushed past the support equals the sublink `H`.
    HStabilization,
    /// `h(-s) = h(s)` and `h'(-s) = h'(s)`.
    HSmallSymmetry,
    /// `h` does not decrease toward the origin.
    HSmallMonotone,
    /// `h(s) >= 0`.
    HSmallNonnegative,
}

impl Axiom {
    pub fn label(self) -> &'static str {
        match self {
            Axiom::HNonnegative => "H >= 0",
            Axiom::HStep => "H(s-e_i) - H(s) in {0,1}",
            Axiom::HSymmetry => "H(-s) = H(s) + sum s_i",
            Axiom::HStabilization => "H(.., N, ..) = H of the sublink",
            Axiom::HSmallSymmetry => "h(-s) = h(s), h'(-s) = h'(s)",
            Axiom::HSmallMonotone => "h non-decreasing toward the origin",
            Axiom::HSmallNonnegative => "h >= 0",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub point: Vec<i64>,
    /// Zero-based coordinate direction for directional axioms.
    pub direction: Option<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {:?}", self.axiom.label(), self.point)?;
        if let Some(i) = self.direction {
            write!(f, " in direction e_{}", i + 1)?;
        }
        Ok(())
    }
}

/// H-function data of an `n`-component algebraically split link.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HModel {
    n: usize,
    tables: BTreeMap<SublinkId, HPrimeTable>,
    provenance: Provenance,
}

impl HModel {
    /// Builds a model; sublinks without a table get the empty one.
    pub fn new(
        n: usize,
        tables: BTreeMap<SublinkId, HPrimeTable>,
        provenance: Provenance,
    ) -> Result<Self, LatticeError> {
        if n == 0 || n > MAX_COMPONENTS {
            return Err(LatticeError::BadComponentCount(n));
        }
        let full = SublinkId::full(n);
        let mut checked = BTreeMap::new();
        for (id, table) in tables {
            if id.is_empty() {
                return Err(LatticeError::EmptySublink);
            }
            if !id.is_subset_of(full) {
                return Err(LatticeError::SublinkOutOfRange { sublink: id, n });
            }
            if table.arity() != id.len() {
                return Err(LatticeError::ArityMismatch {
                    sublink: id,
                    expected: id.len(),
                    got: table.arity(),
                });
            }
            checked.insert(id, table);
        }
        for id in full.nonempty_subsets() {
            checked.entry(id).or_insert_with(|| HPrimeTable::new(id.len()));
        }
        Ok(HModel {
            n,
            tables: checked,
            provenance,
        })
    }

    /// The `n`-component unlink: every table empty.
    pub fn unlink(n: usize) -> Self {
        Self::new(n, BTreeMap::new(), Provenance::Manual).expect("valid component count")
    }

    /// Model whose only nonzero table is the full-link one; proper
    /// sublinks are unlinks.
    pub fn brunnian(table: HPrimeTable, provenance: Provenance) -> Result<Self, LatticeError> {
        let n = table.arity();
        let mut tables = BTreeMap::new();
        tables.insert(SublinkId::full(n), table);
        Self::new(n, tables, provenance)
    }

    pub fn components(&self) -> usize {
        self.n
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn table(&self, id: SublinkId) -> Option<&HPrimeTable> {
        self.tables.get(&id)
    }

    pub fn full_table(&self) -> &HPrimeTable {
        &self.tables[&SublinkId::full(self.n)]
    }

    pub fn tables(&self) -> impl Iterator<Item = (SublinkId, &HPrimeTable)> {
        self.tables.iter().map(|(&id, t)| (id, t))
    }

    /// True when every table is empty.
    pub fn is_trivial(&self) -> bool {
        self.tables.values().all(HPrimeTable::is_empty)
    }

    pub fn support_radius(&self) -> i64 {
        self.tables
            .values()
            .map(HPrimeTable::support_radius)
            .max()
            .unwrap_or(0)
    }

    pub fn default_box_radius(&self) -> i64 {
        self.support_radius() + 2
    }

    fn check_point(&self, s: &[i64]) -> Result<(), LatticeError> {
        if s.len() != self.n {
            return Err(LatticeError::DimensionMismatch {
                expected: self.n,
                got: s.len(),
            });
        }
        Ok(())
    }

    fn h_unchecked(&self, s: &[i64]) -> i64 {
        self.tables
            .iter()
            .map(|(id, t)| if t.is_empty() { 0 } else { t.get(&id.project(s)) })
            .sum()
    }

    fn big_h_unchecked(&self, s: &[i64]) -> i64 {
        self.h_unchecked(s) + s.iter().map(|&x| unknot_h(x)).sum::<i64>()
    }

    pub fn eval_big_h(&self, s: &[i64]) -> Result<i64, LatticeError> {
        self.check_point(s)?;
        Ok(self.big_h_unchecked(s))
    }

    pub fn eval_h(&self, s: &[i64]) -> Result<i64, LatticeError> {
        self.check_point(s)?;
        Ok(self.h_unchecked(s))
    }

    pub fn eval_h_prime(&self, s: &[i64]) -> Result<i64, LatticeError> {
        self.check_point(s)?;
        Ok(self.full_table().get(s))
    }

    /// Sum of `h` over the whole lattice. Finite only when every proper
    /// sublink table is empty, so `None` otherwise.
    pub fn total_h(&self) -> Option<i64> {
        let full = SublinkId::full(self.n);
        self.tables
            .iter()
            .all(|(&id, t)| id == full || t.is_empty())
            .then(|| self.full_table().sum())
    }

    /// Model of the sublink `id`, components renumbered in increasing order.
    pub fn restrict_sublink(&self, id: SublinkId) -> Result<HModel, LatticeError> {
        if id.is_empty() {
            return Err(LatticeError::EmptySublink);
        }
        if !id.is_subset_of(SublinkId::full(self.n)) {
            return Err(LatticeError::SublinkOutOfRange {
                sublink: id,
                n: self.n,
            });
        }
        let position: Vec<usize> = {
            let mut pos = vec![usize::MAX; self.n];
            for (k, c) in id.components().into_iter().enumerate() {
                pos[c] = k;
            }
            pos
        };
        let tables = self
            .tables
            .iter()
            .filter(|(sub, _)| sub.is_subset_of(id))
            .map(|(sub, t)| {
                let renamed: Vec<usize> = sub.components().iter().map(|&c| position[c]).collect();
                (SublinkId::from_components(&renamed), t.clone())
            })
            .collect();
        HModel::new(id.len(), tables, self.provenance)
    }

    /// Checks the H-function properties on the box `[-radius, radius]^n`.
    ///
    /// Returns every violation found; an empty list means the model passed.
    pub fn validate(&self, radius: i64) -> Vec<Violation> {
        let n = self.n;
        let mut out = Vec::new();
        let far = radius.max(self.support_radius()) + 1;
        let sublink_models: Vec<Option<HModel>> = (0..n)
            .map(|i| {
                (n > 1).then(|| {
                    self.restrict_sublink(SublinkId::full(n).without(i))
                        .expect("proper sublink")
                })
            })
            .collect();

        for s in box_points(n, radius) {
            let big_h = self.big_h_unchecked(&s);
            let h = self.h_unchecked(&s);
            let neg: Vec<i64> = s.iter().map(|x| -x).collect();
            let mut flag = |axiom, direction| {
                out.push(Violation {
                    axiom,
                    point: s.clone(),
                    direction,
                })
            };

            if big_h < 0 {
                flag(Axiom::HNonnegative, None);
            }
            if self.big_h_unchecked(&neg) != big_h + s.iter().sum::<i64>() {
                flag(Axiom::HSymmetry, None);
            }
            if self.h_unchecked(&neg) != h || self.full_table().get(&neg) != self.full_table().get(&s) {
                flag(Axiom::HSmallSymmetry, None);
            }
            if h < 0 {
                flag(Axiom::HSmallNonnegative, None);
            }
            for i in 0..n {
                let mut down = s.clone();
                down[i] -= 1;
                let step = self.big_h_unchecked(&down) - big_h;
                if step != 0 && step != 1 {
                    flag(Axiom::HStep, Some(i));
                }
                let h_down = self.h_unchecked(&down);
                let monotone = if s[i] > 0 { h_down >= h } else { h_down <= h };
                if !monotone {
                    flag(Axiom::HSmallMonotone, Some(i));
                }
                let mut pushed = s.clone();
                pushed[i] = far;
                let expected = match &sublink_models[i] {
                    Some(sub) => {
                        let rest: Vec<i64> = s
                            .iter()
                            .enumerate()
                            .filter(|(k, _)| *k != i)
                            .map(|(_, &x)| x)
                            .collect();
                        sub.big_h_unchecked(&rest)
                    }
                    None => 0,
                };
                if self.big_h_unchecked(&pushed) != expected {
                    flag(Axiom::HStabilization, Some(i));
                }
            }
        }
        out
    }

    /// `{"n": .., "tables": {"1,2": [[point, value], ..], ..}, "provenance": ..}`
    /// with sublinks and points in canonical order.
    pub fn to_json(&self) -> Value {
        let mut tables = Map::new();
        for (id, t) in &self.tables {
            tables.insert(id.to_string(), t.to_json());
        }
        json!({
            "n": self.n,
            "tables": Value::Object(tables),
            "provenance": self.provenance,
        })
    }

    pub fn from_json(value: &Value) -> Result<Self, LatticeError> {
        let fmt_err = |m: &str| LatticeError::Format(m.to_string());
        let n = value
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| fmt_err("missing component count \"n\""))? as usize;
        let provenance = match value.get("provenance") {
            None | Some(Value::Null) => Provenance::Manual,
            Some(p) => serde_json::from_value(p.clone()).map_err(|e| fmt_err(&e.to_string()))?,
        };
        let mut tables = BTreeMap::new();
        if let Some(obj) = value.get("tables") {
            let obj = obj.as_object().ok_or_else(|| fmt_err("\"tables\" must be an object"))?;
            for (key, entries) in obj {
                let id: SublinkId = key.parse()?;
                tables.insert(id, HPrimeTable::from_json(id.len(), entries)?);
            }
        }
        HModel::new(n, tables, provenance)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn whitehead() -> HModel {
        HModel::brunnian(HPrimeTable::delta(2), Provenance::Manual).unwrap()
    }

    fn borromean() -> HModel {
        HModel::brunnian(HPrimeTable::delta(3), Provenance::Manual).unwrap()
    }

    #[test]
    fn unknot_baseline() {
        assert_eq!(unknot_h(0), 0);
        assert_eq!(unknot_h(3), 0);
        assert_eq!(unknot_h(-2), 2);
    }

    #[test]
    fn sublink_ids() {
        let id: SublinkId = "1,3".parse().unwrap();
        assert_eq!(id.bits(), 0b101);
        assert_eq!(id.to_string(), "1,3");
        assert_eq!(id.components(), vec![0, 2]);
        assert_eq!(SublinkId::full(3).nonempty_subsets().count(), 7);
        assert_eq!(id.project(&[7, 8, 9]), vec![7, 9]);
        assert!("0".parse::<SublinkId>().is_err());
        assert!("x".parse::<SublinkId>().is_err());
    }

    #[test]
    fn box_enumeration() {
        let pts: Vec<_> = box_points(2, 1).collect();
        assert_eq!(pts.len(), 9);
        assert_eq!(pts[0], vec![-1, -1]);
        assert_eq!(pts[8], vec![1, 1]);
        assert_eq!(box_points(1, 0).count(), 1);
    }

    #[test]
    fn whitehead_values() {
        let m = whitehead();
        assert_eq!(m.eval_big_h(&[0, 0]).unwrap(), 1);
        assert_eq!(m.eval_big_h(&[-1, -2]).unwrap(), 3);
        assert_eq!(m.eval_big_h(&[9, 9]).unwrap(), 0);
        assert_eq!(m.eval_h(&[0, 0]).unwrap(), 1);
        assert_eq!(m.eval_h(&[1, 0]).unwrap(), 0);
        assert_eq!(m.eval_h_prime(&[0, 0]).unwrap(), 1);
        assert_eq!(
            m.eval_h(&[0]),
            Err(LatticeError::DimensionMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn borromean_h() {
        let m = borromean();
        assert_eq!(m.eval_h(&[0, 0, 0]).unwrap(), 1);
        assert_eq!(m.eval_h(&[0, 1, 0]).unwrap(), 0);
        assert_eq!(m.total_h(), Some(1));
    }

    #[test]
    fn restriction() {
        let wh = whitehead();
        let one = wh.restrict_sublink(SublinkId::singleton(0)).unwrap();
        assert!(one.is_trivial());
        assert_eq!(one.components(), 1);
        assert_eq!(wh.restrict_sublink(SublinkId::full(2)).unwrap(), wh);
        let pair = borromean().restrict_sublink("1,2".parse().unwrap()).unwrap();
        assert_eq!(pair, HModel::unlink(2));
        assert_eq!(wh.restrict_sublink(SublinkId::empty()), Err(LatticeError::EmptySublink));
    }

    #[test]
    fn restriction_renumbers_components() {
        let mut tables = BTreeMap::new();
        tables.insert(SublinkId::singleton(2), HPrimeTable::delta(1));
        let m = HModel::new(3, tables, Provenance::Manual).unwrap();
        let sub = m.restrict_sublink("2,3".parse().unwrap()).unwrap();
        assert_eq!(sub.table(SublinkId::singleton(1)), Some(&HPrimeTable::delta(1)));
    }

    #[test]
    fn valid_models_pass() {
        assert!(whitehead().validate(4).is_empty());
        assert!(borromean().validate(3).is_empty());
        assert!(HModel::unlink(2).validate(2).is_empty());
    }

    #[test]
    fn negative_origin_is_caught() {
        let bad = HModel::brunnian(HPrimeTable::delta(2).negated(), Provenance::Manual).unwrap();
        let v = bad.validate(2);
        assert!(v
            .iter()
            .any(|x| x.axiom == Axiom::HSmallNonnegative && x.point == vec![0, 0]));
    }

    #[test]
    fn step_of_two_is_caught() {
        let mut tables = BTreeMap::new();
        tables.insert(
            SublinkId::full(1),
            HPrimeTable::from_entries(1, [(vec![0], 2)]).unwrap(),
        );
        let bad = HModel::new(1, tables, Provenance::Manual).unwrap();
        let v = bad.validate(2);
        assert!(v.iter().any(|x| x.axiom == Axiom::HStep && x.point == vec![0]));
    }

    #[test]
    fn arity_is_checked() {
        let mut tables = BTreeMap::new();
        tables.insert(SublinkId::full(2), HPrimeTable::delta(3));
        assert!(matches!(
            HModel::new(2, tables, Provenance::Manual),
            Err(LatticeError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let m = whitehead();
        let v = m.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"n":2,"provenance":"manual","tables":{"1":[],"1,2":[[[0,0],1]],"2":[]}}"#
        );
        assert_eq!(HModel::from_json(&v).unwrap(), m);
    }
}
