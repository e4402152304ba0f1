//! Conversions between multivariable Alexander polynomials and H-models.
//!
//! For an algebraically split link with `n > 1` components the symmetric
//! Alexander polynomial factors as
//!
//! ```text
//! Delta(t) = prod_i (t_i^(1/2) - t_i^(-1/2)) * Delta'(t)
//! Delta'(t) = (-1)^n * sum_s (chi'(s) - h'(s)) t^s
//! ```
//!
//! so for L-space links (where `chi'` vanishes) the full-link `h'` table is
//! read off coefficient by coefficient. Knots go through the torsion
//! coefficient formula `h(s) = sum_{k>s} (k - s) a_k` instead.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::catalog::{Catalog, LinkRecord};
use crate::laurent::{ConwayPoly, ExpVec, LaurentError, LaurentPoly};
use crate::lattice::{box_points, HModel, HPrimeTable, LatticeError, Provenance, SublinkId, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlexanderError {
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("operation needs {expected} components, link has {got}")]
    WrongArity { expected: String, got: usize },
    #[error("quotient by prod (t_i^(1/2) - t_i^(-1/2)) has half-integral exponents; polynomial is misnormalized")]
    NotIntegral,
    #[error("symmetry fails at {witness:?}")]
    SymmetryViolation { witness: Vec<i64> },
    #[error("h-function data is only determined by the Alexander polynomial for L-space links")]
    NotLSpace,
    #[error("knot polynomial must satisfy Delta(1) = 1, got {0}")]
    NotNormalized(BigInt),
    #[error("not an L-space knot polynomial: h steps incorrectly at s = {0}")]
    NotLSpaceStaircase(i64),
    #[error("coefficient {0} does not fit in 64 bits")]
    Overflow(BigInt),
}

/// Symmetric multivariable Alexander polynomial.
///
/// For `n >= 2` this is the normalization in which
/// `Delta(t^-1) = (-1)^n Delta(t)` and exponents are half-integral; for a
/// knot it is the usual symmetric `Delta(t^-1) = Delta(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedAlexander {
    poly: LaurentPoly,
}

impl NormalizedAlexander {
    pub fn new(poly: LaurentPoly) -> Result<Self, AlexanderError> {
        let n = poly.nvars();
        let mirrored = poly.invert_variables();
        let expected = if n >= 2 && n % 2 == 1 { -&poly } else { poly.clone() };
        if mirrored != expected {
            let witness = poly
                .terms()
                .find(|(e, c)| {
                    let back = ExpVec::doubled(e.entries().iter().map(|x| -x).collect());
                    expected.coeff(&back) != **c || mirrored.coeff(e) != expected.coeff(e)
                })
                .map(|(e, _)| e.entries().iter().map(|&x| i64::from(x)).collect())
                .unwrap_or_default();
            return Err(AlexanderError::SymmetryViolation { witness });
        }
        Ok(NormalizedAlexander { poly })
    }

    pub fn components(&self) -> usize {
        self.poly.nvars()
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    /// `(t_1 ... t_n)^(1/2) Delta` for `n >= 2`: the polynomial whose
    /// coefficients are the Euler characteristics of `HFL^-`.
    pub fn shifted(&self) -> LaurentPoly {
        self.poly.shift(&ExpVec::doubled(vec![1; self.components()]))
    }

    /// `Delta'`: the quotient by `prod_i (t_i^(1/2) - t_i^(-1/2))`.
    pub fn delta_prime(&self) -> Result<LaurentPoly, AlexanderError> {
        let n = self.components();
        if n < 2 {
            return Err(AlexanderError::WrongArity {
                expected: "at least 2".into(),
                got: n,
            });
        }
        let q = self
            .poly
            .divide_exact(&LaurentPoly::half_difference_product(n))?;
        if q.terms().any(|(e, _)| e.to_lattice().is_none()) {
            return Err(AlexanderError::NotIntegral);
        }
        Ok(q)
    }

    /// `z * Delta(t, .., t)` rewritten in `z = t^(1/2) - t^(-1/2)` for links,
    /// `Delta(t)` itself for knots. Agrees with the Conway polynomial up to
    /// an overall sign.
    pub fn conway(&self) -> Result<ConwayPoly, AlexanderError> {
        let diag = self.poly.specialize_diagonal();
        let p = if self.components() >= 2 {
            &diag * &LaurentPoly::half_difference(1, 0)
        } else {
            diag
        };
        Ok(p.conway_substitute()?)
    }
}

/// Finitely supported symmetric table of `chi'` values. Only ever supplied
/// as data for links that are not L-space links.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChiPrimeTable {
    table: HPrimeTable,
}

impl ChiPrimeTable {
    pub fn new(table: HPrimeTable) -> Result<Self, AlexanderError> {
        if let Some(witness) = table.symmetry_witness() {
            return Err(AlexanderError::SymmetryViolation { witness });
        }
        Ok(ChiPrimeTable { table })
    }

    pub fn zero(arity: usize) -> Self {
        ChiPrimeTable {
            table: HPrimeTable::new(arity),
        }
    }

    pub fn table(&self) -> &HPrimeTable {
        &self.table
    }

    pub fn get(&self, s: &[i64]) -> i64 {
        self.table.get(s)
    }

    pub fn sum(&self) -> i64 {
        self.table.sum()
    }
}

fn to_i64(c: &BigInt) -> Result<i64, AlexanderError> {
    c.to_i64().ok_or_else(|| AlexanderError::Overflow(c.clone()))
}

/// Full-link `h'` table of an L-space link with at least two components.
pub fn hprime_from_alexander(
    a: &NormalizedAlexander,
    lspace: bool,
) -> Result<HPrimeTable, AlexanderError> {
    if !lspace {
        return Err(AlexanderError::NotLSpace);
    }
    let n = a.components();
    let q = a.delta_prime()?;
    let sign: i64 = if n % 2 == 1 { 1 } else { -1 };
    let mut table = HPrimeTable::new(n);
    for (e, c) in q.terms() {
        let s = e.to_lattice().ok_or(AlexanderError::NotIntegral)?;
        table.add(s, sign * to_i64(c)?);
    }
    if let Some(witness) = table.symmetry_witness() {
        return Err(AlexanderError::SymmetryViolation { witness });
    }
    Ok(table)
}

/// `h` table of an L-space knot from its symmetric Alexander polynomial.
pub fn knot_h_from_alexander(a: &NormalizedAlexander) -> Result<HPrimeTable, AlexanderError> {
    if a.components() != 1 {
        return Err(AlexanderError::WrongArity {
            expected: "1".into(),
            got: a.components(),
        });
    }
    let at_one = a.poly().evaluate_at_one();
    if at_one != BigInt::from(1) {
        return Err(AlexanderError::NotNormalized(at_one));
    }
    let mut coeffs: BTreeMap<i64, i64> = BTreeMap::new();
    for (e, c) in a.poly().terms() {
        let s = e.to_lattice().ok_or(AlexanderError::NotIntegral)?[0];
        coeffs.insert(s, to_i64(c)?);
    }
    let top = coeffs.keys().next_back().copied().unwrap_or(0).max(0);
    let h_at = |s: i64| -> i64 {
        coeffs
            .range(s + 1..)
            .map(|(&k, &ak)| (k - s) * ak)
            .sum()
    };
    let values: Vec<i64> = (0..=top).map(h_at).collect();
    for (s, &v) in values.iter().enumerate() {
        if v < 0 {
            return Err(AlexanderError::NotLSpaceStaircase(s as i64));
        }
        if s > 0 {
            let step = values[s - 1] - v;
            if step != 0 && step != 1 {
                return Err(AlexanderError::NotLSpaceStaircase(s as i64));
            }
        }
    }
    let mut table = HPrimeTable::new(1);
    for (s, &v) in values.iter().enumerate() {
        let s = s as i64;
        table.add(vec![s], v);
        if s != 0 {
            table.add(vec![-s], v);
        }
    }
    Ok(table)
}

/// Inverse of [`hprime_from_alexander`], optionally with torsion data.
pub fn alexander_from_model(
    m: &HModel,
    chi: Option<&ChiPrimeTable>,
) -> Result<NormalizedAlexander, AlexanderError> {
    let n = m.components();
    if n < 2 {
        return Err(AlexanderError::WrongArity {
            expected: "at least 2".into(),
            got: n,
        });
    }
    let sign: i64 = if n % 2 == 0 { 1 } else { -1 };
    let mut values: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (s, v) in m.full_table().entries() {
        *values.entry(s.clone()).or_default() -= v;
    }
    if let Some(chi) = chi {
        for (s, v) in chi.table().entries() {
            if s.len() != n {
                return Err(LatticeError::DimensionMismatch {
                    expected: n,
                    got: s.len(),
                }
                .into());
            }
            *values.entry(s.clone()).or_default() += v;
        }
    }
    let q = LaurentPoly::from_terms(
        n,
        values.into_iter().map(|(s, v)| {
            (
                s.iter().map(|&x| (2 * x) as i32).collect::<Vec<i32>>(),
                BigInt::from(sign * v),
            )
        }),
    )?;
    NormalizedAlexander::new(&q * &LaurentPoly::half_difference_product(n))
}

/// `sum_J (-1)^|J| h'(s - e_J)` and `sum_J (-1)^|J| H(s - e_J)`; the two
/// agree for every algebraically split link with at least two components.
pub fn alternating_sums(m: &HModel, s: &[i64]) -> Result<(i64, i64), LatticeError> {
    let n = m.components();
    let mut via_hprime = 0;
    let mut via_big_h = 0;
    for j in SublinkId::full(n).subsets() {
        let sign = if j.len() % 2 == 0 { 1 } else { -1 };
        let shifted: Vec<i64> = s
            .iter()
            .enumerate()
            .map(|(i, &x)| if j.contains(i) { x - 1 } else { x })
            .collect();
        via_hprime += sign * m.eval_h_prime(&shifted)?;
        via_big_h += sign * m.eval_big_h(&shifted)?;
    }
    Ok((via_hprime, via_big_h))
}

/// Generating function of `chi(HFL^-(L, s))` computed by inclusion-exclusion
/// over the corners `s - e_B`.
///
/// For links the result is a polynomial equal to `(t_1..t_n)^(1/2) Delta`.
/// For knots the series is infinite toward `-infinity`; it is truncated to
/// exponents `>= -radius`.
pub fn hfl_euler(m: &HModel, chi: Option<&ChiPrimeTable>) -> Result<LaurentPoly, AlexanderError> {
    let n = m.components();
    let chi_radius = chi.map(|c| c.table().support_radius()).unwrap_or(0);
    let radius = m.support_radius().max(chi_radius) + 2;
    let full = SublinkId::full(n);
    let mut terms = Vec::new();
    for s in box_points(n, radius) {
        let mut value = 0i64;
        for b in full.subsets() {
            let sign = if b.len() % 2 == 0 { 1 } else { -1 };
            let corner: Vec<i64> = s
                .iter()
                .enumerate()
                .map(|(i, &x)| if b.contains(i) { x - 1 } else { x })
                .collect();
            let tor = chi.map(|c| c.get(&corner)).unwrap_or(0);
            value += sign * (tor - m.eval_big_h(&corner)?);
        }
        if value != 0 {
            terms.push((s.iter().map(|&x| (2 * x) as i32).collect::<Vec<i32>>(), value));
        }
    }
    Ok(LaurentPoly::from_terms(n, terms)?)
}

/// Errors from assembling a model out of catalog data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("{record}: {source}")]
    Alexander {
        record: String,
        source: AlexanderError,
    },
    #[error("{record}: no catalog record for sublink {sublink}")]
    MissingSublink { record: String, sublink: SublinkId },
    #[error("{record}: sublink {sublink} refers to unknown record {target:?}")]
    UnknownRecord {
        record: String,
        sublink: SublinkId,
        target: String,
    },
    #[error("{record}: sublink {sublink} refers to {target:?}, which has {got} components")]
    SublinkArity {
        record: String,
        sublink: SublinkId,
        target: String,
        got: usize,
    },
    #[error("{record}: {source}")]
    Lattice {
        record: String,
        source: LatticeError,
    },
    #[error("{record}: model fails validation: {violation}")]
    ValidationFailed { record: String, violation: Violation },
    #[error("{record}: stored polynomial has the wrong overall sign ({reason})")]
    WrongSign { record: String, reason: String },
    #[error("{record}: no h-function source (not an L-space link and no manual table)")]
    NoHFunction { record: String },
}

/// Full-link table of a record, together with where it came from.
fn own_table(record: &LinkRecord) -> Result<(HPrimeTable, Provenance), BuildError> {
    let wrap = |source| BuildError::Alexander {
        record: record.name.clone(),
        source,
    };
    if let Some(t) = &record.hprime {
        return Ok((t.clone(), Provenance::Manual));
    }
    if !record.flags.lspace {
        return Err(BuildError::NoHFunction {
            record: record.name.clone(),
        });
    }
    let a = record.normalized_alexander().map_err(wrap)?;
    let table = if record.n == 1 {
        knot_h_from_alexander(&a)
    } else {
        hprime_from_alexander(&a, true)
    }
    .map_err(wrap)?;
    Ok((table, Provenance::FromAlexander))
}

/// Assembles the H-model of `record` without validating it, pulling
/// sublink tables from the catalog.
///
/// Sublinks without a reference are taken to be unlinks when the record is
/// flagged Brunnian, and single components to be unknots when it is flagged
/// as having unknotted components.
pub fn assemble_model(record: &LinkRecord, catalog: &Catalog) -> Result<HModel, BuildError> {
    let (full_table, provenance) = own_table(record)?;
    assemble_with(record, catalog, full_table, provenance)
}

fn assemble_with(
    record: &LinkRecord,
    catalog: &Catalog,
    full_table: HPrimeTable,
    provenance: Provenance,
) -> Result<HModel, BuildError> {
    let n = record.n;
    let full = SublinkId::full(n);
    let mut tables = BTreeMap::new();
    for id in full.nonempty_subsets().filter(|&id| id != full) {
        let table = match record.sublinks.get(&id) {
            Some(target) => {
                let sub = catalog.record(target).ok_or_else(|| BuildError::UnknownRecord {
                    record: record.name.clone(),
                    sublink: id,
                    target: target.clone(),
                })?;
                if sub.n != id.len() {
                    return Err(BuildError::SublinkArity {
                        record: record.name.clone(),
                        sublink: id,
                        target: target.clone(),
                        got: sub.n,
                    });
                }
                own_table(sub)?.0
            }
            None if record.flags.brunnian => HPrimeTable::new(id.len()),
            None if id.len() == 1 && record.flags.unknotted_components => HPrimeTable::new(1),
            None => {
                return Err(BuildError::MissingSublink {
                    record: record.name.clone(),
                    sublink: id,
                })
            }
        };
        tables.insert(id, table);
    }
    tables.insert(full, full_table);
    HModel::new(n, tables, provenance).map_err(|source| BuildError::Lattice {
        record: record.name.clone(),
        source,
    })
}

/// [`assemble_model`] followed by the sign policy and validation on the
/// default box.
///
/// A polynomial whose negation, but not itself, gives a valid H-function is
/// rejected with [`BuildError::WrongSign`]. When both signs are valid the
/// record's expected `a2`, if present, must agree with the stored sign.
pub fn build_model(record: &LinkRecord, catalog: &Catalog) -> Result<HModel, BuildError> {
    let (full_table, provenance) = own_table(record)?;
    let model = assemble_with(record, catalog, full_table.clone(), provenance)?;
    let violations = model.validate(model.default_box_radius());

    if record.n >= 2 && provenance == Provenance::FromAlexander && !full_table.is_empty() {
        let flipped = assemble_with(record, catalog, full_table.negated(), provenance)?;
        let flipped_ok = flipped.validate(flipped.default_box_radius()).is_empty();
        if !violations.is_empty() && flipped_ok {
            return Err(BuildError::WrongSign {
                record: record.name.clone(),
                reason: "the negated polynomial gives a valid H-function".into(),
            });
        }
        if violations.is_empty() && flipped_ok {
            if let Some(expected) = record.expected_integer("a2") {
                if full_table.sum() != expected && -full_table.sum() == expected {
                    return Err(BuildError::WrongSign {
                        record: record.name.clone(),
                        reason: format!("expected a2 = {expected} selects the opposite sign"),
                    });
                }
            }
        }
    }
    if let Some(violation) = violations.into_iter().next() {
        return Err(BuildError::ValidationFailed {
            record: record.name.clone(),
            violation,
        });
    }
    Ok(model)
}

/// `Delta'` evaluated at `(1, .., 1)`; zero for knots by convention.
pub fn delta_prime_at_one(a: &NormalizedAlexander) -> Result<BigInt, AlexanderError> {
    if a.components() < 2 {
        return Ok(BigInt::zero());
    }
    Ok(a.delta_prime()?.evaluate_at_one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::half_difference(n, i)
    }

    fn whitehead() -> NormalizedAlexander {
        NormalizedAlexander::new(-&(&z(2, 0) * &z(2, 1))).unwrap()
    }

    fn borromean() -> NormalizedAlexander {
        NormalizedAlexander::new(LaurentPoly::half_difference_product(3)).unwrap()
    }

    fn knot(coeffs: &[(i32, i64)]) -> NormalizedAlexander {
        let p = LaurentPoly::from_terms(1, coeffs.iter().map(|&(e, c)| (vec![2 * e], c))).unwrap();
        NormalizedAlexander::new(p).unwrap()
    }

    #[test]
    fn delta_prime_examples() {
        assert_eq!(whitehead().delta_prime().unwrap(), LaurentPoly::constant(2, -1));
        assert_eq!(borromean().delta_prime().unwrap(), LaurentPoly::one(3));
        let zero = NormalizedAlexander::new(LaurentPoly::zero(2)).unwrap();
        assert!(zero.delta_prime().unwrap().is_zero());
    }

    #[test]
    fn delta_prime_rejects_torres_failure() {
        let p = &(&z(2, 0) * &z(2, 0)) * &z(2, 1);
        // Symmetric with sign -1, so it is not a valid 2-component polynomial.
        assert!(NormalizedAlexander::new(p).is_err());
        let q = NormalizedAlexander::new(&z(2, 0) * &z(2, 0)).unwrap();
        assert!(matches!(
            q.delta_prime(),
            Err(AlexanderError::Laurent(LaurentError::NotDivisible { .. }))
        ));
    }

    #[test]
    fn hprime_examples() {
        assert_eq!(hprime_from_alexander(&whitehead(), true).unwrap(), HPrimeTable::delta(2));
        assert_eq!(hprime_from_alexander(&borromean(), true).unwrap(), HPrimeTable::delta(3));
        let unlink = NormalizedAlexander::new(LaurentPoly::zero(2)).unwrap();
        assert!(hprime_from_alexander(&unlink, true).unwrap().is_empty());
        assert_eq!(
            hprime_from_alexander(&whitehead(), false),
            Err(AlexanderError::NotLSpace)
        );
    }

    #[test]
    fn knot_tables() {
        let trefoil = knot_h_from_alexander(&knot(&[(1, 1), (0, -1), (-1, 1)])).unwrap();
        assert_eq!(trefoil, HPrimeTable::delta(1));
        assert!(knot_h_from_alexander(&knot(&[(0, 1)])).unwrap().is_empty());
        let t25 = knot_h_from_alexander(&knot(&[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)])).unwrap();
        assert_eq!(t25.get(&[0]), 1);
        assert_eq!(t25.get(&[1]), 1);
        assert_eq!(t25.get(&[-1]), 1);
        assert_eq!(t25.get(&[2]), 0);
    }

    #[test]
    fn knot_tables_reject_non_lspace_polynomials() {
        let figure_eight = knot(&[(1, -1), (0, 3), (-1, -1)]);
        assert_eq!(
            knot_h_from_alexander(&figure_eight),
            Err(AlexanderError::NotLSpaceStaircase(0))
        );
        let granny = knot(&[(2, 1), (1, -2), (0, 3), (-1, -2), (-2, 1)]);
        assert!(matches!(
            knot_h_from_alexander(&granny),
            Err(AlexanderError::NotLSpaceStaircase(_))
        ));
        let unnormalized = knot(&[(0, 2)]);
        assert!(matches!(
            knot_h_from_alexander(&unnormalized),
            Err(AlexanderError::NotNormalized(_))
        ));
    }

    #[test]
    fn alexander_from_models() {
        let wh = HModel::brunnian(HPrimeTable::delta(2), Provenance::Manual).unwrap();
        assert_eq!(alexander_from_model(&wh, None).unwrap(), whitehead());
        let b = HModel::brunnian(HPrimeTable::delta(3), Provenance::Manual).unwrap();
        assert_eq!(alexander_from_model(&b, None).unwrap(), borromean());
        assert!(alexander_from_model(&HModel::unlink(2), None).unwrap().poly().is_zero());
        assert!(alexander_from_model(&HModel::unlink(1), None).is_err());
    }

    #[test]
    fn torsion_data_enters_with_the_opposite_sign() {
        let chi = ChiPrimeTable::new(HPrimeTable::delta(2)).unwrap();
        let wh = HModel::brunnian(HPrimeTable::delta(2), Provenance::Manual).unwrap();
        // chi' - h' = 0 everywhere.
        assert!(alexander_from_model(&wh, Some(&chi)).unwrap().poly().is_zero());
        let asym = HPrimeTable::from_entries(2, [(vec![1, 0], 1)]).unwrap();
        assert!(ChiPrimeTable::new(asym).is_err());
    }

    #[test]
    fn euler_characteristic_of_whitehead() {
        let wh = HModel::brunnian(HPrimeTable::delta(2), Provenance::Manual).unwrap();
        let chi = hfl_euler(&wh, None).unwrap();
        assert_eq!(chi, whitehead().shifted());
        // -(t1 - 1)(t2 - 1)
        let expected = LaurentPoly::from_terms(
            2,
            [(vec![2, 2], -1), (vec![2, 0], 1), (vec![0, 2], 1), (vec![0, 0], -1)],
        )
        .unwrap();
        assert_eq!(chi, expected);
    }

    #[test]
    fn whitehead_conway() {
        let c = whitehead().conway().unwrap();
        assert_eq!(c.to_string(), "-z^3");
        assert_eq!(delta_prime_at_one(&whitehead()).unwrap(), BigInt::from(-1));
    }
}
