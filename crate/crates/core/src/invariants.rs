//! Link and surgery invariants computed from H-models: the Conway
//! coefficient `a2`, Sato-Levine `beta`, Milnor's `mu123`, Casson invariants
//! of `1/q` surgeries and Heegaard Floer d-invariants.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Roots;
use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::alexander::ChiPrimeTable;
use crate::detect::lspace_knot_genus;
use crate::lattice::{unknot_h, HModel, HPrimeTable, LatticeError, SublinkId};

/// Exact rational used for d-invariants.
pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("invariant needs {expected} components, link has {got}")]
    WrongArity { expected: usize, got: usize },
    #[error("|mu123|^2 = {0} is not a perfect square, but the link is flagged Brunnian and L-space")]
    NotPerfectSquare(i64),
    #[error("no a2 value for sublink {0}")]
    MissingSublinkData(SublinkId),
    #[error("spin^c index {i} out of range for modulus {m}")]
    IndexOutOfRange { m: i64, i: i64 },
    #[error("modulus must be positive, got {0}")]
    BadModulus(i64),
    #[error("surgery coefficient {m} is not large for genus {genus} (need m >= 2g - 1)")]
    NotLarge { m: i64, genus: u64 },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Prints `p/q` in lowest terms, or `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Inverse of [`format_rational`]; also accepts plain integers.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().ok()?;
            let q: i64 = q.trim().parse().ok()?;
            (q != 0).then(|| Rational::new(p, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Exact,
    UpperBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DInvariantBound {
    pub value: Rational,
    pub kind: BoundKind,
}

impl DInvariantBound {
    pub fn exact(value: Rational) -> Self {
        DInvariantBound {
            value,
            kind: BoundKind::Exact,
        }
    }

    pub fn upper(value: Rational) -> Self {
        DInvariantBound {
            value,
            kind: BoundKind::UpperBound,
        }
    }
}

impl fmt::Display for DInvariantBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BoundKind::Exact => write!(f, "{}", format_rational(&self.value)),
            BoundKind::UpperBound => write!(f, "<= {}", format_rational(&self.value)),
        }
    }
}

/// Coefficient rings for which a d-invariant statement is certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Coefficients {
    Q,
    F2,
    AnyFieldCoprime,
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coefficients::Q => "Q",
            Coefficients::F2 => "F2",
            Coefficients::AnyFieldCoprime => "any field of characteristic coprime to mu123",
        })
    }
}

fn require_arity(m: &HModel, n: usize) -> Result<(), InvariantError> {
    if m.components() != n {
        return Err(InvariantError::WrongArity {
            expected: n,
            got: m.components(),
        });
    }
    Ok(())
}

/// `a2 = sum_s (h'(s) - chi'(s))` over the full-link table.
///
/// The sign is chosen so that the Whitehead link, the Borromean rings and
/// the trefoil all have `a2 = 1`. For a knot the full table is its `h`, so
/// this is the Casson knot invariant `sum_s h(s)`.
pub fn a2(m: &HModel, chi: Option<&ChiPrimeTable>) -> i64 {
    m.full_table().sum() - chi.map(ChiPrimeTable::sum).unwrap_or(0)
}

/// Sato-Levine invariant of a 2-component link.
pub fn sato_levine(m: &HModel, chi: Option<&ChiPrimeTable>) -> Result<i64, InvariantError> {
    require_arity(m, 2)?;
    Ok(a2(m, chi))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mu123 {
    pub squared: i64,
    /// `|mu123|`, when `squared` is a perfect square.
    pub abs: Option<i64>,
}

/// `mu123^2 = |sum_s (chi'(s) - h'(s))|` for a 3-component link.
pub fn mu123_squared(
    m: &HModel,
    chi: Option<&ChiPrimeTable>,
    brunnian_lspace: bool,
) -> Result<Mu123, InvariantError> {
    require_arity(m, 3)?;
    let squared = a2(m, chi).abs();
    let root = squared.sqrt();
    let abs = (root * root == squared).then_some(root);
    if abs.is_none() && brunnian_lspace {
        return Err(InvariantError::NotPerfectSquare(squared));
    }
    Ok(Mu123 { squared, abs })
}

/// `a2` of every nonempty sublink, using the restricted model and the
/// torsion tables supplied per sublink (missing ones count as zero).
pub fn sublink_a2(
    m: &HModel,
    chis: &BTreeMap<SublinkId, ChiPrimeTable>,
) -> Result<BTreeMap<SublinkId, i64>, InvariantError> {
    let mut out = BTreeMap::new();
    for id in SublinkId::full(m.components()).nonempty_subsets() {
        let sub = m.restrict_sublink(id)?;
        out.insert(id, a2(&sub, chis.get(&id)));
    }
    Ok(out)
}

/// Casson invariant of `1/q_1, .., 1/q_n` surgery on a link in `S^3`:
/// `sum over nonempty sublinks I of (prod_{i in I} q_i) a2(L_I)`.
pub fn casson_surgery(
    a2_by_sublink: &BTreeMap<SublinkId, i64>,
    q: &[i64],
) -> Result<i64, InvariantError> {
    let mut total = 0;
    for id in SublinkId::full(q.len()).nonempty_subsets() {
        let a = a2_by_sublink
            .get(&id)
            .ok_or(InvariantError::MissingSublinkData(id))?;
        let weight: i64 = id.components().iter().map(|&i| q[i]).product();
        total += weight * a;
    }
    Ok(total)
}

/// `d(L(m, 1), i) = ((2i - m)^2 - m) / 4m` for `0 <= i < m`.
pub fn d_lens(m: i64, i: i64) -> Result<Rational, InvariantError> {
    if m < 1 {
        return Err(InvariantError::BadModulus(m));
    }
    if !(0..m).contains(&i) {
        return Err(InvariantError::IndexOutOfRange { m, i });
    }
    Ok(Rational::new((2 * i - m).pow(2) - m, 4 * m))
}

/// d-invariant of large surgery `S^3_m(K)` on an L-space knot with `h`
/// table `h`, in the spin^c structure labelled `i`.
pub fn d_large_surgery_knot(
    h: &HPrimeTable,
    m: i64,
    i: i64,
) -> Result<DInvariantBound, InvariantError> {
    if h.arity() != 1 {
        return Err(InvariantError::WrongArity {
            expected: 1,
            got: h.arity(),
        });
    }
    if m < 1 {
        return Err(InvariantError::BadModulus(m));
    }
    let genus = lspace_knot_genus(h);
    if m < 2 * genus as i64 - 1 {
        return Err(InvariantError::NotLarge { m, genus });
    }
    let mut i = i.rem_euclid(m);
    if 2 * i > m {
        i = m - i;
    }
    let big_h = h.get(&[i]) + unknot_h(i);
    Ok(DInvariantBound::exact(d_lens(m, i)? - 2 * big_h))
}

/// Bound `d(S^3_{1,..,1}(L)) <= -2 h(0)`.
///
/// Exact when the link is an L-space link whose tables are all supported
/// at the origin; an upper bound otherwise.
pub fn d_one_surgery_bound(m: &HModel, lspace: bool) -> DInvariantBound {
    let origin = vec![0; m.components()];
    let value = Rational::from_integer(-2 * m.eval_h(&origin).expect("origin has the right arity"));
    let at_origin = m
        .tables()
        .all(|(_, t)| t.entries().all(|(p, _)| p.iter().all(|&x| x == 0)));
    if lspace && at_origin {
        DInvariantBound::exact(value)
    } else {
        DInvariantBound::upper(value)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TripleLinkingVerdict {
    Bound {
        bound: DInvariantBound,
        coefficients: Vec<Coefficients>,
        hypotheses: Vec<String>,
    },
    NotApplicable(String),
}

/// `d(S^3_{1,1,1}(L)) <= -2` for 3-component algebraically split links
/// with nonzero triple linking whose 2-component sublinks are L-space
/// links.
pub fn triple_linking_d_verdict(
    n: usize,
    mu: Option<i64>,
    pair_sublinks_lspace: bool,
) -> TripleLinkingVerdict {
    if n != 3 {
        return TripleLinkingVerdict::NotApplicable(format!("needs 3 components, link has {n}"));
    }
    if !pair_sublinks_lspace {
        return TripleLinkingVerdict::NotApplicable(
            "2-component sublinks are not all L-space links".into(),
        );
    }
    let mu = match mu {
        Some(mu) if mu != 0 => mu,
        Some(_) => return TripleLinkingVerdict::NotApplicable("mu123 = 0".into()),
        None => return TripleLinkingVerdict::NotApplicable("mu123 unknown".into()),
    };
    let mut coefficients = vec![Coefficients::Q];
    if mu % 2 != 0 {
        coefficients.push(Coefficients::F2);
    }
    coefficients.push(Coefficients::AnyFieldCoprime);
    TripleLinkingVerdict::Bound {
        bound: DInvariantBound::upper(Rational::from_integer(-2)),
        coefficients,
        hypotheses: vec![
            "3 components".into(),
            "algebraically split".into(),
            "2-component sublinks are L-space links".into(),
            format!("|mu123| = {}", mu.abs()),
        ],
    }
}

/// Rank of `HF^infinity` of 0-surgery on all three components.
pub fn hf_inf_rank_zero_surgery(mu123: i64) -> u32 {
    if mu123 % 2 == 0 {
        8
    } else {
        6
    }
}

/// Machine-readable invariant result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantResult {
    pub invariant: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<BoundKind>,
    pub hypotheses: Vec<String>,
    pub anchor: String,
}

impl fmt::Display for InvariantResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Some(BoundKind::UpperBound) => write!(f, "{} <= {}", self.invariant, self.value)?,
            _ => write!(f, "{} = {}", self.invariant, self.value)?,
        }
        if !self.hypotheses.is_empty() {
            write!(f, "\n  assuming: {}", self.hypotheses.join("; "))?;
        }
        write!(f, "\n  via: {}", self.anchor)
    }
}
