//! Detection and feasibility criteria over validated H-models.
//!
//! Every verdict records the hypotheses it relied on. Positive conclusions
//! are only returned when each hypothesis is certified by a catalog flag or
//! by the model itself.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::catalog::LinkFlags;
use crate::invariants::{mu123_squared, sato_levine, InvariantError};
use crate::lattice::{HModel, HPrimeTable, LatticeError, SublinkId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    LSpace,
    Brunnian,
    UnknottedComponents,
    AlgebraicallySplit,
    PoincareSurgery,
    Components(usize),
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::LSpace => f.write_str("L-space link"),
            Hypothesis::Brunnian => f.write_str("Brunnian"),
            Hypothesis::UnknottedComponents => f.write_str("unknotted components"),
            Hypothesis::AlgebraicallySplit => f.write_str("algebraically split"),
            Hypothesis::PoincareSurgery => f.write_str("some (+-1, +-1) surgery is the Poincare sphere"),
            Hypothesis::Components(n) => write!(f, "{n} components"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Conclusion {
    Unlink,
    Whitehead,
    Borromean,
    /// The split union of a trefoil and an unknot.
    SplitTrefoilUnknot,
    /// No criterion failed; the data is consistent with a real link.
    Feasible,
    Infeasible,
    Inconclusive,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::Unlink => "unlink",
            Conclusion::Whitehead => "Whitehead link",
            Conclusion::Borromean => "Borromean rings",
            Conclusion::SplitTrefoilUnknot => "split union of trefoil and unknot",
            Conclusion::Feasible => "feasible",
            Conclusion::Infeasible => "infeasible",
            Conclusion::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Point { point: Vec<i64>, value: i64 },
    Invariant { name: String, value: i64 },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Point { point, value } => {
                let p: Vec<String> = point.iter().map(i64::to_string).collect();
                write!(f, "h({}) = {value}", p.join(","))
            }
            Witness::Invariant { name, value } => write!(f, "{name} = {value}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub conclusion: Conclusion,
    pub hypotheses_used: Vec<Hypothesis>,
    pub witness: Option<Witness>,
    pub anchor: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Verdict {
    fn new(conclusion: Conclusion, hypotheses_used: Vec<Hypothesis>, anchor: &str) -> Self {
        Verdict {
            conclusion,
            hypotheses_used,
            witness: None,
            anchor: anchor.into(),
            note: None,
        }
    }

    fn witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn is_positive(&self) -> bool {
        !matches!(
            self.conclusion,
            Conclusion::Inconclusive | Conclusion::Infeasible | Conclusion::Feasible
        )
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.conclusion)?;
        if let Some(w) = &self.witness {
            write!(f, " ({w})")?;
        }
        if let Some(note) = &self.note {
            write!(f, "\n  {note}")?;
        }
        if !self.hypotheses_used.is_empty() {
            let hyps: Vec<String> = self.hypotheses_used.iter().map(|h| h.to_string()).collect();
            write!(f, "\n  assuming: {}", hyps.join("; "))?;
        }
        write!(f, "\n  via: {}", self.anchor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetectError {
    #[error("hypothesis not certified: {0}")]
    HypothesisMissing(Hypothesis),
    #[error("criterion needs {expected} components, link has {got}")]
    WrongArity { expected: usize, got: usize },
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

fn require(flag: bool, h: Hypothesis) -> Result<(), DetectError> {
    if flag {
        Ok(())
    } else {
        Err(DetectError::HypothesisMissing(h))
    }
}

fn require_arity(m: &HModel, n: usize) -> Result<(), DetectError> {
    if m.components() != n {
        return Err(DetectError::WrongArity {
            expected: n,
            got: m.components(),
        });
    }
    Ok(())
}

fn origin_witness(m: &HModel) -> Result<Witness, DetectError> {
    let point = vec![0; m.components()];
    let value = m.eval_h(&point)?;
    Ok(Witness::Point { point, value })
}

/// An L-space link with `h(0) = 0` is an unlink. A Brunnian L-space link
/// with at least four components is always an unlink.
pub fn detect_unlink(m: &HModel, flags: &LinkFlags) -> Result<Verdict, DetectError> {
    require(flags.lspace, Hypothesis::LSpace)?;
    let n = m.components();
    let w = origin_witness(m)?;
    let h0 = match w {
        Witness::Point { value, .. } => value,
        Witness::Invariant { .. } => unreachable!(),
    };
    if n >= 4 && flags.brunnian {
        let hyps = vec![Hypothesis::LSpace, Hypothesis::Brunnian, Hypothesis::Components(n)];
        let anchor = "Brunnian L-space links with four or more components";
        return Ok(if h0 == 0 {
            Verdict::new(Conclusion::Unlink, hyps, anchor).witness(w)
        } else {
            Verdict::new(Conclusion::Infeasible, hyps, anchor)
                .witness(w)
                .note("such a link must be the unlink, but h(0) is nonzero")
        });
    }
    let anchor = "h(0) = 0 forces the unlink";
    let conclusion = if h0 == 0 {
        Conclusion::Unlink
    } else {
        Conclusion::Inconclusive
    };
    Ok(Verdict::new(conclusion, vec![Hypothesis::LSpace], anchor).witness(w))
}

fn is_origin_delta(t: &HPrimeTable) -> bool {
    *t == HPrimeTable::delta(t.arity())
}

/// Whitehead link detection for 2-component L-space links.
///
/// With the Poincare-surgery flag the two alternatives of the
/// whitehead-or-trefoil classification are told apart by the data.
pub fn detect_whitehead(m: &HModel, flags: &LinkFlags) -> Result<Verdict, DetectError> {
    require_arity(m, 2)?;
    require(flags.lspace, Hypothesis::LSpace)?;
    let base = vec![
        Hypothesis::LSpace,
        Hypothesis::AlgebraicallySplit,
        Hypothesis::Components(2),
    ];
    let w = origin_witness(m)?;
    let components_trivial = (0..2).all(|i| {
        m.table(SublinkId::singleton(i))
            .map_or(true, HPrimeTable::is_empty)
    });
    if components_trivial && is_origin_delta(m.full_table()) {
        return Ok(Verdict::new(Conclusion::Whitehead, base, "h is 1 at the origin and 0 elsewhere").witness(w));
    }
    let beta = sato_levine(m, None)?;
    if flags.unknotted_components && beta.abs() == 1 {
        let mut hyps = base;
        hyps.push(Hypothesis::UnknottedComponents);
        return Ok(Verdict::new(Conclusion::Whitehead, hyps, "|beta| = 1 for L-space links with unknotted components")
            .witness(Witness::Invariant {
                name: "beta".into(),
                value: beta,
            }));
    }
    if flags.poincare_surgery {
        let mut hyps = base;
        hyps.push(Hypothesis::PoincareSurgery);
        let anchor = "Poincare sphere surgery: Whitehead link or split trefoil and unknot";
        let knot_tables: Vec<&HPrimeTable> = (0..2)
            .filter_map(|i| m.table(SublinkId::singleton(i)))
            .collect();
        let one_trefoil = knot_tables.iter().filter(|t| is_origin_delta(t)).count() == 1
            && knot_tables.iter().filter(|t| t.is_empty()).count() == 1;
        return Ok(if m.full_table().is_empty() && one_trefoil {
            Verdict::new(Conclusion::SplitTrefoilUnknot, hyps, anchor).witness(w)
        } else {
            Verdict::new(Conclusion::Infeasible, hyps, anchor)
                .witness(w)
                .note("h matches neither alternative")
        });
    }
    Ok(Verdict::new(Conclusion::Inconclusive, base, "h is 1 at the origin and 0 elsewhere").witness(w))
}

/// Borromean rings detection for 3-component Brunnian L-space links.
pub fn detect_borromean(m: &HModel, flags: &LinkFlags) -> Result<Verdict, DetectError> {
    require_arity(m, 3)?;
    require(flags.brunnian, Hypothesis::Brunnian)?;
    require(flags.lspace, Hypothesis::LSpace)?;
    let hyps = vec![Hypothesis::LSpace, Hypothesis::Brunnian, Hypothesis::Components(3)];
    let mu = mu123_squared(m, None, true)?;
    let abs = mu.abs.expect("perfect square checked under the Brunnian L-space flags");
    let w = Witness::Invariant {
        name: "|mu123|".into(),
        value: abs,
    };
    let (conclusion, anchor) = match abs {
        1 => (Conclusion::Borromean, "|mu123| = 1 for Brunnian L-space links"),
        0 => (Conclusion::Unlink, "mu123 = 0 for Brunnian L-space links"),
        _ => (Conclusion::Inconclusive, "|mu123| = 1 for Brunnian L-space links"),
    };
    Ok(Verdict::new(conclusion, hyps, anchor).witness(w))
}

/// Necessary conditions on `sum h` for 3-component Brunnian L-space links:
/// it is `mu123^2`, `|mu123| != 2`, and `|mu123|` has the parity of `h(0)`.
pub fn feasibility_brunnian(m: &HModel, flags: &LinkFlags) -> Result<Verdict, DetectError> {
    require_arity(m, 3)?;
    require(flags.brunnian, Hypothesis::Brunnian)?;
    require(flags.lspace, Hypothesis::LSpace)?;
    let hyps = vec![Hypothesis::LSpace, Hypothesis::Brunnian, Hypothesis::Components(3)];
    let anchor = "sum h = mu123^2 with |mu123| != 2 and |mu123| = h(0) mod 2";
    let mu = mu123_squared(m, None, false)?;
    let h0 = m.eval_h(&[0, 0, 0])?;
    let infeasible = |note: String, w: Witness| {
        Ok(Verdict::new(Conclusion::Infeasible, hyps.clone(), anchor)
            .witness(w)
            .note(note))
    };
    let sum_witness = Witness::Invariant {
        name: "sum h".into(),
        value: mu.squared,
    };
    let Some(abs) = mu.abs else {
        return infeasible(format!("sum h = {} is not a perfect square", mu.squared), sum_witness);
    };
    if abs == 2 {
        return infeasible("|mu123| = 2 is impossible".into(), sum_witness);
    }
    if (abs - h0).rem_euclid(2) != 0 {
        return infeasible(
            format!("|mu123| = {abs} and h(0) = {h0} have different parity"),
            Witness::Point {
                point: vec![0, 0, 0],
                value: h0,
            },
        );
    }
    Ok(Verdict::new(Conclusion::Feasible, hyps, anchor).witness(Witness::Invariant {
        name: "|mu123|".into(),
        value: abs,
    }))
}

/// Genus of an L-space knot: one more than the largest `s` with
/// `h(s) > 0`, or 0 for the unknot.
pub fn lspace_knot_genus(h: &HPrimeTable) -> u64 {
    h.entries()
        .filter(|(_, v)| *v > 0)
        .map(|(s, _)| s[0])
        .max()
        .map_or(0, |s| s as u64 + 1)
}

/// Every criterion whose arity matches, in the order unlink, Whitehead,
/// Borromean. Criteria with missing hypotheses are skipped.
pub fn detect_all(m: &HModel, flags: &LinkFlags) -> Vec<Verdict> {
    let mut out = Vec::new();
    out.extend(detect_unlink(m, flags).ok());
    match m.components() {
        2 => out.extend(detect_whitehead(m, flags).ok()),
        3 => {
            out.extend(detect_borromean(m, flags).ok());
            out.extend(feasibility_brunnian(m, flags).ok());
        }
        _ => {}
    }
    out
}

/// The first positive conclusion, else `Infeasible` if any criterion
/// failed, else `Inconclusive`.
pub fn summarize(verdicts: &[Verdict]) -> Conclusion {
    if let Some(v) = verdicts.iter().find(|v| v.is_positive()) {
        return v.conclusion;
    }
    if verdicts.iter().any(|v| v.conclusion == Conclusion::Infeasible) {
        return Conclusion::Infeasible;
    }
    Conclusion::Inconclusive
}
