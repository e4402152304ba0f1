//! Whole-catalog consistency report.
//!
//! Every record is run through model assembly, the H-function axioms, the
//! Alexander round trip, the Euler characteristic identity, the Möbius and
//! alternating-sum identities, the feasibility criteria and its golden
//! values. Failures are report lines, not errors.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::alexander::{
    alexander_from_model, alternating_sums, assemble_model, build_model, delta_prime_at_one, hfl_euler,
};
use crate::catalog::{Catalog, LinkRecord};
use crate::detect::{detect_all, feasibility_brunnian, lspace_knot_genus, summarize, Conclusion};
use crate::invariants::{
    a2, casson_surgery, d_one_surgery_bound, hf_inf_rank_zero_surgery, mu123_squared, parse_rational,
    sato_levine, sublink_a2,
};
use crate::laurent::LaurentPoly;
use crate::lattice::{box_points, HModel, Provenance, SublinkId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub record: String,
    pub check: String,
    pub passed: bool,
    pub detail: String,
    pub anchor: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, record: &str, check: &str, anchor: &str, result: Result<String, String>) {
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(Check {
            record: record.into(),
            check: check.into(),
            passed,
            detail,
            anchor: anchor.into(),
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{status} {} {}", c.record, c.check)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f, " [{}]", c.anchor)?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

fn expect_eq<T: PartialEq + fmt::Display>(got: T, want: T) -> Result<String, String> {
    if got == want {
        Ok(got.to_string())
    } else {
        Err(format!("got {got}, expected {want}"))
    }
}

/// `Delta(t) / (1 - t^-1)` truncated to exponents `>= -radius`: the
/// coefficient at `s` is `sum_{k >= s} a_k`.
fn knot_series(poly: &LaurentPoly, radius: i64) -> LaurentPoly {
    let coeffs: Vec<(i64, BigInt)> = poly
        .terms()
        .filter_map(|(e, c)| Some((e.to_lattice()?[0], c.clone())))
        .collect();
    let top = coeffs.iter().map(|(k, _)| *k).max().unwrap_or(0);
    let mut terms = Vec::new();
    for s in -radius..=top.max(radius) {
        let c: BigInt = coeffs.iter().filter(|(k, _)| *k >= s).map(|(_, c)| c.clone()).sum();
        terms.push((vec![(2 * s) as i32], c));
    }
    LaurentPoly::from_terms(1, terms).expect("one variable")
}

fn check_identities(report: &mut Report, r: &LinkRecord, m: &HModel) {
    let n = r.n;
    let radius = m.default_box_radius();
    let violations = m.validate(radius);
    report.push(
        &r.name,
        "axioms",
        "H-function axioms on the box of radius support + 2",
        match violations.first() {
            None => Ok(format!("radius {radius}")),
            Some(v) => Err(format!("{} violation(s), first: {v}", violations.len())),
        },
    );
    if n < 2 {
        return;
    }
    let mut bad = None;
    let mut mobius_bad = None;
    for s in box_points(n, radius) {
        match alternating_sums(m, &s) {
            Ok((a, b)) if a != b => {
                bad.get_or_insert(format!("at {s:?}: {a} != {b}"));
            }
            Ok(_) => {}
            Err(e) => {
                bad.get_or_insert(e.to_string());
            }
        }
        let mut total = 0;
        for id in SublinkId::full(n).nonempty_subsets() {
            let sign = if (n - id.len()) % 2 == 0 { 1 } else { -1 };
            let sub = m.restrict_sublink(id).expect("nonempty sublink");
            total += sign * sub.eval_big_h(&id.project(&s)).expect("projected arity");
        }
        let direct = m.eval_h_prime(&s).expect("arity");
        if total != direct {
            mobius_bad.get_or_insert(format!("at {s:?}: {total} != {direct}"));
        }
    }
    report.push(
        &r.name,
        "alternating sums",
        "alternating sums of h' and H over corners agree",
        bad.map_or(Ok(String::new()), Err),
    );
    report.push(
        &r.name,
        "mobius duality",
        "h' is the Möbius transform of H over sublinks",
        mobius_bad.map_or(Ok(String::new()), Err),
    );
}

fn check_alexander(report: &mut Report, r: &LinkRecord, m: &HModel) {
    let chi = r.chi_prime.as_ref();
    let stored = match r.normalized_alexander() {
        Ok(a) => a,
        Err(e) => {
            report.push(&r.name, "alexander", "symmetric normalization", Err(e.to_string()));
            return;
        }
    };
    let euler = hfl_euler(m, chi).map_err(|e| e.to_string());
    if r.n >= 2 {
        if m.provenance() == Provenance::Manual && chi.is_none() {
            return;
        }
        let back = alexander_from_model(m, chi)
            .map_err(|e| e.to_string())
            .and_then(|a| {
                if a == stored {
                    Ok(String::new())
                } else {
                    Err(format!("model gives {}, stored {}", a.poly(), stored.poly()))
                }
            });
        report.push(&r.name, "alexander round trip", "Delta' = (-1)^n sum (chi' - h') t^s", back);
        let result = euler.and_then(|e| {
            if e == stored.shifted() {
                Ok(String::new())
            } else {
                Err(format!("inclusion-exclusion gives {e}"))
            }
        });
        report.push(&r.name, "euler characteristic", "chi(HFL^-) generating function", result);
        let at_one = delta_prime_at_one(&stored)
            .map_err(|e| e.to_string())
            .and_then(|d| {
                let model_a2 = BigInt::from(a2(m, chi));
                if d.magnitude() == model_a2.magnitude() {
                    Ok(format!("|Delta'(1)| = {}", d.magnitude()))
                } else {
                    Err(format!("|Delta'(1)| = {}, |a2| = {}", d.magnitude(), model_a2.magnitude()))
                }
            });
        report.push(&r.name, "conway a2", "a2 = +-Delta'(1, .., 1)", at_one);
    } else if m.provenance() == Provenance::FromAlexander {
        let radius = m.default_box_radius();
        let result = euler.and_then(|e| {
            let series = knot_series(stored.poly(), radius);
            if e == series {
                Ok(String::new())
            } else {
                Err(format!("inclusion-exclusion gives {e}, series {series}"))
            }
        });
        report.push(&r.name, "euler characteristic", "chi(HFL^-) = Delta / (1 - t^-1)", result);
        let conway = stored
            .conway()
            .map_err(|e| e.to_string())
            .and_then(|c| expect_eq(c.coeff(2), BigInt::from(a2(m, None))));
        report.push(&r.name, "conway a2", "a2 of a knot is sum h", conway);
    }
}

fn golden_value(key: &str, r: &LinkRecord, m: &HModel, catalog: &Catalog) -> Result<String, String> {
    let chi = r.chi_prime.as_ref();
    let flags = &r.flags;
    let err = |e: &dyn fmt::Display| e.to_string();
    Ok(match key {
        "a2" => a2(m, chi).to_string(),
        "beta" => sato_levine(m, chi).map_err(|e| err(&e))?.to_string(),
        "mu123_squared" => mu123_squared(m, chi, flags.brunnian && flags.lspace)
            .map_err(|e| err(&e))?
            .squared
            .to_string(),
        "mu123" => mu123_squared(m, chi, flags.brunnian && flags.lspace)
            .map_err(|e| err(&e))?
            .abs
            .map_or("not a square".into(), |a| a.to_string()),
        "sum_h" => m.total_h().ok_or("h has proper-sublink terms")?.to_string(),
        "h0" => m.eval_h(&vec![0; r.n]).map_err(|e| err(&e))?.to_string(),
        "genus" => {
            if r.n != 1 {
                return Err("genus needs a knot".into());
            }
            lspace_knot_genus(m.full_table()).to_string()
        }
        "casson" => {
            let a2s = sublink_a2(m, &catalog.sublink_chi(r)).map_err(|e| err(&e))?;
            casson_surgery(&a2s, &vec![1; r.n]).map_err(|e| err(&e))?.to_string()
        }
        "d_one_bound" => d_one_surgery_bound(m, flags.lspace).to_string(),
        "rank_zero_surgery" => {
            let mu = mu123_squared(m, chi, false).map_err(|e| err(&e))?;
            let abs = mu.abs.ok_or("mu123^2 is not a square")?;
            hf_inf_rank_zero_surgery(abs).to_string()
        }
        "detect" => {
            let verdicts = detect_all(m, flags);
            format!("{:?}", summarize(&verdicts))
        }
        other => return Err(format!("unknown expected key {other:?}")),
    })
}

fn check_record(report: &mut Report, r: &LinkRecord, catalog: &Catalog) {
    if let Err(e) = catalog.check_record(r) {
        report.push(&r.name, "structure", "algebraically split, sublinks resolve", Err(e.to_string()));
        return;
    }
    let model = match build_model(r, catalog) {
        Ok(m) => {
            report.push(&r.name, "build", "model assembly and sign policy", Ok(String::new()));
            m
        }
        Err(e) => {
            report.push(&r.name, "build", "model assembly and sign policy", Err(e.to_string()));
            match assemble_model(r, catalog) {
                Ok(m) => m,
                Err(_) => return,
            }
        }
    };
    check_identities(report, r, &model);
    check_alexander(report, r, &model);
    if r.n == 3 && r.flags.brunnian && r.flags.lspace {
        let result = match feasibility_brunnian(&model, &r.flags) {
            Ok(v) if v.conclusion == Conclusion::Feasible => Ok(v.witness.map(|w| w.to_string()).unwrap_or_default()),
            Ok(v) => Err(format!("{:?}: {}", v.conclusion, v.note.unwrap_or_default())),
            Err(e) => Err(e.to_string()),
        };
        report.push(&r.name, "brunnian feasibility", "sum h = mu123^2, |mu123| != 2, parity of h(0)", result);
    }
    for (key, want) in &r.expected {
        let result = golden_value(key, r, &model, catalog).and_then(|got| {
            let same = match (parse_rational(&got), parse_rational(want)) {
                (Some(a), Some(b)) => a == b,
                _ => got == *want,
            };
            if same {
                Ok(got)
            } else {
                Err(format!("got {got}, expected {want}"))
            }
        });
        report.push(&r.name, &format!("expected {key}"), "golden value", result);
    }
}

/// Runs every check on every record, in name order.
pub fn verify_catalog(catalog: &Catalog) -> Report {
    let mut report = Report::default();
    for r in catalog.records() {
        check_record(&mut report, r, catalog);
    }
    report
}
