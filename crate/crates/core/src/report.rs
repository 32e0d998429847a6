//! Machine-readable verification reports. Each check records its inputs, a
//! pass/fail status, structured details and its running time.

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::exactmath::{format_rational, Rational};
use crate::symfunc::IdentityCheck;
use crate::{freealg, heckerep, plactic, symfunc};

pub const ARTIFACT: &str = "superplactic-kit";

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Check {
    pub name: String,
    pub parameters: Value,
    pub status: Status,
    pub details: Value,
    pub elapsed_ms: u64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub artifact: String,
    pub parameters: Value,
    pub checks: Vec<Check>,
    pub overall: Status,
}

impl VerificationReport {
    pub fn new(parameters: Value, checks: Vec<Check>) -> Self {
        let overall = Status::from_bool(checks.iter().all(Check::passed));
        Self {
            artifact: ARTIFACT.into(),
            parameters,
            checks,
            overall,
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with every `elapsedMs` set to zero, for comparing runs.
    pub fn without_timing(&self) -> Value {
        let mut v = self.to_json();
        if let Some(checks) = v["checks"].as_array_mut() {
            for c in checks {
                c["elapsedMs"] = json!(0);
            }
        }
        v
    }
}

fn timed(name: &str, parameters: Value, f: impl FnOnce() -> Result<(bool, Value)>) -> Result<Check> {
    let start = Instant::now();
    let (ok, details) = f()?;
    Ok(Check {
        name: name.into(),
        parameters,
        status: Status::from_bool(ok),
        details,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn identity_details(c: &IdentityCheck) -> Value {
    json!({
        "equal": c.equal,
        "lhsTerms": c.lhs.len(),
        "rhsTerms": c.rhs.len(),
        "firstDiscrepancy": c.first_discrepancy.as_ref().map(|d| json!({
            "exponents": d.exponents,
            "lhs": d.lhs,
            "rhs": d.rhs,
        })),
    })
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("details serialize")
}

pub fn check_schur_identity(m: usize, max_degree: u32) -> Result<Check> {
    timed("schur-identity", json!({"m": m, "maxDegree": max_degree}), || {
        let c = symfunc::schur_identity_check(m, max_degree);
        Ok((c.equal, identity_details(&c)))
    })
}

pub fn check_hook_identity(m: usize, n: usize, max_degree: u32) -> Result<Check> {
    timed("hook-identity", json!({"m": m, "n": n, "maxDegree": max_degree}), || {
        let c = symfunc::hook_identity_check(m, n, max_degree);
        Ok((c.equal, identity_details(&c)))
    })
}

pub fn check_ybe(m: usize, n: usize) -> Result<Check> {
    timed("ybe", json!({"m": m, "n": n}), || {
        let r = heckerep::verify_ybe_hecke(m, n)?;
        Ok((r.pass, to_value(&r)))
    })
}

pub fn check_idempotent() -> Result<Check> {
    timed("idempotent", json!({}), || {
        let r = heckerep::verify_idempotents();
        Ok((r.pass, to_value(&r)))
    })
}

pub fn check_gamma(m: usize, n: usize, q0: &Rational) -> Result<Check> {
    timed("gamma", json!({"m": m, "n": n, "q": format_rational(q0)}), || {
        let r = heckerep::idempotent_image(m, n, q0)?;
        Ok((r.pass, to_value(&r)))
    })
}

pub fn check_dimensions(m: usize, n: usize, max_degree: usize, q0: &Rational) -> Result<Check> {
    let params = json!({"m": m, "n": n, "maxDegree": max_degree, "q": format_rational(q0)});
    timed("dimensions", params, || {
        let r = freealg::verify_decomposition(m, n, max_degree, q0)?;
        Ok((r.pass, to_value(&r)))
    })
}

pub fn check_schur_weyl(m: usize, n: usize, r: usize) -> Result<Check> {
    timed("schur-weyl", json!({"m": m, "n": n, "r": r}), || {
        let rep = heckerep::verify_commutant(m, n, r)?;
        Ok((rep.pass, to_value(&rep)))
    })
}

pub fn check_gl_relations(m: usize, n: usize) -> Result<Check> {
    timed("gl-relations", json!({"m": m, "n": n}), || {
        let rep = heckerep::verify_gl_relations(m, n)?;
        Ok((rep.pass, to_value(&rep)))
    })
}

pub fn check_plactic_classes(m: usize, n: usize, r: usize, rel: plactic::RelationSet) -> Result<Check> {
    timed("plactic-classes", json!({"m": m, "n": n, "length": r}), || {
        let rep = plactic::verify_class_bijection_with(m, n, r, rel)?;
        Ok((rep.pass, rep.to_json()))
    })
}

pub fn check_multilinear(rmax: usize) -> Result<Check> {
    timed("multilinear", json!({"maxDegree": rmax}), || {
        let counts: Vec<usize> = (1..=rmax).map(freealg::multilinear_count).collect();
        let involutions: Vec<usize> = (1..=rmax)
            .map(|r| {
                crate::shapes::partitions_of(r)
                    .iter()
                    .map(|l| crate::shapes::count_standard(l) as usize)
                    .sum()
            })
            .collect();
        Ok((counts == involutions, json!({"counts": counts, "standardTableaux": involutions})))
    })
}

/// Every verification for one alphabet, with sizes clipped to the guards.
pub fn report_all(m: usize, n: usize, max_degree: usize, q0: &Rational, rel: plactic::RelationSet) -> Result<VerificationReport> {
    let nn = m + n;
    let deg = max_degree as u32;
    let fits = |bound: u128, r: usize| (nn as u128).saturating_pow(r as u32) <= bound;
    let plactic_len = (1..=max_degree.min(4)).rev().find(|&r| fits(plactic::EXHAUSTIVE_BOUND, r)).unwrap_or(1);
    let dims_deg = (0..=max_degree).rev().find(|&r| fits(freealg::IDEAL_BOUND, r)).unwrap_or(0);
    let sw_r = (1..=3).rev().find(|&r| fits(heckerep::COMMUTANT_BOUND, r)).unwrap_or(1);
    let mut checks = vec![
        check_schur_identity(m, deg)?,
        check_hook_identity(m, n, deg)?,
        check_multilinear(5)?,
        check_plactic_classes(m, n, plactic_len, rel)?,
        check_dimensions(m, n, dims_deg, q0)?,
        check_idempotent()?,
    ];
    if fits(heckerep::COMMUTANT_BOUND, 3) {
        checks.push(check_ybe(m, n)?);
        checks.push(check_gamma(m, n, q0)?);
    }
    checks.push(check_schur_weyl(m, n, sw_r)?);
    checks.push(check_gl_relations(m, n)?);
    let params = json!({"m": m, "n": n, "maxDegree": max_degree, "q": format_rational(q0)});
    Ok(VerificationReport::new(params, checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::default_q;

    #[test]
    fn small_report_passes_and_is_deterministic() {
        let a = report_all(1, 1, 3, &default_q(), plactic::RelationSet::Super).unwrap();
        assert!(a.passed(), "{}", a.to_pretty());
        let b = report_all(1, 1, 3, &default_q(), plactic::RelationSet::Super).unwrap();
        assert_eq!(a.without_timing(), b.without_timing());
        assert_eq!(a.to_json()["artifact"], "superplactic-kit");
        assert_eq!(a.to_json()["overall"], "pass");
    }

    #[test]
    fn corrupted_relations_fail() {
        let rep = report_all(2, 1, 3, &default_q(), plactic::RelationSet::FirstFamilyOnly).unwrap();
        assert!(!rep.passed());
    }
}
