//! Checks a knot against the conjecture that a knot is fillable exactly
//! when it is quasipositive and its HOMFLY bound on tb is sharp.
//!
//! The band presentation and the front are taken on trust as the same
//! knot; their HOMFLY polynomials are compared and a mismatch is only
//! reported as a warning.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::braid::{classify_certificate, BandPresentation, Certificate, HierarchyLevel};
use crate::cobordism::{construct_filling, replay_script, verify_trace, Move};
use crate::front::OrientedFront;
use crate::homfly::{homfly, homfly_tb_bound, PlanarDiagram};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AuditError {
    #[error("the band closure has {0} components, expected a knot")]
    BandsNotAKnot(usize),
    #[error("the front has {0} components, expected a knot")]
    FrontNotAKnot(usize),
    #[error("HOMFLY polynomial of the front vanished")]
    ZeroPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum FillingStatus {
    /// Built by pinching an all-switched oriented ruling.
    Constructed {
        births: usize,
        pinches: usize,
        euler: i64,
        tb: i64,
    },
    /// A supplied move script replays to the front and passes every check.
    ScriptVerified {
        steps: usize,
        euler: i64,
        tb: i64,
    },
    MethodFailed {
        reason: String,
    },
    RuledOut {
        reason: String,
    },
}

impl FillingStatus {
    pub fn name(&self) -> &'static str {
        match self {
            FillingStatus::Constructed { .. } => "Constructed",
            FillingStatus::ScriptVerified { .. } => "ScriptVerified",
            FillingStatus::MethodFailed { .. } => "MethodFailed",
            FillingStatus::RuledOut { .. } => "RuledOut",
        }
    }

    fn detail(&self) -> String {
        match self {
            FillingStatus::Constructed { births, pinches, euler, tb } => {
                format!("births={births} pinches={pinches} chi={euler} tb={tb}")
            }
            FillingStatus::ScriptVerified { steps, euler, tb } => format!("steps={steps} chi={euler} tb={tb}"),
            FillingStatus::MethodFailed { reason } | FillingStatus::RuledOut { reason } => reason.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub label: String,
    pub level: HierarchyLevel,
    pub chi4: Option<i64>,
    pub homfly: String,
    pub homfly_bound: i64,
    pub tb: i64,
    pub rot: i64,
    pub bound_sharp: bool,
    pub filling: FillingStatus,
    pub warnings: Vec<String>,
}

impl ConjectureReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Flat `key=value` lines, one field per line.
impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "label={}", self.label)?;
        writeln!(f, "level={}", self.level)?;
        match self.chi4 {
            Some(c) => writeln!(f, "chi4={c}")?,
            None => writeln!(f, "chi4=none")?,
        }
        writeln!(f, "homfly={}", self.homfly)?;
        writeln!(f, "homfly_bound={}", self.homfly_bound)?;
        writeln!(f, "tb={}", self.tb)?;
        writeln!(f, "rot={}", self.rot)?;
        writeln!(f, "bound_sharp={}", self.bound_sharp)?;
        writeln!(f, "filling={}", self.filling.name())?;
        writeln!(f, "filling_detail={}", self.filling.detail())?;
        for w in &self.warnings {
            writeln!(f, "warning={w}")?;
        }
        Ok(())
    }
}

fn check_script(front: &OrientedFront, script: &[Move]) -> Result<FillingStatus, String> {
    let trace = replay_script(script).map_err(|e| format!("script does not replay: {e}"))?;
    let end = trace.end();
    if end.front() != front.front() {
        return Err("script ends at a different front".into());
    }
    let report = verify_trace(&trace, None);
    if let Some(c) = report.checks.iter().find(|c| !c.pass) {
        return Err(format!("script fails {}", c.name));
    }
    Ok(FillingStatus::ScriptVerified { steps: trace.steps.len(), euler: trace.euler, tb: end.tb() })
}

/// Assembles the report. `script` is tried only when the pinching
/// construction fails.
pub fn audit(
    label: &str,
    bands: &BandPresentation,
    front: &OrientedFront,
    script: &[Move],
) -> Result<ConjectureReport, AuditError> {
    let closure = bands.expand();
    let comps = closure.closure_components().1;
    if comps != 1 {
        return Err(AuditError::BandsNotAKnot(comps));
    }
    let front_comps = front.front().component_count();
    if front_comps != 1 {
        return Err(AuditError::FrontNotAKnot(front_comps));
    }

    let level = classify_certificate(Certificate::Bands(bands));
    let chi4 = level.implies(HierarchyLevel::QuasiPositive).then(|| bands.chi4());
    let poly = homfly(&front.to_planar_diagram());
    let bound = homfly_tb_bound(&poly).map_err(|_| AuditError::ZeroPolynomial)?;
    let (tb, rot) = front.classical_invariants();

    let mut warnings = Vec::new();
    if homfly(&PlanarDiagram::from_braid(&closure)) != poly {
        warnings.push("homfly_mismatch: band closure and front have different HOMFLY polynomials".to_string());
    }

    let filling = match chi4 {
        Some(c) if -c != bound => FillingStatus::RuledOut {
            reason: format!(
                "a filling would realise chi4 and make the HOMFLY bound sharp, but -chi4={} differs from bound={bound}",
                -c
            ),
        },
        _ => match construct_filling(front) {
            Ok(t) => FillingStatus::Constructed {
                births: t.births(),
                pinches: t.pinches(),
                euler: t.euler,
                tb: t.end().tb(),
            },
            Err(e) if script.is_empty() => FillingStatus::MethodFailed { reason: e.to_string() },
            Err(e) => check_script(front, script)
                .unwrap_or_else(|s| FillingStatus::MethodFailed { reason: format!("{e}; {s}") }),
        },
    };

    Ok(ConjectureReport {
        label: label.to_string(),
        level,
        chi4,
        homfly: poly.to_string(),
        homfly_bound: bound,
        tb,
        rot,
        bound_sharp: tb == bound,
        filling,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::corpus_get;

    fn run(label: &str) -> ConjectureReport {
        let f = corpus_get(label).unwrap();
        audit(label, &f.bands, &f.front, &f.script).unwrap()
    }

    #[test]
    fn trefoil_report() {
        let r = run("trefoil");
        assert_eq!(r.level, HierarchyLevel::BraidPositive);
        assert_eq!((r.chi4, r.homfly_bound, r.tb, r.bound_sharp), (Some(-1), 1, 1, true));
        assert_eq!(r.filling, FillingStatus::Constructed { births: 2, pinches: 3, euler: -1, tb: 1 });
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn fish_method_fails() {
        let r = run("fish");
        assert_eq!((r.tb, r.homfly_bound, r.bound_sharp), (-2, -1, false));
        assert_eq!(r.filling.name(), "MethodFailed");
    }

    #[test]
    fn mismatch_is_a_warning() {
        let t = corpus_get("trefoil").unwrap();
        let u = corpus_get("unknot").unwrap();
        let r = audit("mixed", &u.bands, &t.front, &[]).unwrap();
        assert_eq!(r.warnings.len(), 1);
        assert!(r.to_string().contains("warning=homfly_mismatch"));
    }

    #[test]
    fn links_are_rejected() {
        let b = BandPresentation::new(2, vec![]).unwrap();
        let u = corpus_get("unknot").unwrap();
        assert_eq!(audit("x", &b, &u.front, &[]), Err(AuditError::BandsNotAKnot(2)));
    }

    #[test]
    fn reports_are_stable() {
        let a = run("trefoil");
        assert_eq!(a.to_string(), run("trefoil").to_string());
        assert_eq!(a.to_json(), run("trefoil").to_json());
        assert!(a.to_string().starts_with("label=trefoil\nlevel=BraidPositive\nchi4=-1\n"));
    }
}
