use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::moves::{apply_move, Move, MoveError};
use crate::braid::BandPresentation;
use crate::front::{Front, OrientedFront};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub mv: Move,
    pub front: OrientedFront,
}

/// A decomposable cobordism from the empty front, one move at a time.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FillingTrace {
    pub steps: Vec<TraceStep>,
    /// Euler characteristic as recorded; [`verify_trace`] recounts it.
    pub euler: i64,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("step {step} ({mv}): {source}")]
pub struct ReplayError {
    pub step: usize,
    pub mv: Move,
    pub source: MoveError,
}

impl Default for FillingTrace {
    fn default() -> Self {
        Self::new()
    }
}

impl FillingTrace {
    pub fn new() -> Self {
        Self { steps: Vec::new(), euler: 0 }
    }

    pub fn end(&self) -> OrientedFront {
        self.steps.last().map(|s| s.front.clone()).unwrap_or_else(|| OrientedFront::canonical(Front::empty()))
    }

    pub fn push(&mut self, mv: Move) -> Result<(), ReplayError> {
        let front =
            apply_move(&self.end(), &mv).map_err(|source| ReplayError { step: self.steps.len() + 1, mv, source })?;
        self.euler += mv.euler();
        self.steps.push(TraceStep { mv, front });
        Ok(())
    }

    pub fn moves(&self) -> Vec<Move> {
        self.steps.iter().map(|s| s.mv).collect()
    }

    fn count(&self, pred: impl Fn(&Move) -> bool) -> usize {
        self.steps.iter().filter(|s| pred(&s.mv)).count()
    }

    pub fn births(&self) -> usize {
        self.count(|m| matches!(m, Move::Birth { .. }))
    }

    pub fn pinches(&self) -> usize {
        self.count(|m| matches!(m, Move::Pinch { .. }))
    }

    pub fn saddles(&self) -> usize {
        self.count(|m| matches!(m, Move::Saddle { .. }))
    }

    /// Genus of the surface when the upper end is a knot: `χ = 1 − 2g`.
    pub fn genus(&self) -> Option<i64> {
        let knot = self.end().front().component_count() == 1;
        (knot && (1 - self.euler) % 2 == 0).then_some((1 - self.euler) / 2)
    }

    /// Stacks `other` on top, provided it starts where `self` ends; the
    /// moves of `other` are replayed on the end of `self`.
    pub fn stacked(&self, other: &[Move]) -> Result<FillingTrace, ReplayError> {
        let mut t = self.clone();
        for &m in other {
            t.push(m)?;
        }
        Ok(t)
    }
}

impl fmt::Display for FillingTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut chi = 0;
        for (i, s) in self.steps.iter().enumerate() {
            chi += s.mv.euler();
            writeln!(f, "step={} move={} chi={chi}", i + 1, s.mv)?;
        }
        write!(f, "{}", self.end().front())
    }
}

/// Replays a script from the empty front.
pub fn replay_script(moves: &[Move]) -> Result<FillingTrace, ReplayError> {
    FillingTrace::new().stacked(moves)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceReport {
    pub checks: Vec<Check>,
    pub euler: i64,
    pub tb: i64,
    pub genus: Option<i64>,
}

impl TraceReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for TraceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{}={} {}", c.name, if c.pass { "pass" } else { "fail" }, c.detail)?;
        }
        writeln!(f, "chi={}", self.euler)?;
        writeln!(f, "tb={}", self.tb)?;
        match self.genus {
            Some(g) => writeln!(f, "genus={g}"),
            None => writeln!(f, "genus=none"),
        }
    }
}

/// Re-checks a trace: Euler bookkeeping, step-by-step replay, validity of
/// the end front, `tb = −χ` for knots and, given bands, `χ = n − k`.
pub fn verify_trace(trace: &FillingTrace, bands: Option<&BandPresentation>) -> TraceReport {
    let mut checks = Vec::new();
    let mut add = |name: &str, pass: bool, detail: String| checks.push(Check { name: name.into(), pass, detail });

    let counted = trace.births() as i64 - (trace.pinches() + trace.saddles()) as i64;
    add(
        "chi_bookkeeping",
        counted == trace.euler,
        format!(
            "births={} pinches={} saddles={} recorded={}",
            trace.births(),
            trace.pinches(),
            trace.saddles(),
            trace.euler
        ),
    );

    let mut prev = OrientedFront::canonical(Front::empty());
    let mut bad_step = None;
    for (i, s) in trace.steps.iter().enumerate() {
        match apply_move(&prev, &s.mv) {
            Ok(f) if f == s.front => prev = f,
            _ => {
                bad_step = Some(i + 1);
                break;
            }
        }
    }
    add("steps_replay", bad_step.is_none(), bad_step.map(|s| format!("step {s} disagrees")).unwrap_or_default());

    let end = trace.end();
    add("end_valid", end.front().validate().is_ok(), String::new());

    let tb = end.tb();
    if end.front().component_count() == 1 {
        add("tb_equals_minus_chi", tb == -trace.euler, format!("tb={tb} chi={}", trace.euler));
    }
    if let Some(b) = bands {
        let chi4 = b.chi4();
        add("chi_equals_chi4", chi4 == trace.euler, format!("chi4={chi4} chi={}", trace.euler));
    }
    TraceReport { checks, euler: trace.euler, tb, genus: trace.genus() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cobordism::parse_moves;

    #[test]
    fn replay_birth() {
        let t = replay_script(&[Move::Birth { column: 0, level: 1, down: false }]).unwrap();
        assert_eq!(t.euler, 1);
        assert_eq!(t.end().tb(), -1);
        assert_eq!(t.genus(), Some(0));
        assert_eq!(t.to_string(), "step=1 move=birth 1 0 chi=1\nL 1\nR 1\n");
        assert!(verify_trace(&t, None).passed());
    }

    #[test]
    fn replay_reports_failing_step() {
        let moves = parse_moves("birth 1\nsaddle 0 1").unwrap();
        let err = replay_script(&moves).unwrap_err();
        assert_eq!(err.step, 2);
    }

    #[test]
    fn tampering_is_detected() {
        let moves = parse_moves("birth 1\nbirth 1 2\nsaddle 1 1").unwrap();
        let mut t = replay_script(&moves).unwrap();
        assert_eq!((t.euler, t.end().tb()), (1, -1));
        assert!(verify_trace(&t, None).passed());
        t.euler = 3;
        let r = verify_trace(&t, None);
        assert!(!r.check("chi_bookkeeping").unwrap().pass);
        assert!(!r.passed());
    }

    #[test]
    fn chi4_check_uses_bands() {
        let t = replay_script(&[Move::Birth { column: 0, level: 1, down: false }]).unwrap();
        let b = BandPresentation::new(1, vec![]).unwrap();
        assert!(verify_trace(&t, Some(&b)).check("chi_equals_chi4").unwrap().pass);
        let b2 = BandPresentation::new(2, vec![]).unwrap();
        assert!(!verify_trace(&t, Some(&b2)).check("chi_equals_chi4").unwrap().pass);
    }
}
