//! Legendrian fronts encoded as left-to-right event words.
//!
//! Levels count active strands top-down from 1. `L k` opens two strands at
//! positions `k, k+1`, `R k` closes the strands at `k, k+1` and `X k`
//! crosses them. At a crossing the strand running from top-left to
//! bottom-right passes over.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BraidWord;
use crate::homfly::{PlanarDiagram, StrandCrossing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrontError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("event {index} ({event}) is invalid with {active} active strands")]
    SweepViolation { index: usize, event: Event, active: usize },
    #[error("front ends with {active} open strands")]
    Unclosed { active: usize },
    #[error("crossing index {index} out of range ({count} crossings)")]
    NoSuchCrossing { index: usize, count: usize },
    #[error("orientation has {got} left-cusp flags, front has {expected} left cusps")]
    OrientationLength { got: usize, expected: usize },
    #[error("orientation flags disagree along the component through left cusp {cusp}")]
    InconsistentOrientation { cusp: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Event {
    LeftCusp(usize),
    RightCusp(usize),
    Crossing(usize),
}

impl Event {
    pub fn level(self) -> usize {
        match self {
            Event::LeftCusp(k) | Event::RightCusp(k) | Event::Crossing(k) => k,
        }
    }

    pub fn with_level(self, k: usize) -> Event {
        match self {
            Event::LeftCusp(_) => Event::LeftCusp(k),
            Event::RightCusp(_) => Event::RightCusp(k),
            Event::Crossing(_) => Event::Crossing(k),
        }
    }

    /// Change in the number of active strands.
    pub fn delta(self) -> isize {
        match self {
            Event::LeftCusp(_) => 2,
            Event::RightCusp(_) => -2,
            Event::Crossing(_) => 0,
        }
    }

    /// Whether the event can occur with `active` strands present.
    pub fn fits(self, active: usize) -> bool {
        match self {
            Event::LeftCusp(k) => k >= 1 && k <= active + 1,
            Event::RightCusp(k) | Event::Crossing(k) => k >= 1 && k < active,
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Event::LeftCusp(k) => write!(f, "L {k}"),
            Event::RightCusp(k) => write!(f, "R {k}"),
            Event::Crossing(k) => write!(f, "X {k}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Front {
    events: Vec<Event>,
}

/// How a segment ends on one side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum End {
    /// Turns back at a cusp into the given segment.
    Cusp { event: usize, partner: usize },
    /// Continues through a crossing into the given segment.
    Crossing { event: usize, next: usize },
}

/// Strand segments between the events they touch.
#[derive(Clone, Debug)]
pub(crate) struct Segments {
    pub left: Vec<End>,
    pub right: Vec<End>,
    /// `columns[c]`: segments active just before event `c`, top-down.
    pub columns: Vec<Vec<usize>>,
    /// For each event: the segments it touches, `[top, bottom]` on the
    /// left side (crossings, right cusps) or on the right side (left cusps).
    pub touched: Vec<[usize; 2]>,
    /// For crossings: the segments on the right side, `[top, bottom]`.
    pub outgoing: Vec<Option<[usize; 2]>>,
}

impl Segments {
    pub fn len(&self) -> usize {
        self.left.len()
    }
}

impl Front {
    pub fn new(events: Vec<Event>) -> Result<Self, FrontError> {
        let f = Self { events };
        f.validate()?;
        Ok(f)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Sweep check: every event fits the current strand count and the
    /// sweep ends with no strands.
    pub fn validate(&self) -> Result<(), FrontError> {
        let mut active = 0usize;
        for (index, &event) in self.events.iter().enumerate() {
            if !event.fits(active) {
                return Err(FrontError::SweepViolation { index, event, active });
            }
            active = (active as isize + event.delta()) as usize;
        }
        if active != 0 {
            return Err(FrontError::Unclosed { active });
        }
        Ok(())
    }

    /// Active strand counts before each event and after the last one.
    pub fn strand_counts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.events.len() + 1);
        let mut active = 0isize;
        out.push(0);
        for e in &self.events {
            active += e.delta();
            out.push(active as usize);
        }
        out
    }

    /// Event indices of the crossings, in order.
    pub fn crossing_events(&self) -> Vec<usize> {
        self.indices(|e| matches!(e, Event::Crossing(_)))
    }

    pub fn left_cusp_events(&self) -> Vec<usize> {
        self.indices(|e| matches!(e, Event::LeftCusp(_)))
    }

    pub fn right_cusp_events(&self) -> Vec<usize> {
        self.indices(|e| matches!(e, Event::RightCusp(_)))
    }

    fn indices(&self, pred: impl Fn(&Event) -> bool) -> Vec<usize> {
        self.events.iter().enumerate().filter(|(_, e)| pred(e)).map(|(i, _)| i).collect()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossing_events().len()
    }

    pub fn right_cusp_count(&self) -> usize {
        self.right_cusp_events().len()
    }

    /// Disjoint union: `other` is drawn to the right of `self`.
    pub fn disjoint_union(&self, other: &Front) -> Front {
        let mut events = self.events.clone();
        events.extend_from_slice(&other.events);
        Front { events }
    }

    pub(crate) fn segments(&self) -> Segments {
        let n = self.events.len();
        let mut left: Vec<End> = Vec::new();
        let mut right: Vec<Option<End>> = Vec::new();
        let mut active: Vec<usize> = Vec::new();
        let mut columns = Vec::with_capacity(n + 1);
        let mut touched = Vec::with_capacity(n);
        let mut outgoing = vec![None; n];
        for (e, &event) in self.events.iter().enumerate() {
            columns.push(active.clone());
            match event {
                Event::LeftCusp(k) => {
                    let (t, b) = (left.len(), left.len() + 1);
                    left.push(End::Cusp { event: e, partner: b });
                    left.push(End::Cusp { event: e, partner: t });
                    right.push(None);
                    right.push(None);
                    active.splice(k - 1..k - 1, [t, b]);
                    touched.push([t, b]);
                }
                Event::Crossing(k) => {
                    let (ot, ob) = (active[k - 1], active[k]);
                    let (nt, nb) = (left.len(), left.len() + 1);
                    left.push(End::Crossing { event: e, next: ob });
                    left.push(End::Crossing { event: e, next: ot });
                    right.push(None);
                    right.push(None);
                    right[ot] = Some(End::Crossing { event: e, next: nb });
                    right[ob] = Some(End::Crossing { event: e, next: nt });
                    active[k - 1] = nt;
                    active[k] = nb;
                    touched.push([ot, ob]);
                    outgoing[e] = Some([nt, nb]);
                }
                Event::RightCusp(k) => {
                    let (t, b) = (active[k - 1], active[k]);
                    right[t] = Some(End::Cusp { event: e, partner: b });
                    right[b] = Some(End::Cusp { event: e, partner: t });
                    active.drain(k - 1..=k);
                    touched.push([t, b]);
                }
            }
        }
        columns.push(active);
        Segments {
            left,
            right: right.into_iter().map(|r| r.expect("validated fronts close every strand")).collect(),
            columns,
            touched,
            outgoing,
        }
    }

    /// Components as cyclic traversals `(segment, heading right)`, each
    /// starting at its first left cusp on the upper branch heading right.
    pub(crate) fn traversals(&self, segs: &Segments) -> Vec<Vec<(usize, bool)>> {
        let mut seen = vec![false; segs.len()];
        let mut out = Vec::new();
        for (e, ev) in self.events.iter().enumerate() {
            if !matches!(ev, Event::LeftCusp(_)) {
                continue;
            }
            let start = segs.touched[e][0];
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let (mut s, mut rightward) = (start, true);
            loop {
                seen[s] = true;
                comp.push((s, rightward));
                let end = if rightward { segs.right[s] } else { segs.left[s] };
                (s, rightward) = match end {
                    End::Cusp { partner, .. } => (partner, !rightward),
                    End::Crossing { next, .. } => (next, rightward),
                };
                if s == start && rightward {
                    break;
                }
            }
            out.push(comp);
        }
        out
    }

    /// Structural summary of each component.
    pub fn components(&self) -> Vec<FrontComponent> {
        let segs = self.segments();
        let trav = self.traversals(&segs);
        trav.iter()
            .map(|comp| {
                let mut c = FrontComponent::default();
                for &(s, rightward) in comp {
                    c.segments.push(s);
                    let end = if rightward { segs.right[s] } else { segs.left[s] };
                    match end {
                        End::Cusp { event, .. } => {
                            if rightward {
                                c.right_cusps.push(event)
                            } else {
                                c.left_cusps.push(event)
                            }
                        }
                        End::Crossing { event, .. } => c.crossings.push(event),
                    }
                }
                c.left_cusps.sort_unstable();
                c.right_cusps.sort_unstable();
                c.crossings.sort_unstable();
                c
            })
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// For each column (before each event, then after the last), the
    /// component index of every active strand, top-down.
    pub fn column_owners(&self) -> Vec<Vec<usize>> {
        let segs = self.segments();
        let mut owner = vec![0usize; segs.len()];
        for (ci, comp) in self.traversals(&segs).iter().enumerate() {
            for &(s, _) in comp {
                owner[s] = ci;
            }
        }
        segs.columns.iter().map(|col| col.iter().map(|&s| owner[s]).collect()).collect()
    }

    /// Deletes the selected crossings (by crossing ordinal), smoothing
    /// each horizontally.
    pub fn zero_resolution(&self, crossings: &[usize]) -> Result<Front, FrontError> {
        let xs = self.crossing_events();
        let mut drop = vec![false; self.events.len()];
        for &c in crossings {
            let e = *xs.get(c).ok_or(FrontError::NoSuchCrossing { index: c, count: xs.len() })?;
            drop[e] = true;
        }
        let events = self.events.iter().zip(&drop).filter(|(_, &d)| !d).map(|(e, _)| *e).collect();
        Front::new(events)
    }

    /// Text dump of the sweep, one column per event. Debugging aid only.
    pub fn sketch(&self) -> String {
        let counts = self.strand_counts();
        let mut out = String::new();
        for (i, e) in self.events.iter().enumerate() {
            out.push_str(&format!("{i:>3} {e:<6} {}\n", "|".repeat(counts[i + 1])));
        }
        out
    }

    /// Legendrian closure of a braid: nested left cusps, the braid on the
    /// top strands, then nested right cusps. Negative letters use a zig-zag
    /// so the crossing is met by oppositely oriented strands.
    pub fn from_braid(word: &BraidWord) -> OrientedFront {
        let n = word.strands();
        let mut events: Vec<Event> = (1..=n).map(Event::LeftCusp).collect();
        for &l in word.letters() {
            let i = l.unsigned_abs() as usize;
            if l > 0 {
                events.push(Event::Crossing(i));
            } else {
                events.extend([Event::LeftCusp(i), Event::Crossing(i + 1), Event::RightCusp(i + 2)]);
            }
        }
        events.extend((1..=n).rev().map(Event::RightCusp));
        let front = Front::new(events).expect("braid closures sweep correctly");
        OrientedFront::canonical(front)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrontComponent {
    pub segments: Vec<usize>,
    pub left_cusps: Vec<usize>,
    pub right_cusps: Vec<usize>,
    /// Event indices of incident crossings; self-crossings appear twice.
    pub crossings: Vec<usize>,
}

impl FrontComponent {
    /// One left cusp, one right cusp and no crossings.
    pub fn is_simple_eye(&self) -> bool {
        self.left_cusps.len() == 1 && self.right_cusps.len() == 1 && self.crossings.is_empty()
    }
}

impl fmt::Display for Front {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.events {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Parse the `.front` format: one `L k`, `R k` or `X k` per line. A `/`
/// also separates events, so `"L 1 / R 1"` is accepted.
pub fn parse_front(text: &str) -> Result<Front, FrontError> {
    let mut events = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        for part in line.split('/') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let bad = |msg: String| FrontError::Parse { line: i + 1, msg };
            // `L 1` or the compact `L1`
            let (kind, rest) = part.split_at(part.chars().next().map_or(0, char::len_utf8));
            let mut toks = rest.split_whitespace();
            let level: usize =
                toks.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad(format!("expected a level in `{part}`")))?;
            if toks.next().is_some() {
                return Err(bad(format!("trailing tokens in `{part}`")));
            }
            events.push(match kind {
                "L" => Event::LeftCusp(level),
                "R" => Event::RightCusp(level),
                "X" => Event::Crossing(level),
                other => return Err(bad(format!("unknown event `{other}`"))),
            });
        }
    }
    Front::new(events)
}

impl FromStr for Front {
    type Err = FrontError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_front(s)
    }
}

/// A front with an orientation, recorded per left cusp: `true` when the
/// component passes the cusp moving downward (arriving along the upper
/// branch heading left).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrientedFront {
    front: Front,
    left_cusp_down: Vec<bool>,
}

impl OrientedFront {
    pub fn new(front: Front, left_cusp_down: Vec<bool>) -> Result<Self, FrontError> {
        let ls = front.left_cusp_events();
        if ls.len() != left_cusp_down.len() {
            return Err(FrontError::OrientationLength { got: left_cusp_down.len(), expected: ls.len() });
        }
        let of = Self { front, left_cusp_down };
        of.headings()?;
        Ok(of)
    }

    /// Every component oriented so that it passes its first left cusp
    /// moving upward.
    pub fn canonical(front: Front) -> Self {
        let n = front.left_cusp_events().len();
        Self::with_component_orientation(front, |_| false, n)
    }

    /// Orients component `i` (ordered by first left cusp) downward at its
    /// first left cusp iff `down(i)`.
    pub fn from_component_flags(front: Front, flags: &[bool]) -> Self {
        let n = front.left_cusp_events().len();
        Self::with_component_orientation(front, |i| flags.get(i).copied().unwrap_or(false), n)
    }

    fn with_component_orientation(front: Front, down: impl Fn(usize) -> bool, n: usize) -> Self {
        let segs = front.segments();
        let trav = front.traversals(&segs);
        let ls = front.left_cusp_events();
        let mut flags = vec![false; n];
        for (ci, comp) in trav.iter().enumerate() {
            // traversal starts heading right on the upper branch of its
            // first left cusp, i.e. moving upward through that cusp
            let reverse = down(ci);
            let rightward_of: std::collections::HashMap<usize, bool> =
                comp.iter().map(|&(s, r)| (s, r ^ reverse)).collect();
            for (li, &e) in ls.iter().enumerate() {
                let top = segs.touched[e][0];
                if let Some(&r) = rightward_of.get(&top) {
                    flags[li] = !r;
                }
            }
        }
        Self { front, left_cusp_down: flags }
    }

    pub fn front(&self) -> &Front {
        &self.front
    }

    pub fn left_cusp_down(&self) -> &[bool] {
        &self.left_cusp_down
    }

    pub fn into_front(self) -> Front {
        self.front
    }

    /// Reverses every component.
    pub fn reversed(&self) -> Self {
        Self { front: self.front.clone(), left_cusp_down: self.left_cusp_down.iter().map(|d| !d).collect() }
    }

    /// Per-segment heading (`true` = rightward), checking that the flags
    /// agree along every component.
    pub(crate) fn headings_with(&self, segs: &Segments) -> Result<Vec<bool>, FrontError> {
        let ls = self.front.left_cusp_events();
        let trav = self.front.traversals(segs);
        let mut heading = vec![false; segs.len()];
        let cusp_of_top: std::collections::HashMap<usize, usize> =
            ls.iter().enumerate().map(|(li, &e)| (segs.touched[e][0], li)).collect();
        for comp in &trav {
            // decide the reversal from the first flagged cusp met
            let mut reverse = None;
            for &(s, r) in comp {
                if let Some(&li) = cusp_of_top.get(&s) {
                    let want_right = !self.left_cusp_down[li];
                    let rev = r != want_right;
                    match reverse {
                        None => reverse = Some(rev),
                        Some(prev) if prev != rev => return Err(FrontError::InconsistentOrientation { cusp: li }),
                        _ => {}
                    }
                }
            }
            let rev = reverse.unwrap_or(false);
            for &(s, r) in comp {
                heading[s] = r ^ rev;
            }
        }
        Ok(heading)
    }

    fn headings(&self) -> Result<Vec<bool>, FrontError> {
        self.headings_with(&self.front.segments())
    }

    /// Sign of each crossing, in crossing order. Crossings whose strands
    /// point the same way horizontally are positive.
    pub fn crossing_signs(&self) -> Vec<i8> {
        let segs = self.front.segments();
        let h = self.headings_with(&segs).expect("validated orientation");
        self.front
            .crossing_events()
            .into_iter()
            .map(|e| {
                let [t, b] = segs.touched[e];
                if h[t] == h[b] {
                    1
                } else {
                    -1
                }
            })
            .collect()
    }

    pub fn writhe(&self) -> i64 {
        self.crossing_signs().iter().map(|&s| s as i64).sum()
    }

    /// Thurston–Bennequin number: writhe minus right cusps.
    pub fn tb(&self) -> i64 {
        self.writhe() - self.front.right_cusp_count() as i64
    }

    /// Rotation number: half of (downward cusps − upward cusps).
    pub fn rot(&self) -> i64 {
        let segs = self.front.segments();
        let h = self.headings_with(&segs).expect("validated orientation");
        let mut twice = 0i64;
        for (e, ev) in self.front.events.iter().enumerate() {
            let top = segs.touched[e][0];
            let down = match ev {
                Event::LeftCusp(_) => !h[top],
                Event::RightCusp(_) => h[top],
                Event::Crossing(_) => continue,
            };
            twice += if down { 1 } else { -1 };
        }
        twice / 2
    }

    pub fn classical_invariants(&self) -> (i64, i64) {
        (self.tb(), self.rot())
    }

    /// `(tb, rot)` of each component taken on its own, ordered like
    /// [`Front::components`].
    pub fn component_invariants(&self) -> Vec<(i64, i64)> {
        let segs = self.front.segments();
        let h = self.headings_with(&segs).expect("validated orientation");
        let comps = self.front.components();
        let mut owner = vec![0usize; segs.len()];
        for (ci, c) in comps.iter().enumerate() {
            for &s in &c.segments {
                owner[s] = ci;
            }
        }
        let mut out = vec![(0i64, 0i64); comps.len()];
        for (e, ev) in self.front.events.iter().enumerate() {
            let [t, b] = segs.touched[e];
            let ci = owner[t];
            match ev {
                Event::Crossing(_) => {
                    if owner[b] == ci {
                        out[ci].0 += if h[t] == h[b] { 1 } else { -1 };
                    }
                }
                Event::RightCusp(_) => {
                    out[ci].0 -= 1;
                    out[ci].1 += if h[t] { 1 } else { -1 };
                }
                Event::LeftCusp(_) => out[ci].1 += if h[t] { -1 } else { 1 },
            }
        }
        out.into_iter().map(|(tb, r2)| (tb, r2 / 2)).collect()
    }

    /// Planar diagram of the underlying smooth link; cusps become smooth
    /// turns.
    pub fn to_planar_diagram(&self) -> PlanarDiagram {
        let segs = self.front.segments();
        let h = self.headings_with(&segs).expect("validated orientation");
        let mut crossings = Vec::new();
        let mut joins = Vec::new();
        for (e, ev) in self.front.events.iter().enumerate() {
            let [t, b] = segs.touched[e];
            match ev {
                Event::LeftCusp(_) | Event::RightCusp(_) => joins.push((t, b)),
                Event::Crossing(_) => {
                    let [nt, nb] = segs.outgoing[e].expect("crossings have outgoing segments");
                    // over: top-left to bottom-right; under: bottom-left to top-right
                    let (over_in, over_out) = if h[t] { (t, nb) } else { (nb, t) };
                    let (under_in, under_out) = if h[b] { (b, nt) } else { (nt, b) };
                    let sign = if h[t] == h[b] { 1 } else { -1 };
                    crossings.push(StrandCrossing { over_in, over_out, under_in, under_out, sign });
                }
            }
        }
        let loose: Vec<usize> = (0..segs.len()).collect();
        PlanarDiagram::from_strands(&crossings, &joins, &loose).expect("fronts give valid diagrams")
    }

    /// Both conditions of the positive-link normal form: every crossing
    /// has both strands heading left, and the 0-resolution of all
    /// crossings is a union of eyes (one left and one right cusp each).
    pub fn check_tanaka_form(&self) -> bool {
        let segs = self.front.segments();
        let h = self.headings_with(&segs).expect("validated orientation");
        let all_left = self.front.crossing_events().iter().all(|&e| {
            let [t, b] = segs.touched[e];
            !h[t] && !h[b]
        });
        if !all_left {
            return false;
        }
        let all: Vec<usize> = (0..self.front.crossing_count()).collect();
        self.front
            .zero_resolution(&all)
            .map(|r| r.components().iter().all(FrontComponent::is_simple_eye))
            .unwrap_or(false)
    }
}

/// Searches the orientations of `front` (up to 2^components, capped at 12
/// components) for one in the positive-link normal form.
pub fn tanaka_orientation(front: &Front) -> Option<OrientedFront> {
    let k = front.component_count();
    if k > 12 {
        return None;
    }
    (0..1u32 << k).find_map(|mask| {
        let flags: Vec<bool> = (0..k).map(|i| mask >> i & 1 == 1).collect();
        let of = OrientedFront::from_component_flags(front.clone(), &flags);
        of.check_tanaka_form().then_some(of)
    })
}
