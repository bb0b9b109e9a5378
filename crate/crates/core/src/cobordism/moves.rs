use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::front::{Event, Front, OrientedFront};

/// Elementary cobordism pieces, read upward from the lower front to the
/// upper one. `column` is an event index in the lower front.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    /// 0-handle: a disjoint eye `L level, R level` inserted at `column`,
    /// oriented downward at its left cusp iff `down`.
    Birth { column: usize, level: usize, down: bool },
    /// 1-handle fused with the isotopy that makes it a crossing: inserts
    /// a positive crossing `X level` at `column`.
    Pinch { column: usize, level: usize },
    /// 1-handle: deletes the adjacent pair `R level, L level` starting at
    /// `column`.
    Saddle { column: usize, level: usize },
    /// Zig-zag on the strand at `level`, with its loop above or below.
    R1 { column: usize, level: usize, above: bool, add: bool },
    /// A strand above or below the cusp at `level` passing through it.
    R2 { column: usize, level: usize, cusp: CuspSide, above: bool, add: bool },
    /// `X k, X k+1, X k` and `X k+1, X k, X k+1` swapped, `k = level`.
    R3 { column: usize, level: usize },
    /// Commutes the non-interacting events at `column` and `column + 1`.
    /// `levels` fixes the new levels (first, second) when several
    /// placements are possible; otherwise the lowest levels are used.
    Exchange { column: usize, levels: Option<(usize, usize)> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CuspSide {
    Left,
    Right,
}

impl Move {
    /// Contribution to the Euler characteristic of the cobordism.
    pub fn euler(&self) -> i64 {
        match self {
            Move::Birth { .. } => 1,
            Move::Pinch { .. } | Move::Saddle { .. } => -1,
            _ => 0,
        }
    }

    pub fn is_isotopy(&self) -> bool {
        self.euler() == 0
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("pattern mismatch at column {column}: {detail}")]
    PatternMismatch { column: usize, detail: String },
}

fn mismatch(column: usize, detail: impl Into<String>) -> MoveError {
    MoveError::PatternMismatch { column, detail: detail.into() }
}

/// Replaces `old_len` events at `start` by `new`, carrying the orientation
/// across from the unchanged columns. Components living entirely inside
/// the window are oriented downward at their first left cusp iff
/// `fresh_down`.
pub(crate) fn rewrite(
    of: &OrientedFront,
    start: usize,
    old_len: usize,
    new: &[Event],
    fresh_down: bool,
) -> Result<OrientedFront, MoveError> {
    let old = of.front();
    if start + old_len > old.events().len() {
        return Err(mismatch(start, "window runs past the end of the front"));
    }
    let mut events = old.events()[..start].to_vec();
    events.extend_from_slice(new);
    events.extend_from_slice(&old.events()[start + old_len..]);
    let front = Front::new(events).map_err(|e| mismatch(start, format!("result is not a front: {e}")))?;

    let old_segs = old.segments();
    let old_h = of.headings_with(&old_segs).expect("oriented fronts are consistent");
    let segs = front.segments();
    let trav = front.traversals(&segs);
    let mut place = vec![(0usize, false); segs.len()];
    for (ci, comp) in trav.iter().enumerate() {
        for &(s, r) in comp {
            place[s] = (ci, r);
        }
    }
    let (b_old, b_new) = (start + old_len, start + new.len());
    let mut reverse: Vec<Option<bool>> = vec![None; trav.len()];
    for (c_new, col) in segs.columns.iter().enumerate() {
        // a seam column of an empty replacement matches two old columns
        let before = (c_new <= start).then_some(c_new);
        let after = (c_new >= b_new).then(|| c_new - b_new + b_old);
        for (p, &s, c_old) in
            before.into_iter().chain(after).flat_map(|c| col.iter().enumerate().map(move |(p, s)| (p, s, c)))
        {
            let want = old_h[old_segs.columns[c_old][p]];
            let (ci, r) = place[s];
            let rev = r != want;
            match reverse[ci] {
                None => reverse[ci] = Some(rev),
                Some(prev) if prev != rev => return Err(mismatch(start, "orientations do not match across the move")),
                _ => {}
            }
        }
    }
    let flags = front
        .left_cusp_events()
        .into_iter()
        .map(|e| {
            let (ci, r) = place[segs.touched[e][0]];
            let heading = r ^ reverse[ci].unwrap_or(fresh_down);
            !heading
        })
        .collect();
    Ok(OrientedFront::new(front, flags).expect("transferred orientation is consistent"))
}

fn expect_events(f: &Front, column: usize, pattern: &[Event]) -> Result<(), MoveError> {
    let ev = f.events();
    let found = ev.get(column..column + pattern.len());
    if found != Some(pattern) {
        let show = |s: &[Event]| s.iter().map(Event::to_string).collect::<Vec<_>>().join(", ");
        let got = found.map(show).unwrap_or_else(|| "end of front".into());
        return Err(mismatch(column, format!("expected [{}], found [{got}]", show(pattern))));
    }
    Ok(())
}

fn r1_pattern(level: usize, above: bool) -> [Event; 3] {
    if above {
        [Event::LeftCusp(level), Event::Crossing(level + 1), Event::RightCusp(level)]
    } else {
        [Event::LeftCusp(level + 1), Event::Crossing(level), Event::RightCusp(level + 1)]
    }
}

fn r2_pattern(level: usize, cusp: CuspSide, above: bool) -> Option<([Event; 1], [Event; 3])> {
    let j = level;
    if above && j < 2 {
        return None;
    }
    Some(match (cusp, above) {
        (CuspSide::Left, true) => {
            ([Event::LeftCusp(j)], [Event::LeftCusp(j - 1), Event::Crossing(j), Event::Crossing(j - 1)])
        }
        (CuspSide::Left, false) => {
            ([Event::LeftCusp(j)], [Event::LeftCusp(j + 1), Event::Crossing(j), Event::Crossing(j + 1)])
        }
        (CuspSide::Right, true) => {
            ([Event::RightCusp(j)], [Event::Crossing(j - 1), Event::Crossing(j), Event::RightCusp(j - 1)])
        }
        (CuspSide::Right, false) => {
            ([Event::RightCusp(j)], [Event::Crossing(j + 1), Event::Crossing(j), Event::RightCusp(j + 1)])
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Label {
    Input(usize),
    Born(usize, bool),
}

/// Output order, cusp joins and crossings (over, under).
type Signature = (Vec<Label>, Vec<[Label; 2]>, Vec<[Label; 2]>);

/// What a run of events does to the strands passing through it. Born
/// strands are named by the event (`ids`) that created them.
fn tangle_signature(inputs: usize, events: &[(usize, Event)]) -> Option<Signature> {
    let mut state: Vec<Label> = (0..inputs).map(Label::Input).collect();
    let mut joins = Vec::new();
    let mut crossings = Vec::new();
    for &(id, ev) in events {
        if !ev.fits(state.len()) {
            return None;
        }
        match ev {
            Event::LeftCusp(k) => {
                state.splice(k - 1..k - 1, [Label::Born(id, true), Label::Born(id, false)]);
            }
            Event::RightCusp(k) => {
                let mut pair = [state[k - 1], state[k]];
                pair.sort();
                joins.push(pair);
                state.drain(k - 1..=k);
            }
            Event::Crossing(k) => {
                crossings.push([state[k - 1], state[k]]);
                state.swap(k - 1, k);
            }
        }
    }
    joins.sort();
    crossings.sort();
    Some((state, joins, crossings))
}

/// The two events at `column`, `column + 1` in swapped order with their
/// levels adjusted, when that is a planar isotopy.
fn exchanged(f: &Front, column: usize, levels: Option<(usize, usize)>) -> Result<[Event; 2], MoveError> {
    let ev = f.events();
    if column + 1 >= ev.len() {
        return Err(mismatch(column, "exchange needs two events"));
    }
    let (e1, e2) = (ev[column], ev[column + 1]);
    let m = f.strand_counts()[column];
    let target = tangle_signature(m, &[(0, e1), (1, e2)]).expect("events of a valid front fit");
    let max = m + 3;
    let candidates: Vec<(usize, usize)> = match levels {
        Some(l) => vec![l],
        None => (1..=max).flat_map(|k2| (1..=max).map(move |k1| (k2, k1))).collect(),
    };
    for (k2, k1) in candidates {
        let (a, b) = (e2.with_level(k2), e1.with_level(k1));
        if tangle_signature(m, &[(1, a), (0, b)]).as_ref() == Some(&target) {
            return Ok([a, b]);
        }
    }
    Err(mismatch(column, format!("events {e1} and {e2} interact and cannot be exchanged")))
}

/// Applies a move upward.
pub fn apply_move(of: &OrientedFront, mv: &Move) -> Result<OrientedFront, MoveError> {
    let f = of.front();
    match *mv {
        Move::Birth { column, level, down } => {
            if column > f.events().len() {
                return Err(mismatch(column, "column past the end of the front"));
            }
            rewrite(of, column, 0, &[Event::LeftCusp(level), Event::RightCusp(level)], down)
        }
        Move::Pinch { column, level } => {
            if column > f.events().len() {
                return Err(mismatch(column, "column past the end of the front"));
            }
            rewrite(of, column, 0, &[Event::Crossing(level)], false)
                .map_err(|_| mismatch(column, format!("no co-oriented strands at levels {level}, {}", level + 1)))
        }
        Move::Saddle { column, level } => {
            expect_events(f, column, &[Event::RightCusp(level), Event::LeftCusp(level)])?;
            rewrite(of, column, 2, &[], false).map_err(|_| mismatch(column, "the 1-handle would not be oriented"))
        }
        Move::R1 { column, level, above, add } => {
            let pat = r1_pattern(level, above);
            if add {
                if level == 0 || level > f.strand_counts().get(column).copied().unwrap_or(0) {
                    return Err(mismatch(column, format!("no strand at level {level}")));
                }
                rewrite(of, column, 0, &pat, false)
            } else {
                expect_events(f, column, &pat)?;
                rewrite(of, column, 3, &[], false)
            }
        }
        Move::R2 { column, level, cusp, above, add } => {
            let (single, triple) =
                r2_pattern(level, cusp, above).ok_or_else(|| mismatch(column, "no strand above level 1"))?;
            if add {
                expect_events(f, column, &single)?;
                rewrite(of, column, 1, &triple, false)
            } else {
                expect_events(f, column, &triple)?;
                rewrite(of, column, 3, &single, false)
            }
        }
        Move::R3 { column, level } => {
            let (x, y) = (Event::Crossing(level), Event::Crossing(level + 1));
            if expect_events(f, column, &[x, y, x]).is_ok() {
                rewrite(of, column, 3, &[y, x, y], false)
            } else {
                expect_events(f, column, &[y, x, y])?;
                rewrite(of, column, 3, &[x, y, x], false)
            }
        }
        Move::Exchange { column, levels } => {
            let pair = exchanged(f, column, levels)?;
            rewrite(of, column, 2, &pair, false)
        }
    }
}

/// Downward pinch: deletes the positive crossing with the given ordinal.
pub fn pinch_down(of: &OrientedFront, crossing: usize) -> Result<OrientedFront, MoveError> {
    let xs = of.front().crossing_events();
    let &e = xs.get(crossing).ok_or_else(|| mismatch(0, format!("no crossing #{crossing}")))?;
    if of.crossing_signs()[crossing] < 0 {
        return Err(mismatch(e, format!("crossing #{crossing} is negative")));
    }
    rewrite(of, e, 1, &[], false)
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |above: bool| if above { "above" } else { "below" };
        let mode = |add: bool| if add { "add" } else { "remove" };
        match *self {
            Move::Birth { column, level, down } => {
                write!(f, "birth {level} {column}{}", if down { " down" } else { "" })
            }
            Move::Pinch { column, level } => write!(f, "pinch {column} {level}"),
            Move::Saddle { column, level } => write!(f, "saddle {column} {level}"),
            Move::R1 { column, level, above, add } => {
                write!(f, "r1 {} {column} {level} {}", mode(add), side(above))
            }
            Move::R2 { column, level, cusp, above, add } => {
                let c = match cusp {
                    CuspSide::Left => "left",
                    CuspSide::Right => "right",
                };
                write!(f, "r2 {} {column} {level} {c} {}", mode(add), side(above))
            }
            Move::R3 { column, level } => write!(f, "r3 {column} {level}"),
            Move::Exchange { column, levels: None } => write!(f, "xchg {column}"),
            Move::Exchange { column, levels: Some((a, b)) } => write!(f, "xchg {column} {a} {b}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct MovesParseError {
    pub line: usize,
    pub msg: String,
}

impl FromStr for Move {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        let num = |i: usize| -> Result<usize, String> {
            toks.get(i)
                .ok_or(format!("missing argument {i} in `{s}`"))?
                .parse()
                .map_err(|_| format!("bad number in `{s}`"))
        };
        let word = |i: usize, yes: &str, no: &str| -> Result<bool, String> {
            match toks.get(i) {
                Some(t) if *t == yes => Ok(true),
                Some(t) if *t == no => Ok(false),
                _ => Err(format!("expected `{yes}` or `{no}` in `{s}`")),
            }
        };
        let arity =
            |n: usize| if toks.len() == n { Ok(()) } else { Err(format!("wrong number of arguments in `{s}`")) };
        let mv = match toks.first().copied() {
            Some("birth") => {
                let down = toks.last() == Some(&"down");
                let args = toks.len() - usize::from(down);
                let column = match args {
                    2 => 0,
                    3 => num(2)?,
                    _ => return Err(format!("wrong number of arguments in `{s}`")),
                };
                Move::Birth { column, level: num(1)?, down }
            }
            Some("pinch") => {
                arity(3)?;
                Move::Pinch { column: num(1)?, level: num(2)? }
            }
            Some("saddle") => {
                arity(3)?;
                Move::Saddle { column: num(1)?, level: num(2)? }
            }
            Some("r1") => {
                arity(5)?;
                Move::R1 {
                    add: word(1, "add", "remove")?,
                    column: num(2)?,
                    level: num(3)?,
                    above: word(4, "above", "below")?,
                }
            }
            Some("r2") => {
                arity(6)?;
                let left = word(4, "left", "right")?;
                Move::R2 {
                    add: word(1, "add", "remove")?,
                    column: num(2)?,
                    level: num(3)?,
                    cusp: if left { CuspSide::Left } else { CuspSide::Right },
                    above: word(5, "above", "below")?,
                }
            }
            Some("r3") => {
                arity(3)?;
                Move::R3 { column: num(1)?, level: num(2)? }
            }
            Some("xchg") => match toks.len() {
                2 => Move::Exchange { column: num(1)?, levels: None },
                4 => Move::Exchange { column: num(1)?, levels: Some((num(2)?, num(3)?)) },
                _ => return Err(format!("wrong number of arguments in `{s}`")),
            },
            Some(other) => return Err(format!("unknown move `{other}`")),
            None => return Err("empty move".into()),
        };
        Ok(mv)
    }
}

/// Parses a `.moves` script: one move per line, `#` comments allowed.
pub fn parse_moves(text: &str) -> Result<Vec<Move>, MovesParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(line.parse().map_err(|msg| MovesParseError { line: i + 1, msg })?);
    }
    Ok(out)
}

/// Renders a script in `.moves` format.
pub fn format_moves(moves: &[Move]) -> String {
    moves.iter().map(|m| format!("{m}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::parse_front;

    fn canon(s: &str) -> OrientedFront {
        OrientedFront::canonical(parse_front(s).unwrap())
    }

    fn empty() -> OrientedFront {
        OrientedFront::canonical(Front::empty())
    }

    #[test]
    fn birth_on_empty_front() {
        let u = apply_move(&empty(), &Move::Birth { column: 0, level: 1, down: false }).unwrap();
        assert_eq!(u.front(), &parse_front("L 1 / R 1").unwrap());
        assert_eq!(u.tb(), -1);
        let d = apply_move(&empty(), &Move::Birth { column: 0, level: 1, down: true }).unwrap();
        assert_eq!(d.left_cusp_down(), &[true]);
        assert!(apply_move(&empty(), &Move::Birth { column: 0, level: 2, down: false }).is_err());
    }

    #[test]
    fn pinch_down_on_trefoil() {
        let t = canon("L 1 / L 2 / X 1 / X 1 / X 1 / R 2 / R 1");
        let p = pinch_down(&t, 1).unwrap();
        assert_eq!(p.front().crossing_count(), 2);
        assert_eq!(p.tb(), 0);
        let up = apply_move(&p, &Move::Pinch { column: 3, level: 1 }).unwrap();
        assert_eq!(up, t);
    }

    #[test]
    fn pinch_needs_co_oriented_strands() {
        let eye = canon("L 1 / R 1");
        assert!(matches!(
            apply_move(&eye, &Move::Pinch { column: 1, level: 1 }),
            Err(MoveError::PatternMismatch { .. })
        ));
        assert!(pinch_down(&canon("L 1 / X 1 / R 1"), 0).is_err());
    }

    #[test]
    fn saddle_joins_two_eyes() {
        let two = canon("L 1 / R 1 / L 1 / R 1");
        let one = apply_move(&two, &Move::Saddle { column: 1, level: 1 }).unwrap();
        assert_eq!(one.front(), &parse_front("L 1 / R 1").unwrap());
        assert_eq!(one.tb(), two.tb() + 1);
        // opposite eyes would give a non-orientable band
        let flipped = OrientedFront::from_component_flags(two.front().clone(), &[false, true]);
        assert!(apply_move(&flipped, &Move::Saddle { column: 1, level: 1 }).is_err());
        assert!(apply_move(&two, &Move::Saddle { column: 0, level: 1 }).is_err());
    }

    #[test]
    fn reidemeister_moves_preserve_invariants() {
        let eye = canon("L 1 / R 1");
        for above in [true, false] {
            let m = Move::R1 { column: 1, level: 1, above, add: true };
            let k = apply_move(&eye, &m).unwrap();
            assert_eq!(k.front().crossing_count(), 1);
            assert_eq!(k.classical_invariants(), eye.classical_invariants());
            let back = apply_move(&k, &Move::R1 { column: 1, level: 1, above, add: false }).unwrap();
            assert_eq!(back, eye);
        }
        let nested = canon("L 1 / L 2 / R 2 / R 1");
        let m = Move::R2 { column: 1, level: 2, cusp: CuspSide::Left, above: true, add: true };
        let r = apply_move(&nested, &m).unwrap();
        assert_eq!(r.front(), &parse_front("L 1 / L 1 / X 2 / X 1 / R 2 / R 1").unwrap());
        assert_eq!(r.component_invariants(), nested.component_invariants());
        let err = apply_move(&nested, &Move::R2 { column: 0, level: 2, cusp: CuspSide::Left, above: true, add: false });
        assert!(matches!(err, Err(MoveError::PatternMismatch { column: 0, .. })));
    }

    #[test]
    fn r3_toggles() {
        let f = canon("L 1 / L 1 / L 1 / X 2 / X 3 / X 2 / R 1 / R 1 / R 1");
        let g = apply_move(&f, &Move::R3 { column: 3, level: 2 }).unwrap();
        assert_eq!(g.front().events()[3..6], [Event::Crossing(3), Event::Crossing(2), Event::Crossing(3)]);
        assert_eq!(apply_move(&g, &Move::R3 { column: 3, level: 2 }).unwrap(), f);
    }

    #[test]
    fn exchange_commutes_far_events() {
        let f = canon("L 1 / L 3 / R 1 / R 1");
        let g = apply_move(&f, &Move::Exchange { column: 1, levels: None }).unwrap();
        assert_eq!(g.front(), &parse_front("L 1 / R 1 / L 1 / R 1").unwrap());
        assert!(apply_move(&canon("L 1 / R 1"), &Move::Exchange { column: 0, levels: None }).is_err());
        // a right cusp followed by an eye at its own gap: the eye may go
        // above or below
        let h = canon("L 1 / L 3 / R 1 / L 1 / R 1 / R 1");
        let above = apply_move(&h, &Move::Exchange { column: 2, levels: None }).unwrap();
        assert_eq!(above.front().events()[2..4], [Event::LeftCusp(1), Event::RightCusp(3)]);
        let below = apply_move(&h, &Move::Exchange { column: 2, levels: Some((3, 1)) }).unwrap();
        assert_eq!(below.front().events()[2..4], [Event::LeftCusp(3), Event::RightCusp(1)]);
        assert!(apply_move(&h, &Move::Exchange { column: 2, levels: Some((2, 1)) }).is_err());
    }

    #[test]
    fn moves_round_trip_through_text() {
        let text = "birth 1 0\nbirth 2 1 down\npinch 3 1\nsaddle 4 2\nr1 add 2 1 above\nr2 remove 0 2 right below\nr3 5 1\nxchg 2\nxchg 3 1 2\n";
        let moves = parse_moves(text).unwrap();
        assert_eq!(format_moves(&moves), text);
        assert_eq!(moves[0], Move::Birth { column: 0, level: 1, down: false });
        assert_eq!(parse_moves("birth 1").unwrap()[0], Move::Birth { column: 0, level: 1, down: false });
        assert!(parse_moves("birth 1\nwarp 3").unwrap_err().line == 2);
    }
}
