use thiserror::Error;

use super::moves::{rewrite, Move};
use super::trace::FillingTrace;
use crate::front::{Event, OrientedFront};
use crate::ruling::find_all_switched_oriented;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FillingError {
    #[error("no oriented normal ruling switches at every crossing")]
    NotFillableByThisMethod,
    #[error("no crossing on an innermost ruling disk has the pinchable form (front: {front})")]
    TranscriptionGap { front: String },
    #[error("internal error: {0}")]
    Internal(String),
}

/// A crossing whose neighbourhood can be pinched: it lies on the boundary
/// of an innermost ruling disk among those touching crossings, and its
/// crossing and companion strands are pairwise co-oriented.
fn pinchable_crossing(cur: &OrientedFront) -> Result<usize, FillingError> {
    let f = cur.front();
    let xs = f.crossing_events();
    let all: Vec<usize> = (0..xs.len()).collect();
    let res = f.zero_resolution(&all).map_err(|e| FillingError::Internal(e.to_string()))?;
    let owners = res.column_owners();
    let disks = res.component_count();

    // inside[y][x]: disk x lies strictly between the strands of disk y
    let mut inside = vec![vec![false; disks]; disks];
    for col in &owners {
        let mut span = vec![(usize::MAX, 0usize); disks];
        for (p, &d) in col.iter().enumerate() {
            span[d] = (span[d].0.min(p), span[d].1.max(p));
        }
        for &y in col {
            for &x in col {
                if span[y].0 < span[x].0 && span[x].1 < span[y].1 {
                    inside[y][x] = true;
                }
            }
        }
    }

    let touched: Vec<[usize; 2]> = xs
        .iter()
        .enumerate()
        .map(|(c, &e)| {
            let k = f.events()[e].level();
            let col = &owners[e - c];
            [col[k - 1], col[k]]
        })
        .collect();
    let mut incident = vec![false; disks];
    for t in &touched {
        incident[t[0]] = true;
        incident[t[1]] = true;
    }
    let innermost = |d: usize| (0..disks).all(|x| !(inside[d][x] && incident[x]));

    let segs = f.segments();
    let heading = cur.headings_with(&segs).expect("oriented fronts are consistent");
    for (c, &e) in xs.iter().enumerate() {
        let [a, b] = touched[c];
        if !innermost(a) && !innermost(b) {
            continue;
        }
        let k = f.events()[e].level();
        let col = &owners[e - c];
        let partner =
            |pos: usize| (0..col.len()).find(|&q| q != pos && col[q] == col[pos]).expect("eyes have two strands");
        let h = |pos: usize| heading[segs.columns[e][pos]];
        let (i, j) = (k - 1, k);
        if h(i) == h(j) && h(partner(i)) == h(partner(j)) {
            return Ok(c);
        }
    }
    Err(FillingError::TranscriptionGap { front: f.to_string().replace('\n', " / ") })
}

/// Orders the eyes of a crossing-free front by left cusp and grows them
/// one at a time: a birth at the left cusp, then exchanges that slide the
/// right cusp into place.
fn birth_moves(base: &OrientedFront) -> Result<Vec<Move>, FillingError> {
    let f = base.front();
    let owners = f.column_owners();
    let events = f.events();
    let owner_of: Vec<usize> = events
        .iter()
        .enumerate()
        .map(|(e, ev)| match *ev {
            Event::LeftCusp(k) => owners[e + 1][k - 1],
            Event::RightCusp(k) | Event::Crossing(k) => owners[e][k - 1],
        })
        .collect();
    let eyes = f.left_cusp_events().len();
    let mut out = Vec::new();
    for i in 0..eyes {
        // P_i: the events of eyes 0..=i with their levels in that sub-front
        let keep: Vec<usize> = (0..events.len()).filter(|&e| owner_of[e] <= i).collect();
        let level_in = |e: usize| -> usize {
            let k = events[e].level();
            1 + owners[e][..k - 1].iter().filter(|&&o| o <= i).count()
        };
        let l_pos = keep.iter().position(|&e| owner_of[e] == i && matches!(events[e], Event::LeftCusp(_))).unwrap();
        let r_pos = keep.iter().position(|&e| owner_of[e] == i && matches!(events[e], Event::RightCusp(_))).unwrap();
        out.push(Move::Birth { column: l_pos, level: level_in(keep[l_pos]), down: base.left_cusp_down()[i] });
        // slide the right cusp from l_pos + 1 to r_pos, one event at a time
        for (at, &next) in keep.iter().enumerate().take(r_pos).skip(l_pos + 1) {
            let after = &owners[next + 1];
            let first = after.iter().position(|&o| o == i).expect("eye alive after this event");
            let r_level = 1 + after[..first].iter().filter(|&&o| o < i).count();
            out.push(Move::Exchange { column: at, levels: Some((level_in(next), r_level)) });
        }
    }
    Ok(out)
}

/// Builds a decomposable filling by repeatedly pinching a crossing of an
/// innermost ruling disk, then filling the remaining eyes with births.
pub fn construct_filling(of: &OrientedFront) -> Result<FillingTrace, FillingError> {
    if find_all_switched_oriented(of).is_none() {
        return Err(FillingError::NotFillableByThisMethod);
    }
    let mut cur = of.clone();
    let mut pinches = Vec::new();
    while cur.front().crossing_count() > 0 {
        let c = pinchable_crossing(&cur)?;
        let e = cur.front().crossing_events()[c];
        let level = cur.front().events()[e].level();
        cur = rewrite(&cur, e, 1, &[], false).map_err(|err| FillingError::Internal(err.to_string()))?;
        pinches.push(Move::Pinch { column: e, level });
    }
    if !cur.front().components().iter().all(|c| c.is_simple_eye()) {
        return Err(FillingError::Internal("crossing-free front is not a union of eyes".into()));
    }
    let mut trace = FillingTrace::new();
    for m in birth_moves(&cur)?.into_iter().chain(pinches.into_iter().rev()) {
        trace.push(m).map_err(|e| FillingError::Internal(e.to_string()))?;
    }
    if &trace.end() != of {
        return Err(FillingError::Internal("replayed trace does not end at the input front".into()));
    }
    Ok(trace)
}
