//! Normal rulings of fronts.
//!
//! A sweep carries, for every active strand, the id of the ruling disk it
//! bounds (disks are numbered by left cusp). Partners share an id. At a
//! crossing the ruling either passes (ids follow the strands) or switches
//! (ids stay by position); a switch is normal when the two disks are
//! nested or disjoint in the column before it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::front::{Event, Front, OrientedFront};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ruling {
    /// `(left cusp event, right cusp event)` for every disk, by left cusp.
    pub cusp_pairing: Vec<(usize, usize)>,
    /// Switched crossings by crossing ordinal, ascending.
    pub switches: Vec<usize>,
    /// Disk id of each active strand, per column (before each event and
    /// after the last).
    pub columns: Vec<Vec<usize>>,
}

impl Ruling {
    /// Partner position of each active strand in column `col`.
    pub fn pairing_at(&self, col: usize) -> Vec<usize> {
        let ids = &self.columns[col];
        (0..ids.len())
            .map(|p| (0..ids.len()).find(|&q| q != p && ids[q] == ids[p]).expect("disks have two strands"))
            .collect()
    }

    pub fn disk_count(&self) -> usize {
        self.cusp_pairing.len()
    }

    /// Whether every switch sits at a positive crossing.
    pub fn is_oriented(&self, signs: &[i8]) -> bool {
        self.switches.iter().all(|&c| signs[c] > 0)
    }
}

impl fmt::Display for Ruling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.switches.iter().map(usize::to_string).collect();
        write!(f, "switches={}", s.join(","))
    }
}

/// Whether disks through positions `i` and `i + 1` may switch, given the
/// partner positions `p` of `i` and `q` of `i + 1`.
fn normal_switch(i: usize, p: usize, q: usize) -> bool {
    let j = i + 1;
    let (a, b) = (i.min(p), i.max(p));
    let (c, d) = (j.min(q), j.max(q));
    let disjoint = b < c || d < a;
    let nested = (a < c && d < b) || (c < a && b < d);
    disjoint || nested
}

struct Search<'a> {
    events: &'a [Event],
    crossing_ordinal: Vec<usize>,
    allowed: Vec<bool>,
    forced: Option<Vec<bool>>,
    ids: Vec<usize>,
    next_disk: usize,
    switches: Vec<usize>,
    out: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, e: usize) {
        if e == self.events.len() {
            self.out.push(self.switches.clone());
            return;
        }
        match self.events[e] {
            Event::LeftCusp(k) => {
                let d = self.next_disk;
                self.next_disk += 1;
                self.ids.splice(k - 1..k - 1, [d, d]);
                self.run(e + 1);
                self.ids.drain(k - 1..=k);
                self.next_disk -= 1;
            }
            Event::RightCusp(k) => {
                let (a, b) = (self.ids[k - 1], self.ids[k]);
                if a != b {
                    return;
                }
                self.ids.drain(k - 1..=k);
                self.run(e + 1);
                self.ids.splice(k - 1..k - 1, [a, b]);
            }
            Event::Crossing(k) => {
                let i = k - 1;
                let (a, b) = (self.ids[i], self.ids[i + 1]);
                if a == b {
                    // partners would meet away from their cusps
                    return;
                }
                let c = self.crossing_ordinal[e];
                let forced = self.forced.as_ref().map(|f| f[c]);
                if forced != Some(true) {
                    self.ids.swap(i, i + 1);
                    self.run(e + 1);
                    self.ids.swap(i, i + 1);
                }
                if forced != Some(false) && self.allowed[c] {
                    let partner = |x: usize, id: usize| (0..self.ids.len()).find(|&y| y != x && self.ids[y] == id);
                    let p = partner(i, a).expect("disks have two strands");
                    let q = partner(i + 1, b).expect("disks have two strands");
                    if normal_switch(i, p, q) {
                        self.switches.push(c);
                        self.run(e + 1);
                        self.switches.pop();
                    }
                }
            }
        }
    }
}

fn search(front: &Front, allowed: Vec<bool>, forced: Option<Vec<bool>>) -> Vec<Vec<usize>> {
    let events = front.events();
    let mut crossing_ordinal = vec![usize::MAX; events.len()];
    for (c, e) in front.crossing_events().into_iter().enumerate() {
        crossing_ordinal[e] = c;
    }
    let mut s = Search {
        events,
        crossing_ordinal,
        allowed,
        forced,
        ids: Vec::new(),
        next_disk: 0,
        switches: Vec::new(),
        out: Vec::new(),
    };
    s.run(0);
    let mut out = s.out;
    out.sort();
    out
}

/// Rebuilds the full ruling data for a switch set already known to work.
fn materialize(front: &Front, switches: Vec<usize>) -> Ruling {
    let xs = front.crossing_events();
    let mut switched = vec![false; front.events().len()];
    for &c in &switches {
        switched[xs[c]] = true;
    }
    let mut ids: Vec<usize> = Vec::new();
    let mut columns = Vec::with_capacity(front.events().len() + 1);
    let mut left_of_disk = Vec::new();
    let mut right_of_disk = Vec::new();
    for (e, ev) in front.events().iter().enumerate() {
        columns.push(ids.clone());
        match *ev {
            Event::LeftCusp(k) => {
                let d = left_of_disk.len();
                left_of_disk.push(e);
                right_of_disk.push(usize::MAX);
                ids.splice(k - 1..k - 1, [d, d]);
            }
            Event::RightCusp(k) => {
                right_of_disk[ids[k - 1]] = e;
                ids.drain(k - 1..=k);
            }
            Event::Crossing(k) => {
                if !switched[e] {
                    ids.swap(k - 1, k);
                }
            }
        }
    }
    columns.push(ids);
    Ruling { cusp_pairing: left_of_disk.into_iter().zip(right_of_disk).collect(), switches, columns }
}

/// All normal rulings of a front, sorted by switch set.
pub fn normal_rulings(front: &Front) -> Vec<Ruling> {
    let allowed = vec![true; front.crossing_count()];
    search(front, allowed, None).into_iter().map(|s| materialize(front, s)).collect()
}

/// All normal rulings, or only the oriented ones (switches at positive
/// crossings only), sorted by switch set.
pub fn enumerate_rulings(front: &OrientedFront, oriented_only: bool) -> Vec<Ruling> {
    let allowed = if oriented_only {
        front.crossing_signs().iter().map(|&s| s > 0).collect()
    } else {
        vec![true; front.front().crossing_count()]
    };
    let f = front.front();
    search(f, allowed, None).into_iter().map(|s| materialize(f, s)).collect()
}

/// The ruling with the given switch set, if it is a normal ruling.
pub fn ruling_with_switches(front: &Front, switches: &[usize]) -> Option<Ruling> {
    let n = front.crossing_count();
    let mut forced = vec![false; n];
    for &c in switches {
        *forced.get_mut(c)? = true;
    }
    let found = search(front, vec![true; n], Some(forced));
    found.into_iter().next().map(|s| materialize(front, s))
}

/// The oriented normal ruling switching at every crossing, if it exists.
pub fn find_all_switched_oriented(front: &OrientedFront) -> Option<Ruling> {
    if front.crossing_signs().iter().any(|&s| s < 0) {
        return None;
    }
    let all: Vec<usize> = (0..front.front().crossing_count()).collect();
    ruling_with_switches(front.front(), &all)
}

/// Whether resolving the switches yields a union of maximal-tb unknot eyes.
pub fn unlinked_resolution(front: &Front, ruling: &Ruling) -> bool {
    resolves_to_eyes(front, &ruling.switches)
}

/// Whether the 0-resolution at `switches` is a union of eyes (one left
/// cusp, one right cusp, no crossings per component).
pub fn resolves_to_eyes(front: &Front, switches: &[usize]) -> bool {
    front.zero_resolution(switches).map(|r| r.components().iter().all(|c| c.is_simple_eye())).unwrap_or(false)
}
