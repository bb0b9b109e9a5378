//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use legfill::braid::BraidWord;
use legfill::front::{Event, Front};
use legfill::homfly::{PlanarDiagram, StrandCrossing};
use rand::Rng;

/// A plat-style diagram built without any front or braid machinery:
/// letters act on `n` positions, `left` and `right` pair up positions with
/// caps. Orientation is found by walking the diagram; crossing signs come
/// from the cross product of the two travel directions.
pub fn plat_pd(n: usize, word: &[i32], left: &[(usize, usize)], right: &[(usize, usize)]) -> PlanarDiagram {
    // crossing slots: 0 = top-left, 1 = top-right, 2 = bottom-left, 3 = bottom-right
    let mut cur: Vec<usize> = (0..n).collect();
    let mut next = n;
    let mut ends: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    for (x, &l) in word.iter().enumerate() {
        let i = l.unsigned_abs() as usize - 1;
        ends.entry(cur[i]).or_default().push((x, 0));
        ends.entry(cur[i + 1]).or_default().push((x, 2));
        let (t, b) = (next, next + 1);
        next += 2;
        ends.entry(t).or_default().push((x, 1));
        ends.entry(b).or_default().push((x, 3));
        cur[i] = t;
        cur[i + 1] = b;
    }
    let mut parent: Vec<usize> = (0..next).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        r
    }
    for &(a, b) in left {
        let (ra, rb) = (find(&mut parent, a - 1), find(&mut parent, b - 1));
        parent[ra] = rb;
    }
    for &(a, b) in right {
        let (ra, rb) = (find(&mut parent, cur[a - 1]), find(&mut parent, cur[b - 1]));
        parent[ra] = rb;
    }
    let mut merged: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    for (e, v) in ends {
        let r = find(&mut parent, e);
        merged.entry(r).or_default().extend(v);
    }
    let slot_edge: HashMap<(usize, usize), usize> =
        merged.iter().flat_map(|(&e, v)| v.iter().map(move |&s| (s, e))).collect();
    let m = word.len();
    let opposite = |s: usize| 3 - s;
    let mut entered: Vec<[Option<bool>; 4]> = vec![[None; 4]; m];
    for x0 in 0..m {
        for s0 in 0..4 {
            let (mut x, mut s) = (x0, s0);
            while entered[x][s].is_none() {
                entered[x][s] = Some(true);
                let o = opposite(s);
                entered[x][o] = Some(false);
                let v = &merged[&slot_edge[&(x, o)]];
                let &(nx, ns) = v.iter().find(|&&p| p != (x, o)).expect("edges have two ends");
                x = nx;
                s = ns;
            }
        }
    }
    // travel direction on entering through a slot, y pointing down
    let dir = |s_in: usize| -> (i32, i32) {
        match s_in {
            0 => (1, -1),
            3 => (-1, 1),
            2 => (1, 1),
            _ => (-1, -1),
        }
    };
    let mut cs = Vec::new();
    for (x, &l) in word.iter().enumerate() {
        let e = |s: usize| slot_edge[&(x, s)];
        let (o1, o2, u1, u2) = if l > 0 { (0, 3, 2, 1) } else { (2, 1, 0, 3) };
        let (oi, oo) = if entered[x][o1] == Some(true) { (o1, o2) } else { (o2, o1) };
        let (ui, uo) = if entered[x][u1] == Some(true) { (u1, u2) } else { (u2, u1) };
        let (a, b) = (dir(oi), dir(ui));
        let sign = if a.0 * b.1 - a.1 * b.0 > 0 { 1 } else { -1 };
        cs.push(StrandCrossing { over_in: e(oi), over_out: e(oo), under_in: e(ui), under_out: e(uo), sign });
    }
    PlanarDiagram::from_strands(&cs, &[], &[]).expect("plat diagrams are well formed")
}

/// The pretzel knot P(3, 3, -3) as a plat.
pub fn pretzel_3_3_m3() -> PlanarDiagram {
    let caps = [(1, 6), (2, 3), (4, 5)];
    plat_pd(6, &[1, 1, 1, 3, 3, 3, -5, -5, -5], &caps, &caps)
}

/// Every switch subset whose resolution splits the front into disks with
/// one left cusp, one right cusp and no self-crossing, switching only
/// between nested or disjoint disks. Exponential; small fronts only.
pub fn brute_force_rulings(front: &Front) -> Vec<Vec<usize>> {
    let xs = front.crossing_events();
    let n = xs.len();
    assert!(n <= 16, "oracle is exponential");
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let switches: Vec<usize> = (0..n).filter(|c| mask >> c & 1 == 1).collect();
        let res = front.zero_resolution(&switches).unwrap();
        if !res.components().iter().all(|c| c.left_cusps.len() == 1 && c.right_cusps.len() == 1) {
            continue;
        }
        let owners = res.column_owners();
        let mut ok = true;
        let mut dropped = 0;
        for (c, &e) in xs.iter().enumerate() {
            let k = front.events()[e].level();
            let col = &owners[e - dropped];
            if mask >> c & 1 == 1 {
                dropped += 1;
                let span = |d: usize| {
                    let ps: Vec<usize> = (0..col.len()).filter(|&p| col[p] == d).collect();
                    (ps[0], ps[ps.len() - 1])
                };
                let (a, b) = span(col[k - 1]);
                let (c2, d) = span(col[k]);
                let disjoint = b < c2 || d < a;
                let nested = (a < c2 && d < b) || (c2 < a && b < d);
                ok &= disjoint || nested;
            } else {
                ok &= col[k - 1] != col[k];
            }
        }
        if ok {
            out.push(switches);
        }
    }
    out.sort();
    out
}

/// Decodes arbitrary choices into a valid front with at most
/// `max_strands` active strands, closing it off at the end.
pub fn front_from_choices(choices: &[(u8, u8)], max_strands: usize) -> Front {
    let mut ev = Vec::new();
    let mut active = 0usize;
    for &(kind, lvl) in choices {
        let lvl = lvl as usize;
        if active == 0 || (kind % 3 == 0 && active + 2 <= max_strands) {
            ev.push(Event::LeftCusp(lvl % (active + 1) + 1));
            active += 2;
        } else if kind % 3 == 1 {
            ev.push(Event::RightCusp(lvl % (active - 1) + 1));
            active -= 2;
        } else {
            ev.push(Event::Crossing(lvl % (active - 1) + 1));
        }
    }
    while active > 0 {
        ev.push(Event::RightCusp(1));
        active -= 2;
    }
    Front::new(ev).expect("decoded fronts sweep correctly")
}

/// Left cusps, then crossings, then right cusps: a shape that tends to
/// carry many rulings.
pub fn plat_front_from_choices(lefts: &[u8], crossings: &[u8], rights: &[u8]) -> Front {
    let mut ev = Vec::new();
    let mut active = 0usize;
    for &l in lefts {
        ev.push(Event::LeftCusp(l as usize % (active + 1) + 1));
        active += 2;
    }
    for &x in crossings {
        ev.push(Event::Crossing(x as usize % (active - 1) + 1));
    }
    for i in 0..lefts.len() {
        let r = rights.get(i).copied().unwrap_or(0) as usize;
        ev.push(Event::RightCusp(r % (active - 1) + 1));
        active -= 2;
    }
    Front::new(ev).expect("plat fronts sweep correctly")
}

pub fn random_front<R: Rng>(rng: &mut R, max_crossings: usize, max_strands: usize) -> Front {
    loop {
        let len = rng.gen_range(2..3 * max_crossings + 4);
        let choices: Vec<(u8, u8)> = (0..len).map(|_| (rng.gen(), rng.gen())).collect();
        let f = front_from_choices(&choices, max_strands);
        if f.crossing_count() <= max_crossings {
            return f;
        }
    }
}

pub fn random_braid<R: Rng>(rng: &mut R, max_strands: usize, max_len: usize) -> BraidWord {
    let n = rng.gen_range(2..=max_strands);
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n as i32);
            if rng.gen() {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

/// Drops cancelling neighbours.
pub fn free_reduce(w: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}
