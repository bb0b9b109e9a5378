//! Skein-tree evaluation of the HOMFLY polynomial.
//!
//! Convention: `a·P(L₊) − a⁻¹·P(L₋) = z·P(L₀)` and `P(unknot) = 1`.
//! Each node picks base points making the diagram as close to descending
//! as it can, then switches or smooths the first crossing met from below.
//! Descending diagrams are unlinks. Sub-diagrams are memoised on a
//! relabelled Gauss code.

use std::collections::HashMap;

use super::diagram::{GaussCode, PlanarDiagram};
use super::poly::HomflyPoly;

type Comp = Vec<(u32, bool)>;

#[derive(Clone, Debug)]
struct Code {
    comps: Vec<Comp>,
    // indexed by crossing label; labels of removed crossings are stale
    signs: Vec<i8>,
}

/// Reusable evaluator; keeps its memo table between calls.
#[derive(Default)]
pub struct SkeinEngine {
    memo: HashMap<Vec<u32>, HomflyPoly>,
    nodes: u64,
}

impl SkeinEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of skein nodes expanded so far (memo misses).
    pub fn nodes_expanded(&self) -> u64 {
        self.nodes
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn evaluate(&mut self, d: &PlanarDiagram) -> HomflyPoly {
        let GaussCode { components, signs, free_loops } = d.gauss_code();
        let mut comps = components;
        comps.extend(std::iter::repeat_with(Vec::new).take(free_loops));
        self.eval(Code { comps, signs })
    }

    fn eval(&mut self, mut code: Code) -> HomflyPoly {
        remove_kinks(&mut code);
        let loops = code.comps.iter().filter(|c| c.is_empty()).count();
        code.comps.retain(|c| !c.is_empty());
        if code.comps.is_empty() {
            return HomflyPoly::unlink(loops.max(1));
        }
        let groups = split(&code);
        let mut result = HomflyPoly::delta().pow(loops + groups.len() - 1);
        for g in groups {
            let p = self.eval_connected(g);
            result = &result * &p;
        }
        result
    }

    fn eval_connected(&mut self, code: Code) -> HomflyPoly {
        let (key, code) = canonical(&code);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        self.nodes += 1;
        let result = match first_bad_crossing(&code) {
            None => HomflyPoly::unlink(code.comps.len()),
            Some(c) => {
                let sign = code.signs[c as usize];
                let switched = self.eval(switch(&code, c));
                let smoothed = self.eval(smooth(&code, c));
                if sign > 0 {
                    // P₊ = a⁻²P₋ + a⁻¹zP₀
                    switched.shifted(1, -2, 0) + smoothed.shifted(1, -1, 1)
                } else {
                    // P₋ = a²P₊ − azP₀
                    switched.shifted(1, 2, 0) + smoothed.shifted(-1, 1, 1)
                }
            }
        };
        self.memo.insert(key, result.clone());
        result
    }
}

/// HOMFLY polynomial of an oriented link diagram.
pub fn homfly(d: &PlanarDiagram) -> HomflyPoly {
    SkeinEngine::new().evaluate(d)
}

/// Drops crossings whose two passes are consecutive on one component
/// (Reidemeister I loops); they do not change the polynomial.
fn remove_kinks(code: &mut Code) {
    loop {
        let mut changed = false;
        for comp in code.comps.iter_mut() {
            let n = comp.len();
            if n < 2 {
                continue;
            }
            if let Some(i) = (0..n).find(|&i| comp[i].0 == comp[(i + 1) % n].0) {
                let j = (i + 1) % n;
                let (hi, lo) = if i > j { (i, j) } else { (j, i) };
                comp.remove(hi);
                comp.remove(lo);
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}

/// Splits into groups of components connected through shared crossings.
fn split(code: &Code) -> Vec<Code> {
    let k = code.comps.len();
    let mut owner: HashMap<u32, usize> = HashMap::new();
    let mut parent: Vec<usize> = (0..k).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (ci, comp) in code.comps.iter().enumerate() {
        for &(c, _) in comp {
            if let Some(&other) = owner.get(&c) {
                let (ra, rb) = (root(&mut parent, ci), root(&mut parent, other));
                parent[ra] = rb;
            } else {
                owner.insert(c, ci);
            }
        }
    }
    let mut groups: Vec<(usize, Vec<Comp>)> = Vec::new();
    for ci in 0..k {
        let r = root(&mut parent, ci);
        match groups.iter_mut().find(|(g, _)| *g == r) {
            Some((_, v)) => v.push(code.comps[ci].clone()),
            None => groups.push((r, vec![code.comps[ci].clone()])),
        }
    }
    groups.into_iter().map(|(_, comps)| Code { comps, signs: code.signs.clone() }).collect()
}

/// Relabels crossings by first appearance after choosing a component order
/// and rotations that make the encoding lexicographically small. Equal keys
/// always mean isomorphic signed Gauss codes.
fn canonical(code: &Code) -> (Vec<u32>, Code) {
    let k = code.comps.len();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(code.comps[i].len()));
    let candidates: Vec<Vec<usize>> = if k <= 4 {
        permutations(&order)
            .into_iter()
            .filter(|p| p.windows(2).all(|w| code.comps[w[0]].len() >= code.comps[w[1]].len()))
            .collect()
    } else {
        vec![order]
    };
    let mut best: Option<(Vec<u32>, Vec<Comp>, Vec<i8>)> = None;
    for perm in candidates {
        let mut labels: HashMap<u32, u32> = HashMap::new();
        let mut key = vec![k as u32];
        let mut comps = Vec::with_capacity(k);
        for &ci in &perm {
            let comp = &code.comps[ci];
            let n = comp.len();
            let mut best_rot: Option<(Vec<u32>, usize)> = None;
            for r in 0..n {
                let mut local = labels.clone();
                let enc: Vec<u32> = (0..n)
                    .map(|t| {
                        let (c, over) = comp[(r + t) % n];
                        let next = local.len() as u32;
                        let l = *local.entry(c).or_insert(next);
                        let s = (code.signs[c as usize] > 0) as u32;
                        l * 4 + (over as u32) * 2 + s
                    })
                    .collect();
                if best_rot.as_ref().is_none_or(|(b, _)| enc < *b) {
                    best_rot = Some((enc, r));
                }
            }
            let (enc, r) = best_rot.expect("components are non-empty");
            let rotated: Comp = (0..n).map(|t| comp[(r + t) % n]).collect();
            for &(c, _) in &rotated {
                let next = labels.len() as u32;
                labels.entry(c).or_insert(next);
            }
            key.push(n as u32);
            key.extend(enc);
            comps.push(rotated);
        }
        if best.as_ref().is_none_or(|(b, _, _)| key < *b) {
            let mut signs = vec![0i8; labels.len()];
            for (&old, &new) in &labels {
                signs[new as usize] = code.signs[old as usize];
            }
            let comps = comps.into_iter().map(|c| c.into_iter().map(|(x, o)| (labels[&x], o)).collect()).collect();
            best = Some((key, comps, signs));
        }
    }
    let (key, comps, signs) = best.expect("at least one ordering");
    (key, Code { comps, signs })
}

/// Picks base points and a component order minimising the number of
/// crossings first met from below, then returns the first such crossing,
/// or `None` when the diagram is descending.
fn first_bad_crossing(code: &Code) -> Option<u32> {
    let k = code.comps.len();
    let mut comp_of: HashMap<u32, Vec<usize>> = HashMap::new();
    for (ci, comp) in code.comps.iter().enumerate() {
        for &(c, _) in comp {
            comp_of.entry(c).or_default().push(ci);
        }
    }
    // best rotation per component for its self-crossings
    let rotations: Vec<usize> = code
        .comps
        .iter()
        .enumerate()
        .map(|(ci, comp)| {
            let n = comp.len();
            (0..n)
                .min_by_key(|&r| {
                    let mut seen: HashMap<u32, ()> = HashMap::new();
                    let mut bad = 0;
                    for t in 0..n {
                        let (c, over) = comp[(r + t) % n];
                        if comp_of[&c].iter().all(|&x| x == ci) && seen.insert(c, ()).is_none() && !over {
                            bad += 1;
                        }
                    }
                    bad
                })
                .unwrap_or(0)
        })
        .collect();
    // component order for the mixed crossings: under[(i, j)] counts
    // crossings between i and j where i passes under
    let mut under = vec![vec![0usize; k]; k];
    for (ci, comp) in code.comps.iter().enumerate() {
        for &(c, over) in comp {
            let owners = &comp_of[&c];
            if !over && owners[0] != owners[1] {
                let other = if owners[0] == ci { owners[1] } else { owners[0] };
                under[ci][other] += 1;
            }
        }
    }
    let cost = |order: &[usize]| -> usize {
        let mut total = 0;
        for (x, &i) in order.iter().enumerate() {
            for &j in &order[x + 1..] {
                total += under[i][j];
            }
        }
        total
    };
    let idx: Vec<usize> = (0..k).collect();
    let order = if k <= 6 {
        permutations(&idx).into_iter().min_by_key(|o| cost(o)).unwrap_or(idx)
    } else {
        let mut remaining = idx;
        let mut order = Vec::with_capacity(k);
        while !remaining.is_empty() {
            let (pos, _) = remaining
                .iter()
                .enumerate()
                .min_by_key(|&(_, &i)| remaining.iter().map(|&j| under[i][j]).sum::<usize>())
                .unwrap();
            order.push(remaining.remove(pos));
        }
        order
    };
    let mut seen: HashMap<u32, ()> = HashMap::new();
    for &ci in &order {
        let comp = &code.comps[ci];
        let n = comp.len();
        for t in 0..n {
            let (c, over) = comp[(rotations[ci] + t) % n];
            if seen.insert(c, ()).is_none() && !over {
                return Some(c);
            }
        }
    }
    None
}

fn switch(code: &Code, c: u32) -> Code {
    let mut out = code.clone();
    for comp in out.comps.iter_mut() {
        for e in comp.iter_mut() {
            if e.0 == c {
                e.1 = !e.1;
            }
        }
    }
    out.signs[c as usize] = -out.signs[c as usize];
    out
}

fn smooth(code: &Code, c: u32) -> Code {
    let mut over_at = None;
    let mut under_at = None;
    for (ci, comp) in code.comps.iter().enumerate() {
        for (i, &(x, over)) in comp.iter().enumerate() {
            if x == c {
                if over {
                    over_at = Some((ci, i));
                } else {
                    under_at = Some((ci, i));
                }
            }
        }
    }
    let (co, io) = over_at.expect("crossing passes over once");
    let (cu, iu) = under_at.expect("crossing passes under once");
    let mut comps: Vec<Comp> = Vec::with_capacity(code.comps.len() + 1);
    for (ci, comp) in code.comps.iter().enumerate() {
        if ci != co && ci != cu {
            comps.push(comp.clone());
        }
    }
    if co == cu {
        let comp = &code.comps[co];
        let n = comp.len();
        // rotate so the over pass is first: [c_o, A.., c_u, B..]
        let rot: Comp = (0..n).map(|t| comp[(io + t) % n]).collect();
        let split_at = (iu + n - io) % n;
        comps.push(rot[1..split_at].to_vec());
        comps.push(rot[split_at + 1..].to_vec());
    } else {
        let a = &code.comps[co];
        let b = &code.comps[cu];
        let mut merged: Comp = (1..a.len()).map(|t| a[(io + t) % a.len()]).collect();
        merged.extend((1..b.len()).map(|t| b[(iu + t) % b.len()]));
        comps.push(merged);
    }
    Code { comps, signs: code.signs.clone() }
}

/// All orderings of `items`.
fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    fn go(items: &[usize], used: &mut [bool], current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == items.len() {
            out.push(current.clone());
            return;
        }
        for i in 0..items.len() {
            if !used[i] {
                used[i] = true;
                current.push(items[i]);
                go(items, used, current, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(items, &mut vec![false; items.len()], &mut Vec::with_capacity(items.len()), &mut out);
    out
}
