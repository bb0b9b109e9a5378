use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BraidWord;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("edge {edge} appears {count} times (expected 2)")]
    EdgeMultiplicity { edge: usize, count: usize },
    #[error("edge {edge} is not entered and left exactly once")]
    EdgeOrientation { edge: usize },
    #[error("crossing {index} has sign {sign}, expected ±1")]
    BadSign { index: usize, sign: i8 },
    #[error("crossing index {index} out of range")]
    NoSuchCrossing { index: usize },
}

/// One crossing in PD form: `slots = [a, b, c, d]` counter-clockwise with
/// `a` the incoming under-edge and `c` the outgoing under-edge. For a
/// positive crossing the over strand enters at `d` and leaves at `b`; for
/// a negative one it enters at `b` and leaves at `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PdCrossing {
    pub slots: [usize; 4],
    pub sign: i8,
}

/// The same crossing described by its two oriented strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StrandCrossing {
    pub over_in: usize,
    pub over_out: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub sign: i8,
}

impl StrandCrossing {
    fn to_pd(self) -> PdCrossing {
        let (b, d) = if self.sign > 0 { (self.over_out, self.over_in) } else { (self.over_in, self.over_out) };
        PdCrossing { slots: [self.under_in, b, self.under_out, d], sign: self.sign }
    }
}

impl PdCrossing {
    pub fn strands(&self) -> StrandCrossing {
        let [a, b, c, d] = self.slots;
        let (over_in, over_out) = if self.sign > 0 { (d, b) } else { (b, d) };
        StrandCrossing { over_in, over_out, under_in: a, under_out: c, sign: self.sign }
    }
}

/// Oriented link diagram: PD crossings plus crossing-free loop components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlanarDiagram {
    crossings: Vec<PdCrossing>,
    free_loops: usize,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        if self.0.len() <= x {
            let n = self.0.len();
            self.0.extend(n..=x);
        }
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.0[rx] = ry;
        }
    }
}

impl PlanarDiagram {
    pub fn new(crossings: Vec<PdCrossing>, free_loops: usize) -> Result<Self, DiagramError> {
        let d = Self { crossings, free_loops };
        d.validate()?;
        Ok(d)
    }

    /// Builds a diagram from strand descriptions whose raw edge ids may be
    /// glued further by `joins` (cusps, braid closure). Edge classes that
    /// meet no crossing become free loops.
    pub fn from_strands(
        crossings: &[StrandCrossing],
        joins: &[(usize, usize)],
        loose_edges: &[usize],
    ) -> Result<Self, DiagramError> {
        let mut dsu = Dsu(Vec::new());
        for &(x, y) in joins {
            dsu.union(x, y);
        }
        let mut relabel: HashMap<usize, usize> = HashMap::new();
        let mut out = Vec::with_capacity(crossings.len());
        for c in crossings {
            let mut map = |e: usize| {
                let r = dsu.find(e);
                let n = relabel.len();
                *relabel.entry(r).or_insert(n)
            };
            let s = StrandCrossing {
                over_in: map(c.over_in),
                over_out: map(c.over_out),
                under_in: map(c.under_in),
                under_out: map(c.under_out),
                sign: c.sign,
            };
            out.push(s.to_pd());
        }
        let mut loops: Vec<usize> =
            loose_edges.iter().map(|&e| dsu.find(e)).filter(|r| !relabel.contains_key(r)).collect();
        loops.sort_unstable();
        loops.dedup();
        Self::new(out, loops.len())
    }

    /// Diagram of the trace closure, drawn left to right with strand
    /// positions numbered top-down; `σ_i` is a positive crossing.
    pub fn from_braid(word: &BraidWord) -> Self {
        let n = word.strands();
        let mut current: Vec<usize> = (0..n).collect();
        let mut next_edge = n;
        let mut crossings = Vec::with_capacity(word.len());
        for &l in word.letters() {
            let i = l.unsigned_abs() as usize - 1;
            let (top, bot) = (current[i], current[i + 1]);
            let (new_top, new_bot) = (next_edge, next_edge + 1);
            next_edge += 2;
            // The strand entering at the top leaves at the bottom.
            let c = if l > 0 {
                StrandCrossing { over_in: top, over_out: new_bot, under_in: bot, under_out: new_top, sign: 1 }
            } else {
                StrandCrossing { over_in: bot, over_out: new_top, under_in: top, under_out: new_bot, sign: -1 }
            };
            crossings.push(c);
            current[i] = new_top;
            current[i + 1] = new_bot;
        }
        let joins: Vec<(usize, usize)> = current.iter().enumerate().map(|(p, &e)| (p, e)).collect();
        let loose: Vec<usize> = (0..n).collect();
        Self::from_strands(&crossings, &joins, &loose).expect("braid closures are valid diagrams")
    }

    pub fn crossings(&self) -> &[PdCrossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    pub fn validate(&self) -> Result<(), DiagramError> {
        let mut count: HashMap<usize, (usize, usize)> = HashMap::new(); // (in, out)
        for (index, c) in self.crossings.iter().enumerate() {
            if c.sign != 1 && c.sign != -1 {
                return Err(DiagramError::BadSign { index, sign: c.sign });
            }
            let s = c.strands();
            count.entry(s.over_in).or_default().0 += 1;
            count.entry(s.under_in).or_default().0 += 1;
            count.entry(s.over_out).or_default().1 += 1;
            count.entry(s.under_out).or_default().1 += 1;
        }
        let mut edges: Vec<_> = count.into_iter().collect();
        edges.sort_unstable();
        for (edge, (i, o)) in edges {
            if i + o != 2 {
                return Err(DiagramError::EdgeMultiplicity { edge, count: i + o });
            }
            if i != 1 {
                return Err(DiagramError::EdgeOrientation { edge });
            }
        }
        Ok(())
    }

    /// Change crossing `index` into its opposite crossing.
    pub fn switched(&self, index: usize) -> Result<Self, DiagramError> {
        let c = self.crossings.get(index).ok_or(DiagramError::NoSuchCrossing { index })?;
        let s = c.strands();
        let flipped = StrandCrossing {
            over_in: s.under_in,
            over_out: s.under_out,
            under_in: s.over_in,
            under_out: s.over_out,
            sign: -s.sign,
        };
        let mut crossings = self.crossings.clone();
        crossings[index] = flipped.to_pd();
        Ok(Self { crossings, free_loops: self.free_loops })
    }

    /// Oriented smoothing of crossing `index`.
    pub fn smoothed(&self, index: usize) -> Result<Self, DiagramError> {
        let c = self.crossings.get(index).ok_or(DiagramError::NoSuchCrossing { index })?;
        let s = c.strands();
        let rest: Vec<StrandCrossing> =
            self.crossings.iter().enumerate().filter(|&(i, _)| i != index).map(|(_, c)| c.strands()).collect();
        let joins = [(s.over_in, s.under_out), (s.under_in, s.over_out)];
        let loose = [s.over_in, s.under_in];
        let mut d = Self::from_strands(&rest, &joins, &loose)?;
        d.free_loops += self.free_loops;
        Ok(d)
    }

    /// Signed Gauss code used by the skein engine.
    pub fn gauss_code(&self) -> GaussCode {
        let strands: Vec<StrandCrossing> = self.crossings.iter().map(|c| c.strands()).collect();
        // edge -> (crossing it enters, enters as over)
        let mut enters: HashMap<usize, (usize, bool)> = HashMap::new();
        for (i, s) in strands.iter().enumerate() {
            enters.insert(s.over_in, (i, true));
            enters.insert(s.under_in, (i, false));
        }
        let mut edges: Vec<usize> = enters.keys().copied().collect();
        edges.sort_unstable();
        let mut seen: HashMap<usize, bool> = HashMap::new();
        let mut components = Vec::new();
        for start in edges {
            if seen.contains_key(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut e = start;
            while seen.insert(e, true).is_none() {
                let (c, over) = enters[&e];
                comp.push((c as u32, over));
                e = if over { strands[c].over_out } else { strands[c].under_out };
            }
            components.push(comp);
        }
        GaussCode { components, signs: strands.iter().map(|s| s.sign).collect(), free_loops: self.free_loops }
    }

    /// Number of link components, free loops included.
    pub fn component_count(&self) -> usize {
        self.gauss_code().components.len() + self.free_loops
    }
}

/// Components as cyclic sequences of `(crossing, passes over)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussCode {
    pub components: Vec<Vec<(u32, bool)>>,
    pub signs: Vec<i8>,
    pub free_loops: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braid_closure_shapes() {
        let t = PlanarDiagram::from_braid(&BraidWord::new(2, vec![1, 1, 1]).unwrap());
        assert_eq!(t.crossing_count(), 3);
        assert_eq!(t.component_count(), 1);
        assert_eq!(t.writhe(), 3);
        let u = PlanarDiagram::from_braid(&BraidWord::new(3, vec![1]).unwrap());
        assert_eq!(u.free_loops(), 1);
        assert_eq!(u.component_count(), 2);
        let h = PlanarDiagram::from_braid(&BraidWord::new(2, vec![1, -1]).unwrap());
        assert_eq!(h.component_count(), 2);
    }

    #[test]
    fn smoothing_and_switching() {
        let t = PlanarDiagram::from_braid(&BraidWord::new(2, vec![1, 1, 1]).unwrap());
        let s = t.smoothed(0).unwrap();
        assert_eq!(s.crossing_count(), 2);
        assert_eq!(s.component_count(), 2);
        let w = t.switched(1).unwrap();
        assert_eq!(w.writhe(), 1);
        w.validate().unwrap();
        let kink = PlanarDiagram::from_braid(&BraidWord::new(2, vec![1]).unwrap());
        let two = kink.smoothed(0).unwrap();
        assert_eq!((two.crossing_count(), two.free_loops()), (0, 2));
        assert!(matches!(t.smoothed(7), Err(DiagramError::NoSuchCrossing { index: 7 })));
    }

    #[test]
    fn rejects_bad_diagrams() {
        let c = PdCrossing { slots: [0, 1, 2, 3], sign: 1 };
        assert!(matches!(PlanarDiagram::new(vec![c], 0), Err(DiagramError::EdgeMultiplicity { .. })));
        let c = PdCrossing { slots: [0, 0, 1, 1], sign: 2 };
        assert!(matches!(PlanarDiagram::new(vec![c], 0), Err(DiagramError::BadSign { .. })));
    }
}
