//! Planar link diagrams in planar-diagram (PD) form.
//!
//! A crossing lists the labels of its four incident arcs counterclockwise.
//! Crossings are kept normalized so that slots 0 and 2 carry the under
//! strand and slots 1 and 3 the over strand. Every arc label occurs in
//! exactly two slots. Closed curves without crossings are counted in
//! `free_loops`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub type ArcId = u32;

/// Which pair of opposite slots carries the over strand in a raw crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OverPair {
    /// Slots 0 and 2.
    AC,
    /// Slots 1 and 3.
    BD,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Crossing {
    pub arcs: [ArcId; 4],
}

impl Crossing {
    /// `arcs` counterclockwise; `over` names the pair that passes over.
    pub fn new(arcs: [ArcId; 4], over: OverPair) -> Crossing {
        match over {
            OverPair::BD => Crossing { arcs },
            OverPair::AC => Crossing { arcs: [arcs[1], arcs[2], arcs[3], arcs[0]] },
        }
    }

    /// The same crossing with the over and under strands exchanged.
    pub fn flipped(&self) -> Crossing {
        Crossing::new(self.arcs, OverPair::AC)
    }
}

/// A dart is one slot of one crossing: an end of an arc.
pub type Dart = (usize, usize);

/// One step of a component traversal: the strand enters `crossing` at `slot`
/// and leaves at `slot + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Passage {
    pub crossing: usize,
    pub slot: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct PlanarDiagram {
    pub crossings: Vec<Crossing>,
    pub free_loops: usize,
}

impl PlanarDiagram {
    /// Build and validate: every arc label must occur exactly twice.
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<PlanarDiagram> {
        let d = PlanarDiagram { crossings, free_loops };
        d.arc_ends()?;
        Ok(d)
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty() && self.free_loops == 0
    }

    /// Map from arc label to its two darts.
    pub fn arc_ends(&self) -> Result<HashMap<ArcId, [Dart; 2]>> {
        let mut seen: HashMap<ArcId, Vec<Dart>> = HashMap::new();
        for (c, x) in self.crossings.iter().enumerate() {
            for (s, &a) in x.arcs.iter().enumerate() {
                seen.entry(a).or_default().push((c, s));
            }
        }
        seen.into_iter()
            .map(|(a, v)| match v.as_slice() {
                [p, q] => Ok((a, [*p, *q])),
                _ => Err(Error::MalformedDiagram(format!("arc {a} occurs {} times", v.len()))),
            })
            .collect()
    }

    fn ends(&self) -> HashMap<ArcId, [Dart; 2]> {
        self.arc_ends().expect("diagram validated at construction")
    }

    /// The dart at the other end of the arc leaving `d`.
    pub fn opposite_dart(ends: &HashMap<ArcId, [Dart; 2]>, arc: ArcId, d: Dart) -> Dart {
        let [p, q] = ends[&arc];
        if p == d { q } else { p }
    }

    /// Relabel arcs as consecutive integers from 0 in order of first appearance.
    pub fn relabeled(&self) -> PlanarDiagram {
        let mut map: HashMap<ArcId, ArcId> = HashMap::new();
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let mut arcs = x.arcs;
                for a in arcs.iter_mut() {
                    let next = map.len() as ArcId;
                    *a = *map.entry(*a).or_insert(next);
                }
                Crossing { arcs }
            })
            .collect();
        PlanarDiagram { crossings, free_loops: self.free_loops }
    }

    pub fn max_label(&self) -> Option<ArcId> {
        self.crossings.iter().flat_map(|x| x.arcs).max()
    }

    /// Components that pass through crossings, each as its cyclic list of passages.
    pub fn crossing_components(&self) -> Vec<Vec<Passage>> {
        let ends = self.ends();
        let mut used = vec![[false; 4]; self.crossings.len()];
        let mut comps = Vec::new();
        for c0 in 0..self.crossings.len() {
            for s0 in 0..4 {
                if used[c0][s0] {
                    continue;
                }
                let mut comp = Vec::new();
                let (mut c, mut s) = (c0, s0);
                loop {
                    used[c][s] = true;
                    used[c][(s + 2) % 4] = true;
                    comp.push(Passage { crossing: c, slot: s });
                    let out = (s + 2) % 4;
                    let (nc, ns) = Self::opposite_dart(&ends, self.crossings[c].arcs[out], (c, out));
                    if (nc, ns) == (c0, s0) {
                        break;
                    }
                    c = nc;
                    s = ns;
                }
                comps.push(comp);
            }
        }
        comps
    }

    /// Number of closed curves in the diagram.
    pub fn component_count(&self) -> usize {
        self.free_loops + self.crossing_components().len()
    }

    /// Crossing signs for a given direction per crossing component;
    /// `reversed[k]` runs component `k` against its traversal order.
    pub fn crossing_signs(&self, comps: &[Vec<Passage>], reversed: &[bool]) -> Vec<i32> {
        let mut under_in = vec![None; self.crossings.len()];
        let mut over_in = vec![None; self.crossings.len()];
        for (comp, &rev) in comps.iter().zip(reversed) {
            for p in comp {
                let entry = if rev { (p.slot + 2) % 4 } else { p.slot };
                if entry % 2 == 0 {
                    under_in[p.crossing] = Some(entry);
                } else {
                    over_in[p.crossing] = Some(entry);
                }
            }
        }
        under_in
            .iter()
            .zip(&over_in)
            .map(|(u, o)| match (u.expect("under strand traversed"), o.expect("over strand traversed")) {
                (0, 3) | (2, 1) => 1,
                _ => -1,
            })
            .collect()
    }

    pub fn writhe(&self, comps: &[Vec<Passage>], reversed: &[bool]) -> i32 {
        self.crossing_signs(comps, reversed).iter().sum()
    }

    /// Component index of each strand through each crossing: `[under, over]`.
    pub fn strand_components(&self, comps: &[Vec<Passage>]) -> Vec<[usize; 2]> {
        let mut out = vec![[usize::MAX; 2]; self.crossings.len()];
        for (k, comp) in comps.iter().enumerate() {
            for p in comp {
                out[p.crossing][p.slot % 2] = k;
            }
        }
        out
    }

    /// Absolute pairwise linking numbers, over all components including free loops.
    pub fn linking_matrix(&self) -> Vec<Vec<u32>> {
        let comps = self.crossing_components();
        let k = comps.len();
        let total = k + self.free_loops;
        let signs = self.crossing_signs(&comps, &vec![false; k]);
        let owners = self.strand_components(&comps);
        let mut sum = vec![vec![0i32; total]; total];
        for (x, [a, b]) in owners.iter().enumerate() {
            if a != b {
                sum[*a][*b] += signs[x];
                sum[*b][*a] += signs[x];
            }
        }
        sum.into_iter()
            .map(|row| row.into_iter().map(|v| (v / 2).unsigned_abs()).collect())
            .collect()
    }

    /// Faces, each as the cyclic list of darts at which the boundary walk
    /// leaves a crossing along an arc. The walk keeps the face on its left.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let ends = self.ends();
        let mut used = vec![[false; 4]; self.crossings.len()];
        let mut faces = Vec::new();
        for c0 in 0..self.crossings.len() {
            for s0 in 0..4 {
                if used[c0][s0] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut c, mut s) = (c0, s0);
                while !used[c][s] {
                    used[c][s] = true;
                    face.push((c, s));
                    let (nc, ns) = Self::opposite_dart(&ends, self.crossings[c].arcs[s], (c, s));
                    c = nc;
                    s = (ns + 3) % 4;
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Groups of crossings joined by arcs.
    pub fn connected_pieces(&self) -> usize {
        let n = self.crossings.len();
        let mut uf = UnionFind::new(n);
        for [p, q] in self.ends().values() {
            uf.union(p.0, q.0);
        }
        uf.count()
    }

    /// Euler-characteristic check that the cyclic orders describe a sphere
    /// embedding for every connected piece.
    pub fn is_planar(&self) -> bool {
        let v = self.crossings.len() as i64;
        if v == 0 {
            return true;
        }
        let e = 2 * v;
        let f = self.faces().len() as i64;
        v - e + f == 2 * self.connected_pieces() as i64
    }

    /// Mirror image: every crossing flipped.
    pub fn mirror(&self) -> PlanarDiagram {
        PlanarDiagram {
            crossings: self.crossings.iter().map(Crossing::flipped).collect(),
            free_loops: self.free_loops,
        }
    }

    /// Disjoint union, relabelling `other`'s arcs past ours.
    pub fn disjoint_union(&self, other: &PlanarDiagram) -> PlanarDiagram {
        let base = self.max_label().map_or(0, |m| m + 1);
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|x| Crossing { arcs: x.arcs.map(|a| a + base) }));
        PlanarDiagram { crossings, free_loops: self.free_loops + other.free_loops }
    }
}

/// Count closed curves of a diagram.
pub fn trace_components(d: &PlanarDiagram) -> Result<usize> {
    d.arc_ends()?;
    Ok(d.component_count())
}

impl fmt::Display for PlanarDiagram {
    /// `loops <k>` header, then one `X a b c d bd` line per crossing: arcs
    /// counterclockwise, with the `b`-`d` strand over.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "loops {}", self.free_loops)?;
        for x in &self.crossings {
            let [a, b, c, d] = x.arcs;
            writeln!(f, "X {a} {b} {c} {d} bd")?;
        }
        Ok(())
    }
}

impl FromStr for PlanarDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<PlanarDiagram> {
        let bad = |m: String| Error::MalformedDiagram(m);
        let mut free_loops = None;
        let mut crossings = Vec::new();
        for (_, line) in crate::mosaic::content_lines(s) {
            let toks: Vec<&str> = line.split_whitespace().collect();
            match toks.as_slice() {
                ["loops", k] => {
                    free_loops = Some(k.parse().map_err(|_| bad(format!("bad loop count {k:?}")))?);
                }
                ["X", rest @ ..] if rest.len() == 4 || rest.len() == 5 => {
                    let mut arcs = [0; 4];
                    for (a, t) in arcs.iter_mut().zip(rest) {
                        *a = t.parse().map_err(|_| bad(format!("bad arc label {t:?}")))?;
                    }
                    let over = match rest.get(4) {
                        None | Some(&"bd") => OverPair::BD,
                        Some(&"ac") => OverPair::AC,
                        Some(t) => return Err(bad(format!("bad over flag {t:?}"))),
                    };
                    crossings.push(Crossing::new(arcs, over));
                }
                _ => return Err(bad(format!("unrecognized line {line:?}"))),
            }
        }
        PlanarDiagram::new(crossings, free_loops.unwrap_or(0))
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a] = b;
        }
    }

    pub fn count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}
