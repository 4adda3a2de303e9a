//! Turning a toroidal mosaic into a planar link diagram.
//!
//! The square is drawn in the plane. A strand leaving through the bottom of
//! column `j` is closed up to the top of the same column by an arc routed
//! around the right-hand side of the square; a strand leaving through the
//! right of row `i` is closed up to the left of the same row by an arc routed
//! around the bottom. Closure arcs of one family are nested (column `n-1`
//! and row `n-1` innermost) so they never meet each other, and each row
//! closure meets each column closure exactly once, below and to the right of
//! the square. Those seam crossings all share one over/under rule, fixed by
//! the [`Convention`]: longitudinally the column closures pass over.

use serde::Serialize;

use crate::diagram::{ArcId, Crossing, OverPair, PlanarDiagram, UnionFind};
use crate::error::{Error, Result};
use crate::mosaic::{Convention, Mosaic};
use crate::tile::{Edge, OverStrand, Pairing};

/// Seam strands of a mosaic: which rows carry a strand across the left/right
/// seam and which columns carry one across the top/bottom seam. The routing
/// index of a closure arc is its position in the list (0 outermost).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeamClosure {
    pub rows: Vec<usize>,
    pub columns: Vec<usize>,
}

impl SeamClosure {
    pub fn of(m: &Mosaic) -> SeamClosure {
        let n = m.n();
        SeamClosure {
            rows: (0..n).filter(|&i| m.get(i, n - 1).has(Edge::Right)).collect(),
            columns: (0..n).filter(|&j| m.get(n - 1, j).has(Edge::Bottom)).collect(),
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.rows.len() * self.columns.len()
    }
}

/// Whether column closures pass over row closures under `c`.
fn columns_over(c: Convention) -> bool {
    matches!(c, Convention::Longitudinal)
}

struct Wiring {
    n: usize,
    edges: Vec<(usize, usize)>,
    nodes: usize,
}

impl Wiring {
    /// Point on the vertical line `x = k` in row `i`.
    fn h(&self, i: usize, k: usize) -> usize {
        i * (self.n + 1) + k
    }

    /// Point on the horizontal line `y = k` (counted from the top) in column `j`.
    fn v(&self, k: usize, j: usize) -> usize {
        self.n * (self.n + 1) + k * self.n + j
    }

    fn point(&self, i: usize, j: usize, e: Edge) -> usize {
        match e {
            Edge::Left => self.h(i, j),
            Edge::Right => self.h(i, j + 1),
            Edge::Top => self.v(i, j),
            Edge::Bottom => self.v(i + 1, j),
        }
    }

    fn port(&mut self) -> usize {
        self.nodes += 1;
        self.nodes - 1
    }
}

/// Planar diagram of a toroidally suitably connected mosaic.
pub fn planarize(m: &Mosaic, convention: Convention) -> Result<PlanarDiagram> {
    if !m.is_toroidally_suitably_connected() {
        return Err(Error::NotSuitablyConnected);
    }
    let n = m.n();
    let mut w = Wiring { n, edges: Vec::new(), nodes: 2 * n * (n + 1) };
    // Port quadruples, counterclockwise, with the pair carrying the over strand.
    let mut crossings: Vec<([usize; 4], OverPair)> = Vec::new();

    for i in 0..n {
        for j in 0..n {
            let t = m.get(i, j);
            match t.record().pairing {
                Pairing::Empty => {}
                Pairing::Single(a, b) => w.edges.push((w.point(i, j, a), w.point(i, j, b))),
                Pairing::Double(arcs) => {
                    for (a, b) in arcs {
                        w.edges.push((w.point(i, j, a), w.point(i, j, b)));
                    }
                }
                Pairing::Crossing(over) => {
                    // east, north, west, south
                    let sides = [Edge::Right, Edge::Top, Edge::Left, Edge::Bottom];
                    let mut ports = [0; 4];
                    for (p, e) in ports.iter_mut().zip(sides) {
                        *p = w.port();
                        w.edges.push((*p, w.point(i, j, e)));
                    }
                    let pair = match over {
                        OverStrand::Horizontal => OverPair::AC,
                        OverStrand::Vertical => OverPair::BD,
                    };
                    crossings.push((ports, pair));
                }
            }
        }
    }

    let seams = SeamClosure::of(m);
    // seam[(r, c)] holds the ports of the crossing of row closure r with
    // column closure c: [column onward, row back, column back, row onward].
    let mut seam = vec![vec![[0usize; 4]; seams.columns.len()]; seams.rows.len()];
    let seam_over = if columns_over(convention) { OverPair::AC } else { OverPair::BD };
    for row in seam.iter_mut() {
        for ports in row.iter_mut() {
            *ports = [w.port(), w.port(), w.port(), w.port()];
            crossings.push((*ports, seam_over));
        }
    }
    // Row closure: from the right edge, down past the column closures from
    // the innermost (last) outwards, then around to the left edge.
    for (r, &i) in seams.rows.iter().enumerate() {
        let mut at = w.h(i, n);
        for c in (0..seams.columns.len()).rev() {
            w.edges.push((at, seam[r][c][1]));
            at = seam[r][c][3];
        }
        w.edges.push((at, w.h(i, 0)));
    }
    // Column closure: from the bottom edge, right past the row closures from
    // the innermost (last) outwards, then up and around to the top edge.
    for (c, &j) in seams.columns.iter().enumerate() {
        let mut at = w.v(n, j);
        for r in (0..seams.rows.len()).rev() {
            w.edges.push((at, seam[r][c][2]));
            at = seam[r][c][0];
        }
        w.edges.push((at, w.v(0, j)));
    }

    // Arcs are the connected pieces of the wiring graph that reach ports.
    let mut uf = UnionFind::new(w.nodes);
    let mut degree = vec![0u8; w.nodes];
    for &(a, b) in &w.edges {
        uf.union(a, b);
        degree[a] += 1;
        degree[b] += 1;
    }
    let mut label = vec![None::<ArcId>; w.nodes];
    let mut next: ArcId = 0;
    let mut arcs_of = |ports: &[usize; 4], uf: &mut UnionFind| {
        ports.map(|p| {
            let root = uf.find(p);
            *label[root].get_or_insert_with(|| {
                next += 1;
                next - 1
            })
        })
    };
    let mut out = Vec::with_capacity(crossings.len());
    for (ports, over) in &crossings {
        out.push(Crossing::new(arcs_of(ports, &mut uf), *over));
    }
    let first_port = 2 * n * (n + 1);
    let mut has_port = vec![false; w.nodes];
    for p in first_port..w.nodes {
        has_port[uf.find(p)] = true;
    }
    let free_loops = (0..first_port)
        .filter(|&p| degree[p] > 0 && uf.find(p) == p && !has_port[p])
        .count();
    PlanarDiagram::new(out, free_loops)
}
