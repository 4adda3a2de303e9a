//! Link diagrams drawn from closed polygonal curves in the plane.
//!
//! The crossings of a family of closed curves are found geometrically and
//! turned into PD form; the caller decides which strand is over at each
//! crossing. The named atoms of the identification dictionary are drawn this
//! way, from their standard pictures:
//!
//! * Hopf link: two overlapping circles, alternating.
//! * trefoil: the shadow of the (2,3) torus knot, alternating.
//! * `L4a1`: two crossed ellipses (four crossings), alternating.
//! * `L6a4`: three circles in Venn position, alternating (Borromean rings).
//! * `L6a5`: three circles chained in a triangle without a common overlap,
//!   alternating.
//! * `L6n1`: the (3,3) torus link.
//! * `L8n8`: the 2-cable of the Hopf link, two rings threaded on two others.

use std::collections::VecDeque;
use std::f64::consts::TAU;

use crate::diagram::{ArcId, Crossing, OverPair, PlanarDiagram};
use crate::error::{Error, Result};

pub type Point = [f64; 2];

/// A place where a curve passes through a crossing.
#[derive(Debug, Clone, Copy)]
pub struct Pass {
    pub curve: usize,
    /// Segment index plus the fractional position along that segment.
    pub position: f64,
    pub direction: Point,
}

#[derive(Debug, Clone, Copy)]
pub struct CurveCrossing {
    pub first: Pass,
    pub second: Pass,
    pub at: Point,
}

fn cross(a: Point, b: Point) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

fn sub(a: Point, b: Point) -> Point {
    [a[0] - b[0], a[1] - b[1]]
}

/// All transverse intersections between segments of the curves.
pub fn find_crossings(curves: &[Vec<Point>]) -> Vec<CurveCrossing> {
    let segs: Vec<(usize, usize, Point, Point)> = curves
        .iter()
        .enumerate()
        .flat_map(|(c, pts)| (0..pts.len()).map(move |k| (c, k, pts[k], pts[(k + 1) % pts.len()])))
        .collect();
    let mut out = Vec::new();
    for (x, &(c1, k1, p1, q1)) in segs.iter().enumerate() {
        for &(c2, k2, p2, q2) in &segs[x + 1..] {
            if c1 == c2 {
                let len = curves[c1].len();
                if k2 == (k1 + 1) % len || k1 == (k2 + 1) % len {
                    continue;
                }
            }
            let (d1, d2) = (sub(q1, p1), sub(q2, p2));
            let den = cross(d1, d2);
            if den.abs() < 1e-12 {
                continue;
            }
            let w = sub(p2, p1);
            let t = cross(w, d2) / den;
            let u = cross(w, d1) / den;
            if (0.0..1.0).contains(&t) && (0.0..1.0).contains(&u) {
                out.push(CurveCrossing {
                    first: Pass { curve: c1, position: k1 as f64 + t, direction: d1 },
                    second: Pass { curve: c2, position: k2 as f64 + u, direction: d2 },
                    at: [p1[0] + t * d1[0], p1[1] + t * d1[1]],
                });
            }
        }
    }
    out
}

/// Build a PD diagram; `first_over[k]` says whether the `first` pass of
/// crossing `k` goes over.
pub fn diagram_from_crossings(
    curves: &[Vec<Point>],
    crossings: &[CurveCrossing],
    first_over: &[bool],
) -> Result<PlanarDiagram> {
    // order of passes along each curve: (position, crossing, is_first)
    let mut along: Vec<Vec<(f64, usize, bool)>> = vec![Vec::new(); curves.len()];
    for (k, x) in crossings.iter().enumerate() {
        along[x.first.curve].push((x.first.position, k, true));
        along[x.second.curve].push((x.second.position, k, false));
    }
    let mut next_label: ArcId = 0;
    // (arc in, arc out) per pass, indexed [crossing][first/second]
    let mut ends = vec![[(0, 0); 2]; crossings.len()];
    let mut free_loops = 0;
    for passes in along.iter_mut() {
        if passes.is_empty() {
            free_loops += 1;
            continue;
        }
        passes.sort_by(|a, b| a.0.total_cmp(&b.0));
        let base = next_label;
        let m = passes.len() as ArcId;
        for (idx, &(_, k, is_first)) in passes.iter().enumerate() {
            let idx = idx as ArcId;
            let arc_in = base + (idx + m - 1) % m;
            let arc_out = base + idx;
            ends[k][usize::from(!is_first)] = (arc_in, arc_out);
        }
        next_label += m;
    }
    let out = crossings
        .iter()
        .enumerate()
        .map(|(k, x)| {
            let [(a_in, a_out), (b_in, b_out)] = ends[k];
            let arcs = if cross(x.first.direction, x.second.direction) > 0.0 {
                [a_out, b_out, a_in, b_in]
            } else {
                [a_out, b_in, a_in, b_out]
            };
            Crossing::new(arcs, if first_over[k] { OverPair::AC } else { OverPair::BD })
        })
        .collect();
    PlanarDiagram::new(out, free_loops)
}

/// Over/under choice making every curve alternate. Fails if the crossing
/// pattern admits no alternating choice.
pub fn alternating_choice(curves: &[Vec<Point>], crossings: &[CurveCrossing]) -> Result<Vec<bool>> {
    // pass ids: 2k for first, 2k+1 for second
    let mut along: Vec<Vec<(f64, usize)>> = vec![Vec::new(); curves.len()];
    for (k, x) in crossings.iter().enumerate() {
        along[x.first.curve].push((x.first.position, 2 * k));
        along[x.second.curve].push((x.second.position, 2 * k + 1));
    }
    let mut neighbours = vec![Vec::new(); 2 * crossings.len()];
    for passes in along.iter_mut() {
        passes.sort_by(|a, b| a.0.total_cmp(&b.0));
        for w in 0..passes.len() {
            let (p, q) = (passes[w].1, passes[(w + 1) % passes.len()].1);
            if p != q {
                neighbours[p].push(q);
                neighbours[q].push(p);
            }
        }
    }
    for k in 0..crossings.len() {
        neighbours[2 * k].push(2 * k + 1);
        neighbours[2 * k + 1].push(2 * k);
    }
    let mut over: Vec<Option<bool>> = vec![None; 2 * crossings.len()];
    for start in 0..over.len() {
        if over[start].is_some() {
            continue;
        }
        over[start] = Some(true);
        let mut queue = VecDeque::from([start]);
        while let Some(p) = queue.pop_front() {
            let v = over[p].expect("assigned before queueing");
            for &q in &neighbours[p] {
                match over[q] {
                    None => {
                        over[q] = Some(!v);
                        queue.push_back(q);
                    }
                    Some(w) if w == v => {
                        return Err(Error::MalformedDiagram("curves admit no alternating crossing choice".into()))
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok((0..crossings.len()).map(|k| over[2 * k].expect("all passes assigned")).collect())
}

/// Alternating diagram of the curves, then with the listed crossings flipped.
pub fn alternating_diagram(curves: &[Vec<Point>], flip: impl Fn(&CurveCrossing) -> bool) -> Result<PlanarDiagram> {
    let xs = find_crossings(curves);
    let mut choice = alternating_choice(curves, &xs)?;
    for (c, x) in choice.iter_mut().zip(&xs) {
        if flip(x) {
            *c = !*c;
        }
    }
    diagram_from_crossings(curves, &xs, &choice)
}

const SAMPLES: usize = 90;
// keeps polygon vertices away from the intersection points
const PHASE: f64 = 0.1234;

pub fn circle(center: Point, radius: f64) -> Vec<Point> {
    ellipse(center, radius, radius)
}

pub fn ellipse(center: Point, rx: f64, ry: f64) -> Vec<Point> {
    (0..SAMPLES)
        .map(|k| {
            let t = TAU * (k as f64 + PHASE) / SAMPLES as f64;
            [center[0] + rx * t.cos(), center[1] + ry * t.sin()]
        })
        .collect()
}

/// Shadow of the `(p, q)` torus knot or link component drawn around the origin.
pub fn torus_shadow(p: u32, q: u32) -> Vec<Point> {
    let samples = SAMPLES * q as usize;
    (0..samples)
        .map(|k| {
            let t = TAU * (k as f64 + PHASE) / samples as f64;
            let r = 2.0 + (q as f64 * t).cos();
            [r * (p as f64 * t).cos(), r * (p as f64 * t).sin()]
        })
        .collect()
}

/// `k` circles with centres on the unit circle, each overlapping its two
/// neighbours and nothing else.
pub fn ring_chain(k: usize, radius: f64) -> Vec<Vec<Point>> {
    (0..k)
        .map(|i| {
            let a = TAU * i as f64 / k as f64;
            circle([a.cos(), a.sin()], radius)
        })
        .collect()
}

pub fn hopf_link() -> PlanarDiagram {
    alternating_diagram(&[circle([-0.5, 0.0], 1.0), circle([0.5, 0.0], 1.0)], |_| false).expect("hopf reference")
}

pub fn trefoil() -> PlanarDiagram {
    alternating_diagram(&[torus_shadow(2, 3)], |_| false).expect("trefoil reference")
}

pub fn l4a1() -> PlanarDiagram {
    alternating_diagram(&[ellipse([0.0, 0.0], 2.0, 1.0), ellipse([0.0, 0.0], 1.0, 2.0)], |_| false)
        .expect("L4a1 reference")
}

pub fn borromean_rings() -> PlanarDiagram {
    alternating_diagram(&ring_chain(3, 1.5), |_| false).expect("L6a4 reference")
}

pub fn l6a5() -> PlanarDiagram {
    alternating_diagram(&ring_chain(3, 0.95), |_| false).expect("L6a5 reference")
}

/// Two parallel rings, each threaded by two further rings: the 2-cable of
/// the Hopf link. Drawn as two concentric circles crossed by two small
/// circles that pass over both on one side and under both on the other.
pub fn l8n8() -> PlanarDiagram {
    let curves = [
        circle([0.0, 0.0], 2.0),
        circle([0.0, 0.0], 2.6),
        circle([2.3, 0.0], 0.7),
        circle([-2.3, 0.0], 0.7),
    ];
    let xs = find_crossings(&curves);
    // the small rings are over above the x axis
    let over: Vec<bool> = xs.iter().map(|x| (x.first.curve >= 2) == (x.at[1] > 0.0)).collect();
    diagram_from_crossings(&curves, &xs, &over).expect("L8n8 reference")
}

/// The `(p, q)` torus link drawn on a round torus seen from above, with
/// `gcd(p, q)` components; over/under follows height.
pub fn torus_link(p: u32, q: u32) -> PlanarDiagram {
    fn gcd(a: u32, b: u32) -> u32 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    let d = gcd(p, q).max(1);
    let samples = SAMPLES * (p + q) as usize;
    let mut curves = Vec::new();
    let mut heights = Vec::new();
    for k in 0..d {
        let (mut c, mut h) = (Vec::new(), Vec::new());
        for s in 0..samples {
            let t = TAU * (p / d) as f64 * (s as f64 + PHASE) / samples as f64;
            let phi = q as f64 / p as f64 * t + TAU * k as f64 / p as f64;
            let r = 2.0 + phi.cos();
            c.push([r * t.cos(), r * t.sin()]);
            h.push(phi.sin());
        }
        curves.push(c);
        heights.push(h);
    }
    let xs = find_crossings(&curves);
    let height = |c: usize, pos: f64| {
        let k = pos.floor() as usize;
        let t = pos - k as f64;
        let h = &heights[c];
        h[k % h.len()] * (1.0 - t) + h[(k + 1) % h.len()] * t
    };
    let over: Vec<bool> = xs
        .iter()
        .map(|x| height(x.first.curve, x.first.position) > height(x.second.curve, x.second.position))
        .collect();
    diagram_from_crossings(&curves, &xs, &over).expect("torus link reference")
}

/// The `(3,3)` torus link `L6n1`.
pub fn l6n1() -> PlanarDiagram {
    torus_link(3, 3)
}

/// Four-ring chain with every clasp alternating (`L8a21`); used to show the
/// flipped clasp matters.
pub fn alternating_four_chain() -> PlanarDiagram {
    alternating_diagram(&ring_chain(4, 0.85), |_| false).expect("4-chain reference")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_and_component_counts() {
        let cases = [
            (hopf_link(), 2, 2),
            (trefoil(), 3, 1),
            (l4a1(), 4, 2),
            (borromean_rings(), 6, 3),
            (l6a5(), 6, 3),
            (l6n1(), 6, 3),
            (l8n8(), 8, 4),
            (torus_link(2, 3), 3, 1),
            (torus_link(2, 4), 4, 2),
        ];
        for (d, crossings, comps) in cases {
            assert_eq!(d.crossing_count(), crossings);
            assert_eq!(d.component_count(), comps);
            assert!(d.is_planar());
        }
    }

    #[test]
    fn linking_patterns() {
        assert_eq!(l4a1().linking_matrix(), vec![vec![0, 2], vec![2, 0]]);
        // Borromean rings: pairwise unlinked
        assert!(borromean_rings().linking_matrix().iter().flatten().all(|&v| v == 0));
        // triangle chain: every pair links once
        let m = l6a5().linking_matrix();
        #[allow(clippy::needless_range_loop)]
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m[i][j], u32::from(i != j));
            }
        }
        let m = l8n8().linking_matrix();
        // a 4-cycle: each ring links two others once
        for row in &m {
            assert_eq!(row.iter().sum::<u32>(), 2);
            assert_eq!(row.iter().filter(|&&v| v == 0).count(), 2);
        }
    }

    #[test]
    fn two_unlinked_circles() {
        let d = diagram_from_crossings(&[circle([0.0, 0.0], 1.0), circle([5.0, 0.0], 1.0)], &[], &[]).unwrap();
        assert_eq!(d.free_loops, 2);
    }

    #[test]
    fn stacked_curves_are_a_valid_non_alternating_choice() {
        let curves = [circle([-0.5, 0.0], 1.0), circle([0.5, 0.0], 1.0)];
        let xs = find_crossings(&curves);
        assert_eq!(xs.len(), 2);
        let d = diagram_from_crossings(&curves, &xs, &[true, true]).unwrap();
        assert_eq!(d.linking_matrix(), vec![vec![0, 0], vec![0, 0]]);
    }
}
