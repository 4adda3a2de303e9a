//! Independent planarization: draw the mosaic's strands on a round torus in
//! space, project to the plane from a tilted viewpoint, and read each
//! crossing's over/under from depth. Shares only the polyline crossing finder
//! with the library; no seam closures are involved.

use std::f64::consts::{PI, TAU};

use torus_mosaic::diagram::PlanarDiagram;
use torus_mosaic::reference::{diagram_from_crossings, find_crossings, Point};
use torus_mosaic::tile::{Edge, OverStrand};
use torus_mosaic::{Convention, Mosaic};

const MAJOR: f64 = 3.0;
const MINOR: f64 = 1.0;
// radial offset of the strands at a crossing tile
const LIFT: f64 = 0.15;
const SAMPLES: usize = 24;
const TILT_X: f64 = 0.31;
const TURN_Z: f64 = 0.173;

fn midpoint(e: Edge) -> [f64; 2] {
    match e {
        Edge::Left => [0.0, 0.5],
        Edge::Right => [1.0, 0.5],
        Edge::Top => [0.5, 0.0],
        Edge::Bottom => [0.5, 1.0],
    }
}

/// Point on the strand from edge `a` to edge `b` at parameter `s`, in tile
/// coordinates (x right, y down).
fn strand_point(a: Edge, b: Edge, s: f64) -> [f64; 2] {
    let (p, q) = (midpoint(a), midpoint(b));
    if a.opposite() == b {
        return [p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])];
    }
    // quarter circle around the shared corner
    let c = [if p[0] == 0.0 || q[0] == 0.0 { 0.0 } else { 1.0 }, if p[1] == 0.0 || q[1] == 0.0 { 0.0 } else { 1.0 }];
    let t0 = (p[1] - c[1]).atan2(p[0] - c[0]);
    let mut t1 = (q[1] - c[1]).atan2(q[0] - c[0]);
    while t1 - t0 > PI {
        t1 -= TAU;
    }
    while t0 - t1 > PI {
        t1 += TAU;
    }
    let t = t0 + s * (t1 - t0);
    [c[0] + 0.5 * t.cos(), c[1] + 0.5 * t.sin()]
}

fn neighbour(n: usize, i: usize, j: usize, e: Edge) -> (usize, usize) {
    match e {
        Edge::Left => (i, (j + n - 1) % n),
        Edge::Right => (i, (j + 1) % n),
        Edge::Top => ((i + n - 1) % n, j),
        Edge::Bottom => ((i + 1) % n, j),
    }
}

/// Closed curves in mosaic coordinates with a radial offset per sample.
fn trace(m: &Mosaic) -> Vec<Vec<([f64; 2], f64)>> {
    let n = m.n();
    let mut used = vec![Vec::<(Edge, Edge)>::new(); n * n];
    let mut curves = Vec::new();
    for i0 in 0..n {
        for j0 in 0..n {
            for (a0, b0) in m.get(i0, j0).record().strands() {
                if used[i0 * n + j0].contains(&(a0, b0)) {
                    continue;
                }
                let mut curve = Vec::new();
                let (mut i, mut j, mut a, mut b) = (i0, j0, a0, b0);
                loop {
                    used[i * n + j].push((a, b));
                    used[i * n + j].push((b, a));
                    let rec = m.get(i, j).record();
                    let level = match rec.over_marker() {
                        None => 0.0,
                        Some(over) => {
                            let horizontal = matches!(a, Edge::Left | Edge::Right);
                            let on_top = horizontal == (over == OverStrand::Horizontal);
                            if on_top { LIFT } else { -LIFT }
                        }
                    };
                    for k in 0..SAMPLES {
                        let s = (k as f64 + 0.377) / SAMPLES as f64;
                        let p = strand_point(a, b, s);
                        curve.push(([j as f64 + p[0], i as f64 + p[1]], level * (PI * s).sin()));
                    }
                    let (ni, nj) = neighbour(n, i, j, b);
                    let entry = b.opposite();
                    let next = m
                        .get(ni, nj)
                        .record()
                        .strands()
                        .into_iter()
                        .map(|(x, y)| if y == entry { (y, x) } else { (x, y) })
                        .find(|&(x, _)| x == entry)
                        .expect("suitably connected");
                    (i, j, a, b) = (ni, nj, next.0, next.1);
                    if (i, j, a, b) == (i0, j0, a0, b0) {
                        break;
                    }
                }
                curves.push(curve);
            }
        }
    }
    curves
}

/// Planar diagram of the mosaic drawn on a round torus.
pub fn torus_diagram(m: &Mosaic, convention: Convention) -> PlanarDiagram {
    let n = m.n() as f64;
    let (ct, st) = (TURN_Z.cos(), TURN_Z.sin());
    let (cx, sx) = (TILT_X.cos(), TILT_X.sin());
    let mut flat: Vec<Vec<Point>> = Vec::new();
    let mut depth: Vec<Vec<f64>> = Vec::new();
    for curve in trace(m) {
        let (mut f, mut d) = (Vec::new(), Vec::new());
        for ([x, y], h) in curve {
            let (u, v) = (x / n, y / n);
            // horizontal runs around the tube in the longitudinal convention
            let (phi, theta) = match convention {
                Convention::Longitudinal => (TAU * u, TAU * v),
                Convention::Meridianal => (-TAU * v, TAU * u),
            };
            let rho = MAJOR + (MINOR + h) * phi.cos();
            let p = [rho * theta.cos(), rho * theta.sin(), (MINOR + h) * phi.sin()];
            let q = [p[0] * ct - p[1] * st, p[0] * st + p[1] * ct, p[2]];
            let r = [q[0], q[1] * cx - q[2] * sx, q[1] * sx + q[2] * cx];
            f.push([r[0], r[1]]);
            d.push(r[2]);
        }
        flat.push(f);
        depth.push(d);
    }
    let xs = find_crossings(&flat);
    let at = |c: usize, pos: f64| {
        let k = pos.floor() as usize;
        let t = pos - k as f64;
        let len = depth[c].len();
        depth[c][k % len] * (1.0 - t) + depth[c][(k + 1) % len] * t
    };
    let over: Vec<bool> = xs.iter().map(|x| at(x.first.curve, x.first.position) > at(x.second.curve, x.second.position)).collect();
    diagram_from_crossings(&flat, &xs, &over).expect("projected curves give a valid diagram")
}
