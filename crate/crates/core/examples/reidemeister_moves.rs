//! Reidemeister moves leave the normalized polynomial unchanged.

use torus_mosaic::bracket::invariant_set;
use torus_mosaic::diagram::OverPair;
use torus_mosaic::moves::{add_bigon, add_kink, r3_pair, Kink};
use torus_mosaic::planarize::planarize;
use torus_mosaic::{Convention, Mosaic};

fn main() {
    let m: Mosaic = "7 10\n7 7\n".parse().unwrap();
    let d = planarize(&m, Convention::Longitudinal).unwrap();
    let before = invariant_set(&d).unwrap();
    let arcs: Vec<u32> = d.crossings.iter().flat_map(|x| x.arcs).collect();

    let r1 = add_kink(&d, arcs[0], Kink::Left, OverPair::AC).unwrap();
    let r2 = add_bigon(&d, arcs[0], arcs[2]).unwrap();
    let (l, r) = r3_pair(&d, arcs[0], arcs[2], arcs[5], true).unwrap();
    println!("R1: {} crossings, unchanged: {}", r1.crossing_count(), invariant_set(&r1).unwrap() == before);
    println!("R2: {} crossings, unchanged: {}", r2.crossing_count(), invariant_set(&r2).unwrap() == before);
    println!("R3: {} crossings, sides agree: {}", l.crossing_count(), invariant_set(&l).unwrap() == invariant_set(&r).unwrap());
}
