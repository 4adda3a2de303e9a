//! Planarize a mosaic and evaluate its bracket.

use torus_mosaic::bracket::{invariant_set, kauffman_bracket};
use torus_mosaic::planarize::{planarize, SeamClosure};
use torus_mosaic::{Convention, Mosaic};

fn main() {
    let m: Mosaic = "7 10\n7 7\n".parse().unwrap();
    let seams = SeamClosure::of(&m);
    let d = planarize(&m, Convention::Longitudinal).unwrap();
    println!("{} explicit + {} seam crossings, {} components", m.crossing_count(), seams.crossing_count(), d.component_count());
    print!("{d}");
    println!("bracket: {}", kauffman_bracket(&d).unwrap());
    for p in invariant_set(&d).unwrap() {
        println!("normalized: {p}");
    }
}
