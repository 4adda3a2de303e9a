//! List toroidal knot mosaics and group them into shift classes.

use torus_mosaic::enumerate::{brute_force, enumerate_knot_mosaics, shift_classes, DEFAULT_BRUTE_FORCE_BUDGET};

fn main() {
    for n in 1..=2 {
        let pruned: Vec<_> = enumerate_knot_mosaics(n).collect();
        let brute = brute_force(n, DEFAULT_BRUTE_FORCE_BUDGET).unwrap();
        let classes = shift_classes(&pruned);
        println!(
            "n = {n}: {} mosaics (brute force agrees: {}), {} shift classes",
            pruned.len(),
            pruned == brute,
            classes.len()
        );
    }
    let ones: Vec<String> = enumerate_knot_mosaics(1).map(|m| m.tiles()[0].to_string()).collect();
    println!("1-mosaics: {}", ones.join(" "));
}
