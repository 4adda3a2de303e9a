//! Toroidal vs planar suitable connectedness.

use torus_mosaic::Mosaic;

fn main() {
    let cases = [
        ("small circle across the seam", "1 2\n3 4\n"),
        ("same circle, shifted to the middle", "2 1\n4 3\n"),
        ("loose ends", "5 0\n0 0\n"),
        ("all T10", "10 10\n10 10\n"),
    ];
    for (what, text) in cases {
        let m: Mosaic = text.parse().expect("valid mosaic text");
        println!(
            "{what:<36} toroidal={:<5} planar={}",
            m.is_toroidally_suitably_connected(),
            m.is_planarly_suitably_connected()
        );
    }
}
