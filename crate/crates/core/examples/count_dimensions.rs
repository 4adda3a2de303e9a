//! Exact counts by transfer matrix, well past where listing is possible.

use std::time::Instant;

use torus_mosaic::count::{all_mosaics, count_transfer_matrix};

fn main() {
    for n in 1..=6 {
        let t = Instant::now();
        let r = count_transfer_matrix(n).unwrap();
        println!(
            "n = {n}: {} knot mosaics, {} shift classes, of {} grids ({:.2?})",
            r.total_mosaics,
            r.shift_classes,
            all_mosaics(n),
            t.elapsed()
        );
    }
}
