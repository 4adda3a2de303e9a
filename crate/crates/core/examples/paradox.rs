//! The same grid read under both edge-identification conventions.

use torus_mosaic::{identify, Convention, Mosaic};

fn main() {
    let grids = [("[T10]", "10"), ("[T9]", "9"), ("all T7", "7 7\n7 7"), ("T8 T10 / T9 T8", "8 10\n9 8")];
    println!("{:<16} {:<16} meridianal", "mosaic", "longitudinal");
    for (label, text) in grids {
        let m: Mosaic = text.parse().unwrap();
        let name = |c| identify(&m, c).unwrap().name_string();
        println!("{label:<16} {:<16} {}", name(Convention::Longitudinal), name(Convention::Meridianal));
    }
}
