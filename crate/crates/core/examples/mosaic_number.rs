//! Smallest toroidal mosaic size for a few links.

use torus_mosaic::catalog::min_toroidal_mosaic_number;
use torus_mosaic::{Convention, LinkName};

fn main() {
    for name in ["2_1^2 (L2a1)", "3_1", "4_1^2 (L4a1)", "8_3^4 (L8n8)", "6_1^3 (L6a5)"] {
        let link: LinkName = name.parse().unwrap();
        match min_toroidal_mosaic_number(&link, 2, Convention::Longitudinal).unwrap() {
            Some(n) => println!("{name:<14} {n}"),
            None => println!("{name:<14} > 2"),
        }
    }
}
