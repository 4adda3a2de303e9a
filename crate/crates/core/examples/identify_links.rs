//! Name the links a few mosaics represent.

use torus_mosaic::{identify, Convention, Mosaic};

fn main() {
    let grids = [
        ("trefoil", "7 10\n7 7"),
        ("two-column clasp", "7 10\n7 10"),
        ("all T10", "10 10\n10 10"),
        ("(3,3) torus link", "10 10\n7 10"),
        ("dense 3x3 diagonal", "10 7 9\n9 10 7\n7 9 10"),
        ("empty", "0"),
    ];
    for (label, text) in grids {
        let m: Mosaic = text.parse().unwrap();
        let id = identify(&m, Convention::Longitudinal).unwrap();
        println!("{label:<22} {id}");
    }
}
