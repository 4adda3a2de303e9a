//! Cyclic shifts, quarter turns, and canonical shift-class keys.

use torus_mosaic::enumerate::{canonical_key, class_size};
use torus_mosaic::{identify, Convention, Mosaic};

fn main() {
    let m: Mosaic = "8 10\n9 8\n".parse().unwrap();
    println!("mosaic:\n{m}");
    println!("shifted one row:\n{}", m.shift(1, 0));
    println!("canonical key:\n{}class size {}", canonical_key(&m).mosaic(), class_size(&m));

    // a quarter turn is a different toroidal mosaic and may be a different link
    let t: Mosaic = "10".parse().unwrap();
    let r = t.rotate90();
    for (label, x) in [("T10", &t), ("T10 turned", &r)] {
        println!("{label}: {}", identify(x, Convention::Longitudinal).unwrap().name_string());
    }
}
