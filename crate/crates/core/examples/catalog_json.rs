//! Build the 2-mosaic catalog and write it as JSON.
//!
//! `cargo run --release --example catalog_json -- catalog.json`

use torus_mosaic::catalog::build_catalog;
use torus_mosaic::Convention;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c = build_catalog(2, Convention::Longitudinal)?;
    for e in c.entries.iter().filter(|e| e.components >= 3) {
        println!("{:>3}  {}  {}", e.index, torus_mosaic::catalog::row_string(&e.representative), e.name_string());
    }
    for d in &c.discrepancies {
        println!("discrepancy: {d}");
    }
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, c.to_json())?;
        println!("wrote {path}");
    }
    Ok(())
}
