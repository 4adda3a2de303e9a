//! Audit the bundled labelled catalog of 1- and 2-mosaics.

use torus_mosaic::catalog::audit_catalog;
use torus_mosaic::fixtures::bundled;
use torus_mosaic::Convention;

fn main() {
    let report = audit_catalog(&bundled(), Convention::Longitudinal);
    print!("{}", report.summary());
}
