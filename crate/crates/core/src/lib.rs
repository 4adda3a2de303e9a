//! Knot mosaics on the torus.
//!
//! A toroidal `n`-mosaic is an `n x n` grid of the eleven mosaic tiles with
//! opposite edges of the square identified. This crate checks toroidal
//! suitable connectedness, measures waste, enumerates and counts toroidal
//! knot mosaics up to cyclic shifts, turns a mosaic into a planar link
//! diagram under either edge-identification convention, and names the
//! resulting link from its Kauffman bracket invariants.

pub mod bracket;
pub mod catalog;
pub mod count;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod identify;
pub mod mosaic;
pub mod moves;
pub mod names;
pub mod planarize;
pub mod poly;
pub mod reference;
pub mod tile;

pub use error::{Error, Result};
pub use identify::{identify, Identification};
pub use names::{Atom, LinkName};
pub use mosaic::{Convention, Mosaic, Waste};
pub use tile::Tile;
