//! The eleven mosaic tiles.
//!
//! Every tile is a unit square with connection points at the midpoints of
//! some of its edges. The strands inside a tile pair those points up:
//!
//! | id  | connection points         | strands                              |
//! |-----|---------------------------|--------------------------------------|
//! | 0   | none                      | none                                 |
//! | 1   | left, bottom              | one arc                              |
//! | 2   | right, bottom             | one arc                              |
//! | 3   | right, top                | one arc                              |
//! | 4   | left, top                 | one arc                              |
//! | 5   | left, right               | horizontal line                      |
//! | 6   | top, bottom               | vertical line                        |
//! | 7   | all four                  | arcs left-top and right-bottom       |
//! | 8   | all four                  | arcs left-bottom and right-top       |
//! | 9   | all four                  | crossing, vertical strand over       |
//! | 10  | all four                  | crossing, horizontal strand over     |

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One side of a tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Edge {
    Left,
    Right,
    Top,
    Bottom,
}

impl Edge {
    pub const ALL: [Edge; 4] = [Edge::Left, Edge::Right, Edge::Top, Edge::Bottom];

    fn bit(self) -> u8 {
        match self {
            Edge::Left => 1,
            Edge::Right => 2,
            Edge::Top => 4,
            Edge::Bottom => 8,
        }
    }

    /// The edge this one lands on after a counterclockwise quarter turn.
    pub fn rotate_ccw(self) -> Edge {
        match self {
            Edge::Left => Edge::Bottom,
            Edge::Bottom => Edge::Right,
            Edge::Right => Edge::Top,
            Edge::Top => Edge::Left,
        }
    }

    pub fn opposite(self) -> Edge {
        match self {
            Edge::Left => Edge::Right,
            Edge::Right => Edge::Left,
            Edge::Top => Edge::Bottom,
            Edge::Bottom => Edge::Top,
        }
    }
}

/// Set of tile edges carrying a connection point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EdgeSet(u8);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);
    pub const FULL: EdgeSet = EdgeSet(15);

    pub fn of(edges: &[Edge]) -> EdgeSet {
        EdgeSet(edges.iter().fold(0, |m, e| m | e.bit()))
    }

    pub fn contains(self, e: Edge) -> bool {
        self.0 & e.bit() != 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Edge> {
        Edge::ALL.into_iter().filter(move |&e| self.contains(e))
    }
}

/// Which strand of a crossing tile passes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OverStrand {
    /// The left-right strand.
    Horizontal,
    /// The top-bottom strand.
    Vertical,
}

/// How a tile's connection points are joined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pairing {
    Empty,
    /// A single strand: an arc or a straight line.
    Single(Edge, Edge),
    /// Two non-crossing arcs.
    Double([(Edge, Edge); 2]),
    /// Left-right and top-bottom strands crossing in the tile centre.
    Crossing(OverStrand),
}

/// Fixed description of one tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TileRecord {
    pub id: u8,
    pub edges: EdgeSet,
    pub pairing: Pairing,
}

impl TileRecord {
    pub fn over_marker(&self) -> Option<OverStrand> {
        match self.pairing {
            Pairing::Crossing(o) => Some(o),
            _ => None,
        }
    }

    /// The strands as pairs of edges; a crossing yields its two straight strands.
    pub fn strands(&self) -> Vec<(Edge, Edge)> {
        use Edge::*;
        match self.pairing {
            Pairing::Empty => vec![],
            Pairing::Single(a, b) => vec![(a, b)],
            Pairing::Double(p) => p.to_vec(),
            Pairing::Crossing(_) => vec![(Left, Right), (Top, Bottom)],
        }
    }
}

const TABLE: [TileRecord; 11] = {
    use Edge::*;
    const fn rec(id: u8, edges: u8, pairing: Pairing) -> TileRecord {
        TileRecord { id, edges: EdgeSet(edges), pairing }
    }
    [
        rec(0, 0, Pairing::Empty),
        rec(1, 1 | 8, Pairing::Single(Left, Bottom)),
        rec(2, 2 | 8, Pairing::Single(Right, Bottom)),
        rec(3, 2 | 4, Pairing::Single(Right, Top)),
        rec(4, 1 | 4, Pairing::Single(Left, Top)),
        rec(5, 1 | 2, Pairing::Single(Left, Right)),
        rec(6, 4 | 8, Pairing::Single(Top, Bottom)),
        rec(7, 15, Pairing::Double([(Left, Top), (Right, Bottom)])),
        rec(8, 15, Pairing::Double([(Left, Bottom), (Right, Top)])),
        rec(9, 15, Pairing::Crossing(OverStrand::Vertical)),
        rec(10, 15, Pairing::Crossing(OverStrand::Horizontal)),
    ]
};

/// Image of each tile under a counterclockwise quarter turn.
const ROTATE_CCW: [u8; 11] = [0, 2, 3, 4, 1, 6, 5, 8, 7, 10, 9];

/// A mosaic tile, identified by its index `0..=10`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Tile(u8);

impl Tile {
    pub const COUNT: usize = 11;

    pub const T0: Tile = Tile(0);
    pub const T1: Tile = Tile(1);
    pub const T2: Tile = Tile(2);
    pub const T3: Tile = Tile(3);
    pub const T4: Tile = Tile(4);
    pub const T5: Tile = Tile(5);
    pub const T6: Tile = Tile(6);
    pub const T7: Tile = Tile(7);
    pub const T8: Tile = Tile(8);
    pub const T9: Tile = Tile(9);
    pub const T10: Tile = Tile(10);

    pub fn new(id: u8) -> Result<Tile> {
        if (id as usize) < Self::COUNT {
            Ok(Tile(id))
        } else {
            Err(Error::InvalidTile(id as i64))
        }
    }

    pub fn all() -> impl Iterator<Item = Tile> + Clone {
        (0..Self::COUNT as u8).map(Tile)
    }

    pub fn id(self) -> u8 {
        self.0
    }

    pub fn record(self) -> &'static TileRecord {
        &TABLE[self.0 as usize]
    }

    pub fn edges(self) -> EdgeSet {
        self.record().edges
    }

    pub fn has(self, e: Edge) -> bool {
        self.edges().contains(e)
    }

    pub fn is_crossing(self) -> bool {
        matches!(self.record().pairing, Pairing::Crossing(_))
    }

    /// Waste in quarter units: one quarter per edge without a connection point.
    pub fn waste_quarters(self) -> u32 {
        4 - self.edges().len()
    }

    pub fn rotate_ccw(self) -> Tile {
        Tile(ROTATE_CCW[self.0 as usize])
    }
}

/// Record for a tile id; rejects ids outside `0..=10`.
pub fn tile_edges(id: i64) -> Result<&'static TileRecord> {
    if (0..Tile::COUNT as i64).contains(&id) {
        Ok(&TABLE[id as usize])
    } else {
        Err(Error::InvalidTile(id))
    }
}

impl TryFrom<u8> for Tile {
    type Error = Error;
    fn try_from(id: u8) -> Result<Tile> {
        Tile::new(id)
    }
}

impl From<Tile> for u8 {
    fn from(t: Tile) -> u8 {
        t.0
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
