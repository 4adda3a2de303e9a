//! The toroidal mosaic value type and the operations that only look at tiles.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tile::{Edge, Tile};

/// Which pair of opposite edges is identified first when the square is
/// rolled up into a torus in 3-space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Top and bottom identified first.
    #[default]
    Longitudinal,
    /// Left and right identified first.
    Meridianal,
}

impl Convention {
    pub fn flipped(self) -> Convention {
        match self {
            Convention::Longitudinal => Convention::Meridianal,
            Convention::Meridianal => Convention::Longitudinal,
        }
    }
}

impl FromStr for Convention {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "longitudinal" => Ok(Convention::Longitudinal),
            "meridianal" | "meridional" => Ok(Convention::Meridianal),
            _ => Err(format!("unknown convention {s:?}")),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Longitudinal => "longitudinal",
            Convention::Meridianal => "meridianal",
        })
    }
}

/// Exact waste, stored in quarter units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Waste {
    pub quarters: u32,
}

impl Waste {
    pub fn from_quarters(quarters: u32) -> Waste {
        Waste { quarters }
    }

    pub fn whole(units: u32) -> Waste {
        Waste { quarters: 4 * units }
    }

    pub fn is_zero(self) -> bool {
        self.quarters == 0
    }

    pub fn as_f64(self) -> f64 {
        self.quarters as f64 / 4.0
    }
}

impl std::ops::Add for Waste {
    type Output = Waste;
    fn add(self, o: Waste) -> Waste {
        Waste { quarters: self.quarters + o.quarters }
    }
}

impl fmt::Display for Waste {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let whole = self.quarters / 4;
        match self.quarters % 4 {
            0 => write!(f, "{whole}"),
            1 => write!(f, "{whole}.25"),
            2 => write!(f, "{whole}.5"),
            _ => write!(f, "{whole}.75"),
        }
    }
}

impl Serialize for Waste {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_f64(self.as_f64())
    }
}

/// An `n x n` grid of tiles with opposite edges identified.
///
/// Tiles are stored row-major; `get(i, j)` is row `i`, column `j`, with row 0
/// at the top.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mosaic {
    n: usize,
    grid: Vec<Tile>,
}

impl Mosaic {
    pub fn new(n: usize, grid: Vec<Tile>) -> Result<Mosaic> {
        if n == 0 {
            return Err(Error::MalformedMosaic("side length must be positive".into()));
        }
        if grid.len() != n * n {
            return Err(Error::MalformedMosaic(format!(
                "expected {} tiles for n = {n}, got {}",
                n * n,
                grid.len()
            )));
        }
        Ok(Mosaic { n, grid })
    }

    pub fn from_ids(n: usize, ids: &[u8]) -> Result<Mosaic> {
        let grid = ids.iter().map(|&i| Tile::new(i)).collect::<Result<Vec<_>>>()?;
        Mosaic::new(n, grid)
    }

    /// Build from rows of tile ids; panics on bad input. Handy in tests and examples.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Mosaic {
        let n = rows.len();
        let ids: Vec<u8> = rows.iter().flat_map(|r| r.as_ref().iter().copied()).collect();
        Mosaic::from_ids(n, &ids).expect("valid mosaic rows")
    }

    pub fn filled(n: usize, t: Tile) -> Mosaic {
        Mosaic { n, grid: vec![t; n * n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.grid
    }

    pub fn ids(&self) -> Vec<u8> {
        self.grid.iter().map(|t| t.id()).collect()
    }

    pub fn get(&self, i: usize, j: usize) -> Tile {
        self.grid[i * self.n + j]
    }

    /// Tile at `(i, j)` with both indices taken modulo `n`.
    pub fn get_wrapped(&self, i: isize, j: isize) -> Tile {
        let n = self.n as isize;
        self.get(i.rem_euclid(n) as usize, j.rem_euclid(n) as usize)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Tile]> {
        self.grid.chunks(self.n)
    }

    pub fn crossing_count(&self) -> usize {
        self.grid.iter().filter(|t| t.is_crossing()).count()
    }

    /// Every connection point meets a connection point of the contiguous tile,
    /// with rows and columns wrapping around.
    pub fn is_toroidally_suitably_connected(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let t = self.get(i, j);
                t.has(Edge::Right) == self.get(i, (j + 1) % n).has(Edge::Left)
                    && t.has(Edge::Bottom) == self.get((i + 1) % n, j).has(Edge::Top)
            })
        })
    }

    /// Planar suitable connectedness: no wraparound, and no connection point
    /// may sit on the boundary of the square.
    pub fn is_planarly_suitably_connected(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                let t = self.get(i, j);
                let right_ok = if j + 1 < n {
                    t.has(Edge::Right) == self.get(i, j + 1).has(Edge::Left)
                } else {
                    !t.has(Edge::Right)
                };
                let bottom_ok = if i + 1 < n {
                    t.has(Edge::Bottom) == self.get(i + 1, j).has(Edge::Top)
                } else {
                    !t.has(Edge::Bottom)
                };
                if !right_ok || !bottom_ok || (j == 0 && t.has(Edge::Left)) || (i == 0 && t.has(Edge::Top)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn waste(&self) -> Waste {
        Waste::from_quarters(self.grid.iter().map(|t| t.waste_quarters()).sum())
    }

    pub fn is_dense(&self) -> bool {
        self.waste().is_zero()
    }

    /// Cyclic shift: `result[i][j] = self[i + row_offset][j + col_offset]`, indices mod `n`.
    pub fn shift(&self, row_offset: i64, col_offset: i64) -> Mosaic {
        let n = self.n as i64;
        let (dr, dc) = (row_offset.rem_euclid(n) as usize, col_offset.rem_euclid(n) as usize);
        let mut grid = Vec::with_capacity(self.grid.len());
        for i in 0..self.n {
            for j in 0..self.n {
                grid.push(self.get((i + dr) % self.n, (j + dc) % self.n));
            }
        }
        Mosaic { n: self.n, grid }
    }

    /// Counterclockwise quarter turn of the whole mosaic, tiles included.
    pub fn rotate90(&self) -> Mosaic {
        let n = self.n;
        let mut grid = Vec::with_capacity(self.grid.len());
        for i in 0..n {
            for j in 0..n {
                grid.push(self.get(j, n - 1 - i).rotate_ccw());
            }
        }
        Mosaic { n, grid }
    }

    /// The toroidal injection into `(n+1)`-mosaics: a new column of
    /// horizontal lines where the last column exits right, a new row of
    /// vertical lines where the last row exits down, blanks elsewhere.
    pub fn embed(&self) -> Mosaic {
        let n = self.n;
        let m = n + 1;
        let mut grid = vec![Tile::T0; m * m];
        for i in 0..n {
            for j in 0..n {
                grid[i * m + j] = self.get(i, j);
            }
            if self.get(i, n - 1).has(Edge::Right) {
                grid[i * m + n] = Tile::T5;
            }
        }
        for j in 0..n {
            if self.get(n - 1, j).has(Edge::Bottom) {
                grid[n * m + j] = Tile::T6;
            }
        }
        Mosaic { n: m, grid }
    }

    /// Waste on the outer edges of the square (ignoring wraparound).
    pub fn boundary_waste_quarters(&self) -> u32 {
        let n = self.n;
        let mut q = 0;
        for k in 0..n {
            q += !self.get(k, 0).has(Edge::Left) as u32;
            q += !self.get(k, n - 1).has(Edge::Right) as u32;
            q += !self.get(0, k).has(Edge::Top) as u32;
            q += !self.get(n - 1, k).has(Edge::Bottom) as u32;
        }
        q
    }
}

/// Serialized as a list of rows of tile ids.
impl Serialize for Mosaic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.rows().map(|r| r.iter().map(|t| t.id()).collect::<Vec<u8>>()))
    }
}

impl<'de> Deserialize<'de> for Mosaic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Mosaic, D::Error> {
        let rows: Vec<Vec<Tile>> = Vec::deserialize(d)?;
        mosaic_from_rows(rows).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Mosaic {
    /// The mosaic text format: one row per line, ids separated by spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|t| t.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Mosaic {
    type Err = Error;

    /// Parse the text format. Blank lines and `#` comments are ignored.
    fn from_str(s: &str) -> Result<Mosaic> {
        let rows = content_lines(s)
            .map(|(_, l)| parse_row(l))
            .collect::<Result<Vec<_>>>()?;
        mosaic_from_rows(rows)
    }
}

pub(crate) fn content_lines(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.lines().enumerate().filter_map(|(k, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((k + 1, l))
    })
}

pub(crate) fn parse_row(line: &str) -> Result<Vec<Tile>> {
    line.split_whitespace()
        .map(|tok| {
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::MalformedMosaic(format!("not an integer: {tok:?}")))?;
            if !(0..=10).contains(&v) {
                return Err(Error::InvalidTile(v));
            }
            Ok(Tile::new(v as u8).expect("range checked"))
        })
        .collect()
}

pub(crate) fn mosaic_from_rows(rows: Vec<Vec<Tile>>) -> Result<Mosaic> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::MalformedMosaic("no rows".into()));
    }
    if let Some((k, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::MalformedMosaic(format!(
            "row {k} has {} tiles but the mosaic has {n} rows",
            r.len()
        )));
    }
    Mosaic::new(n, rows.into_iter().flatten().collect())
}

/// Free-function forms of the core predicates.
pub fn is_toroidally_suitably_connected(m: &Mosaic) -> bool {
    m.is_toroidally_suitably_connected()
}

pub fn waste(m: &Mosaic) -> Waste {
    m.waste()
}

pub fn is_dense(m: &Mosaic) -> bool {
    m.is_dense()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k24() -> Mosaic {
        Mosaic::from_rows(&[[2, 1], [3, 4]])
    }

    #[test]
    fn suitably_connected_examples() {
        assert!(Mosaic::from_rows(&[[10]]).is_toroidally_suitably_connected());
        assert!(!Mosaic::from_rows(&[[1]]).is_toroidally_suitably_connected());
        assert!(Mosaic::from_rows(&[[1, 2], [3, 4]]).is_toroidally_suitably_connected());
        assert!(Mosaic::filled(2, Tile::T0).is_toroidally_suitably_connected());
    }

    #[test]
    fn one_mosaics_are_exactly_seven() {
        let ok: Vec<u8> = Tile::all()
            .filter(|&t| Mosaic::filled(1, t).is_toroidally_suitably_connected())
            .map(Tile::id)
            .collect();
        assert_eq!(ok, vec![0, 5, 6, 7, 8, 9, 10]);
    }

    #[test]
    fn k24_is_planar_and_its_shift_is_not() {
        let k = k24();
        assert!(k.is_planarly_suitably_connected());
        let s = k.shift(0, 1);
        assert_eq!(s, Mosaic::from_rows(&[[1, 2], [4, 3]]));
        assert!(!s.is_planarly_suitably_connected());
        assert!(s.is_toroidally_suitably_connected());
    }

    #[test]
    fn waste_examples() {
        assert_eq!(Mosaic::from_rows(&[[10]]).waste(), Waste::whole(0));
        assert_eq!(Mosaic::filled(2, Tile::T0).waste(), Waste::whole(4));
        assert_eq!(Mosaic::from_rows(&[[1, 2], [3, 4]]).waste(), Waste::whole(2));
        assert!(Mosaic::filled(2, Tile::T10).is_dense());
        assert!(!Mosaic::from_rows(&[[5]]).is_dense());
        assert!(Mosaic::from_rows(&[[10, 7, 9], [9, 10, 7], [7, 9, 10]]).is_dense());
        assert_eq!(Waste::from_quarters(26).to_string(), "6.5");
    }

    #[test]
    fn shift_examples() {
        let m = Mosaic::from_rows(&[[7, 10], [7, 7]]);
        assert_eq!(m.shift(0, 1), Mosaic::from_rows(&[[10, 7], [7, 7]]));
        assert_eq!(m.shift(2, 2), m);
        assert_eq!(m.shift(-1, 3), m.shift(1, 1));
    }

    #[test]
    fn rotate_examples() {
        assert_eq!(Mosaic::from_rows(&[[5]]).rotate90(), Mosaic::from_rows(&[[6]]));
        assert_eq!(Mosaic::from_rows(&[[10]]).rotate90(), Mosaic::from_rows(&[[9]]));
        let m = Mosaic::from_rows(&[[1, 2], [3, 4]]);
        assert_eq!(m.rotate90().rotate90().rotate90().rotate90(), m);
        // the planar circle stays a planar circle
        assert!(k24().rotate90().is_planarly_suitably_connected());
    }

    #[test]
    fn embed_examples() {
        let e = Mosaic::from_rows(&[[10]]).embed();
        assert_eq!(e, Mosaic::from_rows(&[[10, 5], [6, 0]]));
        assert_eq!(e.waste(), Waste::whole(2));

        let e = Mosaic::from_rows(&[[0]]).embed();
        assert_eq!(e, Mosaic::filled(2, Tile::T0));
        assert_eq!(e.waste(), Waste::whole(4));

        let e = Mosaic::from_rows(&[[1, 2], [3, 4]]).embed();
        assert_eq!(e, Mosaic::from_rows(&[[1, 2, 5], [3, 4, 0], [0, 0, 0]]));
        assert_eq!(e.waste(), Waste::from_quarters(26));
        assert!(e.is_toroidally_suitably_connected());
    }

    #[test]
    fn parse_and_print() {
        let m: Mosaic = "# Fig\n10 7 9\n\n9 10 7 # row two\n7 9 10\n".parse().unwrap();
        assert_eq!(m.n(), 3);
        assert_eq!(m.to_string().parse::<Mosaic>().unwrap(), m);
        assert!(matches!("1 2\n3".parse::<Mosaic>(), Err(Error::MalformedMosaic(_))));
        assert!(matches!("11".parse::<Mosaic>(), Err(Error::InvalidTile(11))));
        assert!(matches!("".parse::<Mosaic>(), Err(Error::MalformedMosaic(_))));
        assert!("a b\n1 2".parse::<Mosaic>().is_err());
    }
}
