//! Listing toroidal knot mosaics and reducing them modulo cyclic shifts.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mosaic::Mosaic;
use crate::tile::{Edge, Tile};

/// Largest grid count the brute-force scan accepts by default (`11^4`
/// grids for `n = 2` fit comfortably; `11^9` for `n = 3` does not).
pub const DEFAULT_BRUTE_FORCE_BUDGET: u64 = 10_000_000;

/// Every one of the `11^(n^2)` grids, tested one by one. Refuses when that
/// exceeds `budget`.
pub fn brute_force(n: usize, budget: u64) -> Result<Vec<Mosaic>> {
    let cells = n * n;
    let space = 11u64.checked_pow(cells as u32).filter(|&s| s <= budget);
    let Some(space) = space.filter(|_| n > 0) else {
        return Err(Error::BudgetExceeded {
            what: "brute-force search space",
            size: format!("11^{cells}"),
            limit: budget.to_string(),
        });
    };
    Ok((0..space)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut ids = vec![0u8; cells];
            for k in (0..cells).rev() {
                ids[k] = (code % 11) as u8;
                code /= 11;
            }
            let m = Mosaic::from_ids(n, &ids).expect("ids below 11");
            m.is_toroidally_suitably_connected().then_some(m)
        })
        .collect())
}

/// Row-major backtracking: each tile must agree with its left and upper
/// neighbours when placed, and with the wrapped neighbour when it closes a
/// row or a column. Yields mosaics in lexicographic order of their ids.
pub struct KnotMosaics {
    n: usize,
    grid: Vec<Tile>,
    // next tile id to try at each position
    next: Vec<u8>,
    pos: usize,
    done: bool,
}

impl KnotMosaics {
    pub fn new(n: usize) -> KnotMosaics {
        KnotMosaics { n, grid: vec![Tile::T0; n * n], next: vec![0; n * n], pos: 0, done: n == 0 }
    }

    /// Generator restricted to mosaics whose first row is `first`.
    fn with_first_row(n: usize, first: &[Tile]) -> KnotMosaics {
        let mut g = KnotMosaics::new(n);
        g.grid[..n].copy_from_slice(first);
        g.pos = n;
        g.done = n == 0;
        g
    }

    fn fits(&self, k: usize, t: Tile) -> bool {
        let n = self.n;
        let (i, j) = (k / n, k % n);
        // the wrapped neighbour is the tile itself when n = 1
        let at = |x: usize| if x == k { t } else { self.grid[x] };
        if j > 0 && self.grid[k - 1].has(Edge::Right) != t.has(Edge::Left) {
            return false;
        }
        if j == n - 1 && t.has(Edge::Right) != at(k - j).has(Edge::Left) {
            return false;
        }
        if i > 0 && self.grid[k - n].has(Edge::Bottom) != t.has(Edge::Top) {
            return false;
        }
        if i == n - 1 && t.has(Edge::Bottom) != at(j).has(Edge::Top) {
            return false;
        }
        true
    }

    /// Next mosaic, backtracking no further than cell `floor`.
    fn advance(&mut self, floor: usize) -> Option<Mosaic> {
        let cells = self.n * self.n;
        while !self.done {
            if self.pos == cells {
                let m = Mosaic::new(self.n, self.grid.clone()).expect("full grid");
                // resume at the last cell next time
                self.pos -= 1;
                return Some(m);
            }
            let k = self.pos;
            let mut placed = false;
            while self.next[k] < 11 {
                let t = Tile::new(self.next[k]).expect("id below 11");
                self.next[k] += 1;
                if self.fits(k, t) {
                    self.grid[k] = t;
                    placed = true;
                    break;
                }
            }
            if placed {
                self.pos += 1;
            } else {
                self.next[k] = 0;
                if k == floor {
                    self.done = true;
                } else {
                    self.pos -= 1;
                }
            }
        }
        None
    }
}

impl Iterator for KnotMosaics {
    type Item = Mosaic;

    fn next(&mut self) -> Option<Mosaic> {
        self.advance(0)
    }
}

/// All toroidal knot `n`-mosaics in lexicographic order, generated by the
/// pruned search.
pub fn enumerate_knot_mosaics(n: usize) -> KnotMosaics {
    KnotMosaics::new(n)
}

/// Same set and order as [`enumerate_knot_mosaics`], with the search split
/// by first row across worker threads.
pub fn enumerate_parallel(n: usize) -> Vec<Mosaic> {
    if n == 0 {
        return Vec::new();
    }
    let rows: Vec<Vec<Tile>> = crate::count::cyclic_rows(n).into_iter().map(|(r, _, _)| r).collect();
    let parts: Vec<Vec<Mosaic>> = rows
        .par_iter()
        .map(|first| {
            if n == 1 {
                return vec![Mosaic::new(1, first.clone()).expect("one tile")];
            }
            let mut g = KnotMosaics::with_first_row(n, first);
            std::iter::from_fn(|| g.advance(n)).collect()
        })
        .collect();
    parts.into_iter().flatten().collect()
}

/// Lexicographically least row-major grid among all `n^2` cyclic shifts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalKey(Mosaic);

impl CanonicalKey {
    pub fn mosaic(&self) -> &Mosaic {
        &self.0
    }

    pub fn into_mosaic(self) -> Mosaic {
        self.0
    }
}

pub fn canonical_key(m: &Mosaic) -> CanonicalKey {
    let n = m.n() as i64;
    let best = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| m.shift(a, b))
        .min()
        .expect("at least one shift");
    CanonicalKey(best)
}

/// Number of distinct mosaics among the cyclic shifts of `m`.
pub fn class_size(m: &Mosaic) -> usize {
    let n = m.n() as i64;
    let mut seen: Vec<Mosaic> = (0..n).flat_map(|a| (0..n).map(move |b| m.shift(a, b))).collect();
    seen.sort();
    seen.dedup();
    seen.len()
}

/// Group mosaics by shift class: canonical key to member count.
pub fn shift_classes<'a>(ms: impl IntoIterator<Item = &'a Mosaic>) -> BTreeMap<CanonicalKey, usize> {
    let mut out = BTreeMap::new();
    for m in ms {
        *out.entry(canonical_key(m)).or_insert(0) += 1;
    }
    out
}
