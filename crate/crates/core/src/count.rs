//! Counting toroidal knot mosaics without listing them.
//!
//! A row of `w` tiles that is consistent across its own wraparound has a top
//! signature and a bottom signature: the set of columns with a connection
//! point on that side. `M[s][t]` counts rows with top `s` and bottom `t`, so
//! the number of toroidal knot `n`-mosaics is `trace(M^n)`.
//!
//! Shift classes follow from Burnside's lemma. A mosaic fixed by the shift
//! `(a, b)` is a tiling of a twisted torus: `h` rows of width `w` where row
//! `i + h` is row `i` rotated by `s`. Those are counted with the same
//! signature matrices.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tile::{Edge, Tile};

/// Widest row the transfer method will enumerate rows for.
pub const MAX_TRANSFER_WIDTH: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CountMethod {
    BruteForce,
    TransferMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub n: usize,
    #[serde(serialize_with = "as_decimal")]
    pub total_mosaics: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub shift_classes: BigUint,
    pub method: CountMethod,
}

fn as_decimal<S: serde::Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

/// `11^(n^2)`, the number of all `n`-mosaics.
pub fn all_mosaics(n: usize) -> BigUint {
    BigUint::from(11u32).pow((n * n) as u32)
}

/// Rows of width `w` consistent across their wraparound, as
/// `(tiles, top signature, bottom signature)`.
pub fn cyclic_rows(w: usize) -> Vec<(Vec<Tile>, usize, usize)> {
    fn extend(w: usize, row: &mut Vec<Tile>, out: &mut Vec<(Vec<Tile>, usize, usize)>) {
        if row.len() == w {
            if row[w - 1].has(Edge::Right) == row[0].has(Edge::Left) {
                let sig = |e: Edge| row.iter().enumerate().filter(|(_, t)| t.has(e)).map(|(k, _)| 1 << k).sum();
                out.push((row.clone(), sig(Edge::Top), sig(Edge::Bottom)));
            }
            return;
        }
        for t in Tile::all() {
            if row.last().is_none_or(|l| l.has(Edge::Right) == t.has(Edge::Left)) {
                row.push(t);
                extend(w, row, out);
                row.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(w, &mut Vec::with_capacity(w), &mut out);
    out
}

type Matrix = Vec<Vec<BigUint>>;

fn identity(k: usize) -> Matrix {
    (0..k).map(|i| (0..k).map(|j| BigUint::from(u8::from(i == j))).collect()).collect()
}

fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let k = a.len();
    let mut out = vec![vec![BigUint::ZERO; k]; k];
    for i in 0..k {
        for (l, ail) in a[i].iter().enumerate() {
            if *ail == BigUint::ZERO {
                continue;
            }
            for j in 0..k {
                if b[l][j] != BigUint::ZERO {
                    out[i][j] += ail * &b[l][j];
                }
            }
        }
    }
    out
}

fn power(m: &Matrix, mut e: usize) -> Matrix {
    let mut base = m.clone();
    let mut acc = identity(m.len());
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    acc
}

/// Row-signature transfer matrix for width `w`.
pub fn transfer_matrix(w: usize) -> Vec<Vec<BigUint>> {
    let k = 1 << w;
    let mut m = vec![vec![BigUint::ZERO; k]; k];
    for (_, top, bottom) in cyclic_rows(w) {
        m[top][bottom] += 1u32;
    }
    m
}

fn check_width(n: usize) -> Result<()> {
    if n == 0 || n > MAX_TRANSFER_WIDTH {
        return Err(Error::BudgetExceeded {
            what: "transfer-matrix row width",
            size: n.to_string(),
            limit: format!("1..={MAX_TRANSFER_WIDTH}"),
        });
    }
    Ok(())
}

/// Mosaics fixed by the shift `M'[i][j] = M[i + a][j + b]`.
pub fn fixed_by_shift(n: usize, a: usize, b: usize) -> Result<BigUint> {
    check_width(n)?;
    // basis {(h, s), (0, w)} of the period lattice spanned by (n,0), (0,n), (a,b)
    let h = n.gcd(&(a % n));
    let k = (0..n).find(|k| k * a % n == h % n).expect("h is a multiple of gcd(a, n)");
    let w = n.gcd(&((n / h) * b % n));
    let w = if w == 0 { n } else { w };
    let s = (k * b) % w;

    let m = transfer_matrix(w);
    let walk = power(&m, h - 1);
    let mut total = BigUint::ZERO;
    let rows = cyclic_rows(w);
    let top_of: HashMap<Vec<Tile>, usize> = rows.iter().map(|(r, t, _)| (r.clone(), *t)).collect();
    for (r, _, bottom) in &rows {
        // row h is row 0 rotated right by s
        let rotated: Vec<Tile> = (0..w).map(|j| r[(j + w - s) % w]).collect();
        let top = top_of[&rotated];
        total += &walk[*bottom][top];
    }
    Ok(total)
}

/// Total and shift-class counts by the transfer method.
pub fn count_transfer_matrix(n: usize) -> Result<CountReport> {
    check_width(n)?;
    let m = power(&transfer_matrix(n), n);
    let total: BigUint = (0..m.len()).map(|i| m[i][i].clone()).sum();
    let mut orbit_sum = BigUint::ZERO;
    for a in 0..n {
        for b in 0..n {
            orbit_sum += fixed_by_shift(n, a, b)?;
        }
    }
    let shift_classes = orbit_sum / BigUint::from(n * n);
    Ok(CountReport { n, total_mosaics: total, shift_classes, method: CountMethod::TransferMatrix })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one() {
        let r = count_transfer_matrix(1).unwrap();
        assert_eq!(r.total_mosaics, BigUint::from(7u32));
        assert_eq!(r.shift_classes, BigUint::from(7u32));
    }

    #[test]
    fn identity_shift_fixes_everything() {
        for n in 1..=3 {
            assert_eq!(fixed_by_shift(n, 0, 0).unwrap(), count_transfer_matrix(n).unwrap().total_mosaics);
        }
    }

    #[test]
    fn rows_respect_wraparound() {
        // width 1: the tile must match itself left to right
        let ids: Vec<u8> = cyclic_rows(1).iter().map(|(r, _, _)| r[0].id()).collect();
        assert_eq!(ids, vec![0, 5, 6, 7, 8, 9, 10]);
    }

    #[test]
    fn refuses_wide_rows() {
        assert!(matches!(count_transfer_matrix(MAX_TRANSFER_WIDTH + 1), Err(Error::BudgetExceeded { .. })));
        assert!(count_transfer_matrix(0).is_err());
    }
}
