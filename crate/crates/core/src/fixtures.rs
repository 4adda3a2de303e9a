//! Fixture files: labelled mosaics, one record per catalog entry.
//!
//! ```text
//! # comment lines start with '#'
//! K 5 2_1^2 (L2a1)
//! 10
//!
//! K 12 0_1
//! 1 2
//! 3 4
//! ```
//!
//! A record is a header `K <index> <expected name>` followed by the mosaic
//! rows. Names may themselves contain `#`, so only whole-line comments are
//! recognized.

use std::path::Path;

use crate::error::{Error, Result};
use crate::mosaic::{mosaic_from_rows, parse_row, Mosaic};
use crate::names::LinkName;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub index: usize,
    pub mosaic: Mosaic,
    /// Label as written in the file.
    pub label: String,
    pub expected: LinkName,
}

/// The catalog of toroidal 1- and 2-mosaics shipped with the crate.
pub const BUNDLED_CATALOG: &str = include_str!("../data/catalog_n2.txt");

pub fn bundled() -> Vec<Fixture> {
    parse_fixtures(BUNDLED_CATALOG).expect("bundled fixtures are well formed")
}

pub fn load_fixtures(path: impl AsRef<Path>) -> Result<Vec<Fixture>> {
    parse_fixtures(&std::fs::read_to_string(path)?)
}

pub fn parse_fixtures(text: &str) -> Result<Vec<Fixture>> {
    struct Pending {
        line: usize,
        index: usize,
        label: String,
        expected: LinkName,
        rows: Vec<Vec<crate::tile::Tile>>,
    }
    let fail = |line: usize, reason: String| Error::MalformedFixture { line, reason };
    let finish = |p: Pending| -> Result<Fixture> {
        let mosaic = mosaic_from_rows(p.rows).map_err(|e| fail(p.line, e.to_string()))?;
        Ok(Fixture { index: p.index, mosaic, label: p.label, expected: p.expected })
    };

    let mut out = Vec::new();
    let mut cur: Option<Pending> = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        if let Some(rest) = l.strip_prefix("K ") {
            if let Some(p) = cur.take() {
                out.push(finish(p)?);
            }
            let rest = rest.trim_start();
            let (idx, label) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            let index = idx.parse().map_err(|_| fail(line, format!("bad index {idx:?}")))?;
            let label = label.trim().to_string();
            let expected = label.parse().map_err(|e: Error| fail(line, e.to_string()))?;
            cur = Some(Pending { line, index, label, expected, rows: vec![] });
        } else {
            let p = cur.as_mut().ok_or_else(|| fail(line, "mosaic row before any record header".into()))?;
            p.rows.push(parse_row(l).map_err(|e| fail(line, e.to_string()))?);
        }
    }
    if let Some(p) = cur {
        out.push(finish(p)?);
    }
    Ok(out)
}
