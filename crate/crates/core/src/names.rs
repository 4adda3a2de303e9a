//! Link names as they appear in the catalog: prime atoms combined with
//! connected sum (`#`) and disjoint union (`+`).

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Prime links the catalog is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Unknot,
    Hopf,
    Trefoil,
    /// The `(2,4)` torus link.
    L4a1,
    /// Borromean rings.
    L6a4,
    L6a5,
    /// The `(3,3)` torus link.
    L6n1,
    L8n8,
}

impl Atom {
    pub const ALL: [Atom; 8] = [
        Atom::Unknot,
        Atom::Hopf,
        Atom::Trefoil,
        Atom::L4a1,
        Atom::L6a4,
        Atom::L6a5,
        Atom::L6n1,
        Atom::L8n8,
    ];

    /// Rolfsen-style symbol.
    pub fn symbol(self) -> &'static str {
        match self {
            Atom::Unknot => "0_1",
            Atom::Hopf => "2_1^2",
            Atom::Trefoil => "3_1",
            Atom::L4a1 => "4_1^2",
            Atom::L6a4 => "6_2^3",
            Atom::L6a5 => "6_1^3",
            Atom::L6n1 => "6_3^3",
            Atom::L8n8 => "8_3^4",
        }
    }

    /// Thistlethwaite name, for the links that have one.
    pub fn table_name(self) -> Option<&'static str> {
        match self {
            Atom::Unknot | Atom::Trefoil => None,
            Atom::Hopf => Some("L2a1"),
            Atom::L4a1 => Some("L4a1"),
            Atom::L6a4 => Some("L6a4"),
            Atom::L6a5 => Some("L6a5"),
            Atom::L6n1 => Some("L6n1"),
            Atom::L8n8 => Some("L8n8"),
        }
    }

    pub fn components(self) -> usize {
        match self {
            Atom::Unknot | Atom::Trefoil => 1,
            Atom::Hopf | Atom::L4a1 => 2,
            Atom::L6a4 | Atom::L6a5 | Atom::L6n1 => 3,
            Atom::L8n8 => 4,
        }
    }

    pub fn crossing_number(self) -> usize {
        match self {
            Atom::Unknot => 0,
            Atom::Hopf => 2,
            Atom::Trefoil => 3,
            Atom::L4a1 => 4,
            Atom::L6a4 | Atom::L6a5 | Atom::L6n1 => 6,
            Atom::L8n8 => 8,
        }
    }

    fn parse(s: &str) -> Option<Atom> {
        Atom::ALL
            .into_iter()
            .find(|a| a.symbol() == s || a.table_name() == Some(s))
            .or(match s {
                "O" | "unknot" => Some(Atom::Unknot),
                "hopf" => Some(Atom::Hopf),
                "borromean" => Some(Atom::L6a4),
                _ => None,
            })
    }
}

/// A split union of connected sums of atoms. No summands is the empty link.
///
/// Normal form: factors of each summand in descending order, summands in
/// descending order, and the unknot only ever as a summand on its own.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LinkName {
    summands: Vec<Vec<Atom>>,
}

impl LinkName {
    pub fn empty() -> LinkName {
        LinkName::default()
    }

    pub fn atom(a: Atom) -> LinkName {
        LinkName::new(vec![vec![a]])
    }

    pub fn new(summands: Vec<Vec<Atom>>) -> LinkName {
        let mut summands: Vec<Vec<Atom>> = summands
            .into_iter()
            .filter(|s| !s.is_empty())
            .map(|mut s| {
                if s.iter().any(|&a| a != Atom::Unknot) {
                    s.retain(|&a| a != Atom::Unknot);
                } else {
                    s.truncate(1);
                }
                s.sort_by(|a, b| b.cmp(a));
                s
            })
            .collect();
        summands.sort_by(|a, b| b.cmp(a));
        LinkName { summands }
    }

    pub fn summands(&self) -> &[Vec<Atom>] {
        &self.summands
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn as_atom(&self) -> Option<Atom> {
        match self.summands.as_slice() {
            [s] if s.len() == 1 => Some(s[0]),
            _ => None,
        }
    }

    pub fn components(&self) -> usize {
        self.summands
            .iter()
            .map(|s| s.iter().map(|a| a.components()).sum::<usize>() + 1 - s.len())
            .sum()
    }

    pub fn crossing_number_bound(&self) -> usize {
        self.summands.iter().flatten().map(|a| a.crossing_number()).sum()
    }

    pub fn atom_count(&self) -> usize {
        self.summands.iter().map(Vec::len).sum()
    }
}

impl fmt::Display for LinkName {
    /// ASCII rendering; a lone atom carries its table name, e.g. `2_1^2 (L2a1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("phi");
        }
        if let Some(a) = self.as_atom() {
            return match a.table_name() {
                Some(t) => write!(f, "{} ({t})", a.symbol()),
                None => f.write_str(a.symbol()),
            };
        }
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|s| s.iter().map(|a| a.symbol()).collect::<Vec<_>>().join("#"))
            .collect();
        f.write_str(&parts.join("+"))
    }
}

impl FromStr for LinkName {
    type Err = Error;
    fn from_str(s: &str) -> Result<LinkName> {
        let bad = || Error::BadLinkName(s.to_string());
        let mut text = s.trim().to_string();
        // a trailing table name in parentheses must agree with the symbol
        let mut table = None;
        if let Some(open) = text.find('(') {
            let close = text.rfind(')').ok_or_else(bad)?;
            table = Some(text[open + 1..close].trim().to_string());
            text = text[..open].trim().to_string();
        }
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if text == "phi" || text == "φ" || text.is_empty() && table.is_none() {
            return Ok(LinkName::empty());
        }
        let name = if text.is_empty() {
            LinkName::atom(Atom::parse(table.as_deref().ok_or_else(bad)?).ok_or_else(bad)?)
        } else {
            let summands = text
                .split('+')
                .map(|part| part.split('#').map(|a| Atom::parse(a).ok_or_else(bad)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            LinkName::new(summands)
        };
        if let Some(t) = table {
            if name.as_atom().and_then(Atom::table_name) != Some(t.as_str()) {
                return Err(bad());
            }
        }
        Ok(name)
    }
}

impl Serialize for LinkName {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
