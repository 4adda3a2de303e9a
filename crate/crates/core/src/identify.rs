//! Naming links by invariants.
//!
//! A link is keyed by its component count, the set of writhe-normalized
//! bracket polynomials over all orientations, and its absolute linking
//! matrix up to relabelling of components. The polynomial set alone cannot
//! tell `2_1^2+2_1^2` from `2_1^2#2_1^2+0_1`; the linking matrix can.
//!
//! Atom keys come from the reference diagrams in [`crate::reference`],
//! evaluated by the same bracket engine. Composite keys follow from the
//! atoms: connected sum multiplies polynomials, disjoint union multiplies
//! them and adds a factor `-A^2 - A^-2`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use itertools::Itertools;
use serde::Serialize;

use crate::bracket::{self, DEFAULT_CROSSING_BUDGET};
use crate::diagram::PlanarDiagram;
use crate::error::Result;
use crate::mosaic::{Convention, Mosaic};
use crate::names::{Atom, LinkName};
use crate::planarize::planarize;
use crate::poly::LaurentPolynomial;
use crate::reference;

pub type PolySet = BTreeSet<LaurentPolynomial>;

/// Absolute linking matrix in a relabelling-independent form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinkingKey(Vec<u32>);

/// Above this many components the key falls back to sorted rows.
const EXACT_KEY_COMPONENTS: usize = 7;

impl LinkingKey {
    pub fn of(m: &[Vec<u32>]) -> LinkingKey {
        let k = m.len();
        if k > EXACT_KEY_COMPONENTS {
            let mut rows: Vec<Vec<u32>> = m
                .iter()
                .map(|r| {
                    let mut r = r.clone();
                    r.sort();
                    r
                })
                .collect();
            rows.sort();
            let mut flat = vec![u32::MAX];
            flat.extend(rows.into_iter().flatten());
            return LinkingKey(flat);
        }
        let best = (0..k)
            .permutations(k)
            .map(|perm| perm.iter().flat_map(|&i| perm.iter().map(move |&j| m[i][j])).collect::<Vec<u32>>())
            .min();
        LinkingKey(best.unwrap_or_default())
    }
}

/// Invariants of one atom, from its reference diagram.
#[derive(Debug, Clone)]
pub struct AtomInvariants {
    pub atom: Atom,
    pub components: usize,
    /// The orientation polynomial set of the reference diagram and of its mirror.
    pub forms: [PolySet; 2],
    pub linking: Vec<Vec<u32>>,
}

fn reference_diagram(a: Atom) -> PlanarDiagram {
    match a {
        Atom::Unknot => PlanarDiagram { crossings: vec![], free_loops: 1 },
        Atom::Hopf => reference::hopf_link(),
        Atom::Trefoil => reference::trefoil(),
        Atom::L4a1 => reference::l4a1(),
        Atom::L6a4 => reference::borromean_rings(),
        Atom::L6a5 => reference::l6a5(),
        Atom::L6n1 => reference::l6n1(),
        Atom::L8n8 => reference::l8n8(),
    }
}

impl AtomInvariants {
    fn compute(atom: Atom) -> AtomInvariants {
        let d = reference_diagram(atom);
        let set = bracket::invariant_set(&d).expect("reference diagrams are within budget");
        let mirrored = set.iter().map(LaurentPolynomial::mirror).collect();
        AtomInvariants { atom, components: d.component_count(), forms: [set, mirrored], linking: d.linking_matrix() }
    }
}

/// Bounds on the composite names generated from the atoms.
#[derive(Debug, Clone, Copy)]
pub struct CompositeLimits {
    pub max_components: usize,
    /// Sum of the atoms' crossing numbers.
    pub max_crossings: usize,
}

impl Default for CompositeLimits {
    fn default() -> Self {
        CompositeLimits { max_components: 6, max_crossings: 12 }
    }
}

#[derive(Debug, Clone)]
pub struct DictionaryEntry {
    pub name: LinkName,
    pub components: usize,
    /// Every admissible (polynomial set, linking key) pair, over mirror
    /// choices of the atoms and ways of forming the connected sums.
    pub keys: BTreeSet<(PolySet, LinkingKey)>,
}

/// Two names whose invariant keys coincide.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Collision {
    pub first: LinkName,
    pub second: LinkName,
}

#[derive(Debug, Clone)]
pub struct LinkDictionary {
    pub atoms: Vec<AtomInvariants>,
    pub entries: Vec<DictionaryEntry>,
    pub collisions: Vec<Collision>,
    index: BTreeMap<(usize, PolySet, LinkingKey), Vec<usize>>,
}

impl LinkDictionary {
    /// The shared dictionary with default limits.
    pub fn global() -> &'static LinkDictionary {
        static DICT: OnceLock<LinkDictionary> = OnceLock::new();
        DICT.get_or_init(|| LinkDictionary::build(CompositeLimits::default()))
    }

    pub fn build(limits: CompositeLimits) -> LinkDictionary {
        let atoms: Vec<AtomInvariants> = Atom::ALL.into_iter().map(AtomInvariants::compute).collect();
        let by_atom: BTreeMap<Atom, &AtomInvariants> = atoms.iter().map(|a| (a.atom, a)).collect();
        let mut entries: Vec<DictionaryEntry> = generate_names(limits)
            .into_iter()
            .map(|name| {
                let keys = name_keys(&name, &by_atom);
                DictionaryEntry { components: name.components(), name, keys }
            })
            .collect();
        // atoms first, then simpler composites
        entries.sort_by_key(|e| (e.name.atom_count() > 1, e.name.crossing_number_bound(), e.name.clone()));

        let mut index: BTreeMap<(usize, PolySet, LinkingKey), Vec<usize>> = BTreeMap::new();
        for (i, e) in entries.iter().enumerate() {
            for (p, l) in &e.keys {
                index.entry((e.components, p.clone(), l.clone())).or_default().push(i);
            }
        }
        let mut collisions = BTreeSet::new();
        for ids in index.values() {
            for (x, &a) in ids.iter().enumerate() {
                for &b in &ids[x + 1..] {
                    collisions.insert((entries[a].name.clone(), entries[b].name.clone()));
                }
            }
        }
        let collisions = collisions.into_iter().map(|(first, second)| Collision { first, second }).collect();
        LinkDictionary { atoms, entries, collisions, index }
    }

    pub fn entry(&self, name: &LinkName) -> Option<&DictionaryEntry> {
        self.entries.iter().find(|e| &e.name == name)
    }

    /// Names matching the invariants, in preference order.
    pub fn lookup(&self, components: usize, polys: &PolySet, linking: &LinkingKey) -> Vec<&LinkName> {
        self.index
            .get(&(components, polys.clone(), linking.clone()))
            .map(|ids| ids.iter().map(|&i| &self.entries[i].name).collect())
            .unwrap_or_default()
    }

    /// Collisions that involve only names from `names`.
    pub fn collisions_among<'a>(&'a self, names: &'a BTreeSet<LinkName>) -> impl Iterator<Item = &'a Collision> {
        self.collisions.iter().filter(move |c| names.contains(&c.first) && names.contains(&c.second))
    }
}

fn generate_names(limits: CompositeLimits) -> Vec<LinkName> {
    let primes: Vec<Atom> = Atom::ALL.into_iter().filter(|&a| a != Atom::Unknot).collect();
    // connected sums: non-increasing sequences of prime atoms
    let mut sums: Vec<Vec<Atom>> = vec![vec![Atom::Unknot]];
    let mut frontier: Vec<Vec<Atom>> = vec![vec![]];
    while let Some(cur) = frontier.pop() {
        for &a in &primes {
            if cur.last().is_some_and(|&l| a > l) {
                continue;
            }
            let mut next = cur.clone();
            next.push(a);
            let name = LinkName::new(vec![next.clone()]);
            if name.components() <= limits.max_components && name.crossing_number_bound() <= limits.max_crossings {
                sums.push(next.clone());
                frontier.push(next);
            }
        }
    }
    sums.sort();
    // unions: non-increasing sequences of connected sums
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    while let Some(cur) = frontier.pop() {
        for (k, _) in sums.iter().enumerate() {
            if cur.last().is_some_and(|&l| k > l) {
                continue;
            }
            let mut next = cur.clone();
            next.push(k);
            let name = LinkName::new(next.iter().map(|&i| sums[i].clone()).collect());
            if name.components() <= limits.max_components && name.crossing_number_bound() <= limits.max_crossings {
                out.push(name);
                frontier.push(next);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn product_sets(a: &PolySet, b: &PolySet) -> PolySet {
    a.iter().flat_map(|p| b.iter().map(move |q| p * q)).collect()
}

/// Linking matrices of a connected sum over every way of choosing the
/// components that get joined.
fn sum_linking(factors: &[&AtomInvariants]) -> BTreeSet<Vec<Vec<u32>>> {
    let mut acc: BTreeSet<Vec<Vec<u32>>> = BTreeSet::from([factors[0].linking.clone()]);
    for f in &factors[1..] {
        let mut next = BTreeSet::new();
        for m in &acc {
            for keep in 0..m.len() {
                for join in 0..f.components {
                    // components of f other than `join` are appended after m's
                    let others: Vec<usize> = (0..f.components).filter(|&c| c != join).collect();
                    let size = m.len() + others.len();
                    let mut out = vec![vec![0; size]; size];
                    for i in 0..m.len() {
                        for j in 0..m.len() {
                            out[i][j] = m[i][j];
                        }
                    }
                    let slot = |c: usize| if c == join { keep } else { m.len() + others.iter().position(|&o| o == c).unwrap() };
                    for a in 0..f.components {
                        for b in 0..f.components {
                            if a != b {
                                out[slot(a)][slot(b)] = f.linking[a][b];
                            }
                        }
                    }
                    next.insert(out);
                }
            }
        }
        acc = next;
    }
    acc
}

fn block_diagonal(blocks: &[&Vec<Vec<u32>>]) -> Vec<Vec<u32>> {
    let size: usize = blocks.iter().map(|b| b.len()).sum();
    let mut out = vec![vec![0; size]; size];
    let mut off = 0;
    for b in blocks {
        for i in 0..b.len() {
            for j in 0..b.len() {
                out[off + i][off + j] = b[i][j];
            }
        }
        off += b.len();
    }
    out
}

/// Polynomial sets and linking matrices one summand can realize.
type SummandKeys = (BTreeSet<PolySet>, BTreeSet<Vec<Vec<u32>>>);

fn name_keys(name: &LinkName, atoms: &BTreeMap<Atom, &AtomInvariants>) -> BTreeSet<(PolySet, LinkingKey)> {
    let delta = &LaurentPolynomial::delta();
    // per summand: possible polynomial sets (over mirror choices) and linking matrices
    let per_summand: Vec<SummandKeys> = name
        .summands()
        .iter()
        .map(|s| {
            let inv: Vec<&AtomInvariants> = s.iter().map(|a| atoms[a]).collect();
            let mut sets: BTreeSet<PolySet> = BTreeSet::from([PolySet::from([LaurentPolynomial::one()])]);
            for a in &inv {
                sets = sets.iter().flat_map(|cur| a.forms.iter().map(move |f| product_sets(cur, f))).collect();
            }
            (sets, sum_linking(&inv))
        })
        .collect();

    let mut polys: BTreeSet<PolySet> = BTreeSet::from([PolySet::from([LaurentPolynomial::one()])]);
    for (k, (sets, _)) in per_summand.iter().enumerate() {
        polys = polys
            .iter()
            .flat_map(|cur| {
                sets.iter().map(move |s| {
                    let p = product_sets(cur, s);
                    if k == 0 { p } else { p.iter().map(|x| x * delta).collect() }
                })
            })
            .collect();
    }
    if name.is_empty() {
        polys = BTreeSet::new();
    }

    let mut links: BTreeSet<LinkingKey> = BTreeSet::new();
    let choices: Vec<Vec<&Vec<Vec<u32>>>> = per_summand.iter().map(|(_, l)| l.iter().collect()).collect();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let blocks: Vec<&Vec<Vec<u32>>> = idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect();
        links.insert(LinkingKey::of(&block_diagonal(&blocks)));
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }
    polys.into_iter().flat_map(|p| links.iter().map(move |l| (p.clone(), l.clone()))).collect()
}

/// Result of identifying a diagram or mosaic.
#[derive(Debug, Clone, Serialize)]
pub struct Identification {
    /// `None` when nothing in the dictionary matches.
    pub name: Option<LinkName>,
    /// Other names with the same invariants, if the key is ambiguous.
    pub alternatives: Vec<LinkName>,
    pub components: usize,
    pub crossings: usize,
    #[serde(serialize_with = "serialize_polys")]
    pub polynomials: PolySet,
    pub linking: Vec<Vec<u32>>,
}

fn serialize_polys<S: serde::Serializer>(p: &PolySet, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.iter().map(|x| x.to_string()))
}

impl Identification {
    pub fn name_string(&self) -> String {
        self.name.as_ref().map_or_else(|| "unidentified".to_string(), |n| n.to_string())
    }

    /// Polynomial set as `{p; q; ...}`.
    pub fn polynomial_string(&self) -> String {
        let parts: Vec<String> = self.polynomials.iter().map(|p| p.to_string()).collect();
        format!("{{{}}}", parts.join("; "))
    }

    pub fn matches(&self, expected: &LinkName) -> bool {
        self.name.as_ref() == Some(expected)
    }
}

impl fmt::Display for Identification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\tcomponents={}\tpoly={}", self.name_string(), self.components, self.polynomial_string())
    }
}

pub fn identify_diagram(d: &PlanarDiagram, dict: &LinkDictionary) -> Result<Identification> {
    identify_diagram_with_budget(d, dict, DEFAULT_CROSSING_BUDGET)
}

pub fn identify_diagram_with_budget(d: &PlanarDiagram, dict: &LinkDictionary, budget: usize) -> Result<Identification> {
    let components = d.component_count();
    if components == 0 {
        return Ok(Identification {
            name: Some(LinkName::empty()),
            alternatives: vec![],
            components: 0,
            crossings: 0,
            polynomials: PolySet::new(),
            linking: vec![],
        });
    }
    let polynomials = bracket::invariant_set_with_budget(d, budget)?;
    let linking = d.linking_matrix();
    let found = dict.lookup(components, &polynomials, &LinkingKey::of(&linking));
    let mut found = found.into_iter().cloned();
    Ok(Identification {
        name: found.next(),
        alternatives: found.collect(),
        components,
        crossings: d.crossing_count(),
        polynomials,
        linking,
    })
}

/// Planarize under `convention` and name the result.
pub fn identify(m: &Mosaic, convention: Convention) -> Result<Identification> {
    identify_diagram(&planarize(m, convention)?, LinkDictionary::global())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linking_key_ignores_labels() {
        let a = vec![vec![0, 1, 0], vec![1, 0, 2], vec![0, 2, 0]];
        let b = vec![vec![0, 2, 1], vec![2, 0, 0], vec![1, 0, 0]];
        assert_eq!(LinkingKey::of(&a), LinkingKey::of(&b));
        let c = vec![vec![0, 1, 1], vec![1, 0, 0], vec![1, 0, 0]];
        assert_ne!(LinkingKey::of(&a), LinkingKey::of(&c));
    }

    #[test]
    fn atoms_are_separated() {
        let d = LinkDictionary::global();
        let atoms: BTreeSet<LinkName> = Atom::ALL.into_iter().map(LinkName::atom).collect();
        assert_eq!(d.collisions_among(&atoms).count(), 0);
        for a in &d.atoms {
            assert_eq!(a.components, a.atom.components());
        }
    }

    #[test]
    fn composite_invariants() {
        let d = LinkDictionary::global();
        let hh: LinkName = "2_1^2#2_1^2".parse().unwrap();
        let e = d.entry(&hh).unwrap();
        assert_eq!(e.components, 3);
        let hopf = &d.atoms[1];
        assert_eq!(hopf.atom, Atom::Hopf);
        let h = hopf.forms[0].iter().next().unwrap();
        assert!(e.keys.iter().any(|(p, _)| p.contains(&(h * h))));
    }

    #[test]
    fn union_needs_the_linking_key() {
        let d = LinkDictionary::global();
        let a = d.entry(&"2_1^2+2_1^2".parse().unwrap()).unwrap();
        let b = d.entry(&"2_1^2#2_1^2+0_1".parse().unwrap()).unwrap();
        let pa: BTreeSet<_> = a.keys.iter().map(|k| &k.0).collect();
        let pb: BTreeSet<_> = b.keys.iter().map(|k| &k.0).collect();
        assert_eq!(pa, pb);
        assert!(a.keys.is_disjoint(&b.keys));
    }

    #[test]
    fn identifies_reference_diagrams() {
        let d = LinkDictionary::global();
        for a in Atom::ALL {
            let id = identify_diagram(&reference_diagram(a), d).unwrap();
            assert_eq!(id.name, Some(LinkName::atom(a)));
            let id = identify_diagram(&reference_diagram(a).mirror(), d).unwrap();
            assert_eq!(id.name, Some(LinkName::atom(a)));
        }
        let id = identify_diagram(&reference::alternating_four_chain(), d).unwrap();
        assert_eq!(id.name, None);
        assert_eq!(id.name_string(), "unidentified");
    }
}
