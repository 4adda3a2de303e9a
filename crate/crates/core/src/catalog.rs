//! Catalogs of shift classes, and audits of a labelled catalog against them.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::count::{count_transfer_matrix, CountMethod, CountReport};
use crate::enumerate::{canonical_key, class_size, enumerate_parallel, shift_classes, CanonicalKey};
use crate::error::{Error, Result};
use crate::fixtures::Fixture;
use crate::identify::{identify, Identification, LinkDictionary};
use crate::mosaic::{Convention, Mosaic};
use crate::names::LinkName;
use crate::tile::Tile;

/// Published figures the tool checks itself against: claimed totals and
/// the number of catalogued classes, per `n`.
pub mod published {
    pub const CLAIMED_TOTALS: &[(usize, u64)] = &[(1, 7), (2, 97)];
    pub const DISPLAYED_CLASSES: &[(usize, usize)] = &[(1, 7), (2, 98)];
    /// Names used elsewhere for catalogued links: `(variant, catalogued)`.
    pub const NAME_VARIANTS: &[(&str, &str)] = &[("8_4^3", "8_3^4 (L8n8)")];

    pub fn claimed_total(n: usize) -> Option<u64> {
        CLAIMED_TOTALS.iter().find(|c| c.0 == n).map(|c| c.1)
    }

    pub fn displayed_classes(n: usize) -> Option<usize> {
        DISPLAYED_CLASSES.iter().find(|c| c.0 == n).map(|c| c.1)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub index: usize,
    #[serde(rename = "grid")]
    pub representative: Mosaic,
    pub class_size: usize,
    pub components: usize,
    #[serde(serialize_with = "name_or_unidentified")]
    pub name: Option<LinkName>,
    /// Normalized polynomials over all orientations, as `{p; q; ...}`.
    pub polynomial: String,
    #[serde(skip)]
    pub alternatives: Vec<LinkName>,
}

fn name_or_unidentified<S: serde::Serializer>(n: &Option<LinkName>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match n {
        Some(n) => s.serialize_str(&n.to_string()),
        None => s.serialize_str("unidentified"),
    }
}

impl CatalogEntry {
    pub fn name_string(&self) -> String {
        self.name.as_ref().map_or_else(|| "unidentified".into(), |n| n.to_string())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogCounts {
    pub total: usize,
    pub classes: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Catalog {
    pub n: usize,
    pub convention: Convention,
    pub counts: CatalogCounts,
    pub entries: Vec<CatalogEntry>,
    pub discrepancies: Vec<String>,
}

impl Catalog {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("catalog serializes")
    }

    pub fn names(&self) -> BTreeSet<LinkName> {
        self.entries.iter().filter_map(|e| e.name.clone()).collect()
    }

    pub fn entry_for(&self, m: &Mosaic) -> Option<&CatalogEntry> {
        let key = canonical_key(m);
        self.entries.binary_search_by(|e| e.representative.cmp(key.mosaic())).ok().map(|k| &self.entries[k])
    }
}

fn entry(index: usize, key: &CanonicalKey, members: usize, id: Result<Identification>) -> CatalogEntry {
    let m = key.mosaic();
    match id {
        Ok(id) => CatalogEntry {
            index,
            representative: m.clone(),
            class_size: members,
            components: id.components,
            polynomial: id.polynomial_string(),
            name: id.name.clone(),
            alternatives: id.alternatives.clone(),
        },
        // over budget: still listed, with what can be had cheaply
        Err(_) => CatalogEntry {
            index,
            representative: m.clone(),
            class_size: members,
            components: crate::planarize::planarize(m, Convention::Longitudinal)
                .map(|d| d.component_count())
                .unwrap_or(0),
            polynomial: "{}".into(),
            name: None,
            alternatives: vec![],
        },
    }
}

/// One entry per shift class of toroidal knot `n`-mosaics, ordered by
/// canonical key.
pub fn build_catalog(n: usize, convention: Convention) -> Result<Catalog> {
    if n == 0 {
        return Err(Error::MalformedMosaic("side length must be positive".into()));
    }
    let mosaics = enumerate_parallel(n);
    let classes: Vec<(CanonicalKey, usize)> = shift_classes(&mosaics).into_iter().collect();
    // make sure the dictionary is built once, outside the workers
    LinkDictionary::global();
    let entries: Vec<CatalogEntry> = classes
        .par_iter()
        .enumerate()
        .map(|(k, (key, members))| entry(k, key, *members, identify(key.mosaic(), convention)))
        .collect();

    let mut discrepancies = Vec::new();
    let total = mosaics.len();
    if let Some(claim) = published::claimed_total(n) {
        if claim as usize != total {
            discrepancies.push(format!("claimed total {claim} differs from the enumerated total {total}"));
        }
        if claim as usize != entries.len() {
            discrepancies.push(format!("claimed total {claim} differs from the shift-class count {}", entries.len()));
        }
    }
    if let Some(shown) = published::displayed_classes(n) {
        if shown != entries.len() {
            discrepancies.push(format!("published catalog shows {shown} classes; enumeration finds {}", entries.len()));
        }
    }
    for e in &entries {
        if e.name.is_none() {
            discrepancies.push(format!("entry {} ({}) is unidentified", e.index, row_string(&e.representative)));
        }
        if !e.alternatives.is_empty() {
            let alts: Vec<String> = e.alternatives.iter().map(|a| a.to_string()).collect();
            discrepancies.push(format!("entry {} has ambiguous invariants: also {}", e.index, alts.join(", ")));
        }
    }
    Ok(Catalog { n, convention, counts: CatalogCounts { total, classes: entries.len() }, entries, discrepancies })
}

/// `1 2 / 3 4` style one-line rendering.
pub fn row_string(m: &Mosaic) -> String {
    m.rows()
        .map(|r| r.iter().map(|t| t.id().to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join(" / ")
}

/// Brute-force counts from the enumeration, for comparison with the
/// transfer method.
pub fn count_by_enumeration(n: usize) -> CountReport {
    let ms = enumerate_parallel(n);
    let classes = shift_classes(&ms).len();
    CountReport {
        n,
        total_mosaics: BigUint::from(ms.len()),
        shift_classes: BigUint::from(classes),
        method: CountMethod::BruteForce,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FixtureAudit {
    pub index: usize,
    pub label: String,
    pub suitably_connected: bool,
    pub canonical_key: Option<Mosaic>,
    pub class_size: Option<usize>,
    pub computed: String,
    pub components: Option<usize>,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CountComparison {
    pub n: usize,
    pub total_mosaics: String,
    pub shift_classes: String,
    pub transfer_matrix_agrees: bool,
    pub claimed_total: Option<u64>,
    pub fixtures: usize,
    pub distinct_fixture_classes: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct MissingClass {
    pub n: usize,
    pub grid: Mosaic,
    pub name: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub convention: Convention,
    pub fixtures: Vec<FixtureAudit>,
    /// Groups of fixture indices that share a shift class.
    pub duplicates: Vec<Vec<usize>>,
    /// Enumerated classes with no fixture.
    pub missing: Vec<MissingClass>,
    /// Fixtures whose class the enumeration does not produce.
    pub unknown: Vec<usize>,
    pub counts: Vec<CountComparison>,
    /// Everything else worth a reader's attention.
    pub findings: Vec<String>,
}

impl AuditReport {
    pub fn mismatches(&self) -> Vec<&FixtureAudit> {
        self.fixtures.iter().filter(|f| !f.matches).collect()
    }

    /// True when nothing at all was flagged.
    pub fn is_clean(&self) -> bool {
        self.mismatches().is_empty()
            && self.duplicates.is_empty()
            && self.missing.is_empty()
            && self.unknown.is_empty()
            && self.findings.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("audit serializes")
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        let matched = self.fixtures.iter().filter(|f| f.matches).count();
        out += &format!("fixtures: {} ({} match, {} mismatch)\n", self.fixtures.len(), matched, self.fixtures.len() - matched);
        for f in self.mismatches() {
            out += &format!("  mismatch K{}: label {:?}, computed {:?}\n", f.index, f.label, f.computed);
        }
        for f in self.fixtures.iter().filter(|f| !f.suitably_connected) {
            out += &format!("  K{} is not toroidally suitably connected\n", f.index);
        }
        for c in &self.counts {
            out += &format!(
                "n = {}: {} mosaics, {} shift classes (transfer matrix {}), {} fixtures in {} classes",
                c.n,
                c.total_mosaics,
                c.shift_classes,
                if c.transfer_matrix_agrees { "agrees" } else { "DISAGREES" },
                c.fixtures,
                c.distinct_fixture_classes
            );
            if let Some(claim) = c.claimed_total {
                out += &format!(", claimed total {claim}");
            }
            out += "\n";
        }
        for d in &self.duplicates {
            let ks: Vec<String> = d.iter().map(|k| format!("K{k}")).collect();
            out += &format!("  duplicate class: {}\n", ks.join(", "));
        }
        for m in &self.missing {
            out += &format!("  missing class (n = {}): {} = {}\n", m.n, row_string(&m.grid), m.name);
        }
        for k in &self.unknown {
            out += &format!("  K{k} is not a toroidal knot mosaic class\n");
        }
        for f in &self.findings {
            out += &format!("  {f}\n");
        }
        out
    }
}

/// Same mosaic with every crossing replaced by T9: the shadow on the torus.
fn shadow(m: &Mosaic) -> Vec<u8> {
    m.tiles().iter().map(|t| if *t == Tile::T10 { 9 } else { t.id() }).collect()
}

/// Check labelled fixtures against enumeration and identification.
pub fn audit_catalog(fixtures: &[Fixture], convention: Convention) -> AuditReport {
    LinkDictionary::global();
    let rows: Vec<FixtureAudit> = fixtures
        .par_iter()
        .map(|f| {
            let ok = f.mosaic.is_toroidally_suitably_connected();
            let id = if ok { identify(&f.mosaic, convention).ok() } else { None };
            let computed = match (&id, ok) {
                (Some(id), _) => id.name_string(),
                (None, true) => "unidentified".into(),
                (None, false) => "not suitably connected".into(),
            };
            FixtureAudit {
                index: f.index,
                label: f.label.clone(),
                suitably_connected: ok,
                canonical_key: ok.then(|| canonical_key(&f.mosaic).into_mosaic()),
                class_size: ok.then(|| class_size(&f.mosaic)),
                components: id.as_ref().map(|i| i.components),
                matches: id.as_ref().is_some_and(|i| i.matches(&f.expected)),
                computed,
            }
        })
        .collect();

    let mut by_class: BTreeMap<&Mosaic, Vec<usize>> = BTreeMap::new();
    for r in &rows {
        if let Some(k) = &r.canonical_key {
            by_class.entry(k).or_default().push(r.index);
        }
    }
    let duplicates: Vec<Vec<usize>> = by_class.values().filter(|v| v.len() > 1).cloned().collect();

    let sizes: BTreeSet<usize> = fixtures.iter().map(|f| f.mosaic.n()).collect();
    let mut missing = Vec::new();
    let mut unknown = Vec::new();
    let mut counts = Vec::new();
    let mut findings = Vec::new();
    for &n in &sizes {
        let ms = enumerate_parallel(n);
        let classes = shift_classes(&ms);
        let here: Vec<&FixtureAudit> = rows.iter().filter(|r| fixtures[pos(fixtures, r.index)].mosaic.n() == n).collect();
        let keys: BTreeSet<&Mosaic> = here.iter().filter_map(|r| r.canonical_key.as_ref()).collect();
        for key in classes.keys() {
            if !keys.contains(key.mosaic()) {
                let name = identify(key.mosaic(), convention).map(|i| i.name_string()).unwrap_or_else(|e| e.to_string());
                missing.push(MissingClass { n, grid: key.mosaic().clone(), name });
            }
        }
        for r in &here {
            if let Some(k) = &r.canonical_key {
                if !classes.contains_key(&canonical_key(k)) {
                    unknown.push(r.index);
                }
            }
        }
        let transfer = count_transfer_matrix(n).ok();
        let agrees = transfer.as_ref().is_some_and(|t| {
            t.total_mosaics == BigUint::from(ms.len()) && t.shift_classes == BigUint::from(classes.len())
        });
        let claimed = published::claimed_total(n);
        if let Some(c) = claimed {
            if c as usize != ms.len() && c as usize != classes.len() {
                findings.push(format!(
                    "n = {n}: claimed total {c} matches neither the {} mosaics nor the {} shift classes",
                    ms.len(),
                    classes.len()
                ));
            }
            if c as usize != here.len() {
                findings.push(format!("n = {n}: claimed total {c} but {} fixtures are listed", here.len()));
            }
        }
        if keys.len() != here.len() {
            findings.push(format!("n = {n}: {} fixtures cover only {} distinct classes", here.len(), keys.len()));
        }
        counts.push(CountComparison {
            n,
            total_mosaics: ms.len().to_string(),
            shift_classes: classes.len().to_string(),
            transfer_matrix_agrees: agrees,
            claimed_total: claimed,
            fixtures: here.len(),
            distinct_fixture_classes: keys.len(),
        });
    }

    // crossings do not change the number of components
    let mut by_shadow: BTreeMap<(usize, Vec<u8>), Vec<&Fixture>> = BTreeMap::new();
    for f in fixtures {
        by_shadow.entry((f.mosaic.n(), shadow(&f.mosaic))).or_default().push(f);
    }
    for group in by_shadow.values() {
        let comps: BTreeSet<usize> = group.iter().map(|f| f.expected.components()).collect();
        if comps.len() > 1 {
            let desc: Vec<String> =
                group.iter().map(|f| format!("K{} = {} ({} components)", f.index, f.label, f.expected.components())).collect();
            findings.push(format!("labels disagree on components for one shadow: {}", desc.join(", ")));
        }
    }
    let labels: BTreeSet<&str> = fixtures.iter().map(|f| f.label.as_str()).collect();
    for (variant, catalogued) in published::NAME_VARIANTS {
        if labels.contains(catalogued) {
            findings.push(format!("name {variant} is also used for the link catalogued as {catalogued}"));
        }
    }
    let dict = LinkDictionary::global();
    let names: BTreeSet<LinkName> = fixtures.iter().map(|f| f.expected.clone()).collect();
    for c in dict.collisions_among(&names) {
        findings.push(format!("labels {} and {} share all invariants", c.first, c.second));
    }

    AuditReport { convention, fixtures: rows, duplicates, missing, unknown, counts, findings }
}

fn pos(fixtures: &[Fixture], index: usize) -> usize {
    fixtures.iter().position(|f| f.index == index).expect("audited fixture")
}

/// Least `n <= max_n` at which some toroidal knot `n`-mosaic is `name`
/// under `convention`; `None` if there is none up to `max_n`.
pub fn min_toroidal_mosaic_number(name: &LinkName, max_n: usize, convention: Convention) -> Result<Option<usize>> {
    if LinkDictionary::global().entry(name).is_none() {
        return Err(Error::UnknownLink(name.to_string()));
    }
    for n in 1..=max_n {
        let mosaics = enumerate_parallel(n);
        let keys: Vec<CanonicalKey> = shift_classes(&mosaics).into_keys().collect();
        let found = keys
            .par_iter()
            .any(|k| identify(k.mosaic(), convention).is_ok_and(|id| id.name.as_ref() == Some(name)));
        if found {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
