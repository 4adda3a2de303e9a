//! Seeded property suites. Every proptest run uses a fixed seed, so failures
//! reproduce exactly.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_bigint::BigUint;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use torus_mosaic::bracket::{invariant_set, kauffman_bracket};
use torus_mosaic::count::{all_mosaics, count_transfer_matrix, fixed_by_shift};
use torus_mosaic::diagram::{ArcId, Crossing, OverPair, PlanarDiagram};
use torus_mosaic::enumerate::{brute_force, canonical_key, class_size, enumerate_parallel, shift_classes};
use torus_mosaic::identify::{identify, LinkingKey};
use torus_mosaic::moves::{add_bigon, add_kink, r3_pair, Kink};
use torus_mosaic::planarize::planarize;
use torus_mosaic::poly::LaurentPolynomial;
use torus_mosaic::tile::Edge;
use torus_mosaic::{Convention, Mosaic, Tile};

const SEED: u64 = 0x7041_0551;

fn config(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(SEED), failure_persistence: None, ..Config::default() }
}

fn knot_mosaics(n: usize) -> &'static [Mosaic] {
    static CACHE: [OnceLock<Vec<Mosaic>>; 4] = [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    CACHE[n].get_or_init(|| enumerate_parallel(n))
}

/// Any grid of tiles, connected or not.
fn any_grid(max_n: usize) -> impl Strategy<Value = Mosaic> {
    (1..=max_n).prop_flat_map(|n| prop::collection::vec(0u8..11, n * n).prop_map(move |ids| Mosaic::from_ids(n, &ids).unwrap()))
}

/// A toroidal knot mosaic with `n <= 3`.
fn knot_mosaic() -> impl Strategy<Value = Mosaic> {
    (1usize..=3).prop_flat_map(|n| (0..knot_mosaics(n).len()).prop_map(move |k| knot_mosaics(n)[k].clone()))
}

/// Toroidal knot 1- and 2-mosaics small enough for many bracket evaluations.
fn small_knot_mosaic() -> impl Strategy<Value = Mosaic> {
    (1usize..=2).prop_flat_map(|n| (0..knot_mosaics(n).len()).prop_map(move |k| knot_mosaics(n)[k].clone()))
}

fn conventions() -> impl Strategy<Value = Convention> {
    prop_oneof![Just(Convention::Longitudinal), Just(Convention::Meridianal)]
}

// ---------------------------------------------------------------- grids

proptest! {
    #![proptest_config(config(512))]

    #[test]
    fn text_round_trip(m in any_grid(5)) {
        prop_assert_eq!(m.to_string().parse::<Mosaic>().unwrap(), m);
    }

    #[test]
    fn shifts_preserve_everything_local(m in any_grid(4), a in -5i64..5, b in -5i64..5) {
        let s = m.shift(a, b);
        prop_assert_eq!(s.is_toroidally_suitably_connected(), m.is_toroidally_suitably_connected());
        prop_assert_eq!(s.waste(), m.waste());
        prop_assert_eq!(s.shift(-a, -b), m.clone());
        prop_assert_eq!(canonical_key(&s), canonical_key(&m));
    }

    #[test]
    fn quarter_turns(m in any_grid(4)) {
        let r = m.rotate90();
        prop_assert_eq!(r.is_toroidally_suitably_connected(), m.is_toroidally_suitably_connected());
        prop_assert_eq!(r.is_planarly_suitably_connected(), m.is_planarly_suitably_connected());
        prop_assert_eq!(r.waste(), m.waste());
        prop_assert_eq!(r.rotate90().rotate90().rotate90(), m);
    }

    #[test]
    fn planar_implies_toroidal(m in any_grid(4)) {
        if m.is_planarly_suitably_connected() {
            prop_assert!(m.is_toroidally_suitably_connected());
        }
    }

    #[test]
    fn canonical_key_is_least_in_orbit(m in any_grid(3)) {
        let key = canonical_key(&m);
        let n = m.n() as i64;
        let orbit: Vec<Mosaic> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| m.shift(a, b)).collect();
        prop_assert!(orbit.iter().all(|o| key.mosaic() <= o));
        prop_assert!(orbit.contains(key.mosaic()));
        prop_assert_eq!((n * n) as usize % class_size(&m), 0);
    }
}

/// Toroidal suitable connectedness recomputed edge by edge.
fn connected_oracle(m: &Mosaic) -> bool {
    let n = m.n() as isize;
    (0..n).all(|i| {
        (0..n).all(|j| {
            let t = m.get_wrapped(i, j);
            t.has(Edge::Right) == m.get_wrapped(i, j + 1).has(Edge::Left)
                && t.has(Edge::Bottom) == m.get_wrapped(i + 1, j).has(Edge::Top)
        })
    })
}

proptest! {
    #![proptest_config(config(2048))]

    #[test]
    fn connectedness_matches_edge_oracle(m in any_grid(4)) {
        prop_assert_eq!(m.is_toroidally_suitably_connected(), connected_oracle(&m));
    }
}

#[test]
fn planar_knot_mosaics_are_toroidal_exhaustively() {
    for code in 0..11u32.pow(4) {
        let ids: Vec<u8> = (0..4).map(|k| (code / 11u32.pow(3 - k) % 11) as u8).collect();
        let m = Mosaic::from_ids(2, &ids).unwrap();
        assert_eq!(m.is_toroidally_suitably_connected(), connected_oracle(&m));
        if m.is_planarly_suitably_connected() {
            assert!(m.is_toroidally_suitably_connected(), "{m}");
        }
    }
}

// ---------------------------------------------------------------- waste

/// Waste added by the injection, computed from the exits crossing the outer
/// right and bottom edges: the new corner is blank, and each of the `2n`
/// other new tiles is a straight line (two wasted edges) or blank (four).
fn embed_gain_quarters(m: &Mosaic) -> u32 {
    let n = m.n();
    let exits = (0..n).filter(|&i| m.get(i, n - 1).has(Edge::Right)).count()
        + (0..n).filter(|&j| m.get(n - 1, j).has(Edge::Bottom)).count();
    (4 + 8 * n - 2 * exits) as u32
}

#[test]
fn waste_bounds_for_every_small_knot_mosaic() {
    for n in 1..=3 {
        for m in knot_mosaics(n) {
            let (w, we) = (m.waste().as_f64(), m.embed().waste().as_f64());
            let gain = we - w;
            assert_eq!(gain * 4.0, embed_gain_quarters(m) as f64, "{m}");
            assert!(gain >= (n + 1) as f64 && gain <= (2 * n + 1) as f64, "{m}");
            if m.boundary_waste_quarters() == 0 {
                assert_eq!(gain, (n + 1) as f64, "{m}");
            }
            if m.is_planarly_suitably_connected() {
                assert_eq!(gain, (2 * n + 1) as f64, "{m}");
            }
        }
    }
}

// ---------------------------------------------------------------- counting

#[test]
fn orbit_sizes_sum_to_total() {
    for n in 1..=3 {
        let ms = knot_mosaics(n);
        let classes = shift_classes(ms);
        assert_eq!(classes.values().sum::<usize>(), ms.len());
        for (key, members) in &classes {
            assert_eq!(class_size(key.mosaic()), *members);
        }
        let r = count_transfer_matrix(n).unwrap();
        assert_eq!(r.total_mosaics, BigUint::from(ms.len()));
        assert_eq!(r.shift_classes, BigUint::from(classes.len()));
    }
}

#[test]
fn fixed_points_match_direct_count() {
    for n in 1..=3 {
        let ms = knot_mosaics(n);
        for a in 0..n {
            for b in 0..n {
                let direct = ms.iter().filter(|m| m.shift(a as i64, b as i64) == **m).count();
                assert_eq!(fixed_by_shift(n, a, b).unwrap(), BigUint::from(direct), "n={n} a={a} b={b}");
            }
        }
    }
}

#[test]
fn brute_force_agrees_and_counts_stay_under_all_grids() {
    for n in 1..=2 {
        assert_eq!(brute_force(n, 20_000).unwrap(), knot_mosaics(n));
    }
    // the fraction of all grids that are knot mosaics shrinks with n
    let mut last: Option<(BigUint, BigUint)> = None;
    for n in 1..=6 {
        let r = count_transfer_matrix(n).unwrap();
        let all = all_mosaics(n);
        assert!(r.total_mosaics <= all);
        assert!(r.shift_classes <= r.total_mosaics);
        if let Some((t, a)) = &last {
            assert!(&r.total_mosaics * a < t * &all);
        }
        last = Some((r.total_mosaics, all));
    }
}

// ---------------------------------------------------------------- bracket

/// Replace crossing `k` by the two arcs of one smoothing, closing any arcs
/// that end up joined to themselves.
fn smooth(d: &PlanarDiagram, k: usize, pairs: [(usize, usize); 2]) -> PlanarDiagram {
    let x = d.crossings[k].arcs;
    let mut parent: HashMap<ArcId, ArcId> = HashMap::new();
    fn find(p: &mut HashMap<ArcId, ArcId>, a: ArcId) -> ArcId {
        let up = *p.get(&a).unwrap_or(&a);
        if up == a {
            a
        } else {
            let r = find(p, up);
            p.insert(a, r);
            r
        }
    }
    for (s, t) in pairs {
        let (a, b) = (find(&mut parent, x[s]), find(&mut parent, x[t]));
        if a != b {
            parent.insert(b, a);
        }
    }
    let rest: Vec<Crossing> = d
        .crossings
        .iter()
        .enumerate()
        .filter(|&(c, _)| c != k)
        .map(|(_, c)| Crossing { arcs: c.arcs.map(|a| find(&mut parent, a)) })
        .collect();
    let mut roots: Vec<ArcId> = x.iter().map(|&a| find(&mut parent, a)).collect();
    roots.sort();
    roots.dedup();
    let closed = roots.iter().filter(|r| !rest.iter().any(|c| c.arcs.contains(r))).count();
    PlanarDiagram::new(rest, d.free_loops + closed).unwrap()
}

proptest! {
    #![proptest_config(config(96))]

    #[test]
    fn skein_relation(m in small_knot_mosaic(), c in conventions(), pick in any::<prop::sample::Index>()) {
        let d = planarize(&m, c).unwrap();
        prop_assume!(d.crossing_count() > 0);
        let k = pick.index(d.crossing_count());
        let a = LaurentPolynomial::monomial(1, 1);
        let b = LaurentPolynomial::monomial(1, -1);
        let lhs = kauffman_bracket(&d).unwrap();
        let sa = kauffman_bracket(&smooth(&d, k, [(0, 1), (2, 3)])).unwrap();
        let sb = kauffman_bracket(&smooth(&d, k, [(0, 3), (1, 2)])).unwrap();
        prop_assert_eq!(lhs, &(&a * &sa) + &(&b * &sb));
    }

    #[test]
    fn unlinked_loop_multiplies_by_delta(m in small_knot_mosaic(), c in conventions()) {
        let d = planarize(&m, c).unwrap();
        prop_assume!(!d.is_empty());
        let mut e = d.clone();
        e.free_loops += 1;
        prop_assert_eq!(kauffman_bracket(&e).unwrap(), &kauffman_bracket(&d).unwrap() * &LaurentPolynomial::delta());
    }

    #[test]
    fn mirror_image_inverts_the_variable(m in small_knot_mosaic(), c in conventions()) {
        let d = planarize(&m, c).unwrap();
        prop_assume!(!d.is_empty());
        prop_assert_eq!(kauffman_bracket(&d.mirror()).unwrap(), kauffman_bracket(&d).unwrap().mirror());
    }
}

// ---------------------------------------------------------------- moves

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn reidemeister_one(m in small_knot_mosaic(), c in conventions(), pick in any::<prop::sample::Index>(), left in any::<bool>(), ac in any::<bool>()) {
        let d = planarize(&m, c).unwrap();
        prop_assume!(d.crossing_count() > 0);
        let arcs: Vec<ArcId> = d.crossings.iter().flat_map(|x| x.arcs).collect();
        let kink = if left { Kink::Left } else { Kink::Right };
        let over = if ac { OverPair::AC } else { OverPair::BD };
        let e = add_kink(&d, arcs[pick.index(arcs.len())], kink, over).unwrap();
        prop_assert_eq!(e.component_count(), d.component_count());
        prop_assert_eq!(invariant_set(&e).unwrap(), invariant_set(&d).unwrap());
    }

    #[test]
    fn reidemeister_two(m in small_knot_mosaic(), c in conventions(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let d = planarize(&m, c).unwrap();
        let mut arcs: Vec<ArcId> = d.crossings.iter().flat_map(|x| x.arcs).collect();
        arcs.sort();
        arcs.dedup();
        prop_assume!(arcs.len() >= 2);
        let a = arcs[i.index(arcs.len())];
        let b = arcs[j.index(arcs.len())];
        prop_assume!(a != b);
        let e = add_bigon(&d, a, b).unwrap();
        prop_assert_eq!(kauffman_bracket(&e).unwrap(), kauffman_bracket(&d).unwrap());
        prop_assert_eq!(invariant_set(&e).unwrap(), invariant_set(&d).unwrap());
    }

    #[test]
    fn reidemeister_three(m in small_knot_mosaic(), c in conventions(), picks in prop::array::uniform3(any::<prop::sample::Index>()), positive in any::<bool>()) {
        let d = planarize(&m, c).unwrap();
        let mut arcs: Vec<ArcId> = d.crossings.iter().flat_map(|x| x.arcs).collect();
        arcs.sort();
        arcs.dedup();
        let [a, b, e] = picks.map(|p| if arcs.is_empty() { 0 } else { arcs[p.index(arcs.len())] });
        prop_assume!(arcs.len() >= 3 && a != b && b != e && a != e);
        let (l, r) = r3_pair(&d, a, b, e, positive).unwrap();
        prop_assert_eq!(kauffman_bracket(&l).unwrap(), kauffman_bracket(&r).unwrap());
        prop_assert_eq!(invariant_set(&l).unwrap(), invariant_set(&r).unwrap());
    }
}

// ---------------------------------------------------------------- identification

#[test]
fn identification_is_shift_invariant() {
    for n in 1..=2 {
        for c in [Convention::Longitudinal, Convention::Meridianal] {
            let mut by_class: BTreeMap<Mosaic, (Option<String>, usize, std::collections::BTreeSet<LaurentPolynomial>, LinkingKey)> =
                BTreeMap::new();
            for m in knot_mosaics(n) {
                let id = identify(m, c).unwrap();
                let got = (id.name.map(|x| x.to_string()), id.components, id.polynomials, LinkingKey::of(&id.linking));
                let key = canonical_key(m).into_mosaic();
                match by_class.get(&key) {
                    Some(seen) => assert_eq!(seen, &got, "{m}{c}"),
                    None => {
                        by_class.insert(key, got);
                    }
                }
            }
            assert_eq!(by_class.len(), shift_classes(knot_mosaics(n)).len());
        }
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn three_mosaic_components_survive_shifts(m in knot_mosaic(), a in 0i64..3, b in 0i64..3, c in conventions()) {
        let d = planarize(&m, c).unwrap();
        let s = planarize(&m.shift(a, b), c).unwrap();
        prop_assert_eq!(d.component_count(), s.component_count());
        prop_assert_eq!(LinkingKey::of(&d.linking_matrix()), LinkingKey::of(&s.linking_matrix()));
    }
}

#[test]
fn tiles_rotate_in_a_four_cycle() {
    for t in Tile::all() {
        assert_eq!(t.rotate_ccw().rotate_ccw().rotate_ccw().rotate_ccw(), t);
    }
}
