//! Reidemeister moves as rewrites of planar diagram codes.
//!
//! R2 and R3 are expressed through braid insertion: cut `k` arcs, run the
//! cut strands through a braid word, and reconnect. `σ σ⁻¹` is an R2 pair
//! against the empty word; `σ₁σ₂σ₁` and `σ₂σ₁σ₂` differ by one R3 move.

use crate::diagram::{ArcId, Crossing, OverPair, PlanarDiagram};
use crate::error::{Error, Result};

/// Which of the two monogon shapes an R1 kink takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kink {
    /// Loop between the entry slot and its ccw neighbour.
    Left,
    /// Loop between the exit slot and its ccw neighbour.
    Right,
}

fn fresh(d: &PlanarDiagram) -> ArcId {
    d.max_label().map_or(0, |m| m + 1)
}

fn check_arc(d: &PlanarDiagram, a: ArcId) -> Result<()> {
    if d.crossings.iter().any(|x| x.arcs.contains(&a)) {
        Ok(())
    } else {
        Err(Error::MalformedDiagram(format!("no arc {a}")))
    }
}

/// Last slot holding `a`, as `(crossing, slot)`.
fn far_end(d: &PlanarDiagram, a: ArcId) -> (usize, usize) {
    let mut last = None;
    for (c, x) in d.crossings.iter().enumerate() {
        for (s, &b) in x.arcs.iter().enumerate() {
            if b == a {
                last = Some((c, s));
            }
        }
    }
    last.expect("arc checked")
}

/// R1: put a curl on arc `a`.
pub fn add_kink(d: &PlanarDiagram, a: ArcId, kink: Kink, over: OverPair) -> Result<PlanarDiagram> {
    check_arc(d, a)?;
    let (c, s) = far_end(d, a);
    let (loop_arc, out) = (fresh(d), fresh(d) + 1);
    let mut out_d = d.clone();
    out_d.crossings[c].arcs[s] = out;
    let arcs = match kink {
        Kink::Left => [a, loop_arc, loop_arc, out],
        Kink::Right => [a, out, loop_arc, loop_arc],
    };
    out_d.crossings.push(Crossing::new(arcs, over));
    PlanarDiagram::new(out_d.crossings, out_d.free_loops)
}

/// Cut the distinct arcs `cut` and thread them through `word`: letter `±i`
/// crosses positions `i - 1` and `i`, the left strand over for `+i`.
pub fn insert_braid(d: &PlanarDiagram, cut: &[ArcId], word: &[i32]) -> Result<PlanarDiagram> {
    for (k, &a) in cut.iter().enumerate() {
        check_arc(d, a)?;
        if cut[..k].contains(&a) {
            return Err(Error::MalformedDiagram(format!("arc {a} cut twice")));
        }
    }
    let mut next = fresh(d);
    let mut fresh_arc = || {
        next += 1;
        next - 1
    };
    let ends: Vec<(usize, usize)> = cut.iter().map(|&a| far_end(d, a)).collect();
    let mut out = d.clone();
    let mut cur: Vec<ArcId> = cut.to_vec();
    for &g in word {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= cut.len() {
            return Err(Error::MalformedDiagram(format!("braid letter {g} on {} strands", cut.len())));
        }
        let (ne, nw) = (fresh_arc(), fresh_arc());
        // slots counterclockwise from south-east; strands run upward
        let arcs = [cur[i], ne, nw, cur[i - 1]];
        out.crossings.push(Crossing::new(arcs, if g > 0 { OverPair::BD } else { OverPair::AC }));
        cur[i - 1] = nw;
        cur[i] = ne;
    }
    for (k, &(c, s)) in ends.iter().enumerate() {
        out.crossings[c].arcs[s] = cur[k];
    }
    PlanarDiagram::new(out.crossings, out.free_loops)
}

/// R2: pass the strand through arc `a` over the one through arc `b`, twice.
pub fn add_bigon(d: &PlanarDiagram, a: ArcId, b: ArcId) -> Result<PlanarDiagram> {
    insert_braid(d, &[a, b], &[1, -1])
}

/// Both sides of an R3 move spliced into `d` at arcs `a`, `b`, `c`.
pub fn r3_pair(d: &PlanarDiagram, a: ArcId, b: ArcId, c: ArcId, positive: bool) -> Result<(PlanarDiagram, PlanarDiagram)> {
    let s = if positive { 1 } else { -1 };
    Ok((insert_braid(d, &[a, b, c], &[s, 2 * s, s])?, insert_braid(d, &[a, b, c], &[2 * s, s, 2 * s])?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::{invariant_set, kauffman_bracket};
    use crate::diagram::tests::{hopf, trefoil};
    use crate::poly::LaurentPolynomial;

    #[test]
    fn kink_multiplies_bracket_by_a_cube() {
        let t = trefoil();
        let b = kauffman_bracket(&t).unwrap();
        for kink in [Kink::Left, Kink::Right] {
            for over in [OverPair::AC, OverPair::BD] {
                let k = add_kink(&t, t.crossings[0].arcs[0], kink, over).unwrap();
                assert_eq!(k.component_count(), 1);
                let kb = kauffman_bracket(&k).unwrap();
                let plus = &b * &LaurentPolynomial::monomial(-1, 3);
                let minus = &b * &LaurentPolynomial::monomial(-1, -3);
                assert!(kb == plus || kb == minus);
                assert_eq!(invariant_set(&k).unwrap(), invariant_set(&t).unwrap());
            }
        }
    }

    #[test]
    fn bigon_leaves_the_bracket_alone() {
        let h = hopf();
        let arcs: Vec<ArcId> = h.crossings.iter().flat_map(|x| x.arcs).collect();
        let b = add_bigon(&h, arcs[0], arcs[1]).unwrap();
        assert_eq!(b.crossing_count(), 4);
        assert_eq!(kauffman_bracket(&b).unwrap(), kauffman_bracket(&h).unwrap());
    }

    #[test]
    fn braid_relation() {
        let t = trefoil();
        let a: Vec<ArcId> = t.crossings[0].arcs.to_vec();
        for positive in [true, false] {
            let (l, r) = r3_pair(&t, a[0], a[1], a[2], positive).unwrap();
            assert_eq!(kauffman_bracket(&l).unwrap(), kauffman_bracket(&r).unwrap());
            assert_eq!(invariant_set(&l).unwrap(), invariant_set(&r).unwrap());
        }
        assert!(insert_braid(&t, &[a[0], a[0]], &[1]).is_err());
        assert!(insert_braid(&t, &[a[0], a[1]], &[2]).is_err());
    }
}
