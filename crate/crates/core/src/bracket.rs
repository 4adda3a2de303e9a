//! Kauffman bracket state sum and its writhe normalization.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::poly::LaurentPolynomial;

/// Largest crossing count the state sum will attempt unless overridden.
pub const DEFAULT_CROSSING_BUDGET: usize = 24;

/// Bits of the state fixed per parallel work item.
const SPLIT_BITS: usize = 6;

fn check_budget(d: &PlanarDiagram, budget: usize) -> Result<()> {
    if d.crossing_count() > budget {
        return Err(Error::BudgetExceeded {
            what: "bracket state sum crossing count",
            size: d.crossing_count().to_string(),
            limit: budget.to_string(),
        });
    }
    if d.is_empty() {
        return Err(Error::MalformedDiagram("empty diagram has no bracket".into()));
    }
    Ok(())
}

/// `<D>` with `<O> = 1`, summed over all `2^c` smoothings. Each state
/// contributes `A^(a-b) d^(loops-1)` with `d = -A^2 - A^-2`.
pub fn kauffman_bracket(d: &PlanarDiagram) -> Result<LaurentPolynomial> {
    kauffman_bracket_with_budget(d, DEFAULT_CROSSING_BUDGET)
}

pub fn kauffman_bracket_with_budget(d: &PlanarDiagram, budget: usize) -> Result<LaurentPolynomial> {
    check_budget(d, budget)?;
    let c = d.crossing_count();
    let mut index: HashMap<u32, u8> = HashMap::new();
    let xs: Vec<[u8; 4]> = d
        .crossings
        .iter()
        .map(|x| {
            x.arcs.map(|a| {
                let next = index.len() as u8;
                *index.entry(a).or_insert(next)
            })
        })
        .collect();
    let arcs = index.len();

    // tally[(a - b + c)][loops] over crossing-carrying loops
    let width = 2 * c + 1;
    let split = SPLIT_BITS.min(c);
    let low_bits = c - split;
    let tally = (0u64..1 << split)
        .into_par_iter()
        .map(|high| {
            let mut t = vec![0u64; width * (arcs + 1)];
            let mut parent = vec![0u8; arcs];
            for low in 0u64..1 << low_bits {
                let state = (high << low_bits) | low;
                for (k, p) in parent.iter_mut().enumerate() {
                    *p = k as u8;
                }
                let mut a_count = 0usize;
                for (k, x) in xs.iter().enumerate() {
                    if state >> k & 1 == 0 {
                        a_count += 1;
                        join(&mut parent, x[0], x[1]);
                        join(&mut parent, x[2], x[3]);
                    } else {
                        join(&mut parent, x[0], x[3]);
                        join(&mut parent, x[1], x[2]);
                    }
                }
                let loops = (0..arcs).filter(|&k| parent[k] as usize == k).count();
                let shift = 2 * a_count; // a - b + c
                t[shift * (arcs + 1) + loops] += 1;
            }
            t
        })
        .reduce(
            || vec![0u64; width * (arcs + 1)],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );

    let delta = LaurentPolynomial::delta();
    let mut delta_pows = vec![LaurentPolynomial::one()];
    for k in 1..=arcs + d.free_loops {
        let next = &delta_pows[k - 1] * &delta;
        delta_pows.push(next);
    }
    let mut out = LaurentPolynomial::zero();
    for s in 0..width {
        for loops in 0..=arcs {
            let n = tally[s * (arcs + 1) + loops];
            if n == 0 {
                continue;
            }
            let total_loops = loops + d.free_loops;
            let term = delta_pows[total_loops - 1].shifted(s as i32 - c as i32).scaled(n as i64);
            out = &out + &term;
        }
    }
    Ok(out)
}

fn find(parent: &mut [u8], mut x: u8) -> u8 {
    while parent[x as usize] != x {
        let p = parent[x as usize];
        parent[x as usize] = parent[p as usize];
        x = p;
    }
    x
}

fn join(parent: &mut [u8], a: u8, b: u8) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra as usize] = rb;
    }
}

/// `(-A^3)^(-w) <D>` for the given reversal choice per crossing component.
pub fn normalized_invariant(d: &PlanarDiagram, reversed: &[bool]) -> Result<LaurentPolynomial> {
    let bracket = kauffman_bracket(d)?;
    let comps = d.crossing_components();
    if reversed.len() != comps.len() {
        return Err(Error::MalformedDiagram(format!(
            "orientation has {} entries for {} components",
            reversed.len(),
            comps.len()
        )));
    }
    Ok(normalize(&bracket, d.writhe(&comps, reversed)))
}

pub fn normalize(bracket: &LaurentPolynomial, writhe: i32) -> LaurentPolynomial {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    bracket.shifted(-3 * writhe).scaled(sign)
}

/// Normalized invariants over every orientation of every component.
pub fn invariant_set(d: &PlanarDiagram) -> Result<BTreeSet<LaurentPolynomial>> {
    invariant_set_with_budget(d, DEFAULT_CROSSING_BUDGET)
}

pub fn invariant_set_with_budget(d: &PlanarDiagram, budget: usize) -> Result<BTreeSet<LaurentPolynomial>> {
    let bracket = kauffman_bracket_with_budget(d, budget)?;
    let comps = d.crossing_components();
    let k = comps.len();
    // reversing everything leaves the writhe alone, so fix the first component
    let choices = if k == 0 { 1u64 } else { 1u64 << (k - 1) };
    Ok((0..choices)
        .map(|bits| {
            let reversed: Vec<bool> = (0..k).map(|i| i > 0 && bits >> (i - 1) & 1 == 1).collect();
            normalize(&bracket, d.writhe(&comps, &reversed))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::tests::{hopf, trefoil};
    use crate::diagram::Crossing;
    use crate::poly::LaurentPolynomial as P;

    #[test]
    fn unknot_is_one() {
        let d = PlanarDiagram::new(vec![], 1).unwrap();
        assert_eq!(kauffman_bracket(&d).unwrap(), P::one());
    }

    #[test]
    fn hopf_bracket() {
        // four states: AA gives 2 loops, BB gives 2 loops, mixed give 1
        assert_eq!(kauffman_bracket(&hopf()).unwrap(), P::from_terms([(4, -1), (-4, -1)]));
        assert_eq!(kauffman_bracket(&hopf().mirror()).unwrap(), P::from_terms([(4, -1), (-4, -1)]));
    }

    #[test]
    fn extra_loop_multiplies_by_delta() {
        let h = hopf();
        let with_loop = PlanarDiagram { free_loops: 1, ..h.clone() };
        assert_eq!(kauffman_bracket(&with_loop).unwrap(), &kauffman_bracket(&h).unwrap() * &P::delta());
        let two = PlanarDiagram::new(vec![], 2).unwrap();
        assert_eq!(kauffman_bracket(&two).unwrap(), P::delta());
    }

    #[test]
    fn kink_is_cancelled_by_normalization() {
        let kink = PlanarDiagram::new(vec![Crossing { arcs: [1, 2, 2, 1] }], 0).unwrap();
        assert_eq!(normalized_invariant(&kink, &[false]).unwrap(), P::one());
        assert_eq!(normalized_invariant(&kink.mirror(), &[false]).unwrap(), P::one());
    }

    #[test]
    fn trefoil_and_mirror() {
        let t = trefoil();
        let f = normalized_invariant(&t, &[false]).unwrap();
        // V(t) = -t^-4 + t^-3 + t^-1 (one chirality) written in A = t^-1/4
        let left = P::from_terms([(16, -1), (12, 1), (4, 1)]);
        assert!(f == left || f == left.mirror(), "{f}");
        assert_eq!(normalized_invariant(&t.mirror(), &[false]).unwrap(), f.mirror());
    }

    #[test]
    fn hopf_orientations() {
        let s = invariant_set(&hopf()).unwrap();
        let pos = P::from_terms([(-2, -1), (-10, -1)]);
        assert_eq!(s, [pos.clone(), pos.mirror()].into_iter().collect());
    }

    #[test]
    fn budget_and_empty() {
        assert!(matches!(kauffman_bracket_with_budget(&trefoil(), 2), Err(Error::BudgetExceeded { .. })));
        assert!(kauffman_bracket(&PlanarDiagram::default()).is_err());
    }
}
