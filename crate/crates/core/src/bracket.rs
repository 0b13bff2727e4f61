//! Kauffman bracket state sums with exact integer coefficients.
//!
//! Two engines: a naive 2^n enumeration used as the oracle at small sizes,
//! and a frontier sweep that processes crossings one at a time and memoizes
//! partial states keyed by the pairing of open strand ends, which handles
//! braid-like diagrams of a few hundred crossings comfortably.

use crate::diagram::Diagram;
use crate::error::OpError;
use crate::poly::LaurentPoly;
use num_bigint::BigInt;
use std::collections::HashMap;

/// Loop value δ = −A² − A⁻².
fn delta() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

/// The A-smoothing joins slots (0,1) and (2,3); the B-smoothing joins
/// (1,2) and (3,0). Calibrated by the kink values ⟨positive kink⟩ = −A³.
const SMOOTHING_PAIRS: [[(u8, u8); 2]; 2] = [[(0, 1), (2, 3)], [(1, 2), (3, 0)]];

/// Naive 2^n state-sum oracle. Only use for small diagrams.
pub fn kauffman_bracket_naive(diagram: &Diagram, cap: usize) -> Result<LaurentPoly, OpError> {
    let n = diagram.n_crossings();
    if n > cap.min(20) {
        return Err(OpError::BracketCapExceeded {
            n,
            cap: cap.min(20),
        });
    }
    if n == 0 {
        return Ok(delta_power(diagram.free_loops() as i64 - 1));
    }
    let mut total = LaurentPoly::zero();
    for state in 0u64..(1u64 << n) {
        // union-find over slot points 4c+s
        let mut uf: Vec<usize> = (0..4 * n).collect();
        fn find(uf: &mut Vec<usize>, x: usize) -> usize {
            if uf[x] != x {
                let r = find(uf, uf[x]);
                uf[x] = r;
            }
            uf[x]
        }
        let union = |uf: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(uf, a), find(uf, b));
            if ra != rb {
                uf[ra] = rb;
            }
        };
        for e in 1..=diagram.edge_count() {
            let (hc, hs) = diagram.head_of(e);
            let (tc, ts) = diagram.tail_of(e);
            union(&mut uf, 4 * hc + hs as usize, 4 * tc + ts as usize);
        }
        let mut a_minus_b = 0i64;
        for c in 0..n {
            let choice = ((state >> c) & 1) as usize;
            a_minus_b += if choice == 0 { 1 } else { -1 };
            for (s1, s2) in SMOOTHING_PAIRS[choice] {
                union(&mut uf, 4 * c + s1 as usize, 4 * c + s2 as usize);
            }
        }
        let mut loops = 0i64;
        for x in 0..4 * n {
            if find(&mut uf, x) == x {
                loops += 1;
            }
        }
        loops += diagram.free_loops() as i64;
        let term = delta_power(loops - 1).shift_mul(a_minus_b, &BigInt::from(1));
        total += &term;
    }
    Ok(total)
}

fn delta_power(k: i64) -> LaurentPoly {
    assert!(k >= 0, "negative delta power");
    let mut out = LaurentPoly::one();
    let d = delta();
    for _ in 0..k {
        out = &out * &d;
    }
    out
}

/// Frontier-sweep bracket. States are pairings of the open edges along the
/// sweep boundary; diagrams with a small cut width (braid closures and
/// their surgeries) stay tiny.
pub fn kauffman_bracket(diagram: &Diagram, cap: usize) -> Result<LaurentPoly, OpError> {
    let n = diagram.n_crossings();
    if n > cap {
        return Err(OpError::BracketCapExceeded { n, cap });
    }
    if n == 0 {
        return Ok(delta_power(diagram.free_loops() as i64 - 1));
    }

    let order = sweep_order(diagram);

    // state: sorted pairing of open edge labels -> accumulated polynomial
    type State = Vec<(usize, usize)>;
    let mut states: HashMap<State, LaurentPoly> = HashMap::new();
    states.insert(Vec::new(), LaurentPoly::one());
    let d = delta();

    for &c in &order {
        let tuple = diagram.crossing(c).unwrap().tuple;
        // how many slots of this crossing each edge occupies
        let mut here: HashMap<usize, Vec<u8>> = HashMap::new();
        for (s, &e) in tuple.iter().enumerate() {
            here.entry(e).or_default().push(s as u8);
        }
        let mut next_states: HashMap<State, LaurentPoly> = HashMap::new();
        for (pairing, weight) in &states {
            for (choice, pairs) in SMOOTHING_PAIRS.iter().enumerate() {
                // micro union-find over: slots (0..4) and open edges (4+idx)
                let open_edges: Vec<usize> = pairing
                    .iter()
                    .flat_map(|&(a, b)| [a, b])
                    .collect();
                let index_of = |e: usize| open_edges.iter().position(|&x| x == e);
                let m = 4 + open_edges.len();
                let mut uf: Vec<usize> = (0..m).collect();
                fn find(uf: &mut Vec<usize>, x: usize) -> usize {
                    if uf[x] != x {
                        let r = find(uf, uf[x]);
                        uf[x] = r;
                    }
                    uf[x]
                }
                let mut union = |uf: &mut Vec<usize>, a: usize, b: usize| {
                    let (ra, rb) = (find(uf, a), find(uf, b));
                    if ra != rb {
                        uf[ra] = rb;
                    }
                };
                for &(a, b) in pairing {
                    let (ia, ib) = (index_of(a).unwrap(), index_of(b).unwrap());
                    union(&mut uf, 4 + ia, 4 + ib);
                }
                for &(s1, s2) in pairs {
                    union(&mut uf, s1 as usize, s2 as usize);
                }
                // connect slots to their edges
                let mut newly_open: Vec<(usize, u8)> = Vec::new();
                for (&e, slots) in &here {
                    match slots.len() {
                        2 => {
                            // both ends of e are at this crossing
                            union(&mut uf, slots[0] as usize, slots[1] as usize);
                        }
                        1 => {
                            let s = slots[0];
                            if let Some(ie) = index_of(e) {
                                // edge was open; its pending end is here
                                union(&mut uf, s as usize, 4 + ie);
                            } else {
                                newly_open.push((e, s));
                            }
                        }
                        _ => unreachable!(),
                    }
                }
                // components with no pending edge close into loops
                let mut pending_of_root: HashMap<usize, Vec<usize>> = HashMap::new();
                for &(e, s) in &newly_open {
                    let r = find(&mut uf, s as usize);
                    pending_of_root.entry(r).or_default().push(e);
                }
                // previously open edges that remain open: none — every open
                // edge in the pairing either stays untouched or closes here.
                // Untouched open edges keep their pairing only through the
                // union structure; collect all roots to find loops.
                let mut touched_roots: Vec<usize> = Vec::new();
                for x in 0..m {
                    touched_roots.push(find(&mut uf, x));
                }
                touched_roots.sort_unstable();
                touched_roots.dedup();
                // an open edge is still open iff its second end is not yet
                // consumed and it is not incident to this crossing
                let still_open: Vec<usize> = open_edges
                    .iter()
                    .copied()
                    .filter(|e| !here.contains_key(e))
                    .collect();
                let mut ends_of_root: HashMap<usize, Vec<usize>> = HashMap::new();
                for &e in &still_open {
                    let ie = index_of(e).unwrap();
                    let r = find(&mut uf, 4 + ie);
                    ends_of_root.entry(r).or_default().push(e);
                }
                for (r, es) in pending_of_root {
                    ends_of_root.entry(r).or_default().extend(es);
                }
                let mut loops = 0i64;
                let mut new_pairing: State = Vec::new();
                for r in touched_roots {
                    match ends_of_root.get(&r).map(|v| v.as_slice()) {
                        None => loops += 1,
                        Some([a, b]) => {
                            new_pairing.push(((*a).min(*b), (*a).max(*b)));
                        }
                        Some(other) => {
                            unreachable!("component with {} pending ends", other.len())
                        }
                    }
                }
                new_pairing.sort_unstable();
                let sign_exp = if choice == 0 { 1 } else { -1 };
                let mut w = weight.shift_mul(sign_exp, &BigInt::from(1));
                for _ in 0..loops {
                    w = &w * &d;
                }
                *next_states.entry(new_pairing).or_insert_with(LaurentPoly::zero) += &w;
            }
        }
        states = next_states;
    }

    let mut total = LaurentPoly::zero();
    for (pairing, w) in &states {
        assert!(pairing.is_empty(), "open ends after full sweep");
        total += w;
    }
    // loops were all counted with full weight; normalize ⟨unknot⟩ = 1
    let mut result = total;
    for _ in 0..diagram.free_loops() {
        result = &result * &d;
    }
    Ok(result.div_exact(&d))
}

/// Greedy sweep order: repeatedly take the crossing that opens the fewest
/// new edges (most incident edges already open). Braid closures built by
/// this crate enumerate crossings bottom-to-top, which this order follows.
fn sweep_order(diagram: &Diagram) -> Vec<usize> {
    let n = diagram.n_crossings();
    let mut open: std::collections::HashSet<usize> = std::collections::HashSet::new();
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = usize::MAX;
        let mut best_score = i64::MIN;
        for c in 0..n {
            if done[c] {
                continue;
            }
            let tuple = diagram.crossing(c).unwrap().tuple;
            let mut score = 0i64;
            for &e in &tuple {
                if open.contains(&e) {
                    score += 1;
                } else {
                    score -= 1;
                }
            }
            // prefer earlier ids on ties so braid order is kept
            if score > best_score {
                best_score = score;
                best = c;
            }
        }
        done[best] = true;
        order.push(best);
        let tuple = diagram.crossing(best).unwrap().tuple;
        for &e in &tuple {
            if !open.remove(&e) {
                open.insert(e);
            }
        }
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::diagram::parse_pd;

    #[test]
    fn unknot_bracket_is_one() {
        assert_eq!(
            kauffman_bracket(&Diagram::unknot(), 28).unwrap(),
            LaurentPoly::one()
        );
    }

    #[test]
    fn kink_brackets() {
        let plus = parse_pd("X[1,1,2,2]").unwrap();
        assert_eq!(
            kauffman_bracket(&plus, 28).unwrap(),
            LaurentPoly::from_terms([(3, -1)])
        );
        let minus = parse_pd("X[1,2,2,1]").unwrap();
        assert_eq!(
            kauffman_bracket(&minus, 28).unwrap(),
            LaurentPoly::from_terms([(-3, -1)])
        );
    }

    #[test]
    fn sweep_agrees_with_naive() {
        let codes = [
            "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]",
            "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]",
            "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]",
            "X[1,1,2,2]",
        ];
        for code in codes {
            let d = parse_pd(code).unwrap();
            assert_eq!(
                kauffman_bracket(&d, 28).unwrap(),
                kauffman_bracket_naive(&d, 20).unwrap(),
                "mismatch for {code}"
            );
        }
        for word in [vec![1, 1, 1], vec![1, 2, 1, -2], vec![2, 2, 1, -2, 1, 1]] {
            let d = BraidWord::new(3, word.clone()).unwrap().closure_diagram();
            assert_eq!(
                kauffman_bracket(&d, 28).unwrap(),
                kauffman_bracket_naive(&d, 20).unwrap(),
                "mismatch for braid {word:?}"
            );
        }
    }

    #[test]
    fn cap_is_enforced() {
        let d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        assert!(matches!(
            kauffman_bracket(&d, 2),
            Err(OpError::BracketCapExceeded { n: 3, cap: 2 })
        ));
    }
}
