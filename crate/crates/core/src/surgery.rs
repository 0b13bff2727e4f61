//! Elementary diagram surgeries: mirror, crossing change, oriented
//! smoothing, orientation reversal. All return fresh validated diagrams.

use crate::diagram::{CrossingId, Diagram, Sign};
use crate::error::OpError;
use crate::passes::PassesView;

impl Diagram {
    /// Swap over/under at every crossing; all signs negate.
    pub fn mirror(&self) -> Diagram {
        let mut tuples = Vec::with_capacity(self.n_crossings());
        let mut over_in = Vec::with_capacity(self.n_crossings());
        for c in self.crossings() {
            tuples.push(change_tuple(c.tuple, c.sign));
            over_in.push(match c.sign.flip() {
                Sign::Pos => 3,
                Sign::Neg => 1,
            });
        }
        Diagram::from_parts(tuples, over_in, self.free_loops())
            .expect("mirror of a valid diagram is valid")
    }

    /// Swap over/under at one crossing; its sign negates, everything else
    /// is untouched (labels included).
    pub fn crossing_change(&self, id: CrossingId) -> Result<Diagram, OpError> {
        if id >= self.n_crossings() {
            return Err(OpError::BadCrossing(id));
        }
        let mut tuples = Vec::with_capacity(self.n_crossings());
        let mut over_in = Vec::with_capacity(self.n_crossings());
        for (i, c) in self.crossings().iter().enumerate() {
            let sign = if i == id { c.sign.flip() } else { c.sign };
            tuples.push(if i == id {
                change_tuple(c.tuple, c.sign)
            } else {
                c.tuple
            });
            over_in.push(match sign {
                Sign::Pos => 3,
                Sign::Neg => 1,
            });
        }
        Ok(Diagram::from_parts(tuples, over_in, self.free_loops())?)
    }

    /// Reverse the orientation of every component. Signs are unchanged;
    /// labels are remapped to stay consecutive in the new direction.
    pub fn reverse(&self) -> Diagram {
        let relabel = |e: usize| -> usize {
            let comp = self.component_of_label(e);
            let (start, len) = self.component_range(comp);
            start + (len - (e - start)) % len
        };
        let mut tuples = Vec::with_capacity(self.n_crossings());
        let mut over_in = Vec::with_capacity(self.n_crossings());
        for c in self.crossings() {
            let t = c.tuple;
            tuples.push([relabel(t[2]), relabel(t[3]), relabel(t[0]), relabel(t[1])]);
            over_in.push(match c.sign {
                Sign::Pos => 3,
                Sign::Neg => 1,
            });
        }
        Diagram::from_parts(tuples, over_in, self.free_loops())
            .expect("reversal of a valid diagram is valid")
    }

    /// Oriented smoothing at a crossing: the crossing disappears and the
    /// strands reconnect respecting orientation. Smoothing a self-crossing
    /// splits its component in two; smoothing a crossing between two
    /// components merges them.
    pub fn smooth(&self, id: CrossingId) -> Result<Diagram, OpError> {
        if id >= self.n_crossings() {
            return Err(OpError::BadCrossing(id));
        }
        let mut view = PassesView::of(self);
        let mut under_pos = None;
        let mut over_pos = None;
        for (i, cyc) in view.cycles.iter().enumerate() {
            for (p, &(k, under)) in cyc.iter().enumerate() {
                if k == id {
                    if under {
                        under_pos = Some((i, p));
                    } else {
                        over_pos = Some((i, p));
                    }
                }
            }
        }
        let (ui, up) = under_pos.ok_or(OpError::BadCrossing(id))?;
        let (oi, op) = over_pos.ok_or(OpError::BadCrossing(id))?;
        view.signs.remove(&id);
        if ui == oi {
            // self-crossing: split the cycle into two
            let cyc = view.cycles[ui].clone();
            let len = cyc.len();
            let (p, q) = (up.min(op), up.max(op));
            let inner: Vec<_> = cyc[p + 1..q].to_vec();
            let mut outer: Vec<_> = cyc[q + 1..len].to_vec();
            outer.extend_from_slice(&cyc[..p]);
            view.cycles.remove(ui);
            view.cycles.push(inner);
            view.cycles.push(outer);
        } else {
            // crossing between two components: merge the cycles
            let a = view.cycles[ui].clone();
            let b = view.cycles[oi].clone();
            let mut merged: Vec<_> = a[up + 1..].to_vec();
            merged.extend_from_slice(&a[..up]);
            merged.extend_from_slice(&b[op + 1..]);
            merged.extend_from_slice(&b[..op]);
            let (hi, lo) = (ui.max(oi), ui.min(oi));
            view.cycles.remove(hi);
            view.cycles.remove(lo);
            view.cycles.push(merged);
        }
        Ok(view.rebuild()?)
    }
}

/// Tuple after an over/under swap: the new incoming under-strand is the old
/// incoming over-strand, so the tuple rotates to start there.
fn change_tuple(t: [usize; 4], old_sign: Sign) -> [usize; 4] {
    match old_sign {
        Sign::Pos => [t[3], t[0], t[1], t[2]],
        Sign::Neg => [t[1], t[2], t[3], t[0]],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

    #[test]
    fn mirror_negates_writhe_and_is_involutive() {
        let d = parse_pd(TREFOIL).unwrap();
        let m = d.mirror();
        assert_eq!(m.writhe(), 3);
        assert!(m.mirror().isomorphic(&d));
        let u = Diagram::unknot();
        assert!(u.mirror().isomorphic(&u));
    }

    #[test]
    fn crossing_change_is_involutive_and_local() {
        let d = parse_pd(TREFOIL).unwrap();
        for id in 0..3 {
            let c = d.crossing_change(id).unwrap();
            assert_eq!(c.writhe(), -1); // -3 with one crossing flipped
            let back = c.crossing_change(id).unwrap();
            assert_eq!(back, d);
        }
        assert!(d.crossing_change(7).is_err());
    }

    #[test]
    fn kink_crossing_change_stays_unknot_diagram() {
        let d = parse_pd("X[1,1,2,2]").unwrap();
        let c = d.crossing_change(0).unwrap();
        assert_eq!(c.n_crossings(), 1);
        assert_eq!(c.writhe(), -1);
        assert!(c.isomorphic(&parse_pd("X[1,2,2,1]").unwrap()));
    }

    #[test]
    fn smoothing_a_kink_gives_two_circles() {
        let d = parse_pd("X[1,1,2,2]").unwrap();
        let s = d.smooth(0).unwrap();
        assert_eq!(s.n_crossings(), 0);
        assert_eq!(s.components(), 2);
        assert_eq!(s.free_loops(), 2);
    }

    #[test]
    fn smoothing_trefoil_gives_hopf_link() {
        let d = parse_pd(TREFOIL).unwrap();
        for id in 0..3 {
            let s = d.smooth(id).unwrap();
            assert_eq!(s.n_crossings(), 2);
            assert_eq!(s.components(), 2);
            assert_eq!(s.writhe(), -2);
        }
    }

    #[test]
    fn smooth_then_count_always_two_for_knots() {
        for code in [TREFOIL, "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"] {
            let d = parse_pd(code).unwrap();
            for id in 0..d.n_crossings() {
                assert_eq!(d.smooth(id).unwrap().components(), 2);
            }
        }
    }

    #[test]
    fn reverse_preserves_signs() {
        let d = parse_pd(TREFOIL).unwrap();
        let r = d.reverse();
        assert_eq!(r.writhe(), d.writhe());
        assert_eq!(r.n_crossings(), 3);
    }
}
