//! Seifert's algorithm on the diagram level: smooth every crossing
//! respecting orientation and record the circles, the signed edges between
//! them, and the cyclic order of crossings along each circle (the order is
//! recorded during the smoothing traversal itself, since the quasipositivity
//! conditions quantify over it).

use crate::diagram::{CrossingId, Diagram, Sign};
use crate::error::OpError;

pub type CircleId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeifertEdge {
    pub crossing: CrossingId,
    pub circle_a: CircleId,
    pub circle_b: CircleId,
    pub sign: Sign,
}

#[derive(Debug, Clone)]
pub struct SeifertGraph {
    pub circle_count: usize,
    pub edges: Vec<SeifertEdge>,
    /// Per circle, incident crossings in traversal order along the circle.
    /// Crossing-free circles have empty orders.
    pub cyclic_orders: Vec<Vec<CrossingId>>,
    /// Circle containing each edge label (1-based; index label-1).
    circle_of_label: Vec<CircleId>,
}

impl SeifertGraph {
    pub fn circle_of_label(&self, label: usize) -> CircleId {
        self.circle_of_label[label - 1]
    }

    /// Circles incident to a crossing, as stored on its edge.
    pub fn circles_of_crossing(&self, crossing: CrossingId) -> Option<(CircleId, CircleId)> {
        self.edges
            .iter()
            .find(|e| e.crossing == crossing)
            .map(|e| (e.circle_a, e.circle_b))
    }

    /// (#crossings − #circles + 1) / 2, the genus of the Seifert surface of
    /// a connected diagram. Integrality holds for connected diagrams and is
    /// asserted by the property tests.
    pub fn genus_bound(&self) -> i64 {
        let n = self.edges.len() as i64;
        let s = self.circle_count as i64;
        (n - s + 1) / 2
    }

    /// Twice the genus bound, exact for any diagram.
    pub fn genus_bound_doubled(&self) -> i64 {
        let n = self.edges.len() as i64;
        let s = self.circle_count as i64;
        n - s + 1
    }
}

/// Run Seifert's algorithm. Circle ids are assigned by first visit in
/// increasing order of the smallest incident edge label.
pub fn seifert_split(diagram: &Diagram) -> SeifertGraph {
    let n = diagram.n_crossings();
    let edge_count = diagram.edge_count();

    // successor along the smoothed circles: at X[a,b,c,d] the under-in
    // joins the over-out and the over-in joins the under-out
    let successor = |label: usize| -> usize {
        let (c, _slot) = diagram.head_of(label);
        let t = diagram.crossing(c).unwrap().tuple;
        let (oin, oout) = match diagram.sign(c) {
            Sign::Pos => (t[3], t[1]),
            Sign::Neg => (t[1], t[3]),
        };
        if label == t[0] {
            oout
        } else if label == oin {
            t[2]
        } else {
            unreachable!("label must arrive as under-in or over-in")
        }
    };

    let mut circle_of_label = vec![usize::MAX; edge_count];
    let mut cyclic_orders: Vec<Vec<CrossingId>> = Vec::new();
    for start in 1..=edge_count {
        if circle_of_label[start - 1] != usize::MAX {
            continue;
        }
        let id = cyclic_orders.len();
        let mut order = Vec::new();
        let mut e = start;
        loop {
            circle_of_label[e - 1] = id;
            let (c, _) = diagram.head_of(e);
            order.push(c);
            e = successor(e);
            if e == start {
                break;
            }
        }
        cyclic_orders.push(order);
    }
    for _ in 0..diagram.free_loops() {
        cyclic_orders.push(Vec::new());
    }

    let mut edges = Vec::with_capacity(n);
    for (c, cr) in diagram.crossings().iter().enumerate() {
        let t = cr.tuple;
        let oin = match cr.sign {
            Sign::Pos => t[3],
            Sign::Neg => t[1],
        };
        let circle_a = circle_of_label[t[0] - 1];
        let circle_b = circle_of_label[oin - 1];
        // oriented smoothing of a knot diagram never joins a circle to
        // itself
        assert_ne!(
            circle_a, circle_b,
            "self-edge in Seifert graph at crossing {c}"
        );
        edges.push(SeifertEdge {
            crossing: c,
            circle_a,
            circle_b,
            sign: cr.sign,
        });
    }

    SeifertGraph {
        circle_count: cyclic_orders.len(),
        edges,
        cyclic_orders,
        circle_of_label,
    }
}

/// Crossings strictly between `x` and `y` along `circle`, in the chosen
/// direction (`forward` follows the stored cyclic order).
pub fn arc_between(
    graph: &SeifertGraph,
    circle: CircleId,
    x: CrossingId,
    y: CrossingId,
    forward: bool,
) -> Result<Vec<CrossingId>, OpError> {
    let order = graph
        .cyclic_orders
        .get(circle)
        .ok_or(OpError::Internal(format!("no circle {circle}")))?;
    let px = order
        .iter()
        .position(|&c| c == x)
        .ok_or(OpError::BadCrossing(x))?;
    let py = order
        .iter()
        .position(|&c| c == y)
        .ok_or(OpError::BadCrossing(y))?;
    let len = order.len();
    let mut out = Vec::new();
    if forward {
        let mut i = (px + 1) % len;
        while i != py {
            out.push(order[i]);
            i = (i + 1) % len;
        }
    } else {
        let mut i = (px + len - 1) % len;
        while i != py {
            out.push(order[i]);
            i = (i + len - 1) % len;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::diagram::{parse_pd, Diagram};

    #[test]
    fn unknot_has_one_circle() {
        let g = seifert_split(&Diagram::unknot());
        assert_eq!(g.circle_count, 1);
        assert!(g.edges.is_empty());
    }

    #[test]
    fn braid_closure_circles_are_strands() {
        let w = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let g = seifert_split(&w.closure().unwrap());
        assert_eq!(g.circle_count, 2);
        assert_eq!(g.edges.len(), 3);
        assert!(g.edges.iter().all(|e| e.sign == Sign::Pos));
        // all three crossings join the same two circles
        let (a, b) = (g.edges[0].circle_a, g.edges[0].circle_b);
        for e in &g.edges {
            assert_eq!(
                (e.circle_a.min(e.circle_b), e.circle_a.max(e.circle_b)),
                (a.min(b), a.max(b))
            );
        }
        assert_eq!(g.genus_bound(), 1); // trefoil has Seifert genus 1
    }

    #[test]
    fn kink_splits_into_two_circles() {
        let d = parse_pd("X[1,1,2,2]").unwrap();
        let g = seifert_split(&d);
        assert_eq!(g.circle_count, 2);
        assert_eq!(g.edges.len(), 1);
        assert_eq!(g.genus_bound(), 0);
    }

    #[test]
    fn five_two_has_four_circles() {
        let d =
            parse_pd("X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]").unwrap();
        let g = seifert_split(&d);
        assert_eq!(g.circle_count, 4);
        assert_eq!(g.genus_bound(), 1);
    }

    #[test]
    fn arc_between_partitions_the_circle() {
        let w = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let g = seifert_split(&w.closure().unwrap());
        let order = &g.cyclic_orders[0];
        assert_eq!(order.len(), 3);
        let (x, y) = (order[0], order[2]);
        let fwd = arc_between(&g, 0, x, y, true).unwrap();
        assert_eq!(fwd, vec![order[1]]);
        let bwd = arc_between(&g, 0, x, y, false).unwrap();
        assert!(bwd.is_empty());
        // forward and backward arcs plus endpoints cover the circle
        assert_eq!(fwd.len() + bwd.len() + 2, order.len());
        // reversed direction from y equals the forward arc reversed
        let back = arc_between(&g, 0, y, x, false).unwrap();
        let mut fwd_rev = fwd.clone();
        fwd_rev.reverse();
        assert_eq!(back, fwd_rev);
    }
}
