//! Oriented knot/link diagrams as validated planar-diagram codes.
//!
//! A diagram is a list of crossings, each a 4-tuple of edge labels listed
//! counterclockwise starting at the incoming under-strand, plus a count of
//! crossing-free circle components ("free loops"). Edge labels run 1..=2n
//! and are consecutive along the orientation of each component. Validation
//! checks the label bookkeeping, resolves the orientation of every strand,
//! and verifies that the rotation system implied by the code embeds in the
//! plane (face count test), so every accepted value really is a diagram.

use crate::error::{ParseError, ValidateError};
use std::fmt::Write as _;

pub type CrossingId = usize;
pub type EdgeLabel = usize;
pub type FaceId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    /// Slot (1 or 3) at which the over-strand arrives for this sign.
    fn over_in_slot(self) -> u8 {
        match self {
            Sign::Pos => 3,
            Sign::Neg => 1,
        }
    }
}

/// One crossing: `tuple` holds the incident edge labels counterclockwise
/// from the incoming under-strand; `sign` is derived from the tuple and the
/// global orientation, never user-supplied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub tuple: [EdgeLabel; 4],
    pub sign: Sign,
}

/// A pass of the knot through a crossing, identified by the arrival slot
/// (0 = under, 1 or 3 = over).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pass {
    pub crossing: CrossingId,
    pub arrival_slot: u8,
}

impl Pass {
    pub fn is_under(&self) -> bool {
        self.arrival_slot == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct EdgeEnds {
    tail: (CrossingId, u8),
    head: (CrossingId, u8),
}

#[derive(Debug, Clone)]
struct Topology {
    /// Label ranges of the components, as (first_label, length), in order.
    components: Vec<(EdgeLabel, usize)>,
    comp_of_label: Vec<usize>,
    edges: Vec<EdgeEnds>,
    /// Per component, the traversal: cycles[i][p] is the pass where edge
    /// (start_i + p) arrives.
    cycles: Vec<Vec<Pass>>,
    face_of_dart: Vec<FaceId>,
    face_count: usize,
}

/// An immutable, validated diagram. All surgeries return fresh values.
#[derive(Debug, Clone)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
    topo: Topology,
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        self.crossings == other.crossings && self.free_loops == other.free_loops
    }
}
impl Eq for Diagram {}

const THROUGH: [u8; 4] = [2, 3, 0, 1];

impl Diagram {
    /// The 0-crossing unknot, written `U`.
    pub fn unknot() -> Diagram {
        Diagram::from_pd_tuples(Vec::new(), 1).expect("unknot is valid")
    }

    pub fn n_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Number of link components, including crossing-free circles.
    pub fn components(&self) -> usize {
        self.topo.components.len() + self.free_loops
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, id: CrossingId) -> Option<&Crossing> {
        self.crossings.get(id)
    }

    pub fn sign(&self, id: CrossingId) -> Sign {
        self.crossings[id].sign
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.as_i64()).sum()
    }

    /// Traversal cycles: one per labelled component, each a sequence of
    /// passes; `cycles()[i][p]` is where edge `component_range(i).0 + p`
    /// arrives.
    pub fn cycles(&self) -> &[Vec<Pass>] {
        &self.topo.cycles
    }

    pub fn component_range(&self, i: usize) -> (EdgeLabel, usize) {
        self.topo.components[i]
    }

    pub fn component_of_label(&self, label: EdgeLabel) -> usize {
        self.topo.comp_of_label[label - 1]
    }

    /// Where the edge arrives: (crossing, slot).
    pub fn head_of(&self, label: EdgeLabel) -> (CrossingId, u8) {
        self.topo.edges[label - 1].head
    }

    /// Where the edge departs: (crossing, slot).
    pub fn tail_of(&self, label: EdgeLabel) -> (CrossingId, u8) {
        self.topo.edges[label - 1].tail
    }

    /// Next edge label along the orientation (cyclic within the component).
    pub fn next_label(&self, label: EdgeLabel) -> EdgeLabel {
        let (start, len) = self.topo.components[self.component_of_label(label)];
        start + (label - start + 1) % len
    }

    pub fn prev_label(&self, label: EdgeLabel) -> EdgeLabel {
        let (start, len) = self.topo.components[self.component_of_label(label)];
        start + (label - start + len - 1) % len
    }

    pub fn face_count(&self) -> usize {
        self.topo.face_count
    }

    /// Face on the left of the edge, walking along its orientation.
    pub fn left_face(&self, label: EdgeLabel) -> FaceId {
        self.topo.face_of_dart[2 * (label - 1)]
    }

    pub fn right_face(&self, label: EdgeLabel) -> FaceId {
        self.topo.face_of_dart[2 * (label - 1) + 1]
    }

    /// The edges bounding the face, as (label, forward) darts in boundary
    /// order.
    pub fn face_darts(&self, face: FaceId) -> Vec<(EdgeLabel, bool)> {
        let mut out = Vec::new();
        for e in 1..=self.edge_count() {
            if self.topo.face_of_dart[2 * (e - 1)] == face {
                out.push((e, true));
            }
            if self.topo.face_of_dart[2 * (e - 1) + 1] == face {
                out.push((e, false));
            }
        }
        out
    }

    /// Construct and validate a diagram from raw PD tuples. Orientation of
    /// every strand is inferred; signs are derived.
    pub fn from_pd_tuples(
        tuples: Vec<[EdgeLabel; 4]>,
        free_loops: usize,
    ) -> Result<Diagram, ValidateError> {
        if tuples.is_empty() {
            if free_loops == 0 {
                return Err(ValidateError::Empty);
            }
            return Ok(Diagram {
                crossings: Vec::new(),
                free_loops,
                topo: Topology {
                    components: Vec::new(),
                    comp_of_label: Vec::new(),
                    edges: Vec::new(),
                    cycles: Vec::new(),
                    face_of_dart: Vec::new(),
                    face_count: 0,
                },
            });
        }
        let over_in = infer_over_in_slots(&tuples)?;
        finish(tuples, over_in, free_loops)
    }

    /// Construct from tuples with known over-arrival slots (internal path
    /// used by surgeries, which know every sign).
    pub(crate) fn from_parts(
        tuples: Vec<[EdgeLabel; 4]>,
        over_in: Vec<u8>,
        free_loops: usize,
    ) -> Result<Diagram, ValidateError> {
        if tuples.is_empty() {
            return Diagram::from_pd_tuples(tuples, free_loops);
        }
        finish(tuples, over_in, free_loops)
    }
}

/// Occurrences of each label across all tuples; exactly two required.
fn occurrences(
    tuples: &[[EdgeLabel; 4]],
) -> Result<Vec<[(CrossingId, u8); 2]>, ValidateError> {
    let max = 2 * tuples.len();
    let mut occ: Vec<Vec<(CrossingId, u8)>> = vec![Vec::new(); max];
    for (c, t) in tuples.iter().enumerate() {
        for (s, &label) in t.iter().enumerate() {
            if label == 0 || label > max {
                return Err(ValidateError::LabelOutOfRange { label, max });
            }
            let list = &mut occ[label - 1];
            if list.len() == 2 {
                return Err(ValidateError::DuplicateEdgeLabel { label });
            }
            list.push((c, s as u8));
        }
    }
    let mut out = Vec::with_capacity(max);
    for (i, list) in occ.into_iter().enumerate() {
        if list.len() != 2 {
            return Err(ValidateError::LabelCount {
                label: i + 1,
                count: list.len(),
            });
        }
        out.push([list[0], list[1]]);
    }
    Ok(out)
}

/// Resolve, for every crossing, which over slot (1 or 3) the over-strand
/// arrives at. Under slots are fixed (0 arrives, 2 departs); the rest is
/// constraint propagation along edges and through crossings.
fn infer_over_in_slots(tuples: &[[EdgeLabel; 4]]) -> Result<Vec<u8>, ValidateError> {
    let occ = occurrences(tuples)?;
    let n = tuples.len();
    // role[c][s]: Some(true) = edge arrives here, Some(false) = departs.
    let mut role: Vec<[Option<bool>; 4]> = vec![[None; 4]; n];
    for (c, r) in role.iter_mut().enumerate() {
        r[0] = Some(true);
        r[2] = Some(false);
        let _ = c;
    }
    let mut queue: Vec<EdgeLabel> = (1..=2 * n).collect();
    while let Some(label) = queue.pop() {
        let [(c1, s1), (c2, s2)] = occ[label - 1];
        let r1 = role[c1][s1 as usize];
        let r2 = role[c2][s2 as usize];
        let assign = |role: &mut Vec<[Option<bool>; 4]>,
                      queue: &mut Vec<EdgeLabel>,
                      c: CrossingId,
                      s: u8,
                      val: bool|
         -> Result<(), ValidateError> {
            match role[c][s as usize] {
                Some(v) if v == val => Ok(()),
                Some(_) => Err(ValidateError::OrientationClash {
                    label: tuples[c][s as usize],
                }),
                None => {
                    role[c][s as usize] = Some(val);
                    // the partner over slot gets the opposite role
                    let partner = THROUGH[s as usize];
                    if role[c][partner as usize].is_none() {
                        role[c][partner as usize] = Some(!val);
                        queue.push(tuples[c][partner as usize]);
                    }
                    queue.push(tuples[c][s as usize]);
                    Ok(())
                }
            }
        };
        match (r1, r2) {
            (Some(a), Some(b)) => {
                if a == b {
                    return Err(ValidateError::OrientationClash { label });
                }
            }
            (Some(a), None) => assign(&mut role, &mut queue, c2, s2, !a)?,
            (None, Some(b)) => assign(&mut role, &mut queue, c1, s1, !b)?,
            (None, None) => {}
        }
    }
    let mut over_in = vec![0u8; n];
    for c in 0..n {
        over_in[c] = match (role[c][1], role[c][3]) {
            (Some(true), Some(false)) => 1,
            (Some(false), Some(true)) => 3,
            (None, None) => return Err(ValidateError::AmbiguousOverStrand { crossing: c }),
            _ => return Err(ValidateError::OrientationClash { label: tuples[c][1] }),
        };
    }
    Ok(over_in)
}

/// Shared back half of construction: component walk, planarity, signs.
fn finish(
    tuples: Vec<[EdgeLabel; 4]>,
    over_in: Vec<u8>,
    free_loops: usize,
) -> Result<Diagram, ValidateError> {
    let occ = occurrences(&tuples)?;
    let n = tuples.len();
    let edge_count = 2 * n;

    // Edge endpoints: arrival slots are 0 and over_in[c]; the rest depart.
    let arrives = |c: CrossingId, s: u8| s == 0 || s == over_in[c];
    let mut edges = Vec::with_capacity(edge_count);
    for (i, &[(c1, s1), (c2, s2)]) in occ.iter().enumerate() {
        let (head, tail) = match (arrives(c1, s1), arrives(c2, s2)) {
            (true, false) => ((c1, s1), (c2, s2)),
            (false, true) => ((c2, s2), (c1, s1)),
            _ => return Err(ValidateError::OrientationClash { label: i + 1 }),
        };
        edges.push(EdgeEnds { tail, head });
    }

    // Walk components; labels must be consecutive cyclic blocks.
    let next = |label: EdgeLabel| -> EdgeLabel {
        let (c, s) = edges[label - 1].head;
        tuples[c][THROUGH[s as usize] as usize]
    };
    let mut comp_of_label = vec![usize::MAX; edge_count];
    let mut components = Vec::new();
    let mut cycles = Vec::new();
    let mut start = 1;
    while start <= edge_count {
        if comp_of_label[start - 1] != usize::MAX {
            return Err(ValidateError::NonConsecutiveLabels { start });
        }
        let comp = components.len();
        let mut cycle = Vec::new();
        let mut e = start;
        loop {
            comp_of_label[e - 1] = comp;
            let (c, s) = edges[e - 1].head;
            cycle.push(Pass {
                crossing: c,
                arrival_slot: s,
            });
            let f = next(e);
            if f == start {
                break;
            }
            if f != e + 1 {
                return Err(ValidateError::NonConsecutiveLabels { start });
            }
            e = f;
        }
        let len = e - start + 1;
        components.push((start, len));
        cycles.push(cycle);
        start = e + 1;
    }

    // Planarity of the implied rotation system: per connected component of
    // the 4-valent graph, V - E + F = 2, i.e. total faces = 2C + n.
    let mut uf: Vec<usize> = (0..n).collect();
    fn find(uf: &mut Vec<usize>, x: usize) -> usize {
        if uf[x] != x {
            let r = find(uf, uf[x]);
            uf[x] = r;
        }
        uf[x]
    }
    for e in &edges {
        let (a, b) = (e.tail.0, e.head.0);
        let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
        if ra != rb {
            uf[ra] = rb;
        }
    }
    let mut graph_components = 0;
    for c in 0..n {
        if find(&mut uf, c) == c {
            graph_components += 1;
        }
    }

    // Face tracing: dart 2(e-1) travels tail->head, 2(e-1)+1 head->tail.
    // Arriving at slot s, the left-face boundary leaves at slot s-1.
    let dart_count = 2 * edge_count;
    let mut face_of_dart = vec![usize::MAX; dart_count];
    let mut face_count = 0;
    for d0 in 0..dart_count {
        if face_of_dart[d0] != usize::MAX {
            continue;
        }
        let face = face_count;
        face_count += 1;
        let mut d = d0;
        loop {
            face_of_dart[d] = face;
            let label = d / 2 + 1;
            let ends = edges[label - 1];
            let (c, s) = if d % 2 == 0 { ends.head } else { ends.tail };
            let s_out = (s + 3) % 4;
            let out_label = tuples[c][s_out as usize];
            let out_ends = edges[out_label - 1];
            d = if out_ends.tail == (c, s_out) {
                2 * (out_label - 1)
            } else {
                2 * (out_label - 1) + 1
            };
            if d == d0 {
                break;
            }
        }
    }
    if face_count != 2 * graph_components + n {
        return Err(ValidateError::NotPlanar);
    }

    // Signs: over-strand arriving at slot 3 makes the crossing positive.
    let mut crossings = Vec::with_capacity(n);
    for (c, t) in tuples.iter().enumerate() {
        let sign = match over_in[c] {
            3 => Sign::Pos,
            1 => Sign::Neg,
            _ => return Err(ValidateError::AmbiguousOverStrand { crossing: c }),
        };
        debug_assert_eq!(sign.over_in_slot(), over_in[c]);
        crossings.push(Crossing { tuple: *t, sign });
    }

    Ok(Diagram {
        crossings,
        free_loops,
        topo: Topology {
            components,
            comp_of_label,
            edges,
            cycles,
            face_of_dart,
            face_count,
        },
    })
}

// ---------------------------------------------------------------------------
// PD code text form
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Pd,
    Gauss,
}

/// Parse a PD line: whitespace-separated `X[a,b,c,d]` terms and `U` literals
/// (each `U` is one crossing-free circle).
pub fn parse_pd(text: &str) -> Result<Diagram, ParseError> {
    let mut tuples = Vec::new();
    let mut free_loops = 0usize;
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        match bytes[i] {
            b'U' => {
                free_loops += 1;
                i += 1;
            }
            b'X' => {
                i += 1;
                if i >= bytes.len() || bytes[i] != b'[' {
                    return Err(ParseError::Syntax {
                        pos: i,
                        msg: "expected '[' after X".into(),
                    });
                }
                i += 1;
                let mut tuple = [0usize; 4];
                for (k, slot) in tuple.iter_mut().enumerate() {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == start {
                        return Err(ParseError::Syntax {
                            pos: i,
                            msg: "expected edge label".into(),
                        });
                    }
                    *slot = text[start..i].parse().map_err(|_| ParseError::Syntax {
                        pos: start,
                        msg: "bad integer".into(),
                    })?;
                    let want = if k == 3 { b']' } else { b',' };
                    if i >= bytes.len() || bytes[i] != want {
                        return Err(ParseError::Syntax {
                            pos: i,
                            msg: format!("expected '{}'", want as char),
                        });
                    }
                    i += 1;
                }
                tuples.push(tuple);
            }
            other => {
                return Err(ParseError::Syntax {
                    pos: i,
                    msg: format!("unexpected character '{}'", other as char),
                });
            }
        }
    }
    if tuples.is_empty() && free_loops == 0 {
        return Err(ParseError::Syntax {
            pos: 0,
            msg: "empty code (the 0-crossing unknot is written 'U')".into(),
        });
    }
    Ok(Diagram::from_pd_tuples(tuples, free_loops)?)
}

pub fn serialize(diagram: &Diagram, format: Format) -> String {
    match format {
        Format::Pd => serialize_pd(diagram),
        Format::Gauss => crate::gauss::serialize_gauss(diagram),
    }
}

fn serialize_pd(diagram: &Diagram) -> String {
    let mut out = String::new();
    for c in diagram.crossings() {
        if !out.is_empty() {
            out.push(' ');
        }
        let t = c.tuple;
        let _ = write!(out, "X[{},{},{},{}]", t[0], t[1], t[2], t[3]);
    }
    for _ in 0..diagram.free_loops() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push('U');
    }
    out
}

// ---------------------------------------------------------------------------
// Canonical form
// ---------------------------------------------------------------------------

impl Diagram {
    /// Minimal serialization over all cyclic relabelings of each component,
    /// component orderings, and orientation reversal. Two diagrams are the
    /// same abstract diagram iff their canonical codes agree.
    pub fn canonical_code(&self) -> String {
        if self.crossings.is_empty() {
            return serialize_pd(self);
        }
        let k = self.topo.components.len();
        let mut best: Option<String> = None;
        let mut perm: Vec<usize> = (0..k).collect();
        permute_all(&mut perm, 0, &mut |order: &[usize]| {
            for reversed in [false, true] {
                // enumerate rotations per component via mixed-radix counter
                let lens: Vec<usize> = order
                    .iter()
                    .map(|&i| self.topo.components[i].1)
                    .collect();
                let mut rot = vec![0usize; k];
                loop {
                    let code = self.relabeled_code(order, &rot, reversed);
                    if best.as_ref().map_or(true, |b| code < *b) {
                        best = Some(code);
                    }
                    // increment counter
                    let mut i = 0;
                    loop {
                        if i == k {
                            return;
                        }
                        rot[i] += 1;
                        if rot[i] < lens[i] {
                            break;
                        }
                        rot[i] = 0;
                        i += 1;
                    }
                }
            }
        });
        best.unwrap()
    }

    pub fn isomorphic(&self, other: &Diagram) -> bool {
        self.free_loops == other.free_loops && self.canonical_code() == other.canonical_code()
    }

    fn relabeled_code(&self, order: &[usize], rot: &[usize], reversed: bool) -> String {
        let mut map = vec![0usize; self.edge_count() + 1];
        let mut new_start = 1usize;
        for (pos, &ci) in order.iter().enumerate() {
            let (start, len) = self.topo.components[ci];
            for p in 0..len {
                let old = start + p;
                let j = if reversed {
                    (rot[pos] + len - p) % len
                } else {
                    (p + len - rot[pos]) % len
                };
                map[old] = new_start + j;
            }
            new_start += len;
        }
        let mut items: Vec<String> = self
            .crossings
            .iter()
            .map(|c| {
                let t = c.tuple;
                let t = if reversed {
                    [t[2], t[3], t[0], t[1]]
                } else {
                    t
                };
                format!(
                    "X[{},{},{},{}]",
                    map[t[0]], map[t[1]], map[t[2]], map[t[3]]
                )
            })
            .collect();
        items.sort();
        let mut out = items.join(" ");
        for _ in 0..self.free_loops {
            out.push_str(" U");
        }
        out
    }
}

fn permute_all(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute_all(items, k + 1, f);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const TREFOIL_ROLFSEN: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
    pub(crate) const FIG8_ROLFSEN: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

    #[test]
    fn unknot_literal() {
        let d = parse_pd("U").unwrap();
        assert_eq!(d.n_crossings(), 0);
        assert_eq!(d.components(), 1);
        assert_eq!(serialize(&d, Format::Pd), "U");
    }

    #[test]
    fn empty_code_rejected() {
        assert!(matches!(parse_pd(""), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn rolfsen_trefoil_is_all_negative() {
        let d = parse_pd(TREFOIL_ROLFSEN).unwrap();
        assert_eq!(d.n_crossings(), 3);
        assert_eq!(d.components(), 1);
        assert!(d.crossings().iter().all(|c| c.sign == Sign::Neg));
        assert_eq!(d.writhe(), -3);
        // classic trefoil diagram has 5 faces
        assert_eq!(d.face_count(), 5);
    }

    #[test]
    fn figure_eight_signs_balance() {
        let d = parse_pd(FIG8_ROLFSEN).unwrap();
        assert_eq!(d.writhe(), 0);
        let pos = d.crossings().iter().filter(|c| c.sign == Sign::Pos).count();
        assert_eq!(pos, 2);
    }

    #[test]
    fn kink_signs() {
        // positive kink: over-strand arrives at slot 3
        let plus = parse_pd("X[1,1,2,2]").unwrap();
        assert_eq!(plus.writhe(), 1);
        let minus = parse_pd("X[1,2,2,1]").unwrap();
        assert_eq!(minus.writhe(), -1);
    }

    #[test]
    fn duplicate_label_rejected() {
        let err = parse_pd("X[1,2,1,2] X[1,3,4,3]").unwrap_err();
        assert!(matches!(
            err,
            ParseError::Invalid(ValidateError::DuplicateEdgeLabel { label: 1 })
        ));
    }

    #[test]
    fn nonconsecutive_labels_rejected() {
        // swap the under strand labels of one crossing of the trefoil
        let err = parse_pd("X[2,4,1,5] X[3,6,4,1] X[5,2,6,3]").unwrap_err();
        assert!(matches!(err, ParseError::Invalid(_)));
    }

    #[test]
    fn pd_round_trip_is_identity_up_to_relabeling() {
        for code in [TREFOIL_ROLFSEN, FIG8_ROLFSEN, "X[1,1,2,2]", "U"] {
            let d = parse_pd(code).unwrap();
            let s = serialize(&d, Format::Pd);
            let d2 = parse_pd(&s).unwrap();
            assert!(d.isomorphic(&d2), "round trip failed for {code}");
        }
    }

    #[test]
    fn canonical_code_invariant_under_rotation() {
        // same trefoil with labels rotated by 2: relabel e -> e+2 (mod 6)
        let d1 = parse_pd(TREFOIL_ROLFSEN).unwrap();
        let d2 = parse_pd("X[3,6,4,1] X[5,2,6,3] X[1,4,2,5]").unwrap();
        assert_eq!(d1.canonical_code(), d2.canonical_code());
    }

    #[test]
    fn left_and_right_faces_differ_for_simple_diagrams() {
        let d = parse_pd(TREFOIL_ROLFSEN).unwrap();
        for e in 1..=d.edge_count() {
            assert_ne!(d.left_face(e), d.right_face(e));
        }
    }
}
