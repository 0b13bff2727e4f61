//! Internal traversal ("passes") view of a diagram and the shared rebuild
//! path used by every surgery.
//!
//! A pass is one visit of a strand to a crossing. The cyclic sequences of
//! passes per component, together with each crossing's sign, determine the
//! PD code completely: the sign fixes which over slot the over-strand
//! arrives at. Surgeries edit this view and rebuild, which re-runs full
//! validation (label bookkeeping and planarity).

use crate::diagram::{Diagram, Sign};
use crate::error::ValidateError;
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub(crate) struct PassesView {
    /// Cyclic pass sequences, one per labelled component: (crossing key, is_under).
    pub cycles: Vec<Vec<(usize, bool)>>,
    /// Sign per crossing key.
    pub signs: BTreeMap<usize, Sign>,
    pub free_loops: usize,
}

impl PassesView {
    pub fn of(diagram: &Diagram) -> PassesView {
        let cycles = diagram
            .cycles()
            .iter()
            .map(|cyc| {
                cyc.iter()
                    .map(|p| (p.crossing, p.is_under()))
                    .collect::<Vec<_>>()
            })
            .collect();
        let signs = diagram
            .crossings()
            .iter()
            .enumerate()
            .map(|(i, c)| (i, c.sign))
            .collect();
        PassesView {
            cycles,
            signs,
            free_loops: diagram.free_loops(),
        }
    }

    /// Rebuild a validated diagram. Crossing keys are compacted in sorted
    /// order (so pre-existing ids survive when new crossings use larger
    /// keys); cycles are rotated and ordered deterministically.
    pub fn rebuild(mut self) -> Result<Diagram, ValidateError> {
        // empty cycles are crossing-free circles
        self.cycles.retain(|c| {
            if c.is_empty() {
                self.free_loops += 1;
                false
            } else {
                true
            }
        });

        // compact crossing keys
        let mut keys: Vec<usize> = self.signs.keys().copied().collect();
        keys.sort_unstable();
        let key_index: BTreeMap<usize, usize> =
            keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        let mut seen = vec![(false, false); keys.len()];
        for cyc in &self.cycles {
            for &(k, under) in cyc {
                let id = *key_index
                    .get(&k)
                    .ok_or(ValidateError::OrientationClash { label: k })?;
                let slot = if under { &mut seen[id].0 } else { &mut seen[id].1 };
                if *slot {
                    return Err(ValidateError::OrientationClash { label: k });
                }
                *slot = true;
            }
        }
        if let Some(id) = seen.iter().position(|&(u, o)| !(u && o)) {
            return Err(ValidateError::LabelCount {
                label: keys[id],
                count: [seen[id].0, seen[id].1].iter().filter(|b| **b).count(),
            });
        }

        // deterministic rotation and ordering of cycles
        let mut cycles: Vec<Vec<(usize, bool)>> = self
            .cycles
            .iter()
            .map(|cyc| {
                let mut best = 0;
                for i in 1..cyc.len() {
                    let key = (key_index[&cyc[i].0], cyc[i].1);
                    let cur = (key_index[&cyc[best].0], cyc[best].1);
                    if key < cur {
                        best = i;
                    }
                }
                let mut rot = cyc[best..].to_vec();
                rot.extend_from_slice(&cyc[..best]);
                rot
            })
            .collect();
        cycles.sort_by_key(|cyc| (key_index[&cyc[0].0], cyc[0].1));

        if cycles.is_empty() {
            return Diagram::from_pd_tuples(Vec::new(), self.free_loops);
        }

        // label assignment: edge (start_i + p) arrives at cycle i, pass p
        let mut offset = Vec::with_capacity(cycles.len());
        let mut acc = 0usize;
        for cyc in &cycles {
            offset.push(acc);
            acc += cyc.len();
        }

        // per crossing: (under cycle/pos, over cycle/pos)
        let n = keys.len();
        let mut under_at = vec![(usize::MAX, usize::MAX); n];
        let mut over_at = vec![(usize::MAX, usize::MAX); n];
        for (i, cyc) in cycles.iter().enumerate() {
            for (p, &(k, under)) in cyc.iter().enumerate() {
                let id = key_index[&k];
                if under {
                    under_at[id] = (i, p);
                } else {
                    over_at[id] = (i, p);
                }
            }
        }

        let label_in = |cyc: usize, pos: usize| offset[cyc] + pos + 1;
        let label_out =
            |cyc: usize, pos: usize, len: usize| offset[cyc] + (pos + 1) % len + 1;

        let mut tuples = Vec::with_capacity(n);
        let mut over_in_slots = Vec::with_capacity(n);
        for id in 0..n {
            let (ui, up) = under_at[id];
            let (oi, op) = over_at[id];
            let a = label_in(ui, up);
            let c = label_out(ui, up, cycles[ui].len());
            let oin = label_in(oi, op);
            let oout = label_out(oi, op, cycles[oi].len());
            let sign = self.signs[&keys[id]];
            let (b, d) = match sign {
                Sign::Pos => (oout, oin),
                Sign::Neg => (oin, oout),
            };
            tuples.push([a, b, c, d]);
            over_in_slots.push(match sign {
                Sign::Pos => 3,
                Sign::Neg => 1,
            });
        }

        let diagram = Diagram::from_parts(tuples, over_in_slots, self.free_loops)?;
        // the rebuilt diagram must agree with the requested signs
        for id in 0..n {
            if diagram.sign(id) != self.signs[&keys[id]] {
                return Err(ValidateError::SignMismatch { crossing: id });
            }
        }
        Ok(diagram)
    }
}

/// Edge-label arithmetic note: `label_in`/`label_out` above are 1-based and
/// match `Diagram::cycles()`: edge `start_i + p` arrives at pass `p`.
#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    #[test]
    fn view_round_trips_through_rebuild() {
        for code in [
            "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]",
            "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]",
            "X[1,1,2,2]",
            "X[1,2,2,1]",
        ] {
            let d = parse_pd(code).unwrap();
            let rebuilt = PassesView::of(&d).rebuild().unwrap();
            assert!(d.isomorphic(&rebuilt), "rebuild changed {code}");
            assert_eq!(d.writhe(), rebuilt.writhe());
        }
    }
}
