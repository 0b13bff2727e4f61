//! Braid words and their closures.
//!
//! Letter `k` means the standard generator σ_|k| with the sign of `k` as
//! exponent; positive σ_i crosses the strand at position i over the strand
//! at position i+1 (so crossing signs equal letter signs when all strands
//! run upward, which they do in a closure).

use crate::diagram::{Diagram, Sign};
use crate::error::{OpError, ParseError};
use crate::passes::PassesView;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strand_count: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strand_count: usize, letters: Vec<i64>) -> Result<BraidWord, OpError> {
        assert!(strand_count >= 1);
        for &k in &letters {
            if k == 0 || k.unsigned_abs() as usize >= strand_count {
                return Err(OpError::BadBraidLetter {
                    letter: k,
                    strands: strand_count,
                });
            }
        }
        Ok(BraidWord {
            strand_count,
            letters,
        })
    }

    /// Parse `B<strands>: i1 i2 ... ik`.
    pub fn parse(text: &str) -> Result<BraidWord, ParseError> {
        let t = text.trim();
        let rest = t.strip_prefix('B').ok_or(ParseError::Syntax {
            pos: 0,
            msg: "braid word must start with 'B'".into(),
        })?;
        let (strands_str, letters_str) = rest.split_once(':').ok_or(ParseError::Syntax {
            pos: 1,
            msg: "expected ':' after strand count".into(),
        })?;
        let strand_count: usize = strands_str.trim().parse().map_err(|_| ParseError::Syntax {
            pos: 1,
            msg: "bad strand count".into(),
        })?;
        let mut letters = Vec::new();
        for tok in letters_str.split_whitespace() {
            let k: i64 = tok.parse().map_err(|_| ParseError::Syntax {
                pos: 0,
                msg: format!("bad braid letter '{tok}'"),
            })?;
            letters.push(k);
        }
        BraidWord::new(strand_count, letters).map_err(|e| ParseError::Syntax {
            pos: 0,
            msg: e.to_string(),
        })
    }

    pub fn strand_count(&self) -> usize {
        self.strand_count
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|k| k.signum()).sum()
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strand_count, other.strand_count);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strand_count: self.strand_count,
            letters,
        }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strand_count: self.strand_count,
            letters: self.letters.iter().rev().map(|k| -k).collect(),
        }
    }

    /// Strand-position permutation: `perm()[p]` is the top position reached
    /// by the strand entering at bottom position p (0-based).
    pub fn perm(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strand_count).collect(); // pos[p] = strand at position p
        for &k in &self.letters {
            let j = k.unsigned_abs() as usize - 1;
            pos.swap(j, j + 1);
        }
        let mut out = vec![0; self.strand_count];
        for (p, &s) in pos.iter().enumerate() {
            out[s] = p;
        }
        out
    }

    /// The closure as a diagram of any number of components.
    pub fn closure_diagram(&self) -> Diagram {
        // per-strand pass lists, simulated bottom to top
        let mut pos: Vec<usize> = (0..self.strand_count).collect();
        let mut strand_passes: Vec<Vec<(usize, bool)>> = vec![Vec::new(); self.strand_count];
        let mut signs = BTreeMap::new();
        for (c, &k) in self.letters.iter().enumerate() {
            let j = k.unsigned_abs() as usize - 1;
            let (left, right) = (pos[j], pos[j + 1]);
            let sign = if k > 0 { Sign::Pos } else { Sign::Neg };
            signs.insert(c, sign);
            // positive: left strand over
            let (over, under) = if k > 0 { (left, right) } else { (right, left) };
            strand_passes[over].push((c, false));
            strand_passes[under].push((c, true));
            pos.swap(j, j + 1);
        }
        // top position reached by each strand
        let mut top = vec![0; self.strand_count];
        for (p, &s) in pos.iter().enumerate() {
            top[s] = p;
        }
        // knot traversal: after strand s we continue with the strand whose
        // bottom position is s's top position
        let mut visited = vec![false; self.strand_count];
        let mut cycles = Vec::new();
        let mut free_loops = 0;
        for start in 0..self.strand_count {
            if visited[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut s = start;
            loop {
                visited[s] = true;
                cyc.extend_from_slice(&strand_passes[s]);
                s = top[s];
                if s == start {
                    break;
                }
            }
            if cyc.is_empty() {
                free_loops += 1;
            } else {
                cycles.push(cyc);
            }
        }
        PassesView {
            cycles,
            signs,
            free_loops,
        }
        .rebuild()
        .expect("braid closure is always a valid diagram")
    }

    /// The closure, required to be a knot.
    pub fn closure(&self) -> Result<Diagram, OpError> {
        let d = self.closure_diagram();
        if d.components() != 1 {
            return Err(OpError::MultiComponentClosure(d.components()));
        }
        Ok(d)
    }
}

pub fn serialize_braid(word: &BraidWord) -> String {
    let letters: Vec<String> = word.letters.iter().map(|k| k.to_string()).collect();
    format!("B{}: {}", word.strand_count, letters.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    #[test]
    fn trefoil_closure() {
        let w = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let d = w.closure().unwrap();
        assert_eq!(d.n_crossings(), 3);
        assert_eq!(d.writhe(), 3);
        assert_eq!(d.components(), 1);
        // the right trefoil is the mirror of the Rolfsen (all-negative) one
        let rolfsen = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        assert!(d.isomorphic(&rolfsen.mirror()));
    }

    #[test]
    fn single_letter_closure_is_kink() {
        let w = BraidWord::new(2, vec![1]).unwrap();
        let d = w.closure().unwrap();
        assert_eq!(d.n_crossings(), 1);
        assert_eq!(d.writhe(), 1);
        assert!(d.isomorphic(&parse_pd("X[1,1,2,2]").unwrap()));
    }

    #[test]
    fn cancelling_pair_closes_to_two_components() {
        // σ1 σ1⁻¹ is the trivial braid on 2 strands; its closure is a
        // 2-component unlink diagram, so `closure` refuses it.
        let w = BraidWord::new(2, vec![1, -1]).unwrap();
        let d = w.closure_diagram();
        assert_eq!(d.components(), 2);
        assert!(matches!(
            w.closure(),
            Err(OpError::MultiComponentClosure(2))
        ));
    }

    #[test]
    fn writhe_equals_letter_sign_sum() {
        for letters in [vec![1, 1, 1], vec![1, 2, 1, -2], vec![2, 1, -2, 1]] {
            let w = BraidWord::new(3, letters).unwrap();
            let d = w.closure_diagram();
            assert_eq!(d.writhe(), w.exponent_sum());
        }
    }

    #[test]
    fn parse_and_serialize() {
        let w = BraidWord::parse("B3: 1 2 -1").unwrap();
        assert_eq!(w.strand_count(), 3);
        assert_eq!(w.letters(), &[1, 2, -1]);
        assert_eq!(serialize_braid(&w), "B3: 1 2 -1");
        assert!(BraidWord::parse("B2: 5").is_err());
        assert!(BraidWord::parse("2: 1").is_err());
    }

    #[test]
    fn staircase_closure_is_unknot_shaped() {
        let w = BraidWord::new(4, vec![1, 2, 3]).unwrap();
        let d = w.closure().unwrap();
        assert_eq!(d.n_crossings(), 3);
        assert_eq!(d.components(), 1);
    }
}
