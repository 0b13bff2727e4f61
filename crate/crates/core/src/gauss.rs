//! Signed Gauss codes: `O1+ U2+ O3+ U1+ O2+ U3+` style, one token per pass.
//!
//! Both passes of a chord carry the crossing's sign and the two signs must
//! agree. A `|` separates components when a diagram has more than one; a
//! lone `U` token stands for a crossing-free circle, matching the PD
//! grammar's unknot literal.

use crate::diagram::{Diagram, Sign};
use crate::error::{ParseError, ValidateError};
use crate::passes::PassesView;
use std::collections::BTreeMap;
use std::fmt::Write as _;

pub fn parse_gauss(text: &str) -> Result<Diagram, ParseError> {
    let mut cycles: Vec<Vec<(usize, bool, Sign)>> = vec![Vec::new()];
    let mut free_loops = 0usize;
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if bytes[i] == b'|' {
            cycles.push(Vec::new());
            i += 1;
            continue;
        }
        let over = match bytes[i] {
            b'O' => true,
            b'U' => false,
            c => {
                return Err(ParseError::Syntax {
                    pos: i,
                    msg: format!("unexpected character '{}'", c as char),
                })
            }
        };
        let start = i;
        i += 1;
        let num_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i == num_start {
            // bare `U` is a crossing-free circle
            if !over {
                free_loops += 1;
                continue;
            }
            return Err(ParseError::Syntax {
                pos: start,
                msg: "expected chord number".into(),
            });
        }
        let chord: usize = text[num_start..i].parse().map_err(|_| ParseError::Syntax {
            pos: num_start,
            msg: "bad chord number".into(),
        })?;
        let sign = match bytes.get(i) {
            Some(b'+') => Sign::Pos,
            Some(b'-') => Sign::Neg,
            _ => {
                return Err(ParseError::Syntax {
                    pos: i,
                    msg: "expected sign '+' or '-'".into(),
                })
            }
        };
        i += 1;
        cycles.last_mut().unwrap().push((chord, over, sign));
    }
    cycles.retain(|c| !c.is_empty());
    if cycles.is_empty() && free_loops == 0 {
        return Err(ParseError::Syntax {
            pos: 0,
            msg: "empty code".into(),
        });
    }

    // each chord: exactly one O and one U, with equal signs
    let mut chords: BTreeMap<usize, (usize, usize, Option<Sign>, Option<Sign>)> = BTreeMap::new();
    for cyc in &cycles {
        for &(chord, over, sign) in cyc {
            let e = chords.entry(chord).or_insert((0, 0, None, None));
            if over {
                e.0 += 1;
                e.2 = Some(sign);
            } else {
                e.1 += 1;
                e.3 = Some(sign);
            }
        }
    }
    let mut signs = BTreeMap::new();
    for (chord, (n_over, n_under, s_over, s_under)) in &chords {
        if *n_over != 1 || *n_under != 1 {
            return Err(ValidateError::ChordCount {
                chord: *chord,
                count: n_over + n_under,
            }
            .into());
        }
        if s_over != s_under {
            return Err(ValidateError::ChordSignMismatch { chord: *chord }.into());
        }
        signs.insert(*chord, s_over.unwrap());
    }

    let view = PassesView {
        cycles: cycles
            .into_iter()
            .map(|cyc| cyc.into_iter().map(|(c, over, _)| (c, !over)).collect())
            .collect(),
        signs,
        free_loops,
    };
    Ok(view.rebuild()?)
}

/// Serialize as a signed Gauss code; chords are renumbered by first
/// encounter so the output is deterministic.
pub fn serialize_gauss(diagram: &Diagram) -> String {
    let mut out = String::new();
    let mut numbering: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, cyc) in diagram.cycles().iter().enumerate() {
        if i > 0 {
            out.push_str(" | ");
        }
        for (p, pass) in cyc.iter().enumerate() {
            if p > 0 {
                out.push(' ');
            }
            let next = numbering.len() + 1;
            let id = *numbering.entry(pass.crossing).or_insert(next);
            let sign = diagram.sign(pass.crossing);
            let _ = write!(
                out,
                "{}{}{}",
                if pass.is_under() { 'U' } else { 'O' },
                id,
                if sign == Sign::Pos { '+' } else { '-' }
            );
        }
    }
    for _ in 0..diagram.free_loops() {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push('U');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_pd, Format};

    #[test]
    fn trefoil_gauss_is_three_positive_crossings() {
        let d = parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+").unwrap();
        assert_eq!(d.n_crossings(), 3);
        assert_eq!(d.components(), 1);
        assert_eq!(d.writhe(), 3);
        assert!(d.crossings().iter().all(|c| c.sign == Sign::Pos));
    }

    #[test]
    fn single_kink() {
        let d = parse_gauss("O1+ U1+").unwrap();
        assert_eq!(d.n_crossings(), 1);
        assert_eq!(d.components(), 1);
        assert_eq!(d.writhe(), 1);
        // agrees with the positive-kink PD code
        let kink = parse_pd("X[1,1,2,2]").unwrap();
        assert!(d.isomorphic(&kink));
    }

    #[test]
    fn chord_sign_mismatch_is_rejected() {
        let err = parse_gauss("O1+ U2+ O2+ U1-").unwrap_err();
        assert!(matches!(
            err,
            ParseError::Invalid(ValidateError::ChordSignMismatch { chord: 1 })
        ));
    }

    #[test]
    fn unknot_literal_round_trip() {
        let d = parse_gauss("U").unwrap();
        assert_eq!(d.n_crossings(), 0);
        assert_eq!(serialize_gauss(&d), "U");
    }

    #[test]
    fn gauss_round_trip() {
        for code in ["O1+ U2+ O3+ U1+ O2+ U3+", "O1+ U1+", "O1- U1-"] {
            let d = parse_gauss(code).unwrap();
            let s = crate::diagram::serialize(&d, Format::Gauss);
            let d2 = parse_gauss(&s).unwrap();
            assert!(d.isomorphic(&d2), "round trip failed for {code}");
        }
    }

    #[test]
    fn nonplanar_gauss_code_rejected() {
        // chords 1,2,3 pairwise interleaved in the pattern 1 2 3 1 2 3 is
        // the trefoil (planar); 1 2 1 3 2 3 is the classic non-realizable
        // sequence.
        let r = parse_gauss("O1+ U2+ U1+ O3+ O2+ U3+");
        assert!(
            matches!(r, Err(ParseError::Invalid(ValidateError::NotPlanar))),
            "got {r:?}"
        );
    }
}
