//! The invariant battery: linking number, the Casson invariant v₂ by two
//! independent routes, the Jones polynomial, and its exact Taylor expansion
//! at t = e^h whose h³ coefficient is our order-3 slot.

use crate::bracket::kauffman_bracket;
use crate::diagram::{Diagram, Sign};
use crate::error::OpError;
use crate::poly::LaurentPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Half the signed count of crossings between the two components.
pub fn linking_number(diagram: &Diagram) -> Result<i64, OpError> {
    if diagram.components() != 2 {
        return Err(OpError::NotTwoComponents(diagram.components()));
    }
    let mut sum = 0i64;
    for c in diagram.crossings() {
        let under_comp = diagram.component_of_label(c.tuple[0]);
        let over_in = match c.sign {
            Sign::Pos => c.tuple[3],
            Sign::Neg => c.tuple[1],
        };
        let over_comp = diagram.component_of_label(over_in);
        if under_comp != over_comp {
            sum += c.sign.as_i64();
        }
    }
    debug_assert!(sum % 2 == 0, "inter-component crossing sum must be even");
    Ok(sum / 2)
}

/// Casson invariant by the skein recursion: walk from the tail of edge 1,
/// switch every crossing first met on its under-strand (making the diagram
/// descending, hence unknotted), and accumulate the linking number of the
/// smoothing at each switch. Switching a positive crossing contributes
/// +lk, a negative one −lk.
pub fn v2_skein_oracle(diagram: &Diagram) -> Result<i64, OpError> {
    if diagram.components() != 1 {
        return Err(OpError::NotAKnot(diagram.components()));
    }
    let mut d = diagram.clone();
    let mut total = 0i64;
    let mut steps = 0usize;
    loop {
        // first crossing along the walk whose first encounter is an underpass
        let mut first_under = None;
        let mut seen = vec![false; d.n_crossings()];
        'walk: for cyc in d.cycles() {
            for pass in cyc {
                if !seen[pass.crossing] {
                    seen[pass.crossing] = true;
                    if pass.is_under() {
                        first_under = Some(pass.crossing);
                        break 'walk;
                    }
                }
            }
        }
        let Some(x) = first_under else {
            return Ok(total);
        };
        let lk = linking_number(&d.smooth(x)?)?;
        match d.sign(x) {
            Sign::Pos => total += lk,
            Sign::Neg => total -= lk,
        }
        d = d.crossing_change(x)?;
        steps += 1;
        if steps > diagram.n_crossings() {
            return Err(OpError::Internal(
                "descending descent did not terminate".into(),
            ));
        }
    }
}

/// Casson invariant by a Gauss-diagram count: pairs of crossings met in the
/// interleaved order U_x O_y O_x U_y along the knot from the base point,
/// weighted by the product of signs. Its contract is agreement with
/// `v2_skein_oracle`, enforced by the test suite across the whole corpus.
pub fn v2_gauss(diagram: &Diagram) -> Result<i64, OpError> {
    if diagram.components() != 1 {
        return Err(OpError::NotAKnot(diagram.components()));
    }
    let cyc = match diagram.cycles().first() {
        Some(c) => c,
        None => return Ok(0),
    };
    let m = cyc.len();
    let mut total = 0i64;
    for i1 in 0..m {
        let p1 = &cyc[i1];
        if !p1.is_under() {
            continue;
        }
        for i2 in i1 + 1..m {
            let p2 = &cyc[i2];
            if p2.is_under() || p2.crossing == p1.crossing {
                continue;
            }
            for i3 in i2 + 1..m {
                let p3 = &cyc[i3];
                if p3.crossing != p1.crossing {
                    continue;
                }
                debug_assert!(!p3.is_under());
                for i4 in i3 + 1..m {
                    let p4 = &cyc[i4];
                    if p4.crossing != p2.crossing {
                        continue;
                    }
                    debug_assert!(p4.is_under());
                    total += diagram.sign(p1.crossing).as_i64()
                        * diagram.sign(p2.crossing).as_i64();
                }
            }
        }
    }
    Ok(total)
}

/// Writhe-normalized bracket in the variable t = A⁻⁴.
pub fn jones(diagram: &Diagram, cap: usize) -> Result<LaurentPoly, OpError> {
    if diagram.components() != 1 {
        return Err(OpError::NotAKnot(diagram.components()));
    }
    let bracket = kauffman_bracket(diagram, cap)?;
    let w = diagram.writhe();
    // f = (−A)^{−3w}·⟨D⟩ = (−1)^w A^{−3w} ⟨D⟩
    let sign = if w.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let f = bracket.shift_mul(-3 * w, &sign);
    // t = A⁻⁴: exponent a of A becomes −a/4 of t
    assert!(
        f.exponents_divisible_by(4),
        "normalized bracket of a knot must have exponents divisible by 4"
    );
    Ok(f.compress_exponents(-4))
}

/// Exact rational Taylor coefficients [u₀, u₁, u₂, u₃] of V(e^h) at h = 0.
pub fn jones_expansion(diagram: &Diagram, cap: usize) -> Result<[BigRational; 4], OpError> {
    let v = jones(diagram, cap)?;
    let u = v.exp_expansion(3);
    Ok([u[0].clone(), u[1].clone(), u[2].clone(), u[3].clone()])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub writhe: i64,
    pub v2: i64,
    pub jones: LaurentPoly,
    pub u: [BigRational; 4],
}

impl InvariantReport {
    /// Single-line machine-readable record with stable field order.
    pub fn machine_line(&self) -> String {
        format!(
            "writhe={} v2={} jones={} u0={} u1={} u2={} u3={}",
            self.writhe, self.v2, self.jones, self.u[0], self.u[1], self.u[2], self.u[3]
        )
    }
}

/// Bundle the battery for a knot diagram. In debug builds the two v₂
/// routes are cross-checked.
pub fn report(diagram: &Diagram, cap: usize) -> Result<InvariantReport, OpError> {
    let v2 = v2_gauss(diagram)?;
    debug_assert_eq!(
        v2,
        v2_skein_oracle(diagram)?,
        "v2 routes disagree on {}",
        crate::diagram::serialize(diagram, crate::diagram::Format::Pd)
    );
    let jones_poly = jones(diagram, cap)?;
    let u = jones_poly.exp_expansion(3);
    let rep = InvariantReport {
        writhe: diagram.writhe(),
        v2,
        jones: jones_poly,
        u: [u[0].clone(), u[1].clone(), u[2].clone(), u[3].clone()],
    };
    debug_assert!(rep.u[0].is_one());
    debug_assert!(rep.u[1].is_zero());
    debug_assert!(rep.jones.eval_at_one().is_one());
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::diagram::parse_pd;

    const TREFOIL_NEG: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
    const FIG8: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
    const FIVE_TWO_NEG: &str = "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]";

    #[test]
    fn linking_of_hopf_variants() {
        // smoothing the right trefoil at any crossing gives the positive
        // Hopf link with lk = 1
        let d = BraidWord::new(2, vec![1, 1, 1]).unwrap().closure().unwrap();
        for id in 0..3 {
            assert_eq!(linking_number(&d.smooth(id).unwrap()).unwrap(), 1);
        }
        // the 0-crossing 2-component unlink
        let unlink = crate::diagram::parse_pd("U U").unwrap();
        assert_eq!(linking_number(&unlink).unwrap(), 0);
        assert!(linking_number(&Diagram::unknot()).is_err());
    }

    #[test]
    fn v2_classical_values() {
        let unknot = Diagram::unknot();
        assert_eq!(v2_skein_oracle(&unknot).unwrap(), 0);
        assert_eq!(v2_gauss(&unknot).unwrap(), 0);

        let trefoil_r = BraidWord::new(2, vec![1, 1, 1]).unwrap().closure().unwrap();
        assert_eq!(v2_skein_oracle(&trefoil_r).unwrap(), 1);
        assert_eq!(v2_gauss(&trefoil_r).unwrap(), 1);

        let trefoil_l = parse_pd(TREFOIL_NEG).unwrap();
        assert_eq!(v2_skein_oracle(&trefoil_l).unwrap(), 1);
        assert_eq!(v2_gauss(&trefoil_l).unwrap(), 1);

        let fig8 = parse_pd(FIG8).unwrap();
        assert_eq!(v2_skein_oracle(&fig8).unwrap(), -1);
        assert_eq!(v2_gauss(&fig8).unwrap(), -1);

        let five_two = parse_pd(FIVE_TWO_NEG).unwrap();
        assert_eq!(v2_skein_oracle(&five_two).unwrap(), 2);
        assert_eq!(v2_gauss(&five_two).unwrap(), 2);
    }

    #[test]
    fn jones_classical_values() {
        // right trefoil: V = −t⁴ + t³ + t
        let trefoil_r = BraidWord::new(2, vec![1, 1, 1]).unwrap().closure().unwrap();
        let v = jones(&trefoil_r, 28).unwrap();
        assert_eq!(v, LaurentPoly::from_terms([(4, -1), (3, 1), (1, 1)]));
        // mirror symmetry
        let v_l = jones(&trefoil_r.mirror(), 28).unwrap();
        assert_eq!(v_l, v.invert_var());
        // figure-eight: V = t⁻² − t⁻¹ + 1 − t + t²  (amphichiral)
        let fig8 = parse_pd(FIG8).unwrap();
        let v8 = jones(&fig8, 28).unwrap();
        assert_eq!(
            v8,
            LaurentPoly::from_terms([(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)])
        );
        assert_eq!(v8, v8.invert_var());
        // unknot diagrams evaluate to 1
        for code in ["U", "X[1,1,2,2]", "X[1,2,2,1]"] {
            assert_eq!(
                jones(&parse_pd(code).unwrap(), 28).unwrap(),
                LaurentPoly::one()
            );
        }
    }

    #[test]
    fn expansion_normalization_and_u2_regression() {
        let trefoil_r = BraidWord::new(2, vec![1, 1, 1]).unwrap().closure().unwrap();
        let u = jones_expansion(&trefoil_r, 28).unwrap();
        assert!(u[0].is_one());
        assert!(u[1].is_zero());
        // u2 = −3·v2 and u3 = −6 for the right trefoil
        assert_eq!(u[2], BigRational::from(BigInt::from(-3)));
        assert_eq!(u[3], BigRational::from(BigInt::from(-6)));
        let fig8 = parse_pd(FIG8).unwrap();
        let u8v = jones_expansion(&fig8, 28).unwrap();
        assert_eq!(u8v[2], BigRational::from(BigInt::from(3)));
        assert!(u8v[3].is_zero());
    }

    #[test]
    fn report_bundles_consistently() {
        let d = BraidWord::new(2, vec![1, 1, 1]).unwrap().closure().unwrap();
        let rep = report(&d, 28).unwrap();
        assert_eq!(rep.writhe, 3);
        assert_eq!(rep.v2, 1);
        assert_eq!(
            rep.machine_line(),
            "writhe=3 v2=1 jones=t+t^3-t^4 u0=1 u1=0 u2=-3 u3=-6"
        );
    }
}
