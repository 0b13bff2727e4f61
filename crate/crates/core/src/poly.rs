//! Exact Laurent polynomials over the integers, the carrier for the
//! Kauffman bracket and the Jones polynomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A Laurent polynomial with `BigInt` coefficients. Zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let c = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(list: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in list {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Multiply by a single monomial in place.
    pub fn shift_mul(&self, exp: i64, coeff: &BigInt) -> LaurentPoly {
        if coeff.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + exp, c * coeff))
                .collect(),
        }
    }

    /// Substitute the variable by its inverse, `x ↦ x⁻¹`.
    pub fn invert_var(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitute `x ↦ x^k` for nonzero integer `k`; fails if an exponent
    /// would not be an integer (only possible for |k| > 1 going backwards,
    /// which we never do).
    pub fn substitute_power(&self, k: i64) -> LaurentPoly {
        assert!(k != 0);
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// True when every exponent is divisible by `k`.
    pub fn exponents_divisible_by(&self, k: i64) -> bool {
        self.terms.keys().all(|e| e % k == 0)
    }

    /// Divide every exponent by `k`; panics if not divisible.
    pub fn compress_exponents(&self, k: i64) -> LaurentPoly {
        assert!(k != 0);
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    assert!(e % k == 0, "exponent {} not divisible by {}", e, k);
                    (e / k, c.clone())
                })
                .collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact rational Taylor coefficients of `p(e^h)` around `h = 0` up to
    /// `h^order`: term `x^k` contributes `k^j / j!` to the `h^j` slot.
    pub fn exp_expansion(&self, order: usize) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); order + 1];
        let mut factorial = BigInt::one();
        for (j, slot) in out.iter_mut().enumerate() {
            if j > 0 {
                factorial *= BigInt::from(j);
            }
            let mut num = BigInt::zero();
            for (e, c) in &self.terms {
                num += c * BigInt::from(*e).pow(j as u32);
            }
            *slot = BigRational::new(num, factorial.clone());
        }
        out
    }

    /// Exact division; panics if the divisor does not divide self.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> LaurentPoly {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut out = LaurentPoly::zero();
        let (d_min, d_coeff) = {
            let e = *divisor.terms.keys().next().unwrap();
            (e, divisor.terms[&e].clone())
        };
        while !rem.is_zero() {
            let r_min = *rem.terms.keys().next().unwrap();
            let r_coeff = rem.terms[&r_min].clone();
            let (q, r) = num_integer::Integer::div_rem(&r_coeff, &d_coeff);
            assert!(r.is_zero(), "inexact polynomial division");
            let exp = r_min - d_min;
            out.add_term(exp, q.clone());
            let sub = divisor.shift_mul(exp, &q);
            rem = &rem - &sub;
            assert!(
                rem.is_zero() || *rem.terms.keys().next().unwrap() > r_min,
                "inexact polynomial division"
            );
        }
        out
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// Stable text form used by the CLI and golden tests: terms in ascending
/// exponent order, explicit signs, `x` as the variable placeholder.
pub fn format_poly(p: &LaurentPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (e, c) in p.terms() {
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let show_coeff = !abs.is_one() || e == 0;
        if show_coeff {
            out.push_str(&abs.to_string());
        }
        if e != 0 {
            if show_coeff {
                out.push('*');
            }
            out.push_str(var);
            if e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
    out
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(self, "t"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact_and_normalized() {
        let a = LaurentPoly::from_terms([(-1, 2), (3, 1)]);
        let b = LaurentPoly::from_terms([(-1, -2), (0, 5)]);
        let s = &a + &b;
        assert_eq!(s, LaurentPoly::from_terms([(0, 5), (3, 1)]));
        let d = &s - &s;
        assert!(d.is_zero());
        let p = &a * &b;
        // (2x^-1 + x^3)(-2x^-1 + 5) = -4x^-2 + 10x^-1 - 2x^2 + 5x^3
        assert_eq!(
            p,
            LaurentPoly::from_terms([(-2, -4), (-1, 10), (2, -2), (3, 5)])
        );
    }

    #[test]
    fn exp_expansion_of_t_is_exponential_series() {
        // p = t: p(e^h) = 1 + h + h²/2 + h³/6
        let p = LaurentPoly::from_terms([(1, 1)]);
        let u = p.exp_expansion(3);
        assert_eq!(u[0], BigRational::from(BigInt::from(1)));
        assert_eq!(u[1], BigRational::from(BigInt::from(1)));
        assert_eq!(u[2], BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(u[3], BigRational::new(BigInt::from(1), BigInt::from(6)));
    }

    #[test]
    fn display_format_is_stable() {
        let p = LaurentPoly::from_terms([(-4, -1), (-3, 1), (-1, 1)]);
        assert_eq!(format_poly(&p, "t"), "-t^-4+t^-3+t^-1");
        assert_eq!(format_poly(&LaurentPoly::one(), "t"), "1");
        assert_eq!(format_poly(&LaurentPoly::from_terms([(2, 3)]), "A"), "3*A^2");
    }
}
