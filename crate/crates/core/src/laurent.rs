//! Integer Laurent polynomials in one variable `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Sparse `Σ c_k t^k` with arbitrary-precision coefficients; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let c = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `(-t)^k` for any integer `k`.
    pub fn neg_t_pow(k: i64) -> Self {
        let c = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(c, k)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Ascending powers of `t`: `1-t`, `t^-1`, `-2t^-1+3+t^2`, `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (&e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if negative {
                f.write_str("-")?;
            } else if idx > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if e == 1 {
                f.write_str("t")?;
            } else {
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn products() {
        let one_minus_t = p(&[(0, 1), (1, -1)]);
        assert_eq!(&one_minus_t * &LaurentPoly::t(), p(&[(1, 1), (2, -1)]));
        assert!((&one_minus_t * &LaurentPoly::zero()).is_zero());
        assert!((&LaurentPoly::monomial(1, -1) * &LaurentPoly::t()).is_one());
    }

    #[test]
    fn canonical_form() {
        let a = p(&[(0, 1), (1, -1)]);
        let b = p(&[(1, 1), (0, 0)]);
        let s = &a + &b;
        assert_eq!(s, LaurentPoly::one());
        assert_eq!(s.terms().count(), 1);
        assert!((&a - &a).is_zero());
        assert_eq!(p(&[(2, 3), (2, -3)]), LaurentPoly::zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(0, 1), (1, -1)]).to_string(), "1-t");
        assert_eq!(p(&[(-1, 1)]).to_string(), "t^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p(&[(1, -1)]).to_string(), "-t");
        assert_eq!(p(&[(-1, -2), (0, 3), (2, 1)]).to_string(), "-2t^-1+3+t^2");
        assert_eq!(p(&[(0, -1)]).to_string(), "-1");
    }

    #[test]
    fn neg_t_powers() {
        assert_eq!(LaurentPoly::neg_t_pow(1), p(&[(1, -1)]));
        assert_eq!(LaurentPoly::neg_t_pow(-1), p(&[(-1, -1)]));
        assert_eq!(LaurentPoly::neg_t_pow(2), p(&[(2, 1)]));
        assert_eq!(LaurentPoly::neg_t_pow(0), LaurentPoly::one());
        let m = p(&[(1, -1)]);
        assert_eq!(m.pow(5), LaurentPoly::neg_t_pow(5));
    }
}
