use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::RatPoly;
use crate::error::{Error, Result};

/// Reduced quotient of two rational polynomials with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: RatPoly,
    den: RatPoly,
}

/// Cancel common factors and make the denominator monic.
pub fn ratfunc_normalize(num: RatPoly, den: RatPoly) -> Result<RatFunc> {
    RatFunc::new(num, den)
}

impl RatFunc {
    pub fn new(num: RatPoly, den: RatPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = RatPoly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g)?.expect("gcd divides numerator"),
                den.div_exact(&g)?.expect("gcd divides denominator"),
            )
        };
        let lc = den.leading().expect("nonzero").recip();
        if !lc.is_one() {
            num = num.scale(&lc);
            den = den.scale(&lc);
        }
        Ok(RatFunc { num, den })
    }

    pub fn zero() -> Self {
        RatFunc { num: RatPoly::zero(), den: RatPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(RatPoly::one())
    }

    pub fn from_poly(p: RatPoly) -> Self {
        RatFunc { num: p, den: RatPoly::one() }
    }

    /// `1 / p`
    pub fn recip_poly(p: RatPoly) -> Result<Self> {
        Self::new(RatPoly::one(), p)
    }

    pub fn num(&self) -> &RatPoly {
        &self.num
    }

    pub fn den(&self) -> &RatPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The underlying polynomial when the denominator is 1.
    pub fn as_poly(&self) -> Option<&RatPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn into_poly(self) -> Option<RatPoly> {
        self.den.is_one().then_some(self.num)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// The function `t ↦ f(1/t)`.
    pub fn substitute_reciprocal(&self) -> Self {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        let m = dn.max(dd);
        // f(1/t) = (t^m num(1/t)) / (t^m den(1/t))
        let num = self.num.reverse(m).expect("degree bounded by m");
        let den = self.den.reverse(m).expect("degree bounded by m");
        Self::new(num, den).expect("reversed nonzero denominator")
    }

    /// Multiply by `t^k`.
    pub fn shl(&self, k: usize) -> Self {
        Self::new(self.num.shl(k), self.den.clone()).expect("denominator unchanged")
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.eval(x) / d)
    }

    /// First `order` power-series coefficients at `t = 0`.
    pub fn series(&self, order: usize) -> Result<Vec<BigRational>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::InvalidInput("denominator vanishes at t = 0".into()));
        }
        let inv = d0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(order);
        for k in 0..order {
            let mut c = self.num.coeff(k);
            for j in 1..=k.min(self.den.degree().unwrap_or(0)) {
                c -= self.den.coeff(j) * &out[k - j];
            }
            out.push(c * &inv);
        }
        Ok(out)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero");
        }
        // Work over lcm(den1, den2) to keep intermediate degrees small.
        let g = RatPoly::gcd(&self.den, &rhs.den);
        let a = self.den.div_exact(&g).unwrap().unwrap();
        let b = rhs.den.div_exact(&g).unwrap().unwrap();
        let num = &(&self.num * &b) + &(&rhs.num * &a);
        let den = &(&a * &b) * &g;
        RatFunc::new(num, den).expect("nonzero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero")
    }
}

impl From<RatPoly> for RatFunc {
    fn from(p: RatPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    #[test]
    fn normalize_examples() {
        let f = ratfunc_normalize(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!((f.num(), f.den()), (&p(&[1, 1]), &p(&[1])));
        let f = ratfunc_normalize(RatPoly::zero(), p(&[0, 0, 0, 1])).unwrap();
        assert_eq!((f.num(), f.den()), (&RatPoly::zero(), &p(&[1])));
        let f = ratfunc_normalize(p(&[2, 2]), p(&[2])).unwrap();
        assert_eq!((f.num(), f.den()), (&p(&[1, 1]), &p(&[1])));
        assert_eq!(ratfunc_normalize(p(&[1]), RatPoly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn sum_of_molien_terms() {
        // 1/2 (1/(1-t) + 1/(1+t)) = 1/(1-t^2)
        let a = RatFunc::recip_poly(p(&[1, -1])).unwrap();
        let b = RatFunc::recip_poly(p(&[1, 1])).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        let s = (&a + &b).scale(&half);
        assert_eq!(s, RatFunc::recip_poly(p(&[1, 0, -1])).unwrap());
    }

    #[test]
    fn series_of_geometric() {
        let f = RatFunc::recip_poly(p(&[1, -1])).unwrap();
        let s = f.series(5).unwrap();
        assert!(s.iter().all(|c| c.is_one()));
        let g = RatFunc::recip_poly(p(&[0, 1])).unwrap();
        assert!(g.series(3).is_err());
    }

    #[test]
    fn reciprocal_substitution() {
        // f = (1 + t) / (1 - t^2) = 1/(1-t); f(1/t) = t/(t-1)
        let f = RatFunc::new(p(&[1, 1]), p(&[1, 0, -1])).unwrap();
        let g = f.substitute_reciprocal();
        assert_eq!(g, RatFunc::new(p(&[0, 1]), p(&[-1, 1])).unwrap());
        assert_eq!(g.substitute_reciprocal(), f);
    }
}
