use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Univariate polynomial in `t` over the rationals.
///
/// Coefficients are stored in ascending degree with no trailing zeros, so the
/// zero polynomial is the empty vector and structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn from_bigints<I: IntoIterator<Item = BigInt>>(coeffs: I) -> Self {
        Self::from_coeffs(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    /// `(t - 1)^k`
    pub fn unit_power(k: usize) -> Self {
        Self::from_ints(&[-1, 1]).pow(k)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiply by `t^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        RatPoly { coeffs }
    }

    /// Divide by `t^k` when it divides exactly.
    pub fn shr(&self, k: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) || k > self.coeffs.len() {
            return None;
        }
        Some(RatPoly { coeffs: self.coeffs[k..].to_vec() })
    }

    /// `t^n · p(1/t)`; `None` when the degree exceeds `n`.
    pub fn reverse(&self, n: usize) -> Option<Self> {
        match self.degree() {
            None => Some(Self::zero()),
            Some(d) if d > n => None,
            Some(_) => {
                let mut coeffs = vec![BigRational::zero(); n + 1];
                for (i, c) in self.coeffs.iter().enumerate() {
                    coeffs[n - i] = c.clone();
                }
                Some(Self::from_coeffs(coeffs))
            }
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigRational {
        self.eval(&BigRational::from_integer(x.clone()))
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let dd = d.degree().ok_or(Error::ZeroDenominator)?;
        let lc_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if n < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient, `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &RatPoly) -> Result<Option<RatPoly>> {
        let (q, r) = self.div_rem(d)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Taylor shift: the polynomial `p(t + c)`.
    pub fn shift(&self, c: &BigRational) -> RatPoly {
        // Horner over the linear polynomial t + c.
        let lin = RatPoly::from_coeffs(vec![c.clone(), BigRational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(RatPoly::zero(), |acc, a| &(&acc * &lin) + &RatPoly::constant(a.clone()))
    }

    /// Largest `r` with `(t - 1)^r | p`, together with the cofactor.
    pub fn extract_unit_factor(&self) -> Result<(usize, RatPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let unit = RatPoly::from_ints(&[-1, 1]);
        let mut r = 0;
        let mut q = self.clone();
        while q.eval(&BigRational::one()).is_zero() {
            q = q.div_exact(&unit)?.expect("t - 1 divides a polynomial vanishing at 1");
            r += 1;
        }
        Ok((r, q))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        items
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Self::from_coeffs)
    }

    pub fn to_latex(&self) -> String {
        self.render(|k| match k {
            1 => "t".to_string(),
            _ => format!("t^{{{k}}}"),
        }, |c| {
            if c.is_integer() {
                c.to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
            }
        })
    }

    fn render(&self, var: impl Fn(usize) -> String, num: impl Fn(&BigRational) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if k == 0 {
                out.push_str(&num(&a));
            } else {
                if !a.is_one() {
                    out.push_str(&num(&a));
                }
                out.push_str(&var(k));
            }
        }
        out
    }
}

/// `p(t + c)` as a free function.
pub fn shift_poly(p: &RatPoly, c: &BigRational) -> RatPoly {
    p.shift(c)
}

/// `p = (t - 1)^r · q` with `q(1) != 0`.
pub fn extract_unit_factor(p: &RatPoly) -> Result<(usize, RatPoly)> {
    p.extract_unit_factor()
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    s.parse::<BigRational>()
        .map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.render(
            |k| match k {
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            },
            |c| c.to_string(),
        );
        f.write_str(&s)
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        RatPoly::from_coeffs(coeffs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        self + &(-rhs)
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for RatPoly {
            type Output = RatPoly;
            fn $m(self, rhs: RatPoly) -> RatPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        -&self
    }
}

impl Serialize for RatPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<crate::serde_util::Number>::deserialize(d)?;
        let coeffs = raw
            .into_iter()
            .map(|n| parse_rational(&n.0))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(RatPoly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(RatPoly::zero().degree(), None);
        assert_eq!(p(&[0, 0, 0]), RatPoly::zero());
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn extract_unit_factor_examples() {
        // t^3 - t^2
        assert_eq!(p(&[0, 0, -1, 1]).extract_unit_factor().unwrap(), (1, p(&[0, 0, 1])));
        // t^2 + t
        assert_eq!(p(&[0, 1, 1]).extract_unit_factor().unwrap(), (0, p(&[0, 1, 1])));
        // (t - 1)^2
        assert_eq!(p(&[1, -2, 1]).extract_unit_factor().unwrap(), (2, p(&[1])));
        assert_eq!(RatPoly::zero().extract_unit_factor(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift_poly(&p(&[0, 1, 1]), &q(1)), p(&[2, 3, 1]));
        assert_eq!(shift_poly(&p(&[0, 0, 1]), &q(1)), p(&[1, 2, 1]));
        assert_eq!(shift_poly(&p(&[-1, 1]), &q(1)), p(&[0, 1]));
        assert_eq!(shift_poly(&RatPoly::zero(), &q(5)), RatPoly::zero());
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]); // t^2 - 1
        let b = p(&[-1, 1]);
        let (quo, rem) = a.div_rem(&b).unwrap();
        assert_eq!(quo, p(&[1, 1]));
        assert!(rem.is_zero());
        assert_eq!(RatPoly::gcd(&a, &p(&[1, 2, 1])), p(&[1, 1]));
        assert_eq!(a.div_rem(&RatPoly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn reverse_and_shifts() {
        let a = p(&[1, 2]);
        assert_eq!(a.reverse(3).unwrap(), p(&[0, 0, 2, 1]));
        assert!(p(&[0, 0, 0, 0, 1]).reverse(3).is_none());
        assert_eq!(a.shl(2).shr(2).unwrap(), a);
        assert!(a.shr(1).is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[0, -1, 1]).to_string(), "t^2 - t");
        assert_eq!(p(&[2, 3, 1]).to_string(), "t^2 + 3t + 2");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(p(&[0, 0, 1]).to_latex(), "t^{2}");
    }

    #[test]
    fn json_is_decimal_strings() {
        let a = p(&[0, -1, 1]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"["0","-1","1"]"#);
        let back: RatPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        let half: RatPoly = serde_json::from_str(r#"["1/2", 3]"#).unwrap();
        assert_eq!(half.coeff(0), BigRational::new(1.into(), 2.into()));
        assert_eq!(half.coeff(1), q(3));
    }
}
