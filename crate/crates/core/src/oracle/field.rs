use crate::arith::prime_power;
use crate::error::{Error, Result};

pub const MAX_FIELD_ORDER: u64 = 2048;
const AXIOM_CHECK_LIMIT: u64 = 64;

/// Field element, encoded as the base-`p` digits of its coordinates in the
/// power basis `1, x, …, x^{m-1}` (digit `i` is the coefficient of `x^i`).
pub type Elem = u32;

/// `F_q` for `q = p^m ≤ 2048`, realized as `F_p[x]/(f)` for the first monic
/// `f` (in lexicographic order of coefficient digits) for which `x` generates
/// the multiplicative group. Multiplication goes through log/antilog tables.
#[derive(Clone, Debug)]
pub struct SmallField {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<Elem>,
    log: Vec<u32>,
}

fn digits(mut a: u32, p: u32, m: u32) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

fn encode(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Multiply by `x` modulo the monic `x^m + c_{m-1} x^{m-1} + … + c_0`.
fn times_x(ds: &[u32], low: &[u32], p: u32) -> Vec<u32> {
    let m = ds.len();
    let top = ds[m - 1];
    let mut out = vec![0; m];
    for i in (1..m).rev() {
        out[i] = ds[i - 1];
    }
    for (o, &c) in out.iter_mut().zip(low) {
        *o = (*o + (p - c) * top) % p;
    }
    out
}

/// Powers of `x` modulo the polynomial with low coefficients `low`,
/// provided `x` has multiplicative order exactly `q - 1`.
fn primitive_powers(low: &[u32], p: u32, q: u32) -> Option<Vec<Elem>> {
    let m = low.len();
    let mut cur = vec![0; m];
    cur[0] = 1;
    let mut exp = Vec::with_capacity(q as usize - 1);
    let mut seen = vec![false; q as usize];
    for _ in 0..q - 1 {
        let e = encode(&cur, p);
        if e == 0 || seen[e as usize] {
            return None;
        }
        seen[e as usize] = true;
        exp.push(e);
        cur = if m == 1 { vec![(cur[0] * ((p - low[0]) % p)) % p] } else { times_x(&cur, low, p) };
    }
    (encode(&cur, p) == 1).then_some(exp)
}

impl SmallField {
    /// The field with `q` elements; `q` must be a prime power at most 2048.
    pub fn new(q: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or_else(|| Error::InvalidInput(format!("{q} is not a prime power")))?;
        Self::with_degree(p, m)
    }

    pub fn with_degree(p: u64, m: u32) -> Result<Self> {
        if prime_power(p) != Some((p, 1)) || m == 0 {
            return Err(Error::InvalidInput(format!("F_{{{p}^{m}}} needs a prime p and m ≥ 1")));
        }
        let q = p.checked_pow(m).filter(|&q| q <= MAX_FIELD_ORDER).ok_or_else(|| {
            Error::InvalidInput(format!("field order {p}^{m} exceeds {MAX_FIELD_ORDER}"))
        })?;
        let (p, q) = (p as u32, q as u32);
        // Candidates run over the low coefficients c_0, …, c_{m-1} with c_0 ≠ 0.
        let exp = (0..q)
            .map(|code| digits(code, p, m))
            .filter(|low| low[0] != 0)
            .find_map(|low| primitive_powers(&low, p, q).map(|exp| (low, exp)));
        let (low, exp) = exp.ok_or_else(|| Error::Inconsistent(format!("no primitive polynomial for F_{q}")))?;
        let mut log = vec![0; q as usize];
        for (k, &e) in exp.iter().enumerate() {
            log[e as usize] = k as u32;
        }
        let mut modulus = low;
        modulus.push(1);
        let field = SmallField { p, m, q, modulus, exp, log };
        if u64::from(q) <= AXIOM_CHECK_LIMIT {
            field.check_axioms()?;
        }
        Ok(field)
    }

    pub fn characteristic(&self) -> u64 {
        self.p.into()
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u64 {
        self.q.into()
    }

    /// Coefficients (ascending) of the defining polynomial over `F_p`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    /// Image of an integer under `Z → F_p ⊂ F_q`.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(i64::from(self.p)) as Elem
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let k = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[k as usize]
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        (a != 0).then(|| self.exp[((self.q - 1 - self.log[a as usize]) % (self.q - 1)) as usize])
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let e = (u64::from(self.log[a as usize]) * (k % u64::from(self.q - 1))) % u64::from(self.q - 1);
        self.exp[e as usize]
    }

    pub fn square(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    pub fn is_square(&self, a: Elem) -> bool {
        a == 0 || self.p == 2 || self.log[a as usize].is_multiple_of(2)
    }

    /// Generator of the multiplicative group (the class of `x`, or a primitive root when `m = 1`).
    pub fn generator(&self) -> Elem {
        self.exp[1 % self.exp.len()]
    }

    /// Exhaustive check of the ring and field axioms on the full tables.
    pub fn check_axioms(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::Inconsistent(format!("F_{} violates {what}", self.q)));
        for a in self.elements() {
            if self.add(a, 0) != a || self.mul(a, 1) != a || self.add(a, self.neg(a)) != 0 {
                return fail("identities or additive inverses");
            }
            if a != 0 && self.mul(a, self.inv(a).expect("nonzero")) != 1 {
                return fail("multiplicative inverses");
            }
            for b in self.elements() {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return fail("commutativity");
                }
                for c in self.elements() {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                        || self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                    {
                        return fail("associativity or distributivity");
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        let f = SmallField::new(7).unwrap();
        assert_eq!(f.modulus().len(), 2);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.add(4, 5), 2);
        assert_eq!(f.pow(f.generator(), 6), 1);
        assert!((1..6).all(|k| f.pow(f.generator(), k) != 1));
    }

    #[test]
    fn extension_fields() {
        for q in [4, 8, 9, 16, 25, 27, 32, 49, 64] {
            let f = SmallField::new(q).unwrap();
            // Frobenius fixes exactly the prime field.
            let fixed = f.elements().filter(|&a| f.pow(a, f.characteristic()) == a).count();
            assert_eq!(fixed as u64, f.characteristic(), "F_{q}");
        }
    }

    #[test]
    fn larger_fields_build() {
        for q in [81, 121, 125, 243, 256, 1024, 2048] {
            let f = SmallField::new(q).unwrap();
            let g = f.generator();
            assert_eq!(f.pow(g, q - 1), 1);
            assert_ne!(f.pow(g, (q - 1) / 2), 1, "F_{q}");
        }
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(SmallField::new(6).is_err());
        assert!(SmallField::new(4096).is_err());
        assert!(SmallField::new(1).is_err());
    }

    #[test]
    fn squares_in_f3_and_f9() {
        let f3 = SmallField::new(3).unwrap();
        assert!(!f3.is_square(f3.from_int(2)));
        let f9 = SmallField::new(9).unwrap();
        assert!(f9.is_square(f9.from_int(2)));
    }
}
