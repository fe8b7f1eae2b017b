//! Test-side reference computations, written independently of the library:
//! integer polynomials as coefficient vectors, small determinants by
//! cofactor expansion, and brute-force matrix counting over prime fields.

#![allow(dead_code)]

use homcount::arith::RatPoly;
use homcount::cli::load_spec;
use homcount::corpus;
use homcount::engine::HomogeneousSpec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Ascending integer coefficients with trailing zeros removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IPoly(pub Vec<BigInt>);

impl IPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        IPoly(c)
    }

    pub fn ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn one() -> Self {
        Self::ints(&[1])
    }

    /// `t^k`.
    pub fn mono(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        IPoly(c)
    }

    /// `t^k - 1`.
    pub fn t_pow_minus_one(k: usize) -> Self {
        let mut c = Self::mono(k).0;
        c[0] -= 1;
        Self::new(c)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Self::new((0..n).map(|i| self.get(i) + o.get(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.0.is_empty() || o.0.is_empty() {
            return IPoly(vec![]);
        }
        let mut c = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn get(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_default()
    }

    /// Exact division by 2 of every coefficient.
    pub fn halve(&self) -> Self {
        assert!(self.0.iter().all(|c| (c % 2u32).is_zero()), "odd coefficient");
        Self::new(self.0.iter().map(|c| c / 2).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `p(t + 1)` by expanding each `(t + 1)^k` binomially.
    pub fn shift_by_one(&self) -> Self {
        let mut out = vec![BigInt::zero(); self.0.len()];
        for (k, c) in self.0.iter().enumerate() {
            let mut binom = BigInt::one();
            for (j, slot) in out.iter_mut().enumerate().take(k + 1) {
                *slot += c * &binom;
                binom = binom * (k - j) / (j + 1);
            }
        }
        Self::new(out)
    }

    /// `t^n p(1/t)`; requires `deg p ≤ n`.
    pub fn reversed(&self, n: usize) -> Self {
        assert!(self.0.len() <= n + 1);
        let mut c = vec![BigInt::zero(); n + 1];
        for (i, x) in self.0.iter().enumerate() {
            c[n - i] = x.clone();
        }
        Self::new(c)
    }

    pub fn from_rat(p: &RatPoly) -> Self {
        Self::new(p.integer_coeffs().expect("integral polynomial"))
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, &x)| x).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * cofactor_det(&minor)
        })
        .sum()
}

/// Number of `n × n` matrices over `F_p` with determinant in `targets`.
pub fn count_matrices_mod_p(n: usize, p: i128, targets: &[i128]) -> u64 {
    let cells = n * n;
    let total = (p as u64).pow(cells as u32);
    let mut count = 0;
    for code in 0..total {
        let mut rest = code;
        let m: Vec<Vec<i128>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let x = (rest % p as u64) as i128;
                        rest /= p as u64;
                        x
                    })
                    .collect()
            })
            .collect();
        if targets.contains(&cofactor_det(&m).rem_euclid(p)) {
            count += 1;
        }
    }
    count
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Euler's totient by counting units.
pub fn naive_totient(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

pub fn load(name: &str) -> HomogeneousSpec {
    load_spec(name)
        .unwrap_or_else(|e| panic!("{name}: {e}"))
        .validate()
        .unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn all_corpus() -> Vec<(&'static str, HomogeneousSpec)> {
    corpus::names().map(|n| (n, load(n))).collect()
}

/// `Q_r(t)·t^{r(2r−1)}·Π_{i=1}^r (t^{2i−1} − 1)·Π_{j=1}^r (1 + t² + … + t^{2j−2})`.
pub fn glr_polynomial(r: usize) -> IPoly {
    let q_r = IPoly::ints(&[1, 1]).pow(r).add(&IPoly::ints(&[-1, 1]).pow(r)).halve();
    let mut out = q_r.mul(&IPoly::mono(r * (2 * r - 1)));
    for i in 1..=r {
        out = out.mul(&IPoly::t_pow_minus_one(2 * i - 1));
        let geometric = (0..i).fold(IPoly::ints(&[]), |acc, k| acc.add(&IPoly::mono(2 * k)));
        out = out.mul(&geometric);
    }
    out
}
