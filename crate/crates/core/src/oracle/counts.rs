use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::field::{Elem, SmallField};
use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::lattice::IntMatrix;

pub const TORUS_DOMAIN_CAP: u64 = 10_000_000;

/// `|{(x, y) ∈ F² : x² − a·y² = b}|` by enumerating all pairs.
pub fn conic_count(a: Elem, b: Elem, f: &SmallField) -> Result<u64> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidInput("conic coefficients must be nonzero".into()));
    }
    let mut count = 0;
    for x in f.elements() {
        for y in f.elements() {
            if f.sub(f.square(x), f.mul(a, f.square(y))) == b {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Reduced row-echelon `d × w` matrices over `f`, i.e. the `d`-dimensional
/// subspaces of `f^w`, each returned as its list of rows.
fn echelon_forms(f: &SmallField, d: usize, w: usize) -> Vec<Vec<Vec<Elem>>> {
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(d);
    choose_pivots(f, d, w, 0, &mut pivots, &mut out);
    out
}

fn choose_pivots(
    f: &SmallField,
    d: usize,
    w: usize,
    start: usize,
    pivots: &mut Vec<usize>,
    out: &mut Vec<Vec<Vec<Elem>>>,
) {
    if pivots.len() == d {
        let free: Vec<(usize, usize)> = (0..d)
            .flat_map(|i| ((pivots[i] + 1)..w).filter(|j| !pivots.contains(j)).map(move |j| (i, j)))
            .collect();
        let q = f.order() as usize;
        let total = q.pow(free.len() as u32);
        for code in 0..total {
            let mut rows = vec![vec![0; w]; d];
            for (i, &c) in pivots.iter().enumerate() {
                rows[i][c] = 1;
            }
            let mut rest = code;
            for &(i, j) in &free {
                rows[i][j] = (rest % q) as Elem;
                rest /= q;
            }
            out.push(rows);
        }
        return;
    }
    for c in start..w {
        pivots.push(c);
        choose_pivots(f, d, w, c + 1, pivots, out);
        pivots.pop();
    }
}

fn combine(f: &SmallField, coeffs: &[Elem], basis: &[Vec<Elem>]) -> Vec<Elem> {
    let n = basis.first().map_or(0, Vec::len);
    let mut v = vec![0; n];
    for (c, b) in coeffs.iter().zip(basis) {
        for (x, &y) in v.iter_mut().zip(b) {
            *x = f.add(*x, f.mul(*c, y));
        }
    }
    v
}

/// Flags `V_{d_1} ⊂ … ⊂ V_{d_k} ⊂ f^n` with the given dimensions, counted by
/// choosing the largest subspace in echelon form and then each smaller one
/// in echelon form relative to a basis of the previous.
pub fn flag_count(f: &SmallField, n: usize, dims: &[usize]) -> Result<u64> {
    if dims.iter().any(|&d| d == 0 || d >= n) || dims.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput(format!(
            "flag dimensions {dims:?} must increase strictly within 1..{n}"
        )));
    }
    let ambient: Vec<Vec<Elem>> = (0..n)
        .map(|i| (0..n).map(|j| Elem::from(i == j)).collect())
        .collect();
    Ok(count_nested(f, &ambient, dims))
}

fn count_nested(f: &SmallField, basis: &[Vec<Elem>], dims: &[usize]) -> u64 {
    let Some((&d, smaller)) = dims.split_last() else {
        return 1;
    };
    echelon_forms(f, d, basis.len())
        .iter()
        .map(|rows| {
            let sub: Vec<Vec<Elem>> = rows.iter().map(|r| combine(f, r, basis)).collect();
            count_nested(f, &sub, smaller)
        })
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairMode {
    /// Ordered pairs of distinct rational points of `P¹`.
    Ordered,
    /// Unordered pairs `{P, Q}` of distinct points of `P¹` over the quadratic
    /// extension with `{σP, σQ} = {P, Q}` for the `q`-power Frobenius `σ`.
    UnorderedVariety,
}

/// Normalized representatives of `P¹(f)`: `[1 : a]` for every `a`, then `[0 : 1]`.
fn projective_line(f: &SmallField) -> Vec<(Elem, Elem)> {
    f.elements().map(|a| (1, a)).chain([(0, 1)]).collect()
}

pub fn p1_pair_count(f: &SmallField, mode: PairMode) -> Result<u64> {
    match mode {
        PairMode::Ordered => {
            let pts = projective_line(f);
            let mut count = 0;
            for a in &pts {
                for b in &pts {
                    if a != b {
                        count += 1;
                    }
                }
            }
            Ok(count)
        }
        PairMode::UnorderedVariety => {
            let q = f.order();
            let big = SmallField::with_degree(f.characteristic(), 2 * f.degree())?;
            let pts = projective_line(&big);
            // Frobenius fixes 0 and 1, so normalized representatives stay normalized.
            let frob = |(x, y): (Elem, Elem)| (big.pow(x, q), big.pow(y, q));
            let mut count = 0;
            for (i, &a) in pts.iter().enumerate() {
                for &b in &pts[i + 1..] {
                    let (fa, fb) = (frob(a), frob(b));
                    if (fa == a && fb == b) || (fa == b && fb == a) {
                        count += 1;
                    }
                }
            }
            Ok(count)
        }
    }
}

/// Fixed points of `x ↦ q·a·x` on `(Z/(q^k − 1))^h`, by enumerating the whole group.
pub fn twisted_torus_count(a: &IntMatrix, q: u64, k: u32) -> Result<u64> {
    a.require_square()?;
    if prime_power(q).is_none() {
        return Err(Error::InvalidInput(format!("q = {q} is not a prime power")));
    }
    if k == 0 || !a.pow(u64::from(k))?.is_identity() {
        return Err(Error::InvalidInput(format!("the twist does not satisfy a^{k} = I")));
    }
    let h = a.rows();
    let modulus = q
        .checked_pow(k)
        .map(|m| m - 1)
        .ok_or_else(|| Error::InvalidInput(format!("{q}^{k} overflows")))?;
    let domain = (0..h).try_fold(1u64, |acc, _| acc.checked_mul(modulus).filter(|&v| v <= TORUS_DOMAIN_CAP));
    let domain = domain.ok_or(Error::CapExceeded { what: "twisted torus domain", cap: TORUS_DOMAIN_CAP as usize })?;
    let m = i128::from(modulus);
    let qa: Vec<i128> = a
        .entries()
        .iter()
        .map(|x| (x.to_i128().expect("finite-order entries are small") * i128::from(q)).rem_euclid(m))
        .collect();
    let mut x = vec![0i128; h];
    let mut count = 0;
    for code in 0..domain {
        let mut rest = code;
        for xi in x.iter_mut() {
            *xi = i128::from(rest % modulus);
            rest /= modulus;
        }
        let fixed = (0..h).all(|i| {
            let y: i128 = (0..h).map(|j| qa[i * h + j] * x[j]).sum();
            (y - x[i]).rem_euclid(m) == 0
        });
        if fixed {
            count += 1;
        }
    }
    Ok(count)
}

/// Closed form for the GL(2r)/H_r family:
/// `Q_r(q)·q^{r(2r−1)}·Π_{i=1}^r (q^{2i−1} − 1)·Π_{j=1}^r (q^{2j} − 1)/(q² − 1)`
/// with `Q_r = ((q + 1)^r + (q − 1)^r)/2`.
pub fn glr_closed_form(r: u32, q: u64) -> Result<BigInt> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be positive".into()));
    }
    if prime_power(q).is_none() {
        return Err(Error::InvalidInput(format!("q = {q} is not a prime power")));
    }
    let q = BigInt::from(q);
    let one = BigInt::one();
    let q_r = ((&q + &one).pow(r) + (&q - &one).pow(r)) / 2;
    let mut out = q_r * q.pow(r * (2 * r - 1));
    let q2m1 = q.pow(2) - &one;
    for i in 1..=r {
        out *= q.pow(2 * i - 1) - &one;
        let term = q.pow(2 * i) - &one;
        debug_assert!((&term % &q2m1).is_zero());
        out *= term / &q2m1;
    }
    Ok(out)
}
