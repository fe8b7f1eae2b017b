use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::result::CountingResult;
use super::spec::HomogeneousSpec;
use crate::arith::{extract_unit_factor, prime_power, RatFunc, RatPoly};
use crate::error::{Error, Result};
use crate::lattice::{det, IntMatrix};
use crate::weyl::{inverse_power, molien_series, scaled_ratio};

/// `P_r` with `|X(F_{q^n})| = P_r(q^n)` whenever `n ≡ residue (mod N)`,
/// as `s^{dim X}·A(1/s)/B(1/s)` for the twisted Molien traces `A` of `Γ`
/// and `B` of `W`.
pub fn count_polynomial(spec: &HomogeneousSpec, residue: u64) -> Result<RatPoly> {
    let n = spec.period();
    if residue >= n {
        return Err(Error::InvalidIndex { index: residue as usize, bound: n as usize });
    }
    let twist = inverse_power(spec.f0_h(), spec.f0_h_order(), residue)?;
    let a = molien_series(spec.gamma(), &twist)?;
    let dim_x = spec.dim_x();
    let p = scaled_ratio(dim_x, &a, spec.weyl_trace(residue))?;
    if !p.is_integral() {
        return Err(Error::NonIntegral(format!("counting polynomial {p} for residue {residue}")));
    }
    if p.degree() != Some(dim_x) || !p.is_monic() {
        return Err(Error::Inconsistent(format!(
            "counting polynomial {p} for residue {residue} is not monic of degree {dim_x}"
        )));
    }
    Ok(p)
}

/// Exact point count over `F_{q^n}` by averaging fixed-point quotients
/// `|G^{F^n}| / |det(γ·(q·f0_H)^n − I)|` over `Γ`, cross-checked against
/// the counting polynomial of the matching residue.
pub fn count_at(spec: &HomogeneousSpec, q: u64, n: u32) -> Result<BigInt> {
    if prime_power(q).is_none() {
        return Err(Error::InvalidInput(format!("q = {q} is not a prime power")));
    }
    if n == 0 {
        return Err(Error::InvalidInput("n must be positive".into()));
    }
    let qn = BigInt::from(q).pow(n);
    let group_order = spec.group_order_poly(n as u64).eval_int(&qn);
    let h = spec.subtorus_rank();
    let frob = spec.f0_h().pow(n as u64)?.scale(&qn);
    let id = IntMatrix::identity(h);
    let mut total = BigRational::zero();
    for gamma in spec.gamma().iter() {
        let m = gamma.checked_mul(&frob)?.checked_sub(&id)?;
        let fixed = det(&m)?.abs();
        if fixed.is_zero() {
            return Err(Error::Inconsistent(format!("γ·F^{n} has eigenvalue 1 for γ = {gamma}")));
        }
        total += &group_order / BigRational::from_integer(fixed);
    }
    let count = total / BigRational::from_integer(BigInt::from(spec.gamma().order()));
    if !count.is_integer() {
        return Err(Error::NonIntegral(format!("average {count} over Γ at q = {q}, n = {n}")));
    }
    let count = count.to_integer();
    let residue = n as u64 % spec.period();
    let expected = count_polynomial(spec, residue)?.eval_int(&qn);
    if BigRational::from_integer(count.clone()) != expected {
        return Err(Error::Inconsistent(format!(
            "fixed-point average {count} differs from P_{residue}(q^n) = {expected} at q = {q}, n = {n}"
        )));
    }
    Ok(count)
}

/// Untwisted factorization `h_Γ / h_W = (1 − t)^r · Q(t)` with `r = rk Λ_T − rk Λ_{H⁰}`;
/// `Q` must have non-negative integer coefficients and reproduce `P_0`.
pub fn factorize(spec: &HomogeneousSpec) -> Result<(usize, RatPoly)> {
    let r = spec.rank() - spec.subtorus_rank();
    let a = molien_series(spec.gamma(), &IntMatrix::identity(spec.subtorus_rank()))?;
    let b = spec.weyl_trace(0);
    let unit = RatFunc::from_poly((&RatPoly::one() - &RatPoly::t()).pow(r));
    let ratio = a.checked_div(&(b * &unit))?;
    let q = ratio
        .into_poly()
        .ok_or_else(|| Error::NotPolynomial(format!("Q = h_Γ / (h_W (1 - t)^{r}) has a denominator")))?;
    if !q.is_integral() {
        return Err(Error::NonIntegral(format!("Q = {q}")));
    }
    if !q.has_nonnegative_coeffs() {
        return Err(Error::NegativeCoefficient(format!("Q = {q}")));
    }
    let p0 = count_polynomial(spec, 0)?;
    let dim_x = spec.dim_x();
    let rebuilt = dim_x
        .checked_sub(r)
        .and_then(|k| q.reverse(k))
        .map(|rev| &RatPoly::unit_power(r) * &rev);
    if rebuilt.as_ref() != Some(&p0) {
        return Err(Error::Inconsistent(format!(
            "P_0 = {p0} is not (s - 1)^{r} s^{} Q(1/s) for Q = {q}",
            dim_x as i64 - r as i64
        )));
    }
    // Q(1) > 0, so the unit factor of P_0 is exactly (s - 1)^r.
    let (e, _) = extract_unit_factor(&p0)?;
    if e != r {
        return Err(Error::Inconsistent(format!("P_0 = {p0} has (s - 1)^{e}, expected exponent {r}")));
    }
    Ok((r, q))
}

/// `P(t + 1)` for each polynomial, each required to have non-negative coefficients.
pub fn shift_certificates(polys: &[RatPoly]) -> Result<Vec<RatPoly>> {
    polys
        .iter()
        .map(|p| {
            let shifted = p.shift(&BigRational::one());
            if shifted.has_nonnegative_coeffs() {
                Ok(shifted)
            } else {
                Err(Error::NegativeCoefficient(format!("{p} at t + 1 is {shifted}")))
            }
        })
        .collect()
}

fn totient(mut n: u64) -> u64 {
    let mut phi = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// `lcm{n : φ(n) ≤ rank}`, a multiple of the order of every finite-order
/// automorphism of a lattice of the given rank.
pub fn period_bound(rank: usize) -> BigUint {
    // φ(n) ≥ sqrt(n / 2), so every candidate satisfies n ≤ 2·rank².
    let limit = 2 * (rank as u64).pow(2);
    (1..=limit.max(1))
        .filter(|&n| totient(n) <= rank as u64)
        .fold(BigUint::one(), |acc, n| acc.lcm(&BigUint::from(n)))
}

/// Smallest divisor `N'` of `N` with `P_r = P_{r mod N'}` for all residues.
pub fn minimal_period(polys: &[RatPoly]) -> usize {
    let n = polys.len().max(1);
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .find(|&d| polys.iter().enumerate().all(|(r, p)| *p == polys[r % d]))
        .unwrap_or(n)
}

/// All residue polynomials, the factorization and the shift certificates.
pub fn count_all(spec: &HomogeneousSpec) -> Result<CountingResult> {
    let polys = (0..spec.period())
        .map(|r| count_polynomial(spec, r))
        .collect::<Result<Vec<_>>>()?;
    let (factor_r, q_x) = factorize(spec)?;
    let shifted = shift_certificates(&polys)?;
    let bound = period_bound(spec.rank());
    if !(&bound % spec.period()).is_zero() {
        return Err(Error::Inconsistent(format!(
            "period {} does not divide the bound {bound}",
            spec.period()
        )));
    }
    Ok(CountingResult {
        period: spec.period(),
        minimal_period: minimal_period(&polys) as u64,
        period_bound: bound,
        dim_x: spec.dim_x(),
        polys,
        factor_r,
        q_x,
        shifted,
    })
}
