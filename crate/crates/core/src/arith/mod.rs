//! Exact rational scalars, univariate polynomials and rational functions.

mod poly;
mod ratfunc;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::{extract_unit_factor, parse_rational, shift_poly, RatPoly};
pub use ratfunc::{ratfunc_normalize, RatFunc};

/// Integer as an exact rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `Some((p, m))` when `q = p^m` with `p` prime and `m ≥ 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        // no factor up to sqrt(q): q itself is prime
        return Some((q, 1));
    }
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}
