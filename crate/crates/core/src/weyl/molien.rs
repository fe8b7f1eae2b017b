use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::group::{enumerate_weyl, WeylGroup};
use super::root_datum::RootDatum;
use crate::arith::{RatFunc, RatPoly};
use crate::error::{Error, Result};
use crate::lattice::{det, matrix_order, mul_small, reverse_charpoly, reverse_charpoly_small, IntMatrix, MatrixGroup, DEFAULT_ORDER_CAP};

/// `(1/|G|) Σ_{g ∈ G} 1 / det(I - t·twist·g)` for a finite matrix group.
///
/// Terms are grouped by characteristic polynomial before summing, so the
/// cost of the rational-function arithmetic depends on the number of
/// distinct classes rather than on `|G|`.
pub fn molien_series(group: &MatrixGroup, twist: &IntMatrix) -> Result<RatFunc> {
    let n = group.dim();
    if twist.rows() != n || twist.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "twist is {}x{}, group acts in dimension {n}",
            twist.rows(),
            twist.cols()
        )));
    }
    if det(twist)?.is_zero() {
        return Err(Error::InvalidInput("twist is not invertible".into()));
    }
    let twist_small = twist.to_i64();
    let mut classes: HashMap<RatPoly, u64> = HashMap::new();
    for (i, g) in group.small_elements().iter().enumerate() {
        let small = twist_small
            .as_deref()
            .and_then(|t| mul_small(t, g, n))
            .and_then(|m| reverse_charpoly_small(&m, n));
        let p = match small {
            Some(c) => RatPoly::from_bigints(c.into_iter().map(BigInt::from)),
            None => reverse_charpoly(&(twist * &group.element(i)))?,
        };
        *classes.entry(p).or_insert(0) += 1;
    }
    // Deterministic summation order.
    let mut classes: Vec<_> = classes.into_iter().collect();
    classes.sort_by_key(|(p, _)| p.to_strings());
    let mut sum = RatFunc::zero();
    for (p, count) in classes {
        let term = RatFunc::recip_poly(p)?.scale(&BigRational::from_integer(count.into()));
        sum = &sum + &term;
    }
    Ok(sum.scale(&BigRational::new(BigInt::one(), BigInt::from(group.order()))))
}

/// Molien trace of an explicitly listed matrix group; the list is checked
/// for closure under multiplication.
pub fn molien_trace(mats: &[IntMatrix], twist: &IntMatrix) -> Result<RatFunc> {
    let group = MatrixGroup::from_elements(mats)?;
    molien_series(&group, twist)
}

/// Degrees `d_1 ≤ … ≤ d_r` with Molien series `Π 1/(1 - t^{d_i})`,
/// recovered by peeling off the lowest nonzero series coefficient.
pub fn invariant_degrees(w: &WeylGroup) -> Result<Vec<usize>> {
    let dim = w.group().dim();
    let mut current = molien_series(w.group(), &IntMatrix::identity(dim))?;
    let mut degrees = Vec::with_capacity(dim);
    // The d_i - 1 sum to the number of positive roots.
    let bound = w.pos_count() + 1;
    while degrees.len() < dim {
        let series = current.series(bound + 1)?;
        let Some((k, c)) = series.iter().enumerate().skip(1).find(|(_, c)| !c.is_zero()) else {
            return Err(Error::NotReflectionGroup(format!(
                "found {} of {dim} degrees, series has no further terms",
                degrees.len()
            )));
        };
        if !c.is_integer() || c.is_negative() || degrees.len() + c.to_integer().try_into().unwrap_or(usize::MAX) > dim {
            return Err(Error::NotReflectionGroup(format!("coefficient {c} at degree {k}")));
        }
        let mult: usize = c.to_integer().try_into().expect("checked");
        let factor = (&RatPoly::one() - &RatPoly::monomial(BigRational::one(), k)).pow(mult);
        current = &current * &RatFunc::from_poly(factor);
        degrees.extend(std::iter::repeat_n(k, mult));
    }
    if current != RatFunc::one() {
        return Err(Error::NotReflectionGroup(format!("residual factor {current}")));
    }
    let product: usize = degrees.iter().product();
    if product != w.order() {
        return Err(Error::NotReflectionGroup(format!(
            "degree product {product} differs from group order {}",
            w.order()
        )));
    }
    Ok(degrees)
}

/// `s^dim · A(1/s) / B(1/s)`, required to be a polynomial.
pub(crate) fn scaled_ratio(dim: usize, num: &RatFunc, den: &RatFunc) -> Result<RatPoly> {
    let ratio = num.checked_div(den)?.substitute_reciprocal().shl(dim);
    ratio
        .into_poly()
        .ok_or_else(|| Error::NotPolynomial(format!("s^{dim} · A(1/s)/B(1/s) has a denominator")))
}

/// `f0` must map roots to roots and conjugate every simple reflection into `W`.
pub(crate) fn check_twist(rd: &RootDatum, w: &WeylGroup, f0: &IntMatrix) -> Result<u64> {
    let n = rd.rank();
    if f0.rows() != n || f0.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "Frobenius twist is {}x{}, expected {n}x{n}",
            f0.rows(),
            f0.cols()
        )));
    }
    let order = matrix_order(f0, DEFAULT_ORDER_CAP)?;
    if !rd.permutes_roots(f0) {
        return Err(Error::NotRootPermuting);
    }
    let inv = f0.pow(order - 1)?;
    for i in 0..rd.semisimple_rank() {
        let conj = &(f0 * &rd.simple_reflection(i)) * &inv;
        if !w.group().contains(&conj) {
            return Err(Error::NotRootPermuting);
        }
    }
    Ok(order)
}

/// `f0^{-residue}` for a twist of the given finite order.
pub(crate) fn inverse_power(f0: &IntMatrix, order: u64, residue: u64) -> Result<IntMatrix> {
    f0.pow((order - residue % order) % order)
}

/// Order polynomial from a twisted Weyl Molien trace:
/// `P(s) = s^{dim G} / B(1/s)`, checked to be monic and integral of degree `dim G`.
pub(crate) fn order_poly_from_trace(dim_g: usize, trace: &RatFunc) -> Result<RatPoly> {
    let p = scaled_ratio(dim_g, &RatFunc::one(), trace)?;
    if !p.is_integral() {
        return Err(Error::NonIntegral(format!("group order polynomial {p}")));
    }
    if p.degree() != Some(dim_g) || !p.is_monic() {
        return Err(Error::Inconsistent(format!(
            "group order polynomial {p} is not monic of degree {dim_g}"
        )));
    }
    Ok(p)
}

/// Polynomial `P` with `|G^{F^n}| = P(q^n)` for `n ≡ residue (mod ord f0)`.
pub fn group_order_poly(rd: &RootDatum, f0: &IntMatrix, residue: u64) -> Result<RatPoly> {
    let w = enumerate_weyl(rd)?;
    let order = check_twist(rd, &w, f0)?;
    let twist = inverse_power(f0, order, residue)?;
    let trace = molien_series(w.group(), &twist)?;
    order_poly_from_trace(rd.dim_g(), &trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::Preset;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_ints(c)
    }

    fn inv(c: &[i64]) -> RatFunc {
        RatFunc::recip_poly(p(c)).unwrap()
    }

    #[test]
    fn molien_examples() {
        let i1 = IntMatrix::identity(1);
        let neg = IntMatrix::from_i64(1, 1, &[-1]);
        assert_eq!(molien_trace(std::slice::from_ref(&i1), &i1).unwrap(), inv(&[1, -1]));
        assert_eq!(molien_trace(&[i1.clone(), neg.clone()], &i1).unwrap(), inv(&[1, 0, -1]));
        let w = enumerate_weyl(&RootDatum::preset(Preset::SL, 3).unwrap()).unwrap();
        let elems: Vec<_> = w.elements().collect();
        let expected = &inv(&[1, 0, -1]) * &inv(&[1, 0, 0, -1]);
        assert_eq!(molien_trace(&elems, &IntMatrix::identity(2)).unwrap(), expected);
    }

    #[test]
    fn molien_errors() {
        let i1 = IntMatrix::identity(1);
        let neg = IntMatrix::from_i64(1, 1, &[-1]);
        assert_eq!(molien_trace(&[neg], &i1), Err(Error::NotClosed));
        assert!(matches!(
            molien_trace(&[i1], &IntMatrix::identity(2)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn degree_examples() {
        let deg = |k, n| invariant_degrees(&enumerate_weyl(&RootDatum::preset(k, n).unwrap()).unwrap()).unwrap();
        assert_eq!(deg(Preset::SL, 2), vec![2]);
        assert_eq!(deg(Preset::SL, 3), vec![2, 3]);
        assert_eq!(deg(Preset::GL, 2), vec![1, 2]);
        assert_eq!(deg(Preset::Sp, 4), vec![2, 4]);
        assert_eq!(deg(Preset::SO, 8), vec![2, 4, 4, 6]);
        assert_eq!(deg(Preset::Torus, 2), vec![1, 1]);
    }

    #[test]
    fn non_reflection_group_rejected() {
        // Rotation by a quarter turn: Molien series (1 + t^4)/((1 - t^2)(1 - t^4)).
        let rot = IntMatrix::from_i64(2, 2, &[0, -1, 1, 0]);
        let grp = MatrixGroup::generate(2, &[rot], 10).unwrap();
        let lengths = vec![0; grp.order()];
        let fake = WeylGroup::from_parts_for_test(grp, lengths);
        assert!(matches!(invariant_degrees(&fake), Err(Error::NotReflectionGroup(_))));
    }

    #[test]
    fn order_poly_examples() {
        let sl2 = RootDatum::preset(Preset::SL, 2).unwrap();
        assert_eq!(group_order_poly(&sl2, &IntMatrix::identity(1), 0).unwrap(), p(&[0, -1, 0, 1]));
        let gl2 = RootDatum::preset(Preset::GL, 2).unwrap();
        assert_eq!(group_order_poly(&gl2, &IntMatrix::identity(2), 0).unwrap(), p(&[0, 1, -1, -1, 1]));
        let t1 = RootDatum::preset(Preset::Torus, 1).unwrap();
        let neg = IntMatrix::from_i64(1, 1, &[-1]);
        assert_eq!(group_order_poly(&t1, &neg, 1).unwrap(), p(&[1, 1]));
        assert_eq!(group_order_poly(&t1, &neg, 0).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn unitary_twist() {
        // f0 = -w0 on GL(2) gives |U(2, q)| = q (q + 1) (q^2 - 1).
        let gl2 = RootDatum::preset(Preset::GL, 2).unwrap();
        let f0 = IntMatrix::from_i64(2, 2, &[0, -1, -1, 0]);
        let u2 = group_order_poly(&gl2, &f0, 1).unwrap();
        assert_eq!(u2, &(&p(&[0, 1]) * &p(&[1, 1])) * &p(&[-1, 0, 1]));
    }

    #[test]
    fn bad_twists() {
        let gl2 = RootDatum::preset(Preset::GL, 2).unwrap();
        let shear = IntMatrix::from_i64(2, 2, &[1, 1, 0, 1]);
        assert!(matches!(group_order_poly(&gl2, &shear, 0), Err(Error::OrderExceedsCap { .. })));
        let sl3 = RootDatum::preset(Preset::SL, 3).unwrap();
        // order 2 but not a root datum automorphism in these coordinates
        let f = IntMatrix::from_i64(2, 2, &[1, 0, 0, -1]);
        assert_eq!(group_order_poly(&sl3, &f, 1), Err(Error::NotRootPermuting));
    }
}
