mod common;

use common::{count_matrices_mod_p, load};
use homcount::arith::RatPoly;
use homcount::engine::{count_at, count_polynomial};
use homcount::oracle::{conic_count, flag_count, glr_closed_form, p1_pair_count, twisted_torus_count, PairMode, SmallField};
use homcount::weyl::{coset_poincare, group_order_poly, Preset, RootDatum};
use homcount::lattice::IntMatrix;
use num_bigint::BigInt;

fn value_at(p: &RatPoly, q: u64) -> BigInt {
    common::IPoly::from_rat(p).eval(&BigInt::from(q))
}

#[test]
fn flag_counts_match_bruhat_polynomials() {
    for n in [3usize, 4] {
        let rd = RootDatum::preset(Preset::SL, n).unwrap();
        for mask in 0u32..(1 << (n - 1)) {
            let dims: Vec<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            // The stabilizer of a flag with these dimensions is generated by
            // the simple reflections s_i with i not among the dimensions.
            let subset: Vec<usize> = (1..n).filter(|i| !dims.contains(i)).map(|i| i - 1).collect();
            let poly = coset_poincare(&rd, &subset).unwrap();
            for q in [2u64, 3] {
                let f = SmallField::new(q).unwrap();
                let count = flag_count(&f, n, &dims).unwrap();
                assert_eq!(BigInt::from(count), value_at(&poly, q), "n={n} dims={dims:?} q={q}");
            }
        }
    }
}

#[test]
fn unordered_pairs_are_q_squared() {
    for q in [2u64, 3, 4, 5] {
        let f = SmallField::new(q).unwrap();
        assert_eq!(p1_pair_count(&f, PairMode::UnorderedVariety).unwrap(), q * q);
        assert_eq!(p1_pair_count(&f, PairMode::Ordered).unwrap(), q * (q + 1));
    }
}

#[test]
fn closed_form_agrees_with_engine() {
    for r in [1u32, 2] {
        let spec = load(&format!("gl2r_h_r{r}"));
        for q in [2u64, 3] {
            assert_eq!(glr_closed_form(r, q).unwrap(), count_at(&spec, q, 1).unwrap(), "r={r} q={q}");
        }
    }
}

#[test]
fn conic_matches_nonsplit_torus_residues() {
    let spec = load("conic_torus");
    let polys = [count_polynomial(&spec, 0).unwrap(), count_polynomial(&spec, 1).unwrap()];
    for (q, n) in [(3u64, 1u32), (3, 2), (5, 1), (5, 2), (7, 1), (3, 3)] {
        let big_q = q.pow(n);
        let f = SmallField::new(big_q).unwrap();
        // A generator of F_q^* inside F_{q^n} is a nonsquare of the base field.
        let a = f.pow(f.generator(), (big_q - 1) / (q - 1));
        let count = conic_count(a, f.one(), &f).unwrap();
        assert_eq!(BigInt::from(count), value_at(&polys[(n % 2) as usize], big_q), "q={q} n={n}");
        assert_eq!(BigInt::from(count), count_at(&spec, q, n).unwrap());
    }
}

#[test]
fn group_orders_match_matrix_enumeration() {
    let sl2 = group_order_poly(&RootDatum::preset(Preset::SL, 2).unwrap(), &IntMatrix::identity(1), 0).unwrap();
    let gl2 = group_order_poly(&RootDatum::preset(Preset::GL, 2).unwrap(), &IntMatrix::identity(2), 0).unwrap();
    for p in [2i128, 3, 5] {
        let q = p as u64;
        assert_eq!(value_at(&sl2, q), BigInt::from(count_matrices_mod_p(2, p, &[1])));
        let units: Vec<i128> = (1..p).collect();
        assert_eq!(value_at(&gl2, q), BigInt::from(count_matrices_mod_p(2, p, &units)));
    }
}

#[test]
fn torus_points_match_engine() {
    let spec = load("torus_order3");
    for (q, n) in [(2u64, 1u32), (2, 2), (3, 1), (2, 3), (4, 1)] {
        let a = spec.f0().pow(u64::from(n)).unwrap();
        let k = homcount::lattice::matrix_order(&a, 100).unwrap() as u32;
        let direct = twisted_torus_count(&a, q.pow(n), k).unwrap();
        assert_eq!(BigInt::from(direct), count_at(&spec, q, n).unwrap(), "q={q} n={n}");
    }
}

#[test]
fn unsupported_fields_are_rejected() {
    assert!(SmallField::new(6).is_err());
    assert!(SmallField::new(1).is_err());
    assert!(SmallField::new(4096).is_err());
}
