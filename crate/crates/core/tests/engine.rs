mod common;

use common::{all_corpus, glr_polynomial, load, naive_totient, IPoly};
use homcount::arith::extract_unit_factor;
use homcount::cli::parse_spec_file;
use homcount::engine::{count_all, count_polynomial, factorize, minimal_period, period_bound};
use homcount::Error;
use num_bigint::BigInt;

fn poly_of(name: &str, residue: u64) -> IPoly {
    IPoly::from_rat(&count_polynomial(&load(name), residue).unwrap())
}

#[test]
fn glr_family_matches_closed_form() {
    for r in 1..=3 {
        assert_eq!(poly_of(&format!("gl2r_h_r{r}"), 0), glr_polynomial(r), "r={r}");
    }
}

#[test]
fn split_quotients_by_torus() {
    assert_eq!(poly_of("sl2_mod_torus", 0), IPoly::ints(&[0, 1, 1]));
    assert_eq!(poly_of("gl2_mod_torus", 0), IPoly::ints(&[0, 1, 1]));
    // SL(3)/T: q^3 (q^2 + q + 1)(q + 1).
    assert_eq!(poly_of("sl3_mod_torus", 0), IPoly::ints(&[0, 0, 0, 1, 2, 2, 1]));
}

#[test]
fn torus_normalizer_quotients_are_pure_powers() {
    for name in ["sl2_mod_normalizer", "gl2_mod_normalizer", "sl3_mod_normalizer"] {
        let spec = load(name);
        assert_eq!(poly_of(name, 0), IPoly::mono(spec.dim_x()), "{name}");
    }
}

#[test]
fn anisotropic_torus_of_order_three() {
    // det(q·A − I) for A of order 3 with characteristic polynomial x² + x + 1.
    let spec = load("torus_order3");
    assert_eq!(spec.period(), 3);
    assert_eq!(poly_of("torus_order3", 0), IPoly::ints(&[1, -2, 1]));
    assert_eq!(poly_of("torus_order3", 1), IPoly::ints(&[1, 1, 1]));
    assert_eq!(poly_of("torus_order3", 2), IPoly::ints(&[1, 1, 1]));
    assert_eq!(count_all(&spec).unwrap().minimal_period, 3);
}

#[test]
fn factorization_identity_holds_across_corpus() {
    for (name, spec) in all_corpus() {
        let (r, q) = factorize(&spec).unwrap();
        let p0 = IPoly::from_rat(&count_polynomial(&spec, 0).unwrap());
        let q = IPoly::from_rat(&q);
        assert!(q.0.iter().all(|c| c >= &BigInt::from(0)), "{name}: negative coefficient in Q");
        let dim = spec.dim_x();
        let rebuilt = IPoly::ints(&[-1, 1]).pow(r).mul(&q.reversed(dim - r));
        assert_eq!(rebuilt, p0, "{name}");
        let (k, _) = extract_unit_factor(&count_polynomial(&spec, 0).unwrap()).unwrap();
        assert_eq!(k, r, "{name}: multiplicity of the root 1");
    }
}

#[test]
fn periods_respect_the_bound() {
    for (name, spec) in all_corpus() {
        let res = count_all(&spec).unwrap();
        let polys: Vec<_> = (0..spec.period()).map(|r| count_polynomial(&spec, r).unwrap()).collect();
        assert_eq!(minimal_period(&polys) as u64, res.minimal_period, "{name}");
        assert_eq!(res.period % res.minimal_period, 0, "{name}");
        let bound = period_bound(spec.rank());
        assert_eq!(&bound % spec.period(), 0u32.into(), "{name}");
        for certificate in &res.shifted {
            assert!(certificate.has_nonnegative_coeffs(), "{name}");
        }
    }
}

#[test]
fn period_bound_is_lcm_of_small_totients() {
    for rank in 1..=6usize {
        let lcm = (1..=4 * rank * rank)
            .map(|n| n as u64)
            .filter(|&n| naive_totient(n) <= rank as u64)
            .fold(1u64, |acc, n| acc / common::gcd(acc, n) * n);
        assert_eq!(period_bound(rank), lcm.into(), "rank {rank}");
    }
}

fn parse_err(text: &str) -> Error {
    match parse_spec_file(text).and_then(|f| f.validate()) {
        Ok(_) => panic!("accepted: {text}"),
        Err(e) => e,
    }
}

#[test]
fn invalid_specs_are_rejected() {
    let non_saturated = r#"{"metadata":{"name":"x"},"group":{"preset":"SL","n":2},
        "subtorus_restriction":[[2]],"gamma_generators":[]}"#;
    assert!(matches!(parse_err(non_saturated), Error::NonSurjective { .. }));

    let bad_twist = r#"{"metadata":{"name":"x"},"group":{"preset":"GL","n":2},
        "subtorus_restriction":[[1,0],[0,1]],"gamma_generators":[],"frobenius_twist":[[1,1],[0,1]]}"#;
    assert!(matches!(parse_err(bad_twist), Error::NotRootPermuting | Error::OrderExceedsCap { .. }));

    let wrong_shape = r#"{"metadata":{"name":"x"},"group":{"preset":"GL","n":2},
        "subtorus_restriction":[[1,0],[0,1]],"gamma_generators":[[[1,0,0],[0,1,0]]]}"#;
    assert!(matches!(parse_err(wrong_shape), Error::DimensionMismatch(_) | Error::Parse(_)));

    let unknown_key = r#"{"metadata":{"name":"x"},"group":{"preset":"SL","n":2},
        "subtorus_restriction":[[1]],"gamma_generators":[],"extra":1}"#;
    assert!(matches!(parse_err(unknown_key), Error::Parse(_)));

    // The swap twist on GL(2) does not normalize Γ = {I, diag(-1, 1)}.
    let not_normalized = r#"{"metadata":{"name":"x"},"group":{"preset":"GL","n":2},
        "subtorus_restriction":[[1,0],[0,1]],"gamma_generators":[[[-1,0],[0,1]]],
        "frobenius_twist":[[0,1],[1,0]]}"#;
    assert!(matches!(parse_err(not_normalized), Error::GammaNotNormalized));
}
