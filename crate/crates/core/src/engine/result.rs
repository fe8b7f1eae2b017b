use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::arith::RatPoly;
use crate::error::Error;

/// Everything the engine reports for one specification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ResultDoc", try_from = "ResultDoc")]
pub struct CountingResult {
    pub period: u64,
    pub minimal_period: u64,
    pub period_bound: BigUint,
    pub dim_x: usize,
    pub polys: Vec<RatPoly>,
    pub factor_r: usize,
    pub q_x: RatPoly,
    pub shifted: Vec<RatPoly>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ResultDoc {
    period: u64,
    minimal_period: u64,
    period_bound: String,
    dim: usize,
    polynomials: Vec<ResiduePoly>,
    factorization: Factorization,
    shifted: Vec<RatPoly>,
    checks: Checks,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ResiduePoly {
    residue: u64,
    coeffs: RatPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Factorization {
    pub r: usize,
    #[serde(rename = "Q")]
    pub q: RatPoly,
}

/// A result only exists once every assertion has held, so all flags are set.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Checks {
    thm12: bool,
    thm13: bool,
    thm14: bool,
}

impl CountingResult {
    pub fn factorization(&self) -> Factorization {
        Factorization { r: self.factor_r, q: self.q_x.clone() }
    }
}

impl From<CountingResult> for ResultDoc {
    fn from(r: CountingResult) -> Self {
        ResultDoc {
            period: r.period,
            minimal_period: r.minimal_period,
            period_bound: r.period_bound.to_string(),
            dim: r.dim_x,
            polynomials: r
                .polys
                .into_iter()
                .enumerate()
                .map(|(i, coeffs)| ResiduePoly { residue: i as u64, coeffs })
                .collect(),
            factorization: Factorization { r: r.factor_r, q: r.q_x },
            shifted: r.shifted,
            checks: Checks { thm12: true, thm13: true, thm14: true },
        }
    }
}

impl TryFrom<ResultDoc> for CountingResult {
    type Error = Error;

    fn try_from(doc: ResultDoc) -> Result<Self, Error> {
        for (i, p) in doc.polynomials.iter().enumerate() {
            if p.residue != i as u64 {
                return Err(Error::Parse(format!("polynomial {i} is labelled residue {}", p.residue)));
            }
        }
        if doc.polynomials.len() as u64 != doc.period || doc.shifted.len() as u64 != doc.period {
            return Err(Error::Parse(format!("expected {} residue polynomials", doc.period)));
        }
        let period_bound = doc
            .period_bound
            .parse()
            .map_err(|_| Error::Parse(format!("period_bound {:?} is not a decimal integer", doc.period_bound)))?;
        Ok(CountingResult {
            period: doc.period,
            minimal_period: doc.minimal_period,
            period_bound,
            dim_x: doc.dim,
            polys: doc.polynomials.into_iter().map(|p| p.coeffs).collect(),
            factor_r: doc.factorization.r,
            q_x: doc.factorization.q,
            shifted: doc.shifted,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape_and_round_trip() {
        let res = CountingResult {
            period: 2,
            minimal_period: 2,
            period_bound: BigUint::from(2u32),
            dim_x: 1,
            polys: vec![RatPoly::from_ints(&[-1, 1]), RatPoly::from_ints(&[1, 1])],
            factor_r: 1,
            q_x: RatPoly::one(),
            shifted: vec![RatPoly::from_ints(&[0, 1]), RatPoly::from_ints(&[2, 1])],
        };
        let text = serde_json::to_string(&res).unwrap();
        assert_eq!(
            text,
            r#"{"period":2,"minimal_period":2,"period_bound":"2","dim":1,"polynomials":[{"residue":0,"coeffs":["-1","1"]},{"residue":1,"coeffs":["1","1"]}],"factorization":{"r":1,"Q":["1"]},"shifted":[["0","1"],["2","1"]],"checks":{"thm12":true,"thm13":true,"thm14":true}}"#
        );
        let back: CountingResult = serde_json::from_str(&text).unwrap();
        assert_eq!(back, res);
    }

    #[test]
    fn mislabelled_residue_rejected() {
        let text = r#"{"period":1,"minimal_period":1,"period_bound":"2","dim":1,"polynomials":[{"residue":3,"coeffs":["1"]}],"factorization":{"r":0,"Q":["1"]},"shifted":[["1"]],"checks":{"thm12":true,"thm13":true,"thm14":true}}"#;
        assert!(serde_json::from_str::<CountingResult>(text).is_err());
    }
}
