use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::spec_file::{OracleHint, SpecFile};
use crate::arith::prime_power;
use crate::engine::{count_at, count_polynomial, factorize, minimal_period, period_bound, shift_certificates, HomogeneousSpec};
use crate::error::{Error, Result};
use crate::lattice::{matrix_order, DEFAULT_ORDER_CAP};
use crate::oracle::{
    conic_count, glr_closed_form, p1_pair_count, twisted_torus_count, PairMode, SmallField, MAX_FIELD_ORDER,
    TORUS_DOMAIN_CAP,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Cross-validation of one spec: engine assertions, fixed-point counts
/// against the residue polynomials, and brute-force oracles where the spec file
/// names one and the field is small enough.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub spec: String,
    pub checks: Vec<CheckItem>,
    pub passed: usize,
    pub failed: usize,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.passed > 0
    }

    pub fn to_text(&self) -> String {
        let mut lines: Vec<String> = self
            .checks
            .iter()
            .map(|c| format!("{} {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail))
            .collect();
        lines.push(format!("{}: {} passed, {} failed", self.spec, self.passed, self.failed));
        lines.join("\n")
    }
}

struct Recorder(Vec<CheckItem>);

impl Recorder {
    fn record<T>(&mut self, name: impl Into<String>, outcome: Result<T>, detail: impl FnOnce(&T) -> String) -> Option<T> {
        let name = name.into();
        match outcome {
            Ok(v) => {
                self.0.push(CheckItem { name, pass: true, detail: detail(&v) });
                Some(v)
            }
            Err(e) => {
                self.0.push(CheckItem { name, pass: false, detail: e.to_string() });
                None
            }
        }
    }

    fn compare(&mut self, name: String, engine: &BigInt, oracle: Result<BigInt>) {
        let outcome = oracle.and_then(|o| {
            if &o == engine {
                Ok(o)
            } else {
                Err(Error::Inconsistent(format!("oracle {o}, engine {engine}")))
            }
        });
        self.record(name, outcome, |o| o.to_string());
    }
}

/// Oracle value for `|X(F_{q^n})|`, or `None` when the hint does not fit
/// this spec or the field is too large to enumerate.
fn oracle_value(hint: &OracleHint, spec: &HomogeneousSpec, q: u64, n: u32) -> Option<Result<BigInt>> {
    let big_q = q.checked_pow(n)?;
    match hint {
        OracleHint::Glr { r } => Some(glr_closed_form(*r, big_q)),
        OracleHint::P1Pairs { mode } => {
            let limit = match mode {
                PairMode::Ordered => MAX_FIELD_ORDER,
                PairMode::UnorderedVariety => 45,
            };
            (big_q <= limit).then(|| Ok(SmallField::new(big_q).and_then(|f| p1_pair_count(&f, *mode))?.into()))
        }
        OracleHint::Conic => {
            if q.is_multiple_of(2) || big_q > MAX_FIELD_ORDER {
                return None;
            }
            Some((|| {
                let f = SmallField::new(big_q)?;
                // g^{(Q-1)/(q-1)} generates F_q^*, hence is a nonsquare of F_q.
                let a = f.pow(f.generator(), (big_q - 1) / (q - 1));
                Ok(conic_count(a, f.one(), &f)?.into())
            })())
        }
        OracleHint::TorusPoints => {
            if spec.subtorus_rank() != 0 {
                return Some(Err(Error::InvalidInput("torus_points needs a trivial subgroup H".into())));
            }
            let a = spec.f0().pow(u64::from(n)).ok()?;
            let k = matrix_order(&a, DEFAULT_ORDER_CAP).ok()? as u32;
            let modulus = big_q.checked_pow(k)? - 1;
            let domain = (0..spec.rank()).try_fold(1u64, |acc, _| acc.checked_mul(modulus))?;
            (domain <= TORUS_DOMAIN_CAP).then(|| Ok(twisted_torus_count(&a, big_q, k)?.into()))
        }
    }
}

pub fn run_checks(file: &SpecFile, qmax: u64, nmax: u32) -> CheckReport {
    let mut rec = Recorder(Vec::new());
    if let Some(spec) = rec.record("validate", file.validate(), |s| {
        format!("rank {}, dim X = {}, |Γ| = {}, period {}", s.rank(), s.dim_x(), s.gamma().order(), s.period())
    }) {
        run_engine_checks(&mut rec, file, &spec, qmax, nmax);
    }
    let passed = rec.0.iter().filter(|c| c.pass).count();
    CheckReport { spec: file.metadata.name.clone(), failed: rec.0.len() - passed, passed, checks: rec.0 }
}

fn run_engine_checks(rec: &mut Recorder, file: &SpecFile, spec: &HomogeneousSpec, qmax: u64, nmax: u32) {
    let polys = (0..spec.period())
        .map(|r| count_polynomial(spec, r))
        .collect::<Result<Vec<_>>>();
    let Some(polys) = rec.record("thm12", polys, |ps| {
        format!("{} residue polynomials, monic integral of degree {}", ps.len(), spec.dim_x())
    }) else {
        return;
    };
    rec.record("thm13", factorize(spec), |(r, q)| format!("r = {r}, Q = {q}"));
    rec.record("thm14", shift_certificates(&polys), |s| format!("{} shifted polynomials non-negative", s.len()));
    let minimal = minimal_period(&polys) as u64;
    let bound = period_bound(spec.rank());
    let divides = (&bound % spec.period()) == 0u32.into() && spec.period().is_multiple_of(minimal);
    let detail = format!("N = {}, minimal {minimal}, bound {bound}", spec.period());
    rec.record(
        "period",
        if divides { Ok(()) } else { Err(Error::Inconsistent(detail.clone())) },
        |_| detail,
    );

    for q in (2..=qmax).filter(|&q| prime_power(q).is_some()) {
        for n in 1..=nmax {
            let p = &polys[(u64::from(n) % spec.period()) as usize];
            let outcome = count_at(spec, q, n).and_then(|c| {
                let value = p.eval_int(&BigInt::from(q).pow(n));
                if value == BigRational::from_integer(c.clone()) {
                    Ok(c)
                } else {
                    Err(Error::Inconsistent(format!("count {c}, polynomial value {value}")))
                }
            });
            let Some(count) = rec.record(format!("count q={q} n={n}"), outcome, |c| {
                format!("{c} = P_{}(q^n)", u64::from(n) % spec.period())
            }) else {
                continue;
            };
            if let Some(hint) = &file.metadata.oracle {
                if let Some(oracle) = oracle_value(hint, spec, q, n) {
                    rec.compare(format!("oracle q={q} n={n}"), &count, oracle);
                }
            }
        }
    }
}
