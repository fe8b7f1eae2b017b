//! Composition steps that turn a counting polynomial for a reductive group
//! modulo a toral-by-finite subgroup into one for a more general
//! homogeneous variety. Step parameters are supplied by the caller.

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::RatPoly;
use crate::error::{Error, Result};

/// `t^d · p`: a unipotent radical of dimension `d` contributes an affine space.
pub fn unipotent_factor(p: &RatPoly, d: usize) -> RatPoly {
    p.shl(d)
}

/// `flag · p` for a flag-variety factor with non-negative integer
/// coefficients and constant term 1.
pub fn parabolic_factor(p: &RatPoly, flag: &RatPoly) -> Result<RatPoly> {
    if !flag.is_integral() || !flag.has_nonnegative_coeffs() {
        return Err(Error::NegativeCoefficient(format!("flag factor {flag}")));
    }
    if !flag.coeff(0).is_one() {
        return Err(Error::InvalidInput(format!("flag factor {flag} must have constant term 1")));
    }
    Ok(p * flag)
}

/// `p / t^m`, defined only when `t^m` divides `p`.
pub fn normalizer_shift(p: &RatPoly, m: usize) -> Result<RatPoly> {
    p.shr(m)
        .ok_or_else(|| Error::Inconsistent(format!("t^{m} does not divide {p}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case", deny_unknown_fields)]
pub enum ReductionStep {
    Unipotent { d: usize },
    Parabolic { flag: RatPoly },
    NormalizerShift { m: usize },
}

impl ReductionStep {
    pub fn apply(&self, p: &RatPoly) -> Result<RatPoly> {
        match self {
            ReductionStep::Unipotent { d } => Ok(unipotent_factor(p, *d)),
            ReductionStep::Parabolic { flag } => parabolic_factor(p, flag),
            ReductionStep::NormalizerShift { m } => normalizer_shift(p, *m),
        }
    }
}

/// A base polynomial and the steps to apply to it, in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReductionTrace {
    pub base: RatPoly,
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    pub fn new(base: RatPoly) -> Self {
        ReductionTrace { base, steps: Vec::new() }
    }

    pub fn push(mut self, step: ReductionStep) -> Self {
        self.steps.push(step);
        self
    }

    /// The base followed by the polynomial after each step.
    pub fn intermediates(&self) -> Result<Vec<RatPoly>> {
        let mut out = vec![self.base.clone()];
        for (i, step) in self.steps.iter().enumerate() {
            let next = step
                .apply(out.last().expect("non-empty"))
                .map_err(|e| Error::Inconsistent(format!("step {i}: {e}")))?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn replay(&self) -> Result<RatPoly> {
        Ok(self.intermediates()?.pop().expect("non-empty"))
    }
}
