// Reduction steps as a replayable trace: a unipotent radical, a parabolic
// fibration and a normalizer quotient applied to a base polynomial.

use homcount::arith::RatPoly;
use homcount::cli::load_spec;
use homcount::engine::count_polynomial;
use homcount::reductions::{ReductionStep, ReductionTrace};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let base = count_polynomial(&load_spec("sl2_mod_torus")?.validate()?, 0)?;
    let trace = ReductionTrace::new(base)
        .push(ReductionStep::Unipotent { d: 2 })
        .push(ReductionStep::Parabolic { flag: RatPoly::from_ints(&[1, 2, 2, 1]) })
        .push(ReductionStep::NormalizerShift { m: 1 });
    for (i, p) in trace.intermediates()?.iter().enumerate() {
        println!("step {i}: {p}");
    }
    println!("trace as JSON: {}", serde_json::to_string(&trace.steps)?);
    let replayed = trace.replay()?;
    assert_eq!(Some(&replayed), trace.intermediates()?.last());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
