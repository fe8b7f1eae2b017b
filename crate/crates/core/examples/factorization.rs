// Splitting off the (t − 1)^r factor and the shifted non-negativity
// certificates for every bundled spec.

use homcount::cli::load_spec;
use homcount::corpus;
use homcount::engine::{count_polynomial, factorize, shift_certificates};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for name in corpus::names().filter(|n| *n != "gl2r_h_r4") {
        let spec = load_spec(name)?.validate()?;
        let (r, q) = factorize(&spec)?;
        let polys = (0..spec.period()).map(|k| count_polynomial(&spec, k)).collect::<Result<Vec<_>, _>>()?;
        let shifted = shift_certificates(&polys)?;
        println!("{name:20} r = {r}, Q = {q}; P_0(t + 1) = {}", shifted[0]);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
