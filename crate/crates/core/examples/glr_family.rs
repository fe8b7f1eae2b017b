// GL(2r) modulo a rank-r torus extended by inversion: engine counts against
// the closed form, and the growth of the shifted polynomial.

use homcount::cli::load_spec;
use homcount::engine::{count_at, count_polynomial, shift_certificates};
use homcount::oracle::glr_closed_form;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for r in 1..=3u32 {
        let spec = load_spec(&format!("gl2r_h_r{r}"))?.validate()?;
        let p = count_polynomial(&spec, 0)?;
        println!("r = {r}: dim {}, P(t) = {p}", spec.dim_x());
        for q in [2u64, 3] {
            let closed = glr_closed_form(r, q)?;
            assert_eq!(closed, count_at(&spec, q, 1)?);
            println!("  q={q}: {closed}");
        }
        let shifted = shift_certificates(std::slice::from_ref(&p))?;
        println!("  P(t + 1) = {}", shifted[0]);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
