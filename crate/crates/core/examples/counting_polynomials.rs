// Counting polynomials of G/H from bundled specs, checked against the
// direct fixed-point sum.

use homcount::arith::BigInt;
use homcount::cli::load_spec;
use homcount::engine::{count_all, count_at};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["sl2_mod_torus", "sl2_mod_normalizer", "sl3_mod_torus", "gl2_mod_torus"] {
        let spec = load_spec(name)?.validate()?;
        let result = count_all(&spec)?;
        println!("{name}: dim {}, P_0(t) = {}", result.dim_x, result.polys[0]);
        for q in [2u64, 3, 4, 5] {
            let direct = count_at(&spec, q, 1)?;
            assert_eq!(result.polys[0].eval_int(&BigInt::from(q)), direct.clone().into());
            print!("  q={q}: {direct}");
        }
        println!();
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
