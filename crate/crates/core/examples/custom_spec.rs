// Writing a spec by hand: GL(3) modulo the rank-2 torus diag(a, b, b),
// given as JSON text and cross-checked like a bundled spec.

use homcount::cli::{parse_spec_file, run_checks};
use homcount::engine::count_all;

const SPEC: &str = r#"{
  "metadata": {"name": "gl3_mod_levi_torus", "description": "GL(3) modulo diag(a, b, b)"},
  "group": {"preset": "GL", "n": 3},
  "subtorus_restriction": [[1, 0, 0], [0, 1, 1]],
  "gamma_generators": []
}"#;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let file = parse_spec_file(SPEC)?;
    let result = count_all(&file.validate()?)?;
    println!("{}: P(t) = {}", file.metadata.name, result.polys[0]);
    let report = run_checks(&file, 4, 2);
    println!("{}", report.to_text());
    assert!(report.all_passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
