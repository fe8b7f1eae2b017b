// The conic x² − a·y² = b with a a nonsquare: a nonsplit torus whose count
// alternates with the parity of n.

use homcount::cli::load_spec;
use homcount::engine::{count_all, count_at};
use homcount::oracle::{conic_count, SmallField};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = load_spec("conic_torus")?.validate()?;
    let result = count_all(&spec)?;
    for (r, p) in result.polys.iter().enumerate() {
        println!("P_{r}(t) = {p}");
    }
    println!("minimal period {}", result.minimal_period);

    let q = 3u64;
    for n in 1..=4u32 {
        let f = SmallField::new(q.pow(n))?;
        // 2 is a nonsquare in F_3; its image in F_{3^n} is the field element 2.
        let points = conic_count(f.from_int(2), f.one(), &f)?;
        let engine = count_at(&spec, q, n)?;
        println!("n={n}: enumeration {points}, engine {engine}");
        assert_eq!(engine, points.into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
