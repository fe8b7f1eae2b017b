// Molien series of finite matrix groups, twisted by a lattice automorphism.

use homcount::lattice::{IntMatrix, MatrixGroup};
use homcount::weyl::{enumerate_weyl, molien_series, molien_trace, Preset, RootDatum};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sign = MatrixGroup::generate(1, &[IntMatrix::from_nested(&[vec![-1]])?], 10)?;
    println!("{{±1}}: {}", molien_series(&sign, &IntMatrix::identity(1))?);

    let w = enumerate_weyl(&RootDatum::preset(Preset::SL, 3)?)?;
    let series = molien_series(w.group(), &IntMatrix::identity(2))?;
    println!("W(A2): {series}");
    println!("first terms: {:?}", series.series(8)?.iter().map(|c| c.to_string()).collect::<Vec<_>>());

    // Twisting by -1 turns the trivial group's series into 1/(1 + t).
    let twisted = molien_trace(&[IntMatrix::identity(1)], &IntMatrix::from_nested(&[vec![-1]])?)?;
    println!("twisted trivial group: {twisted}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
