// Brute-force point counts over small finite fields.

use homcount::lattice::IntMatrix;
use homcount::oracle::{flag_count, p1_pair_count, twisted_torus_count, PairMode, SmallField};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f9 = SmallField::new(9)?;
    println!("F_9: modulus {:?}, generator {}", f9.modulus(), f9.generator());
    let squares = f9.elements().filter(|&x| x != 0 && f9.is_square(x)).count();
    println!("  {squares} nonzero squares");

    for q in [2u64, 3, 4] {
        let f = SmallField::new(q)?;
        println!(
            "q={q}: full flags in F_q^3 {}, lines in F_q^3 {}, ordered pairs {}, unordered pairs {}",
            flag_count(&f, 3, &[1, 2])?,
            flag_count(&f, 3, &[1])?,
            p1_pair_count(&f, PairMode::Ordered)?,
            p1_pair_count(&f, PairMode::UnorderedVariety)?,
        );
    }

    let swap = IntMatrix::from_nested(&[vec![0, 1], vec![1, 0]])?;
    println!("swap-twisted torus over F_2: {}", twisted_torus_count(&swap, 2, 2)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
