// Root data, Weyl group enumeration and Bruhat cell counts.

use homcount::weyl::{coset_poincare, enumerate_weyl, invariant_degrees, Preset, RootDatum};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (kind, n) in [(Preset::SL, 3), (Preset::GL, 4), (Preset::Sp, 4), (Preset::SO, 5)] {
        let rd = RootDatum::preset(kind, n)?;
        let w = enumerate_weyl(&rd)?;
        println!("{rd}: dim {}, |W| = {}, degrees {:?}", rd.dim_g(), w.order(), invariant_degrees(&w)?);
    }

    let sl3 = RootDatum::preset(Preset::SL, 3)?;
    println!("full flags in dimension 3: {}", coset_poincare(&sl3, &[])?);
    println!("projective plane: {}", coset_poincare(&sl3, &[1])?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
