// Orders of finite groups of Lie type as polynomials in q, split and twisted.

use homcount::arith::BigInt;
use homcount::lattice::IntMatrix;
use homcount::weyl::{group_order_poly, Preset, RootDatum};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let gl3 = RootDatum::preset(Preset::GL, 3)?;
    let order = group_order_poly(&gl3, &IntMatrix::identity(3), 0)?;
    println!("|GL3(F_q)| = {order}");
    println!("|GL3(F_2)| = {}", order.eval_int(&BigInt::from(2)));

    // The twist x -> -w0 x on GL(2) gives the unitary group U(2).
    let twist = IntMatrix::from_nested(&[vec![0, -1], vec![-1, 0]])?;
    let gl2 = RootDatum::preset(Preset::GL, 2)?;
    for residue in 0..2 {
        println!("residue {residue}: {}", group_order_poly(&gl2, &twist, residue)?);
    }

    let torus = RootDatum::preset(Preset::Torus, 1)?;
    let norm_one = group_order_poly(&torus, &IntMatrix::from_nested(&[vec![-1]])?, 1)?;
    println!("norm-one torus: {norm_one}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
