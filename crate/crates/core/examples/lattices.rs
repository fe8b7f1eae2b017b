// Integer matrices acting on character lattices: Smith normal form,
// determinants, orders and reversed characteristic polynomials.

use homcount::lattice::{det, matrix_order, reverse_charpoly, smith_normal_form, IntMatrix, DEFAULT_ORDER_CAP};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = IntMatrix::from_nested(&[vec![2, 0], vec![0, 3]])?;
    let snf = smith_normal_form(&m);
    println!("SNF of\n{m}\nis\n{}", snf.d);
    assert_eq!(&(&snf.u * &m) * &snf.v, snf.d);

    // Restriction from the GL(2) torus to the antidiagonal torus {diag(t, 1/t)}.
    let r = IntMatrix::from_nested(&[vec![1, -1]])?;
    println!("elementary divisors of [1, -1]: {:?}", smith_normal_form(&r).divisors());

    let rotation = IntMatrix::from_nested(&[vec![0, -1], vec![1, -1]])?;
    let order = matrix_order(&rotation, DEFAULT_ORDER_CAP)?;
    println!("order of the rotation: {order}");
    println!("det(I - t A) = {}", reverse_charpoly(&rotation)?);

    let q = 2;
    let twisted = rotation.scale(&q.into()).checked_sub(&IntMatrix::identity(2))?;
    println!("|det(2A - I)| = {}", det(&twisted)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
