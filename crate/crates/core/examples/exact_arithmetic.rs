// Exact rational polynomials and rational functions.

use homcount::arith::{extract_unit_factor, rat, ratfunc_normalize, shift_poly, RatPoly};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p = RatPoly::from_ints(&[0, 0, -1, 1]);
    println!("p(t) = {p}");

    let (r, q) = extract_unit_factor(&p)?;
    println!("p = (t - 1)^{r} * ({q})");
    assert_eq!((r, q), (1, RatPoly::from_ints(&[0, 0, 1])));

    let shifted = shift_poly(&p, &rat(1));
    println!("p(t + 1) = {shifted}");
    assert!(shifted.has_nonnegative_coeffs());

    let f = ratfunc_normalize(RatPoly::from_ints(&[-1, 0, 1]), RatPoly::from_ints(&[-1, 1]))?;
    println!("(t^2 - 1)/(t - 1) = {f}");
    assert_eq!(f.as_poly(), Some(&RatPoly::from_ints(&[1, 1])));

    let g = ratfunc_normalize(RatPoly::one(), RatPoly::from_ints(&[1, 0, -1]))?;
    let series = g.series(6)?;
    println!("1/(1 - t^2) = {} + ...", series.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
