use num_integer::Integer;
use num_traits::{One, Signed};

use crate::arith::{RatFunc, RatPoly};
use crate::error::{Error, Result};
use crate::lattice::{det, matrix_order, smith_normal_form, IntMatrix, MatrixGroup, DEFAULT_ORDER_CAP};
use crate::weyl::{check_twist, enumerate_weyl, inverse_power, molien_series, order_poly_from_trace, RootDatum, WeylGroup};

pub const GAMMA_CAP: usize = 100_000;

/// Unvalidated input: a root datum for `G`, the restriction `Λ_T → Λ_{H⁰}`,
/// generators of the component group acting on `Λ_{H⁰}`, and an optional
/// Frobenius twist on `Λ_T` (identity when absent).
#[derive(Clone, Debug)]
pub struct RawSpec {
    pub group: RootDatum,
    pub restriction: IntMatrix,
    pub gamma_generators: Vec<IntMatrix>,
    pub f0: Option<IntMatrix>,
}

/// A validated homogeneous-space specification together with the data
/// every counting operation reuses: the Weyl group, the closed-up `Γ`,
/// the induced twist on `Λ_{H⁰}`, and the twisted Weyl traces per residue.
#[derive(Clone, Debug)]
pub struct HomogeneousSpec {
    group: RootDatum,
    restriction: IntMatrix,
    gamma_generators: Vec<IntMatrix>,
    f0: IntMatrix,
    f0_h: IntMatrix,
    f0_order: u64,
    f0_h_order: u64,
    period: u64,
    weyl: WeylGroup,
    gamma: MatrixGroup,
    weyl_traces: Vec<RatFunc>,
    order_polys: Vec<RatPoly>,
}

/// A right inverse `S` of a surjective `R` (`R·S = I_h`), read off from the
/// Smith form `U·R·V = [I_h | 0]` as `S = V·[I_h; 0]·U`.
fn right_inverse(r: &IntMatrix) -> Result<IntMatrix> {
    let (h, d) = (r.rows(), r.cols());
    let snf = smith_normal_form(r);
    let divisors = snf.divisors();
    if divisors.len() < h || divisors.iter().any(|x| !x.is_one()) {
        let listed: Vec<String> = divisors.iter().map(|x| x.to_string()).collect();
        return Err(Error::NonSurjective { divisors: listed.join(", ") });
    }
    let mut embed = IntMatrix::zeros(d, h);
    for i in 0..h {
        embed.set(i, i, One::one());
    }
    snf.v.checked_mul(&embed)?.checked_mul(&snf.u)
}

pub fn validate_spec(raw: RawSpec) -> Result<HomogeneousSpec> {
    let RawSpec { group, restriction, gamma_generators, f0 } = raw;
    let d = group.rank();
    let h = restriction.rows();
    if restriction.cols() != d {
        return Err(Error::DimensionMismatch(format!(
            "restriction has {} columns, the character lattice has rank {d}",
            restriction.cols()
        )));
    }
    if h > d {
        return Err(Error::DimensionMismatch(format!("restriction has {h} rows, more than the rank {d}")));
    }
    let section = right_inverse(&restriction)?;

    let weyl = enumerate_weyl(&group)?;
    let f0 = f0.unwrap_or_else(|| IntMatrix::identity(d));
    let f0_order = check_twist(&group, &weyl, &f0)?;

    let f0_h = restriction.checked_mul(&f0)?.checked_mul(&section)?;
    if f0_h.checked_mul(&restriction)? != restriction.checked_mul(&f0)? {
        return Err(Error::Inconsistent(
            "the kernel of the restriction is not stable under the Frobenius twist".into(),
        ));
    }
    let f0_h_order = matrix_order(&f0_h, DEFAULT_ORDER_CAP)?;

    for (i, g) in gamma_generators.iter().enumerate() {
        if g.rows() != h || g.cols() != h {
            return Err(Error::DimensionMismatch(format!(
                "gamma generator {i} is {}x{}, expected {h}x{h}",
                g.rows(),
                g.cols()
            )));
        }
        if !det(g)?.abs().is_one() {
            return Err(Error::InvalidInput(format!("gamma generator {i} is not invertible over the integers")));
        }
        matrix_order(g, DEFAULT_ORDER_CAP)?;
    }
    let gamma = MatrixGroup::generate(h, &gamma_generators, GAMMA_CAP)?;
    let f0_h_inv = f0_h.pow(f0_h_order - 1)?;
    for g in &gamma_generators {
        let conj = f0_h.checked_mul(g)?.checked_mul(&f0_h_inv)?;
        if !gamma.contains(&conj) {
            return Err(Error::GammaNotNormalized);
        }
    }

    let period = f0_order.lcm(&f0_h_order);
    let mut weyl_traces = Vec::with_capacity(f0_order as usize);
    let mut order_polys = Vec::with_capacity(f0_order as usize);
    for residue in 0..f0_order {
        let trace = molien_series(weyl.group(), &inverse_power(&f0, f0_order, residue)?)?;
        order_polys.push(order_poly_from_trace(group.dim_g(), &trace)?);
        weyl_traces.push(trace);
    }

    Ok(HomogeneousSpec {
        group,
        restriction,
        gamma_generators,
        f0,
        f0_h,
        f0_order,
        f0_h_order,
        period,
        weyl,
        gamma,
        weyl_traces,
        order_polys,
    })
}

impl HomogeneousSpec {
    pub fn group(&self) -> &RootDatum {
        &self.group
    }

    pub fn restriction(&self) -> &IntMatrix {
        &self.restriction
    }

    pub fn gamma_generators(&self) -> &[IntMatrix] {
        &self.gamma_generators
    }

    pub fn f0(&self) -> &IntMatrix {
        &self.f0
    }

    /// Twist induced on `Λ_{H⁰}`: the unique `f0_H` with `f0_H·R = R·f0`.
    pub fn f0_h(&self) -> &IntMatrix {
        &self.f0_h
    }

    pub fn f0_order(&self) -> u64 {
        self.f0_order
    }

    pub fn f0_h_order(&self) -> u64 {
        self.f0_h_order
    }

    /// `lcm(ord f0, ord f0_H)`.
    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn gamma(&self) -> &MatrixGroup {
        &self.gamma
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn subtorus_rank(&self) -> usize {
        self.restriction.rows()
    }

    pub fn dim_g(&self) -> usize {
        self.group.dim_g()
    }

    pub fn dim_x(&self) -> usize {
        self.group.dim_g() - self.subtorus_rank()
    }

    pub(crate) fn weyl_trace(&self, residue: u64) -> &RatFunc {
        &self.weyl_traces[(residue % self.f0_order) as usize]
    }

    /// `P` with `|G^{F^n}| = P(q^n)` for `n ≡ residue (mod ord f0)`.
    pub fn group_order_poly(&self, residue: u64) -> &RatPoly {
        &self.order_polys[(residue % self.f0_order) as usize]
    }
}
