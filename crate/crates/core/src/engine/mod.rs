//! Validation of homogeneous-space specifications, periodic counting
//! polynomials, exact point counts, and the factorization and shift checks.

mod count;
mod result;
mod spec;

pub use count::{count_all, count_at, count_polynomial, factorize, minimal_period, period_bound, shift_certificates};
pub use result::{CountingResult, Factorization};
pub use spec::{validate_spec, HomogeneousSpec, RawSpec, GAMMA_CAP};
