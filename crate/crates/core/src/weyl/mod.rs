//! Root data, Weyl groups, Molien series and Steinberg order polynomials.

mod group;
mod molien;
mod root_datum;

pub use group::{coset_poincare, enumerate_weyl, WeylGroup, WEYL_CAP};
pub use molien::{group_order_poly, invariant_degrees, molien_series, molien_trace};
pub use root_datum::{build_root_datum, GroupSpec, Preset, PresetGroup, RawGroup, RootDatum, ROOT_CAP};

pub(crate) use molien::{check_twist, inverse_power, order_poly_from_trace, scaled_ratio};
