//! Brute-force point counts over small finite fields, used as ground truth
//! for the symbolic engine.

mod counts;
mod field;

pub use counts::{conic_count, flag_count, glr_closed_form, p1_pair_count, twisted_torus_count, PairMode, TORUS_DOMAIN_CAP};
pub use field::{Elem, SmallField, MAX_FIELD_ORDER};
