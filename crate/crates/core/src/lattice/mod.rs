//! Integer matrices acting on lattices: determinants, Smith normal form,
//! finite orders, reversed characteristic polynomials and finite matrix groups.

mod group;
mod matrix;
mod snf;

pub use group::MatrixGroup;
pub use matrix::{det, matrix_order, reverse_charpoly, IntMatrix, DEFAULT_ORDER_CAP};
pub use snf::{smith_normal_form, SnfResult};

pub(crate) use group::{identity_small, mul_small, to_matrix};
pub(crate) use matrix::reverse_charpoly_small;
