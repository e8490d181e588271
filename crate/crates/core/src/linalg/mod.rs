//! Exact integer linear algebra over arbitrary-precision integers.

pub mod hermite;
pub mod lattice;
mod matrix;
pub mod poly;
pub mod smith;

pub use hermite::hermite_form;
pub use lattice::{coordinates, kernel_basis, rank, row_basis, subquotient};
pub(crate) use matrix::dot;
pub use matrix::IntMatrix;
pub use poly::{char_poly, IntPoly};
pub use smith::{smith_form, SmithForm};
