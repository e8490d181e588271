//! Exact first cohomology `H^1(G, M)` of finite groups acting on free integer
//! lattices.
//!
//! The crate is layered bottom-up:
//!
//! * [`linalg`] - arbitrary-precision integer matrices, Hermite and Smith
//!   normal forms, saturated kernels, subquotients and characteristic
//!   polynomials.
//! * [`abelian`] - finite(ly generated) abelian groups in invariant-factor form.
//! * [`cohomology`] - G-lattices, `H^0`, `H^1` (cyclic norm formula and the
//!   general crossed-homomorphism method), permutation modules, direct sums,
//!   restriction and obstruction scans.
//! * [`picard`] - Picard lattices of del Pezzo surfaces and conic bundles,
//!   root systems, the Geiser/Bertini/de Jonquieres involutions, seeded Weyl
//!   group searches and the table verification harness.
//! * [`input`] / [`report`] - the JSON input document and machine reports used
//!   by the command-line frontend.

pub mod abelian;
pub mod cohomology;
pub mod error;
pub mod input;
pub mod linalg;
pub mod picard;
pub mod report;

pub use abelian::FinAbGroup;
pub use cohomology::{CohomologyConfig, CohomologyResult, GLattice, GroupSpec, Method, ScanReport};
pub use error::{Error, Result};
pub use input::{parse_input, InputDocument};
pub use linalg::{IntMatrix, IntPoly, SmithForm};
