//! Picard lattices of rational surfaces and the group actions on them.

mod involutions;
mod lattice;
mod search;
mod verify;

pub use involutions::{
    bertini_involution, dejonquieres, dejonquieres_with_section, geiser_involution, ConicBundlePic,
};
pub use lattice::{
    del_pezzo_pic, q_sublattice, reflect, reflection, roots, PicardLattice, QLattice,
};
pub use search::{weyl_search, SearchHit, WeylSearchConfig, DEFAULT_SEED};
pub use verify::{
    charpoly_order, elementary_rank, fiber_degree_image, verify_row, verify_row_with, Check,
    RowReport, TableCase,
};
