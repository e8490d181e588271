//! Finite groups acting on lattices and their low-degree cohomology.
//!
//! Action matrices act on column vectors: an element `g` sends `x` to `g * x`,
//! and a bilinear form `F` is preserved when `g^T F g = F`.

mod group;
mod h1;
mod modules;
mod scan;

pub use group::{validate_and_close, GroupSpec, DEFAULT_ORDER_BOUND};
pub use h1::{h1, h1_cocycle, h1_cyclic, invariants_h0, CohomologyResult, Method, Witness};
pub use modules::{direct_sum, permutation_module, restrict_subgroup, GroupShape, Subgroup};
pub use scan::{obstruction_scan, ScanReport, SubgroupResult};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::{coordinates, IntMatrix};

/// Knobs for the cohomology routines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyConfig {
    /// Largest group order the cocycle method will set up a system for.
    pub cocycle_max_order: usize,
    /// Largest lattice rank the cocycle method will set up a system for.
    pub cocycle_max_rank: usize,
    /// Keep the bases behind each quotient in the result.
    pub witness: bool,
    /// On cyclic inputs also run the cocycle method and require agreement.
    pub cross_check: bool,
}

impl Default for CohomologyConfig {
    fn default() -> Self {
        CohomologyConfig {
            cocycle_max_order: 200,
            cocycle_max_rank: 32,
            witness: false,
            cross_check: cfg!(debug_assertions),
        }
    }
}

/// A free `Z`-module of finite rank with a finite group acting by unimodular
/// matrices, optionally preserving a symmetric bilinear form.
#[derive(Clone, Debug)]
pub struct GLattice {
    rank: usize,
    group: GroupSpec,
    form: Option<IntMatrix>,
    elements: Vec<IntMatrix>,
}

impl GLattice {
    pub fn new(rank: usize, group: GroupSpec, form: Option<IntMatrix>) -> Result<Self> {
        Self::with_order_bound(rank, group, form, DEFAULT_ORDER_BOUND)
    }

    pub fn with_order_bound(
        rank: usize,
        group: GroupSpec,
        form: Option<IntMatrix>,
        order_bound: usize,
    ) -> Result<Self> {
        if let Some(m) = group
            .matrices()
            .iter()
            .position(|m| m.rows() != rank || m.cols() != rank)
        {
            let g = &group.matrices()[m];
            return Err(Error::Dimension(format!(
                "matrix {} is {}x{} but the lattice has rank {}",
                m,
                g.rows(),
                g.cols(),
                rank
            )));
        }
        let elements = validate_and_close(&group, order_bound)?;
        if let Some(f) = &form {
            group::check_form(&group, f)?;
        }
        Ok(GLattice {
            rank,
            group,
            form,
            elements,
        })
    }

    /// `Z^rank` with the trivial group.
    pub fn trivial(rank: usize) -> Self {
        let id = IntMatrix::identity(rank);
        GLattice {
            rank,
            group: GroupSpec::Explicit {
                elements: vec![id.clone()],
            },
            form: None,
            elements: vec![id],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn form(&self) -> Option<&IntMatrix> {
        self.form.as_ref()
    }

    /// All group elements; the order is fixed by the spec (identity first for
    /// cyclic and generated specs).
    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// A generating set: the spec's generators, or a greedy one for explicit
    /// element lists.
    pub fn generators(&self) -> Vec<IntMatrix> {
        match &self.group {
            GroupSpec::Cyclic { generator } => vec![generator.clone()],
            GroupSpec::Generated { generators, .. } => generators.clone(),
            GroupSpec::Explicit { elements } => {
                let mut gens: Vec<IntMatrix> = Vec::new();
                let mut span = vec![IntMatrix::identity(self.rank)];
                for e in elements {
                    if span.contains(e) {
                        continue;
                    }
                    gens.push(e.clone());
                    span = group::close(&gens, self.rank, self.elements.len())
                        .expect("subgroup of a validated group");
                    if span.len() == self.elements.len() {
                        break;
                    }
                }
                if gens.is_empty() {
                    gens.push(IntMatrix::identity(self.rank));
                }
                gens
            }
        }
    }

    /// A generator when the group is cyclic (declared or detected).
    pub fn cyclic_generator(&self) -> Option<IntMatrix> {
        if let GroupSpec::Cyclic { generator } = &self.group {
            return Some(generator.clone());
        }
        let n = self.order();
        self.elements
            .iter()
            .find(|g| group::element_order(g, n) == Some(n))
            .cloned()
    }

    /// Same group, action conjugated by a unimodular change of basis:
    /// `g -> P g P^{-1}`. The form becomes `P^{-T} F P^{-1}`.
    pub fn change_basis(&self, p: &IntMatrix, p_inv: &IntMatrix) -> Result<GLattice> {
        if !p.mul(p_inv)?.is_identity() {
            return Err(Error::Dimension(
                "change of basis is not inverse to its partner".into(),
            ));
        }
        let conj = |g: &IntMatrix| p.mul(g).and_then(|x| x.mul(p_inv));
        let group = match &self.group {
            GroupSpec::Cyclic { generator } => GroupSpec::Cyclic {
                generator: conj(generator)?,
            },
            GroupSpec::Explicit { elements } => GroupSpec::Explicit {
                elements: elements.iter().map(conj).collect::<Result<_>>()?,
            },
            GroupSpec::Generated {
                generators,
                closure_bound,
            } => GroupSpec::Generated {
                generators: generators.iter().map(conj).collect::<Result<_>>()?,
                closure_bound: *closure_bound,
            },
        };
        let form = match &self.form {
            Some(f) => Some(p_inv.transpose().mul(f)?.mul(p_inv)?),
            None => None,
        };
        GLattice::with_order_bound(self.rank, group, form, self.order().max(1))
    }

    /// The G-stable sublattice spanned by the rows of `basis` (which must be
    /// independent), in the coordinates of that basis. The form, if any, is
    /// restricted to `B F B^T`. The acting group is the image of `G` on the
    /// sublattice, which is smaller when the action there is not faithful.
    pub fn sublattice(&self, basis: &IntMatrix) -> Result<GLattice> {
        if basis.cols() != self.rank {
            return Err(Error::Dimension(format!(
                "basis vectors have length {}, lattice rank is {}",
                basis.cols(),
                self.rank
            )));
        }
        let restrict = |g: &IntMatrix| -> Result<IntMatrix> {
            let images = basis.mul(&g.transpose())?;
            let coords = coordinates(basis, &images).map_err(|e| match e {
                Error::NotSublattice { index } => Error::InvalidGroup(format!(
                    "sublattice is not stable: image of basis vector {} leaves it",
                    index
                )),
                other => other,
            })?;
            Ok(coords.transpose())
        };
        let group = match &self.group {
            GroupSpec::Cyclic { generator } => GroupSpec::Cyclic {
                generator: restrict(generator)?,
            },
            GroupSpec::Explicit { .. } => GroupSpec::Explicit {
                elements: self.elements.iter().map(restrict).collect::<Result<_>>()?,
            },
            GroupSpec::Generated {
                generators,
                closure_bound,
            } => GroupSpec::Generated {
                generators: generators.iter().map(restrict).collect::<Result<_>>()?,
                closure_bound: *closure_bound,
            },
        };
        let group = match group {
            GroupSpec::Explicit { elements } => {
                let mut seen = std::collections::HashSet::new();
                GroupSpec::Explicit {
                    elements: elements
                        .into_iter()
                        .filter(|e| seen.insert(e.clone()))
                        .collect(),
                }
            }
            other => other,
        };
        let form = self.restricted_form(basis)?;
        GLattice::with_order_bound(basis.rows(), group, form, self.order().max(1))
    }

    fn restricted_form(&self, basis: &IntMatrix) -> Result<Option<IntMatrix>> {
        match &self.form {
            Some(f) => Ok(Some(basis.mul(f)?.mul(&basis.transpose())?)),
            None => Ok(None),
        }
    }

    pub(crate) fn element_lookup(&self) -> HashMap<&IntMatrix, usize> {
        self.elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect()
    }
}
