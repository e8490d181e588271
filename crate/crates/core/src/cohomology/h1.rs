use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{CohomologyConfig, GLattice};
use crate::abelian::FinAbGroup;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, subquotient, IntMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// `ker(N) / (1 - g)M` for a cyclic group generated by `g`.
    Cyclic,
    /// Crossed homomorphisms modulo principal ones.
    Cocycle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Cyclic => "cyclic",
            Method::Cocycle => "cocycle",
        }
    }
}

/// Bases behind the quotient that produced `H^1`, rows in lattice (or
/// cochain) coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Norm {
        kernel: IntMatrix,
        image: IntMatrix,
    },
    Cocycle {
        cocycles: IntMatrix,
        coboundaries: IntMatrix,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyResult {
    pub group_order: usize,
    pub h0_rank: usize,
    pub h1: FinAbGroup,
    pub method: Method,
    pub witness: Option<Witness>,
}

/// Canonical basis (rows) of the fixed sublattice `M^G`.
pub fn invariants_h0(m: &GLattice) -> IntMatrix {
    let n = m.rank();
    let id = IntMatrix::identity(n);
    let mut stacked = IntMatrix::zeros(0, n);
    for g in m.generators() {
        let d = g.sub(&id).expect("square action");
        stacked = stacked.vstack(&d).expect("same width");
    }
    kernel_basis(&stacked)
}

/// `H^1` of a cyclic group via `ker(N) / eta(M)` with `N = 1 + g + ... + g^{n-1}`
/// and `eta = 1 - g`.
pub fn h1_cyclic(m: &GLattice, cfg: &CohomologyConfig) -> Result<CohomologyResult> {
    let gen = m.cyclic_generator().ok_or(Error::NotCyclic)?;
    let n = m.order();
    let rank = m.rank();

    let mut norm = IntMatrix::zeros(rank, rank);
    let mut power = IntMatrix::identity(rank);
    for _ in 0..n {
        norm = norm.add(&power)?;
        power = power.mul(&gen)?;
    }
    let eta = IntMatrix::identity(rank).sub(&gen)?;

    let kernel = kernel_basis(&norm);
    // images of the standard basis under eta are the columns of eta
    let image = eta.transpose();
    let h1 = subquotient(&kernel, &image).map_err(|e| match e {
        Error::NotSublattice { index } => {
            Error::Verification(format!("(1 - g)e_{} is not in ker(N)", index))
        }
        other => other,
    })?;
    let result = CohomologyResult {
        group_order: n,
        h0_rank: invariants_h0(m).rows(),
        h1,
        method: super::Method::Cyclic,
        witness: cfg.witness.then_some(Witness::Norm { kernel, image }),
    };
    check_result(&result)?;
    Ok(result)
}

/// `H^1 = Z^1 / B^1` by solving the cocycle identities exactly.
///
/// Unknowns are the values `f(g)` for every element. The identity
/// `f(gh) = f(g) + g f(h)` is imposed for all `g` and all generators `h`;
/// by induction on word length this gives it for every pair.
pub fn h1_cocycle(m: &GLattice, cfg: &CohomologyConfig) -> Result<CohomologyResult> {
    let order = m.order();
    let rank = m.rank();
    if order > cfg.cocycle_max_order || rank > cfg.cocycle_max_rank {
        return Err(Error::CocycleCap {
            order,
            rank,
            max_order: cfg.cocycle_max_order,
            max_rank: cfg.cocycle_max_rank,
        });
    }
    let elements = m.elements();
    let lookup = m.element_lookup();
    let gens = m.generators();
    let gen_idx: Vec<usize> = gens.iter().map(|g| lookup[g]).collect();

    let unknowns = order * rank;
    let mut system = IntMatrix::zeros(order * gen_idx.len() * rank, unknowns);
    let mut row = 0;
    for (gi, g) in elements.iter().enumerate() {
        for &hi in &gen_idx {
            let gh = g.mul(&elements[hi])?;
            let ghi = lookup[&gh];
            for i in 0..rank {
                // f(gh)_i - f(g)_i - sum_j g_ij f(h)_j = 0
                system[(row, ghi * rank + i)] += 1;
                system[(row, gi * rank + i)] -= 1;
                for j in 0..rank {
                    let c = &g[(i, j)];
                    system[(row, hi * rank + j)] -= c;
                }
                row += 1;
            }
        }
    }
    let cocycles = kernel_basis(&system);

    let mut coboundaries = IntMatrix::zeros(rank, unknowns);
    for (gi, g) in elements.iter().enumerate() {
        for basis in 0..rank {
            for i in 0..rank {
                let mut v = g[(i, basis)].clone();
                if i == basis {
                    v -= 1;
                }
                coboundaries[(basis, gi * rank + i)] = v;
            }
        }
    }
    let h1 = subquotient(&cocycles, &coboundaries).map_err(|e| match e {
        Error::NotSublattice { index } => Error::Verification(format!(
            "coboundary of e_{} fails the cocycle identity",
            index
        )),
        other => other,
    })?;
    let result = CohomologyResult {
        group_order: order,
        h0_rank: invariants_h0(m).rows(),
        h1,
        method: super::Method::Cocycle,
        witness: cfg.witness.then_some(Witness::Cocycle {
            cocycles,
            coboundaries,
        }),
    };
    check_result(&result)?;
    Ok(result)
}

/// Dispatches to the cyclic formula when the group is cyclic, otherwise to the
/// cocycle method. With `cross_check` set, cyclic inputs small enough for the
/// cocycle method are computed both ways.
pub fn h1(m: &GLattice, cfg: &CohomologyConfig) -> Result<CohomologyResult> {
    if m.cyclic_generator().is_none() {
        return h1_cocycle(m, cfg);
    }
    let res = h1_cyclic(m, cfg)?;
    if cfg.cross_check && m.order() <= cfg.cocycle_max_order && m.rank() <= cfg.cocycle_max_rank {
        let other = h1_cocycle(m, cfg)?;
        if other.h1 != res.h1 {
            return Err(Error::Verification(format!(
                "cyclic method gives {} but cocycle method gives {}",
                res.h1, other.h1
            )));
        }
    }
    Ok(res)
}

fn check_result(r: &CohomologyResult) -> Result<()> {
    if !r.h1.is_finite() {
        return Err(Error::Verification(format!("H^1 = {} is not finite", r.h1)));
    }
    let order = BigInt::from(r.group_order);
    if let Some(d) =
        r.h1.invariant_factors()
            .iter()
            .find(|d| !order.is_multiple_of(d))
    {
        return Err(Error::Verification(format!(
            "invariant factor {} does not divide the group order {}",
            d, order
        )));
    }
    debug_assert!(r.h1.invariant_factors().iter().all(|d| !d.is_one()));
    Ok(())
}
