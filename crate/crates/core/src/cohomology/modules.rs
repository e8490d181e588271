use std::collections::HashSet;

use num_integer::Integer;

use super::group::element_order;
use super::{GLattice, GroupSpec};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Presentation used when building a permutation module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupShape {
    Cyclic,
    Explicit,
    Generated { closure_bound: usize },
}

/// How a subgroup is selected for [`restrict_subgroup`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subgroup {
    /// The cyclic subgroup generated by one element.
    Generator(IntMatrix),
    /// An explicit subset, which must be closed under products.
    Elements(Vec<IntMatrix>),
}

/// Matrix of a permutation of `0..k`: `e_i -> e_{perm[i]}`.
pub fn permutation_matrix(perm: &[usize]) -> Result<IntMatrix> {
    let k = perm.len();
    let mut seen = vec![false; k];
    for (i, &p) in perm.iter().enumerate() {
        if p >= k || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidPermutation(format!(
                "{:?} is not a permutation of 0..{} (position {})",
                perm, k, i
            )));
        }
    }
    let mut m = IntMatrix::zeros(k, k);
    for (i, &p) in perm.iter().enumerate() {
        m[(p, i)] = 1.into();
    }
    Ok(m)
}

/// Lattice `Z^k` whose basis is permuted by the given permutations
/// (0-based, `perm[i]` is the image of `i`).
pub fn permutation_module(perms: &[Vec<usize>], shape: GroupShape) -> Result<GLattice> {
    let Some(first) = perms.first() else {
        return Err(Error::InvalidPermutation("no permutations given".into()));
    };
    let k = first.len();
    if let Some(i) = perms.iter().position(|p| p.len() != k) {
        return Err(Error::InvalidPermutation(format!(
            "permutation {} acts on {} points, expected {}",
            i,
            perms[i].len(),
            k
        )));
    }
    let mats = perms
        .iter()
        .map(|p| permutation_matrix(p))
        .collect::<Result<Vec<_>>>()?;
    let spec = match shape {
        GroupShape::Cyclic => {
            if mats.len() != 1 {
                return Err(Error::InvalidPermutation(format!(
                    "cyclic shape needs exactly one permutation, got {}",
                    mats.len()
                )));
            }
            GroupSpec::Cyclic {
                generator: mats.into_iter().next().unwrap(),
            }
        }
        GroupShape::Explicit => GroupSpec::Explicit { elements: mats },
        GroupShape::Generated { closure_bound } => GroupSpec::Generated {
            generators: mats,
            closure_bound,
        },
    };
    GLattice::new(k, spec, None).map_err(|e| match e {
        Error::InvalidGroup(msg) => Error::InvalidPermutation(msg),
        other => other,
    })
}

/// `M1 + M2` with the block-diagonal action.
///
/// Both sides must present the same abstract group: cyclic generators are
/// paired (one order must divide the other, the larger cyclic group then acts
/// on the other summand through its quotient), explicit element lists and
/// generator lists are paired index by index and the pairing must stay a
/// group of the same order. A rank-0 summand is the zero module and returns
/// the other side unchanged.
pub fn direct_sum(m1: &GLattice, m2: &GLattice) -> Result<GLattice> {
    if m2.rank() == 0 {
        return Ok(m1.clone());
    }
    if m1.rank() == 0 {
        return Ok(m2.clone());
    }
    let rank = m1.rank() + m2.rank();
    let form = match (m1.form(), m2.form()) {
        (Some(a), Some(b)) => Some(a.block_diag(b)),
        _ => None,
    };
    let pair = |a: &[IntMatrix], b: &[IntMatrix], what: &str| -> Result<Vec<IntMatrix>> {
        if a.len() != b.len() {
            return Err(Error::GroupMismatch(format!(
                "{} {} vs {}",
                what,
                a.len(),
                b.len()
            )));
        }
        Ok(a.iter().zip(b).map(|(x, y)| x.block_diag(y)).collect())
    };
    let (spec, expected) = match (m1.group(), m2.group()) {
        (GroupSpec::Cyclic { generator: a }, GroupSpec::Cyclic { generator: b }) => {
            let (n1, n2) = (m1.order(), m2.order());
            if n1.lcm(&n2) != n1.max(n2) {
                return Err(Error::GroupMismatch(format!(
                    "cyclic orders {} and {} are not comparable",
                    n1, n2
                )));
            }
            (
                GroupSpec::Cyclic {
                    generator: a.block_diag(b),
                },
                n1.max(n2),
            )
        }
        (GroupSpec::Explicit { elements: a }, GroupSpec::Explicit { elements: b }) => (
            GroupSpec::Explicit {
                elements: pair(a, b, "element counts")?,
            },
            m1.order(),
        ),
        (
            GroupSpec::Generated {
                generators: a,
                closure_bound: ba,
            },
            GroupSpec::Generated {
                generators: b,
                closure_bound: bb,
            },
        ) => {
            if m1.order() != m2.order() {
                return Err(Error::GroupMismatch(format!(
                    "group orders {} and {}",
                    m1.order(),
                    m2.order()
                )));
            }
            (
                GroupSpec::Generated {
                    generators: pair(a, b, "generator counts")?,
                    closure_bound: (*ba).max(*bb),
                },
                m1.order(),
            )
        }
        (a, b) => {
            return Err(Error::GroupMismatch(format!(
                "{} group vs {} group",
                a.kind(),
                b.kind()
            )))
        }
    };
    let sum =
        GLattice::with_order_bound(rank, spec, form, expected.max(1)).map_err(|e| match e {
            Error::InvalidGroup(msg) => Error::GroupMismatch(msg),
            Error::GroupTooLarge { .. } => {
                Error::GroupMismatch("paired elements do not form the same group".into())
            }
            other => other,
        })?;
    if sum.order() != expected {
        return Err(Error::GroupMismatch(format!(
            "paired group has order {}, expected {}",
            sum.order(),
            expected
        )));
    }
    Ok(sum)
}

/// The same lattice with the action restricted to a subgroup.
pub fn restrict_subgroup(m: &GLattice, sub: &Subgroup) -> Result<GLattice> {
    let members: HashSet<&IntMatrix> = m.elements().iter().collect();
    match sub {
        Subgroup::Generator(g) => {
            if !members.contains(g) {
                return Err(Error::NotSubgroup(
                    "generator is not a group element".into(),
                ));
            }
            debug_assert!(element_order(g, m.order()).is_some());
            GLattice::with_order_bound(
                m.rank(),
                GroupSpec::Cyclic {
                    generator: g.clone(),
                },
                m.form().cloned(),
                m.order(),
            )
        }
        Subgroup::Elements(els) => {
            if let Some(i) = els.iter().position(|e| !members.contains(e)) {
                return Err(Error::NotSubgroup(format!(
                    "element {} is not in the group",
                    i
                )));
            }
            let distinct: HashSet<&IntMatrix> = els.iter().collect();
            if distinct.len() == m.order() {
                return Ok(m.clone());
            }
            GLattice::with_order_bound(
                m.rank(),
                GroupSpec::Explicit {
                    elements: els.clone(),
                },
                m.form().cloned(),
                m.order(),
            )
            .map_err(|e| match e {
                Error::InvalidGroup(msg) => Error::NotSubgroup(msg),
                other => other,
            })
        }
    }
}
