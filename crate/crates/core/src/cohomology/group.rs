use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// Default cap on the order of a group when closing a spec.
pub const DEFAULT_ORDER_BOUND: usize = 10_000;

/// How a finite matrix group is presented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// Powers of a single matrix of finite order.
    Cyclic { generator: IntMatrix },
    /// The complete element list; must contain the identity and be closed.
    Explicit { elements: Vec<IntMatrix> },
    /// Closure of a generating set, refused beyond `closure_bound` elements.
    Generated {
        generators: Vec<IntMatrix>,
        closure_bound: usize,
    },
}

impl GroupSpec {
    /// The matrices the spec was written with, in input order.
    pub fn matrices(&self) -> &[IntMatrix] {
        match self {
            GroupSpec::Cyclic { generator } => std::slice::from_ref(generator),
            GroupSpec::Explicit { elements } => elements,
            GroupSpec::Generated { generators, .. } => generators,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GroupSpec::Cyclic { .. } => "cyclic",
            GroupSpec::Explicit { .. } => "list",
            GroupSpec::Generated { .. } => "generated",
        }
    }
}

/// Checks every matrix and returns the full element list of the group.
///
/// Cyclic specs yield `[I, g, g^2, ...]`; generated specs are closed
/// breadth-first from the identity; explicit lists keep their order.
pub fn validate_and_close(spec: &GroupSpec, order_bound: usize) -> Result<Vec<IntMatrix>> {
    if order_bound == 0 {
        return Err(Error::InvalidGroup("order bound must be at least 1".into()));
    }
    let mats = spec.matrices();
    let n = match (spec, mats.first()) {
        (_, Some(m)) => m.rows(),
        (GroupSpec::Explicit { .. }, None) => {
            return Err(Error::InvalidGroup("element list is empty".into()))
        }
        (_, None) => return Err(Error::InvalidGroup("no generators given".into())),
    };
    for (index, m) in mats.iter().enumerate() {
        if !m.is_square() || m.rows() != n {
            return Err(Error::Dimension(format!(
                "matrix {} is {}x{}, expected {}x{}",
                index,
                m.rows(),
                m.cols(),
                n,
                n
            )));
        }
        let det = m.det()?;
        if det != 1.into() && det != (-1).into() {
            return Err(Error::NotUnimodular { index, det });
        }
    }

    match spec {
        GroupSpec::Cyclic { generator } => {
            let mut elements = vec![IntMatrix::identity(n)];
            let mut cur = generator.clone();
            while !cur.is_identity() {
                if elements.len() >= order_bound {
                    return Err(Error::GroupTooLarge { bound: order_bound });
                }
                elements.push(cur.clone());
                cur = cur.mul(generator)?;
            }
            Ok(elements)
        }
        GroupSpec::Explicit { elements } => {
            if elements.len() > order_bound {
                return Err(Error::GroupTooLarge { bound: order_bound });
            }
            let index = element_index(elements)?;
            if !index.contains_key(&IntMatrix::identity(n)) {
                return Err(Error::InvalidGroup("identity is missing".into()));
            }
            for (i, a) in elements.iter().enumerate() {
                for (j, b) in elements.iter().enumerate() {
                    if !index.contains_key(&a.mul(b)?) {
                        return Err(Error::InvalidGroup(format!(
                            "product of elements {} and {} is not in the list",
                            i, j
                        )));
                    }
                }
            }
            // a finite set of invertible matrices closed under products is closed
            // under inverses; the identity check above already covered the rest
            Ok(elements.clone())
        }
        GroupSpec::Generated {
            generators,
            closure_bound,
        } => {
            let bound = order_bound.min(*closure_bound);
            close(generators, n, bound)
        }
    }
}

/// Breadth-first closure of `generators` under right multiplication.
pub(crate) fn close(generators: &[IntMatrix], n: usize, bound: usize) -> Result<Vec<IntMatrix>> {
    let id = IntMatrix::identity(n);
    let mut seen: HashMap<IntMatrix, usize> = HashMap::new();
    let mut elements = vec![id.clone()];
    seen.insert(id.clone(), 0);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.mul(g)?;
            if !seen.contains_key(&y) {
                if elements.len() >= bound {
                    return Err(Error::GroupTooLarge { bound });
                }
                seen.insert(y.clone(), elements.len());
                elements.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(elements)
}

pub(crate) fn element_index(elements: &[IntMatrix]) -> Result<HashMap<IntMatrix, usize>> {
    let mut index = HashMap::with_capacity(elements.len());
    for (i, e) in elements.iter().enumerate() {
        if let Some(j) = index.insert(e.clone(), i) {
            return Err(Error::InvalidGroup(format!(
                "elements {} and {} are equal",
                j, i
            )));
        }
    }
    Ok(index)
}

/// Checks `g^T F g = F` for every matrix of the spec.
pub(crate) fn check_form(spec: &GroupSpec, form: &IntMatrix) -> Result<()> {
    if form != &form.transpose() {
        return Err(Error::InvalidGroup("bilinear form is not symmetric".into()));
    }
    for (index, g) in spec.matrices().iter().enumerate() {
        if g.rows() != form.rows() {
            return Err(Error::Dimension(format!(
                "form is {}x{}, matrix {} is {}x{}",
                form.rows(),
                form.cols(),
                index,
                g.rows(),
                g.cols()
            )));
        }
        let pulled = g.transpose().mul(form)?.mul(g)?;
        if &pulled != form {
            return Err(Error::FormNotPreserved { index });
        }
    }
    Ok(())
}

/// Order of `g` inside a group of order `bound`.
pub(crate) fn element_order(g: &IntMatrix, bound: usize) -> Option<usize> {
    let mut cur = g.clone();
    for k in 1..=bound {
        if cur.is_identity() {
            return Some(k);
        }
        cur = cur.mul(g).ok()?;
    }
    None
}
