use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{dot, kernel_basis, IntMatrix};

/// `Pic` of a del Pezzo surface of degree `d`: `Z^{1, 9-d}` with basis
/// `H, E_1, ..., E_{9-d}`, Gram matrix `diag(1, -1, ..., -1)` and canonical
/// class `K = -3H + E_1 + ... + E_{9-d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardLattice {
    degree: i64,
    gram: IntMatrix,
    canonical: Vec<BigInt>,
}

/// Builds the Picard lattice of the degree-`d` del Pezzo surface, `1 <= d <= 6`.
pub fn del_pezzo_pic(d: i64) -> Result<PicardLattice> {
    if !(1..=6).contains(&d) {
        return Err(Error::DegreeOutOfRange(d));
    }
    let rank = (10 - d) as usize;
    let mut diag = vec![-1i64; rank];
    diag[0] = 1;
    let mut canonical = vec![BigInt::one(); rank];
    canonical[0] = BigInt::from(-3);
    let p = PicardLattice {
        degree: d,
        gram: IntMatrix::diagonal(&diag),
        canonical,
    };
    debug_assert_eq!(p.dot(&p.canonical, &p.canonical), BigInt::from(d));
    Ok(p)
}

impl PicardLattice {
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn canonical(&self) -> &[BigInt] {
        &self.canonical
    }

    pub fn labels(&self) -> Vec<String> {
        std::iter::once("H".to_string())
            .chain((1..self.rank()).map(|i| format!("E{}", i)))
            .collect()
    }

    /// Intersection pairing `x . y`.
    pub fn dot(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let gy = self.gram.apply(y).expect("vector length matches rank");
        dot(x, &gy)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.rank()];
        v[i] = BigInt::one();
        v
    }

    /// `H - E_1 - E_2 - E_3` followed by `E_i - E_{i+1}`.
    pub fn simple_roots(&self) -> Vec<Vec<BigInt>> {
        let n = self.rank();
        let mut out = Vec::with_capacity(n - 1);
        let mut q = vec![BigInt::zero(); n];
        q[0] = BigInt::one();
        for x in &mut q[1..4] {
            *x = BigInt::from(-1);
        }
        out.push(q);
        for i in 1..n - 1 {
            let mut v = vec![BigInt::zero(); n];
            v[i] = BigInt::one();
            v[i + 1] = BigInt::from(-1);
            out.push(v);
        }
        out
    }

    pub fn is_root(&self, alpha: &[BigInt]) -> bool {
        alpha.len() == self.rank()
            && self.dot(alpha, alpha) == BigInt::from(-2)
            && self.dot(alpha, &self.canonical).is_zero()
    }
}

/// `Q = K^perp` inside a Picard lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QLattice {
    /// Rows are a basis of `Q` in the coordinates of the parent.
    pub basis: IntMatrix,
    /// Induced Gram matrix on that basis.
    pub gram: IntMatrix,
}

impl QLattice {
    pub fn rank(&self) -> usize {
        self.basis.rows()
    }
}

/// Saturated orthogonal complement of `K`.
pub fn q_sublattice(p: &PicardLattice) -> QLattice {
    let k_dual = p.gram.apply(&p.canonical).expect("square gram");
    let basis = kernel_basis(&IntMatrix::row_vector(&k_dual));
    let gram = basis
        .mul(&p.gram)
        .and_then(|m| m.mul(&basis.transpose()))
        .expect("compatible shapes");
    QLattice { basis, gram }
}

/// All roots (`a.a = -2`, `a.K = 0`) as the orbit of the simple roots under
/// the simple reflections, sorted lexicographically.
pub fn roots(p: &PicardLattice) -> Vec<Vec<BigInt>> {
    let simple = p.simple_roots();
    let mut seen: BTreeSet<Vec<BigInt>> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Vec<BigInt>> = simple.iter().cloned().collect();
    while let Some(r) = queue.pop_front() {
        for s in &simple {
            let image = reflect(p, s, &r);
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    seen.into_iter().collect()
}

/// `x + (x . a) a`
pub fn reflect(p: &PicardLattice, alpha: &[BigInt], x: &[BigInt]) -> Vec<BigInt> {
    let c = p.dot(x, alpha);
    x.iter().zip(alpha).map(|(xi, ai)| xi + &c * ai).collect()
}

/// Matrix of the reflection in the root `alpha`: an involutive isometry
/// fixing `K`.
pub fn reflection(p: &PicardLattice, alpha: &[BigInt]) -> Result<IntMatrix> {
    if !p.is_root(alpha) {
        return Err(Error::NotARoot);
    }
    let n = p.rank();
    let g_alpha = p.gram.apply(alpha)?;
    let mut m = IntMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] += &alpha[i] * &g_alpha[j];
        }
    }
    Ok(m)
}
