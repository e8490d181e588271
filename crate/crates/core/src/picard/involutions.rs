use num_bigint::BigInt;

use super::lattice::{del_pezzo_pic, PicardLattice};
use crate::cohomology::{GLattice, GroupSpec};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// `x -> c (x.K) K - x`, the isometry fixing `K` and acting as `-1` on `K^perp`
/// when `c = 2 / K^2`.
fn minus_on_q(p: &PicardLattice, c: i64) -> IntMatrix {
    let n = p.rank();
    let k = p.canonical();
    let k_dual = p.gram().apply(k).expect("square gram");
    let c = BigInt::from(c);
    let mut m = IntMatrix::identity(n).neg();
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] += &c * &k[i] * &k_dual[j];
        }
    }
    m
}

fn involution_lattice(p: &PicardLattice, delta: IntMatrix) -> Result<GLattice> {
    GLattice::new(
        p.rank(),
        GroupSpec::Cyclic { generator: delta },
        Some(p.gram().clone()),
    )
}

/// The Geiser involution on `Pic` of the degree-2 del Pezzo surface:
/// `x -> (x.K) K - x`.
pub fn geiser_involution() -> Result<(PicardLattice, GLattice)> {
    let p = del_pezzo_pic(2)?;
    let delta = minus_on_q(&p, 1);
    Ok((p.clone(), involution_lattice(&p, delta)?))
}

/// The Bertini involution on `Pic` of the degree-1 del Pezzo surface:
/// `x -> 2 (x.K) K - x`.
pub fn bertini_involution() -> Result<(PicardLattice, GLattice)> {
    let p = del_pezzo_pic(1)?;
    let delta = minus_on_q(&p, 2);
    Ok((p.clone(), involution_lattice(&p, delta)?))
}

/// Picard lattice of a relatively minimal conic bundle with `2g + 2`
/// degenerate fibers, together with the de Jonquieres involution of genus `g`.
///
/// Basis order: `F, F'_1, ..., F'_{2g+2}, S` where `F` is the fiber class,
/// `F'_i` one component of the `i`-th degenerate fiber and `S` a section
/// class with `S.F = 1`, `S.F'_i = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicBundlePic {
    genus: u32,
    section_square: i64,
    gram: IntMatrix,
    delta: IntMatrix,
}

/// Standard completion with `S^2 = -1`.
pub fn dejonquieres(genus: i64) -> Result<ConicBundlePic> {
    dejonquieres_with_section(genus, -1)
}

/// Same lattice and involution with the section class normalized to
/// `S^2 = section_square`. `delta(S) = S - sum F'_i + (g + 1) F` is forced by
/// `delta(S)^2 = S^2` and `delta(S).delta(F'_i) = 0` whatever the value.
pub fn dejonquieres_with_section(genus: i64, section_square: i64) -> Result<ConicBundlePic> {
    if genus < 1 {
        return Err(Error::InvalidGenus(genus));
    }
    let g = genus as usize;
    let fibers = 2 * g + 2;
    let n = fibers + 2;
    let s = n - 1;

    let mut gram = IntMatrix::zeros(n, n);
    for i in 1..=fibers {
        gram[(i, i)] = (-1).into();
    }
    gram[(s, s)] = section_square.into();
    gram[(0, s)] = 1.into();
    gram[(s, 0)] = 1.into();

    // columns are images of basis vectors
    let mut delta = IntMatrix::zeros(n, n);
    delta[(0, 0)] = 1.into();
    for i in 1..=fibers {
        delta[(0, i)] = 1.into();
        delta[(i, i)] = (-1).into();
        delta[(i, s)] = (-1).into();
    }
    delta[(s, s)] = 1.into();
    delta[(0, s)] = BigInt::from(genus + 1);

    let cb = ConicBundlePic {
        genus: genus as u32,
        section_square,
        gram,
        delta,
    };
    cb.check()?;
    Ok(cb)
}

impl ConicBundlePic {
    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn delta(&self) -> &IntMatrix {
        &self.delta
    }

    pub fn section_square(&self) -> i64 {
        self.section_square
    }

    /// `K^2 = 8 - (number of degenerate fibers) = 6 - 2g`.
    pub fn k_squared(&self) -> i64 {
        6 - 2 * self.genus as i64
    }

    pub fn labels(&self) -> Vec<String> {
        let fibers = self.rank() - 2;
        std::iter::once("F".to_string())
            .chain((1..=fibers).map(|i| format!("F'{}", i)))
            .chain(std::iter::once("S".to_string()))
            .collect()
    }

    /// Coordinates of the fiber class `F`.
    pub fn fiber(&self) -> Vec<BigInt> {
        let mut f = vec![BigInt::from(0); self.rank()];
        f[0] = 1.into();
        f
    }

    /// Rows `F, F'_1, ..., F'_{2g+2}`: the rank `2g + 3` sublattice spanned by
    /// fiber components, which is `F^perp`.
    pub fn q_basis(&self) -> IntMatrix {
        let n = self.rank();
        IntMatrix::identity(n).select_rows(0..n - 1)
    }

    pub fn to_glattice(&self) -> Result<GLattice> {
        GLattice::new(
            self.rank(),
            GroupSpec::Cyclic {
                generator: self.delta.clone(),
            },
            Some(self.gram.clone()),
        )
    }

    pub fn q_glattice(&self) -> Result<GLattice> {
        self.to_glattice()?.sublattice(&self.q_basis())
    }

    fn check(&self) -> Result<()> {
        let n = self.rank();
        if !self.delta.pow(2)?.is_identity() {
            return Err(Error::Verification("delta^2 != 1".into()));
        }
        if self.delta.transpose().mul(&self.gram)?.mul(&self.delta)? != self.gram {
            return Err(Error::Verification(
                "delta does not preserve the form".into(),
            ));
        }
        let det = self.gram.det()?;
        if det != 1.into() && det != (-1).into() {
            return Err(Error::Verification(format!("gram determinant {}", det)));
        }
        for i in 1..n - 1 {
            let fi = self.delta.column(i);
            let mut expect = vec![BigInt::from(0); n];
            expect[0] = 1.into();
            expect[i] = (-1).into();
            if fi != expect {
                return Err(Error::Verification(format!(
                    "delta(F'{}) != F - F'{}",
                    i, i
                )));
            }
        }
        if self.delta.column(0) != self.fiber() {
            return Err(Error::Verification("delta does not fix F".into()));
        }
        Ok(())
    }
}
