use num_integer::Integer;
use num_traits::Zero;

use super::hermite::{echelon_rank, hermite_form, hermite_rows, pivot_columns};
use super::smith::smith_form;
use super::IntMatrix;
use crate::abelian::FinAbGroup;
use crate::error::{Error, Result};

/// Canonical (HNF-reduced) basis, as rows, of the saturated lattice
/// `{x : A * x^T = 0}`.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let (h, u) = hermite_form(&a.transpose());
    let r = echelon_rank(&h);
    let kernel = u.select_rows(r..u.rows());
    let canon = hermite_rows(&kernel);
    let k = echelon_rank(&canon);
    canon.select_rows(0..k)
}

/// Rank of the row lattice.
pub fn rank(a: &IntMatrix) -> usize {
    echelon_rank(&hermite_rows(a))
}

/// HNF basis (nonzero rows only) of the row lattice of `a`.
pub fn row_basis(a: &IntMatrix) -> IntMatrix {
    let h = hermite_rows(a);
    let r = echelon_rank(&h);
    h.select_rows(0..r)
}

/// Coordinates of each row of `targets` in terms of the rows of `basis`.
///
/// `basis` must have linearly independent rows. Returns `X` with
/// `X * basis = targets`; a target outside the row lattice yields
/// [`Error::NotSublattice`] naming its row index.
pub fn coordinates(basis: &IntMatrix, targets: &IntMatrix) -> Result<IntMatrix> {
    if basis.cols() != targets.cols() {
        return Err(Error::Dimension(format!(
            "basis has {} columns, targets have {}",
            basis.cols(),
            targets.cols()
        )));
    }
    let (h, u) = hermite_form(basis);
    let r = echelon_rank(&h);
    if r != basis.rows() {
        return Err(Error::Dimension("basis rows are linearly dependent".into()));
    }
    let pivots = pivot_columns(&h);
    let u_top = u.select_rows(0..r);

    let mut y = IntMatrix::zeros(targets.rows(), r);
    for t in 0..targets.rows() {
        let mut residual = targets.row(t).to_vec();
        for (i, &pc) in pivots.iter().enumerate() {
            if residual[pc].is_zero() {
                continue;
            }
            let (q, rem) = residual[pc].div_rem(&h[(i, pc)]);
            if !rem.is_zero() {
                return Err(Error::NotSublattice { index: t });
            }
            for (x, hv) in residual.iter_mut().zip(h.row(i)) {
                if !hv.is_zero() {
                    *x -= &q * hv;
                }
            }
            y[(t, i)] = q;
        }
        if residual.iter().any(|x| !x.is_zero()) {
            return Err(Error::NotSublattice { index: t });
        }
    }
    y.mul(&u_top)
}

/// Isomorphism type of `span(A) / span(B)`.
///
/// Every row of `b_gens` must lie in the row lattice of `a_basis`. Rows of
/// `a_basis` need not be independent.
pub fn subquotient(a_basis: &IntMatrix, b_gens: &IntMatrix) -> Result<FinAbGroup> {
    let basis = row_basis(a_basis);
    let x = coordinates(&basis, b_gens)?;
    let snf = smith_form(&x);
    let free = basis.rows() - snf.rank();
    Ok(FinAbGroup::from_chain(snf.invariant_factors, free))
}
