use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Row-style Hermite normal form.
///
/// Returns `(H, U)` with `U * A = H`, `U` unimodular. `H` is upper echelon,
/// pivots are positive and the entries above each pivot lie in `[0, pivot)`.
/// The nonzero rows of `H` form a basis of the row lattice of `A`.
pub fn hermite_form(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    hermite_in_place(&mut h, Some(&mut u));
    (h, u)
}

/// Hermite normal form without the transform.
pub fn hermite_rows(a: &IntMatrix) -> IntMatrix {
    let mut h = a.clone();
    hermite_in_place(&mut h, None);
    h
}

/// Number of nonzero rows of a matrix already in echelon form.
pub fn echelon_rank(h: &IntMatrix) -> usize {
    (0..h.rows())
        .take_while(|&i| h.row(i).iter().any(|x| !x.is_zero()))
        .count()
}

/// Column index of the pivot of each nonzero row of an echelon matrix.
pub fn pivot_columns(h: &IntMatrix) -> Vec<usize> {
    (0..echelon_rank(h))
        .map(|i| {
            h.row(i)
                .iter()
                .position(|x| !x.is_zero())
                .expect("nonzero echelon row")
        })
        .collect()
}

fn hermite_in_place(h: &mut IntMatrix, mut u: Option<&mut IntMatrix>) {
    let (m, n) = (h.rows(), h.cols());
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        // Euclid on column c among rows r.., always pivoting on the smallest entry
        loop {
            let best = (r..m)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&i, &j| h[(i, c)].abs().cmp(&h[(j, c)].abs()));
            let Some(p) = best else { break };
            h.swap_rows(r, p);
            if let Some(u) = u.as_deref_mut() {
                u.swap_rows(r, p);
            }
            let mut done = true;
            for i in r + 1..m {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                let k = -q;
                h.add_row_multiple(i, r, &k);
                if let Some(u) = u.as_deref_mut() {
                    u.add_row_multiple(i, r, &k);
                }
                if !h[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            if let Some(u) = u.as_deref_mut() {
                u.negate_row(r);
            }
        }
        let pivot = h[(r, c)].clone();
        for i in 0..r {
            let q = h[(i, c)].div_floor(&pivot);
            if !q.is_zero() {
                let k: BigInt = -q;
                h.add_row_multiple(i, r, &k);
                if let Some(u) = u.as_deref_mut() {
                    u.add_row_multiple(i, r, &k);
                }
            }
        }
        r += 1;
    }
}
