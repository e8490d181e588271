use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `U * A * V = D` with `U`, `V` unimodular and `D` in Smith normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Nonzero diagonal entries of `D`, smallest first; each divides the next.
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

/// Smith normal form with transforms, pivoting on the smallest nonzero entry
/// of the remaining submatrix.
pub fn smith_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_entry(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let k = -d[(i, t)].div_floor(&d[(t, t)]);
                d.add_row_multiple(i, t, &k);
                u.add_row_multiple(i, t, &k);
                if !d[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let k = -d[(t, j)].div_floor(&d[(t, t)]);
                d.add_col_multiple(j, t, &k);
                v.add_col_multiple(j, t, &k);
                if !d[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                // pivot must divide the whole remaining block
                let bad = (t + 1..m)
                    .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !d[(i, j)].is_multiple_of(&d[(t, t)]));
                match bad {
                    None => break,
                    Some((i, _)) => {
                        let one = BigInt::from(1);
                        d.add_row_multiple(t, i, &one);
                        u.add_row_multiple(t, i, &one);
                    }
                }
            }
            // move the smallest nonzero entry of row t / column t to the pivot
            let (pi, pj) = min_in_cross(&d, t);
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    let invariant_factors = (0..m.min(n))
        .map(|i| d[(i, i)].clone())
        .filter(|x| !x.is_zero())
        .collect();
    SmithForm {
        u,
        d,
        v,
        invariant_factors,
    }
}

/// Invariant factors only (transforms are still computed; matrices here are small).
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    smith_form(a).invariant_factors
}

fn min_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_in_cross(d: &IntMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut best_abs = d[(t, t)].abs();
    for i in t + 1..d.rows() {
        let x = d[(i, t)].abs();
        if !x.is_zero() && (best_abs.is_zero() || x < best_abs) {
            best = (i, t);
            best_abs = x;
        }
    }
    for j in t + 1..d.cols() {
        let x = d[(t, j)].abs();
        if !x.is_zero() && (best_abs.is_zero() || x < best_abs) {
            best = (t, j);
            best_abs = x;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(a: &[&[i64]]) -> Vec<i64> {
        use num_traits::ToPrimitive;
        invariant_factors(&IntMatrix::from_i64(a))
            .iter()
            .map(|x| x.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn chain_form_kept() {
        assert_eq!(factors(&[&[2, 0], &[0, 4]]), vec![2, 4]);
    }

    #[test]
    fn coprime_diagonal() {
        // d1 = gcd = 1, d1 d2 = |det| = 6
        assert_eq!(factors(&[&[2, 0], &[0, 3]]), vec![1, 6]);
    }

    #[test]
    fn single_row() {
        assert_eq!(factors(&[&[1, 1]]), vec![1]);
    }

    #[test]
    fn transforms_hold() {
        let a = IntMatrix::from_i64(&[&[4, 6, 0], &[2, -2, 8], &[0, 10, 14]]);
        let s = smith_form(&a);
        assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.d);
        assert!(s.u.is_unimodular() && s.v.is_unimodular());
    }

    #[test]
    fn empty_matrices() {
        assert!(invariant_factors(&IntMatrix::zeros(0, 3)).is_empty());
        assert!(invariant_factors(&IntMatrix::zeros(2, 0)).is_empty());
        assert!(invariant_factors(&IntMatrix::zeros(2, 2)).is_empty());
    }
}
