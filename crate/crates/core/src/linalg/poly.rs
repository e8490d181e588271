use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Dense univariate integer polynomial; `coeffs[i]` is the coefficient of `t^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `t - c`
    pub fn linear(c: i64) -> Self {
        Self::from_i64(&[-c, 1])
    }

    /// `t^(p-1) + ... + t + 1`, the cyclotomic polynomial of a prime `p`.
    pub fn cyclotomic_prime(p: usize) -> Self {
        Self::new(vec![BigInt::one(); p])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPoly::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        (0..e).fold(IntPoly::one(), |acc, _| acc.mul(self))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            let a = c.abs();
            if !a.is_one() || i == 0 {
                write!(f, "{}", a)?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{}", i)?,
            }
            first = false;
        }
        Ok(())
    }
}

/// `det(tI - A)` by Berkowitz's division-free algorithm.
pub fn char_poly(a: &IntMatrix) -> Result<IntPoly> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    // highest degree first while building
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for k in 1..=n {
        let m = k - 1;
        let diag = &a[(m, m)];
        let row: Vec<BigInt> = (0..m).map(|j| a[(m, j)].clone()).collect();
        let mut v: Vec<BigInt> = (0..m).map(|i| a[(i, m)].clone()).collect();

        let mut col = Vec::with_capacity(k + 1);
        col.push(BigInt::one());
        col.push(-diag);
        for step in 0..m {
            if step > 0 {
                // v <- A_m * v on the leading m x m block
                v = (0..m)
                    .map(|i| (0..m).map(|j| &a[(i, j)] * &v[j]).sum())
                    .collect();
            }
            let rv: BigInt = row.iter().zip(&v).map(|(x, y)| x * y).sum();
            col.push(-rv);
        }

        let mut next = vec![BigInt::zero(); k + 1];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate().take(i.min(k - 1) + 1) {
                *slot += &col[i - j] * pj;
            }
        }
        p = next;
    }
    p.reverse();
    Ok(IntPoly::new(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_gives_square_of_linear() {
        let p = char_poly(&IntMatrix::identity(2)).unwrap();
        assert_eq!(p, IntPoly::linear(1).pow(2));
    }

    #[test]
    fn companion_of_phi3() {
        let p = char_poly(&IntMatrix::from_i64(&[&[0, -1], &[1, -1]])).unwrap();
        assert_eq!(p, IntPoly::from_i64(&[1, 1, 1]));
        assert_eq!(p.to_string(), "t^2 + t + 1");
    }

    #[test]
    fn negated_identity_rank7() {
        let m = IntMatrix::identity(7).neg();
        assert_eq!(char_poly(&m).unwrap(), IntPoly::linear(-1).pow(7));
    }

    #[test]
    fn general_3x3() {
        // det(tI - A) for A = [[2,1,0],[1,3,1],[0,1,4]]: t^3 - 9t^2 + 24t - 18
        let a = IntMatrix::from_i64(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(char_poly(&a).unwrap(), IntPoly::from_i64(&[-18, 24, -9, 1]));
    }

    #[test]
    fn rejects_non_square() {
        assert!(char_poly(&IntMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn empty_matrix_is_one() {
        assert_eq!(char_poly(&IntMatrix::zeros(0, 0)).unwrap(), IntPoly::one());
    }
}
