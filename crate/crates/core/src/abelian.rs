//! Finitely generated abelian groups in invariant-factor normal form.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::linalg::{smith::invariant_factors, IntMatrix};

/// `Z/d_1 + ... + Z/d_k + Z^r` with `1 < d_1 | d_2 | ... | d_k`.
///
/// Values are always canonical, so structural equality is group isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    invariant_factors: Vec<BigInt>,
    free_rank: usize,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        FinAbGroup {
            invariant_factors: Vec::new(),
            free_rank: 0,
        }
    }

    /// Canonicalizes an arbitrary list of cyclic orders (zeros count as free
    /// summands, units are dropped).
    pub fn from_orders<T: Into<BigInt> + Clone>(orders: &[T], free_rank: usize) -> Self {
        let mut torsion = Vec::new();
        let mut free = free_rank;
        for o in orders {
            let o: BigInt = o.clone().into();
            if o.is_zero() {
                free += 1;
            } else {
                torsion.push(o.abs());
            }
        }
        let diag = IntMatrix::diagonal(&torsion);
        let invariant_factors = invariant_factors(&diag)
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        FinAbGroup {
            invariant_factors,
            free_rank: free,
        }
    }

    /// From the nonzero Smith diagonal of a relation matrix, already in chain
    /// order.
    pub(crate) fn from_chain(factors: Vec<BigInt>, free_rank: usize) -> Self {
        debug_assert!(factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
        FinAbGroup {
            invariant_factors: factors.into_iter().filter(|d| !d.is_one()).collect(),
            free_rank,
        }
    }

    /// `(Z/p)^k`
    pub fn elementary(p: u64, k: usize) -> Self {
        FinAbGroup {
            invariant_factors: if p > 1 {
                vec![BigInt::from(p); k]
            } else {
                Vec::new()
            },
            free_rank: 0,
        }
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion part.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion_order())
    }

    /// Exponent of the torsion part (the largest invariant factor, or 1).
    pub fn exponent(&self) -> BigInt {
        self.invariant_factors
            .last()
            .cloned()
            .unwrap_or_else(BigInt::one)
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let mut all = self.invariant_factors.clone();
        all.extend_from_slice(&other.invariant_factors);
        FinAbGroup::from_orders(&all, self.free_rank + other.free_rank)
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.invariant_factors.len() {
            let d = &self.invariant_factors[i];
            let run = self.invariant_factors[i..]
                .iter()
                .take_while(|x| *x == d)
                .count();
            if run == 1 {
                parts.push(format!("Z/{}", d));
            } else {
                parts.push(format!("(Z/{})^{}", d, run));
            }
            i += run;
        }
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{}", r)),
        }
        write!(f, "{}", parts.join(" + "))
    }
}
