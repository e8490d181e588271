//! Seeded random search for Weyl group elements of prime order with no fixed
//! vectors in `K^perp`.
//!
//! Trials are independent: trial `t` draws from a ChaCha stream keyed by
//! `(seed, t)`, so sequential and parallel runs agree on the first hit.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::lattice::{del_pezzo_pic, q_sublattice, roots, PicardLattice};
use crate::cohomology::{GLattice, GroupSpec};
use crate::error::{Error, Result};
use crate::linalg::{char_poly, IntMatrix, IntPoly};

pub const DEFAULT_SEED: u64 = 36;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylSearchConfig {
    pub seed: u64,
    pub max_trials: u64,
    /// Inclusive range of reflection word lengths.
    pub min_len: usize,
    pub max_len: usize,
    /// Farm trials out to the rayon pool; the reported hit is still the one
    /// with the lowest trial index.
    pub parallel: bool,
}

impl Default for WeylSearchConfig {
    fn default() -> Self {
        WeylSearchConfig {
            seed: DEFAULT_SEED,
            max_trials: 1_000_000,
            min_len: 2,
            max_len: 16,
            parallel: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchHit {
    pub picard: PicardLattice,
    pub lattice: GLattice,
    /// Index of the successful trial.
    pub trial: u64,
    /// Number of reflections in the word that produced the element.
    pub word_length: usize,
}

impl SearchHit {
    pub fn matrix(&self) -> &IntMatrix {
        &self.lattice.group().matrices()[0]
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..p)
            .take_while(|q| q * q <= p)
            .all(|q| !p.is_multiple_of(q))
}

/// Searches `W(E_{9-d})` for an element `w` of order `p` whose characteristic
/// polynomial on `K^perp` is `(t^{p-1} + ... + 1)^s` with `s = (9-d)/(p-1)`.
pub fn weyl_search(d: i64, p: u64, cfg: &WeylSearchConfig) -> Result<SearchHit> {
    let pic = del_pezzo_pic(d)?;
    if !is_prime(p) {
        return Err(Error::InvalidSearch(format!("{} is not prime", p)));
    }
    let q_rank = (9 - d) as u64;
    if !q_rank.is_multiple_of(p - 1) {
        return Err(Error::InvalidSearch(format!(
            "p - 1 = {} does not divide 9 - d = {}",
            p - 1,
            q_rank
        )));
    }
    let s = q_rank / (p - 1);
    if cfg.max_trials < 1 {
        return Err(Error::InvalidSearch("max_trials must be at least 1".into()));
    }
    if cfg.min_len < 1 || cfg.min_len > cfg.max_len {
        return Err(Error::InvalidSearch(format!(
            "bad word length range {}..={}",
            cfg.min_len, cfg.max_len
        )));
    }

    let space = SearchSpace::new(&pic, p as usize, s as i64);
    let trial = |t: u64| space.run_trial(cfg, t);

    const CHUNK: u64 = 4096;
    let mut start = 0;
    let found = loop {
        if start >= cfg.max_trials {
            break None;
        }
        let end = (start + CHUNK).min(cfg.max_trials);
        let hit = if cfg.parallel {
            (start..end)
                .into_par_iter()
                .filter_map(|t| trial(t).map(|w| (t, w)))
                .find_first(|_| true)
        } else {
            (start..end).find_map(|t| trial(t).map(|w| (t, w)))
        };
        if hit.is_some() {
            break hit;
        }
        start = end;
    };
    let Some((t, (w, len))) = found else {
        return Err(Error::SearchExhausted {
            trials: cfg.max_trials,
        });
    };

    let matrix = IntMatrix::from_rows(
        space.n,
        &w.chunks(space.n).map(|r| r.to_vec()).collect::<Vec<_>>(),
    )?;
    let lattice = GLattice::new(
        pic.rank(),
        GroupSpec::Cyclic { generator: matrix },
        Some(pic.gram().clone()),
    )?;
    verify_hit(&pic, &lattice, p as usize, s as u32)?;
    Ok(SearchHit {
        picard: pic,
        lattice,
        trial: t,
        word_length: len,
    })
}

/// Exact re-check of a candidate with arbitrary-precision arithmetic.
fn verify_hit(pic: &PicardLattice, m: &GLattice, p: usize, s: u32) -> Result<()> {
    let w = &m.group().matrices()[0];
    if m.order() != p {
        return Err(Error::Verification(format!("order {} != {}", m.order(), p)));
    }
    if w.apply(pic.canonical())? != pic.canonical() {
        return Err(Error::Verification("K is not fixed".into()));
    }
    let q = m.sublattice(&q_sublattice(pic).basis)?;
    let chi = char_poly(&q.group().matrices()[0])?;
    if chi != IntPoly::cyclotomic_prime(p).pow(s) {
        return Err(Error::Verification(format!(
            "characteristic polynomial on Q is {}",
            chi
        )));
    }
    Ok(())
}

/// Fixed-width working data. The Weyl group is finite, so entries of its
/// elements stay small.
struct SearchSpace {
    n: usize,
    p: usize,
    /// trace on Pic of a hit: 1 on K plus -s from the cyclotomic blocks
    trace: i64,
    roots: Vec<Vec<i64>>,
    duals: Vec<Vec<i64>>,
    q_basis: Vec<Vec<i64>>,
}

impl SearchSpace {
    fn new(pic: &PicardLattice, p: usize, s: i64) -> Self {
        let to_i64 = |v: &[BigInt]| -> Vec<i64> {
            v.iter().map(|x| x.to_i64().expect("small root")).collect()
        };
        let rs: Vec<Vec<BigInt>> = roots(pic)
            .into_iter()
            .filter(|r| {
                r.iter()
                    .find(|x| x != &&BigInt::from(0))
                    .is_some_and(|x| x > &BigInt::from(0))
            })
            .collect();
        let duals = rs
            .iter()
            .map(|r| to_i64(&pic.gram().apply(r).expect("square gram")))
            .collect();
        let q = q_sublattice(pic);
        SearchSpace {
            n: pic.rank(),
            p,
            trace: 1 - s,
            roots: rs.iter().map(|r| to_i64(r)).collect(),
            duals,
            q_basis: (0..q.basis.rows())
                .map(|i| to_i64(q.basis.row(i)))
                .collect(),
        }
    }

    fn run_trial(&self, cfg: &WeylSearchConfig, trial: u64) -> Option<(Vec<i64>, usize)> {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(trial);
        let n = self.n;
        let len = rng.gen_range(cfg.min_len..=cfg.max_len);
        let mut w = vec![0i64; n * n];
        for i in 0..n {
            w[i * n + i] = 1;
        }
        let mut u = vec![0i64; n];
        for _ in 0..len {
            let k = rng.gen_range(0..self.roots.len());
            let (alpha, dual) = (&self.roots[k], &self.duals[k]);
            // w <- w * s_alpha = w + (w alpha) (G alpha)^T
            for i in 0..n {
                u[i] = (0..n).map(|j| w[i * n + j] * alpha[j]).sum();
            }
            for i in 0..n {
                if u[i] != 0 {
                    for j in 0..n {
                        w[i * n + j] += u[i] * dual[j];
                    }
                }
            }
        }
        let trace: i64 = (0..n).map(|i| w[i * n + i]).sum();
        if trace != self.trace {
            return None;
        }
        // norm = 1 + w + ... + w^{p-1}; then check w^p = 1, w != 1
        let mut power = identity(n);
        let mut norm = identity(n);
        for _ in 1..self.p {
            power = mul(&power, &w, n);
            add_assign(&mut norm, &power);
        }
        power = mul(&power, &w, n);
        if power != identity(n) || w == identity(n) {
            return None;
        }
        // no fixed vectors in Q: the norm map kills Q
        let kills_q = self
            .q_basis
            .iter()
            .all(|b| (0..n).all(|i| (0..n).map(|j| norm[i * n + j] * b[j]).sum::<i64>() == 0));
        kills_q.then_some((w, len))
    }
}

fn identity(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    out[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    out
}

fn add_assign(a: &mut [i64], b: &[i64]) {
    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
}
