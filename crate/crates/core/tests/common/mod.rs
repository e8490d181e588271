//! Random instance generators and independent checks shared by the property
//! tests and the acceptance runner. The oracles use fraction-free elimination,
//! minors and direct enumeration, never the library's own algorithms.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use latcoh::cohomology::{
    direct_sum, h1_cocycle, h1_cyclic, CohomologyConfig, GLattice, GroupSpec,
};
use latcoh::linalg::{hermite_form, kernel_basis, smith_form, subquotient};
use latcoh::picard::{del_pezzo_pic, roots};
use latcoh::{FinAbGroup, IntMatrix};

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

// ---------------------------------------------------------------- oracles

pub fn to_i128(m: &IntMatrix) -> Vec<Vec<i128>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| x.to_i128().expect("small entry"))
                .collect()
        })
        .collect()
}

/// Fraction-free elimination on `i128`; exact for the sizes used here.
pub fn det_i128(a: &[Vec<i128>]) -> i128 {
    let n = a.len();
    let mut m = a.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| m[i][k] != 0) else {
            return 0;
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * m[n - 1][n - 1]
    }
}

pub fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// gcd of all `k x k` minors.
pub fn determinantal_divisor(a: &[Vec<i128>], k: usize) -> i128 {
    let (m, n) = (a.len(), a.first().map_or(0, Vec::len));
    let mut g = 0;
    for rows in combinations(m, k) {
        for cols in combinations(n, k) {
            let sub: Vec<Vec<i128>> = rows
                .iter()
                .map(|&i| cols.iter().map(|&j| a[i][j]).collect())
                .collect();
            g = gcd_i128(g, det_i128(&sub));
            if g == 1 {
                return 1;
            }
        }
    }
    g
}

fn rank_i128(a: &[Vec<i128>]) -> usize {
    let n = a.first().map_or(0, Vec::len);
    (1..=a.len().min(n))
        .rev()
        .find(|&k| determinantal_divisor(a, k) != 0)
        .unwrap_or(0)
}

/// Fraction-free elimination on big integers, for transforms whose entries
/// outgrow `i128`.
pub fn det_big(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    let mut a = m.to_rows();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        sign
    } else {
        sign * &a[n - 1][n - 1]
    }
}

fn is_unimodular(m: &IntMatrix) -> bool {
    m.is_square() && det_big(m).abs().is_one()
}

// ------------------------------------------------------------ generators

pub fn random_matrix(rng: &mut ChaCha8Rng, max_dim: usize, bound: i64) -> IntMatrix {
    let r = rng.gen_range(0..=max_dim);
    let c = rng.gen_range(0..=max_dim);
    matrix_with_shape(rng, r, c, bound)
}

pub fn matrix_with_shape(rng: &mut ChaCha8Rng, r: usize, c: usize, bound: i64) -> IntMatrix {
    // a fair share of sparse and rank-deficient inputs
    let density: f64 = rng.gen_range(0.3..=1.0);
    let rows: Vec<Vec<i64>> = (0..r)
        .map(|_| {
            (0..c)
                .map(|_| {
                    if rng.gen_bool(density) {
                        rng.gen_range(-bound..=bound)
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(c, &rows).unwrap()
}

/// `(P, P^{-1})` as a product of elementary operations.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> (IntMatrix, IntMatrix) {
    let mut p = IntMatrix::identity(n);
    let mut p_inv = IntMatrix::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            return (p.neg(), p_inv.neg());
        }
        return (p, p_inv);
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let c: i64 = *[-2, -1, 1, 2].choose(rng).unwrap();
        let mut e = IntMatrix::identity(n);
        e[(i, j)] = BigInt::from(c);
        let mut e_inv = IntMatrix::identity(n);
        e_inv[(i, j)] = BigInt::from(-c);
        p = e.mul(&p).unwrap();
        p_inv = p_inv.mul(&e_inv).unwrap();
    }
    if rng.gen_bool(0.5) {
        let i = rng.gen_range(0..n);
        let mut s = IntMatrix::identity(n);
        s[(i, i)] = BigInt::from(-1);
        p = s.mul(&p).unwrap();
        p_inv = p_inv.mul(&s).unwrap();
    }
    (p, p_inv)
}

fn companion(poly_low_to_high: &[i64]) -> Vec<Vec<i64>> {
    // monic, constant term first, leading 1 omitted
    let n = poly_low_to_high.len();
    let mut m = vec![vec![0; n]; n];
    for i in 1..n {
        m[i][i - 1] = 1;
    }
    for i in 0..n {
        m[i][n - 1] = -poly_low_to_high[i];
    }
    m
}

fn cycle(l: usize, sign: i64) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; l]; l];
    for i in 0..l {
        m[(i + 1) % l][i] = sign;
    }
    m
}

/// Indecomposable-ish building blocks `(matrix, order)`.
fn block_catalogue() -> Vec<(Vec<Vec<i64>>, u64)> {
    let mut v = vec![
        (vec![vec![1]], 1),
        (vec![vec![-1]], 2),
        (vec![vec![1, 1], vec![0, -1]], 2),
        (companion(&[1, 1]), 3),
        (companion(&[1, 0]), 4),
        (companion(&[1, -1]), 6),
        (companion(&[1, 1, 1, 1]), 5),
        (companion(&[1, 0, 0, 0]), 8),
    ];
    for l in 2..=8 {
        v.push((cycle(l, 1), l as u64));
        v.push((
            cycle(l, -1),
            if l % 2 == 1 { 2 * l as u64 } else { l as u64 },
        ));
    }
    v
}

fn block_diag(blocks: &[Vec<Vec<i64>>]) -> IntMatrix {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut m = IntMatrix::zeros(n, n);
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m[(off + i, off + j)] = BigInt::from(x);
            }
        }
        off += b.len();
    }
    m
}

/// Generator of a random finite cyclic action of order dividing `n`, rank in
/// `1..=max_rank`, conjugated by a random unimodular matrix.
pub fn random_cyclic_generator(rng: &mut ChaCha8Rng, n: u64, max_rank: usize) -> IntMatrix {
    let fitting: Vec<_> = block_catalogue()
        .into_iter()
        .filter(|(b, o)| n.is_multiple_of(*o) && b.len() <= max_rank)
        .collect();
    let target = rng.gen_range(1..=max_rank);
    let mut blocks = Vec::new();
    let mut rank = 0;
    loop {
        let room: Vec<_> = fitting
            .iter()
            .filter(|(b, _)| rank + b.len() <= target)
            .collect();
        if room.is_empty() {
            break;
        }
        let (b, _) = room.choose(rng).unwrap();
        rank += b.len();
        blocks.push(b.clone());
        if rank == target || rng.gen_bool(0.15) {
            break;
        }
    }
    let g = block_diag(&blocks);
    let (p, p_inv) = random_unimodular(rng, g.rows());
    p.mul(&g).unwrap().mul(&p_inv).unwrap()
}

pub fn cyclic_lattice(g: IntMatrix) -> GLattice {
    GLattice::new(g.rows(), GroupSpec::Cyclic { generator: g }, None).unwrap()
}

/// Random permutation of `0..k` whose order is at most `max_order`.
pub fn random_permutation(rng: &mut ChaCha8Rng, k: usize, max_order: u64) -> Vec<usize> {
    loop {
        let mut perm: Vec<usize> = (0..k).collect();
        perm.shuffle(rng);
        if perm_order(&perm) <= max_order {
            return perm;
        }
    }
}

pub fn perm_order(perm: &[usize]) -> u64 {
    let mut seen = vec![false; perm.len()];
    let mut order = 1u64;
    for s in 0..perm.len() {
        let mut len = 0u64;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 {
            order = order / gcd_i128(order as i128, len as i128) as u64 * len;
        }
    }
    order
}

pub fn perm_matrix(perm: &[usize]) -> IntMatrix {
    let mut m = IntMatrix::zeros(perm.len(), perm.len());
    for (i, &j) in perm.iter().enumerate() {
        m[(j, i)] = BigInt::one();
    }
    m
}

/// Permutation of `0..k` made of cycles whose lengths divide `n`.
pub fn permutation_with_orbits_dividing(rng: &mut ChaCha8Rng, n: u64, k: usize) -> Vec<usize> {
    let lens: Vec<usize> = (1..=n as usize)
        .filter(|l| (n as usize).is_multiple_of(*l))
        .collect();
    let mut perm = Vec::new();
    while perm.len() < k {
        let room: Vec<usize> = lens
            .iter()
            .copied()
            .filter(|&l| perm.len() + l <= k)
            .collect();
        let l = *room.choose(rng).unwrap();
        let start = perm.len();
        perm.extend((0..l).map(|i| start + (i + 1) % l));
    }
    perm
}

// ----------------------------------------------------------- linalg checks

pub fn check_smith(a: &IntMatrix) -> Check {
    let s = smith_form(a);
    let (m, n) = (a.rows(), a.cols());
    ensure!(
        is_unimodular(&s.u) && is_unimodular(&s.v),
        "U or V not unimodular for {}",
        a
    );
    ensure!(
        s.u.mul(a).unwrap().mul(&s.v).unwrap() == s.d,
        "U A V != D for {}",
        a
    );
    for i in 0..m {
        for j in 0..n {
            let expected = if i == j && i < s.invariant_factors.len() {
                s.invariant_factors[i].clone()
            } else {
                BigInt::zero()
            };
            ensure!(
                s.d[(i, j)] == expected,
                "D not diagonal as claimed for {}",
                a
            );
        }
    }
    for w in s.invariant_factors.windows(2) {
        ensure!(
            w[0].is_positive() && (&w[1] % &w[0]).is_zero(),
            "divisibility chain broken: {:?}",
            s.invariant_factors
        );
    }
    let ai = to_i128(a);
    let gcd_all = ai.iter().flatten().fold(0, |g, &x| gcd_i128(g, x));
    match s.invariant_factors.first() {
        Some(d1) => ensure!(
            d1.to_i128() == Some(gcd_all),
            "d1 = {} but gcd = {}",
            d1,
            gcd_all
        ),
        None => ensure!(gcd_all == 0, "zero rank but nonzero matrix {}", a),
    }
    ensure!(s.rank() == rank_i128(&ai), "rank mismatch for {}", a);
    if m == n && m > 0 {
        let det = det_i128(&ai).abs();
        if det != 0 {
            let prod: BigInt = s.invariant_factors.iter().product();
            ensure!(
                prod.to_i128() == Some(det),
                "prod d_i = {} but |det| = {}",
                prod,
                det
            );
        }
    }
    // d1 ... dk = gcd of k x k minors; affordable when one side is small
    if m.min(n) <= 4 {
        let mut prod = 1i128;
        for k in 1..=s.rank() {
            prod *= s.invariant_factors[k - 1].to_i128().unwrap();
            ensure!(
                determinantal_divisor(&ai, k) == prod,
                "determinantal divisor {} mismatch for {}",
                k,
                a
            );
        }
    }
    Ok(())
}

pub fn check_hermite(a: &IntMatrix) -> Check {
    let (h, u) = hermite_form(a);
    ensure!(is_unimodular(&u), "U not unimodular for {}", a);
    ensure!(u.mul(a).unwrap() == h, "U A != H for {}", a);
    let mut last_pivot: Option<usize> = None;
    let mut zero_seen = false;
    for i in 0..h.rows() {
        let pivot = h.row(i).iter().position(|x| !x.is_zero());
        match pivot {
            None => zero_seen = true,
            Some(c) => {
                ensure!(!zero_seen, "nonzero row below a zero row in {}", h);
                ensure!(last_pivot.is_none_or(|p| c > p), "not echelon: {}", h);
                let piv = &h[(i, c)];
                ensure!(piv.is_positive(), "nonpositive pivot in {}", h);
                for r in 0..i {
                    let x = &h[(r, c)];
                    ensure!(
                        !x.is_negative() && x < piv,
                        "entry above pivot not reduced in {}",
                        h
                    );
                }
                last_pivot = Some(c);
            }
        }
    }
    Ok(())
}

/// Kernel rows are orthogonal to `A`, of the right number, and saturated:
/// the gcd of their maximal minors is 1.
pub fn check_kernel(a: &IntMatrix) -> Check {
    let k = kernel_basis(a);
    let n = a.cols();
    ensure!(k.cols() == n, "kernel has wrong width");
    ensure!(
        a.mul(&k.transpose()).unwrap().is_zero(),
        "A K^T != 0 for {}",
        a
    );
    let expected = n - rank_i128(&to_i128(a));
    ensure!(
        k.rows() == expected,
        "kernel rank {} expected {}",
        k.rows(),
        expected
    );
    if k.rows() > 0 {
        let ki = to_i128(&k);
        ensure!(
            determinantal_divisor(&ki, k.rows()) == 1,
            "kernel not saturated for {}: {}",
            a,
            k
        );
        for q in [2, 3, 5, 7] {
            for row in &ki {
                ensure!(row.iter().any(|x| x % q != 0), "row divisible by {}", q);
            }
        }
    }
    Ok(())
}

/// `span(A)/span(B)` is unchanged by a unimodular change of `A`'s basis and
/// by swapping generators of `span(B)`.
pub fn check_subquotient(rng: &mut ChaCha8Rng, n: usize) -> Check {
    let r = rng.gen_range(1..=n);
    let a = matrix_with_shape(rng, r, n, 9);
    let s = rng.gen_range(0..=r + 1);
    let c = matrix_with_shape(rng, s, r, 4);
    let b = c.mul(&a).unwrap();
    let base = subquotient(&a, &b).map_err(|e| e.to_string())?;

    let (p, _) = random_unimodular(rng, r);
    let a2 = p.mul(&a).unwrap();
    let (q, _) = random_unimodular(rng, s);
    let mut b2 = if s > 0 { q.mul(&b).unwrap() } else { b.clone() };
    if s > 0 {
        // redundant generator
        let extra = matrix_with_shape(rng, 1, s, 3).mul(&b).unwrap();
        b2 = b2.vstack(&extra).unwrap();
    }
    let other = subquotient(&a2, &b2).map_err(|e| e.to_string())?;
    ensure!(base == other, "subquotient changed: {} vs {}", base, other);

    // independent count when everything is full rank: |A/B| = |det C|
    let ai = to_i128(&a);
    if s == r && rank_i128(&ai) == r {
        let det = det_i128(&to_i128(&c)).abs();
        if det != 0 {
            ensure!(
                base.order().and_then(|o| o.to_i128()) == Some(det),
                "order {} but |det C| = {}",
                base,
                det
            );
        }
    }
    Ok(())
}

/// `chi(PAP^{-1}) = chi(A)`, and `chi(t) = det(tI - A)` at small integers.
pub fn check_char_poly(rng: &mut ChaCha8Rng, n: usize) -> Check {
    use latcoh::linalg::char_poly;
    let a = matrix_with_shape(rng, n, n, 6);
    let chi = char_poly(&a).map_err(|e| e.to_string())?;
    let (p, p_inv) = random_unimodular(rng, n);
    let conj = p.mul(&a).unwrap().mul(&p_inv).unwrap();
    ensure!(
        char_poly(&conj).unwrap() == chi,
        "conjugation changed chi for {}",
        a
    );
    let ai = to_i128(&a);
    for t in -2i128..=2 {
        let m: Vec<Vec<i128>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { t - ai[i][j] } else { -ai[i][j] })
                    .collect()
            })
            .collect();
        let value = chi.eval(&BigInt::from(t as i64));
        ensure!(
            value.to_i128() == Some(det_i128(&m)),
            "chi({}) = {} != det(tI - A) for {}",
            t,
            value,
            a
        );
    }
    Ok(())
}

// ------------------------------------------------------- cohomology checks

pub fn cfg() -> CohomologyConfig {
    CohomologyConfig {
        cross_check: false,
        ..Default::default()
    }
}

fn annihilated(h1: &FinAbGroup, order: usize) -> Check {
    ensure!(h1.is_finite(), "infinite H^1: {}", h1);
    for d in h1.invariant_factors() {
        ensure!(
            (BigInt::from(order) % d).is_zero(),
            "{} does not divide |G| = {}",
            d,
            order
        );
    }
    Ok(())
}

/// H^1 of a random permutation module vanishes, for cyclic groups and for
/// two-generator groups.
pub fn check_shapiro(rng: &mut ChaCha8Rng) -> Check {
    let k = rng.gen_range(1..=10);
    let m = if rng.gen_bool(0.75) {
        let perm = random_permutation(rng, k, 12);
        let g = perm_matrix(&perm);
        let m = GLattice::new(k, GroupSpec::Cyclic { generator: g }, None).unwrap();
        ensure!(m.order() as u64 == perm_order(&perm), "order mismatch");
        m
    } else {
        let a = perm_matrix(&random_permutation(rng, k, 12));
        let b = perm_matrix(&random_permutation(rng, k, 12));
        match GLattice::new(
            k,
            GroupSpec::Generated {
                generators: vec![a, b],
                closure_bound: 60,
            },
            None,
        ) {
            Ok(m) => m,
            // the generated group is too big for the cocycle system; fall back
            Err(_) => cyclic_lattice(perm_matrix(&random_permutation(rng, k, 12))),
        }
    };
    let r = latcoh::cohomology::h1(&m, &cfg()).map_err(|e| e.to_string())?;
    ensure!(r.h1.is_trivial(), "permutation module with H^1 = {}", r.h1);
    // H^0 of a permutation module is spanned by orbit sums
    Ok(())
}

/// H^1(M + permutation module) = H^1(M).
pub fn check_stability(rng: &mut ChaCha8Rng) -> Check {
    let n = rng.gen_range(1..=6);
    let m = cyclic_lattice(random_cyclic_generator(rng, n, 6));
    let order = m.order() as u64;
    let k = rng.gen_range(1..=6);
    let pi = cyclic_lattice(perm_matrix(&permutation_with_orbits_dividing(
        rng, order, k,
    )));
    let sum = direct_sum(&m, &pi).map_err(|e| e.to_string())?;
    ensure!(sum.order() == m.order(), "sum changed the group");
    let a = latcoh::cohomology::h1(&m, &cfg()).map_err(|e| e.to_string())?;
    let b = latcoh::cohomology::h1(&sum, &cfg()).map_err(|e| e.to_string())?;
    ensure!(a.h1 == b.h1, "H^1(M) = {} but H^1(M + P) = {}", a.h1, b.h1);
    annihilated(&a.h1, m.order())
}

/// Conjugating by a unimodular `P` preserves H^1 and the rank of M^G.
pub fn check_basis_change(rng: &mut ChaCha8Rng) -> Check {
    let n = rng.gen_range(1..=8);
    let g = random_cyclic_generator(rng, n, 8);
    let (p, p_inv) = random_unimodular(rng, g.rows());
    let m = cyclic_lattice(g.clone());
    let conj = cyclic_lattice(p.mul(&g).unwrap().mul(&p_inv).unwrap());
    let a = latcoh::cohomology::h1(&m, &cfg()).map_err(|e| e.to_string())?;
    let b = latcoh::cohomology::h1(&conj, &cfg()).map_err(|e| e.to_string())?;
    ensure!(
        a.h1 == b.h1 && a.h0_rank == b.h0_rank,
        "basis change: {} vs {}",
        a.h1,
        b.h1
    );
    annihilated(&a.h1, m.order())
}

/// The norm-kernel method and the crossed-homomorphism method agree.
pub fn check_methods(rng: &mut ChaCha8Rng) -> Check {
    let n = rng.gen_range(1..=8);
    let m = cyclic_lattice(random_cyclic_generator(rng, n, 8));
    let a = h1_cyclic(&m, &cfg()).map_err(|e| e.to_string())?;
    let b = h1_cocycle(&m, &cfg()).map_err(|e| e.to_string())?;
    ensure!(a.h1 == b.h1, "cyclic {} vs cocycle {}", a.h1, b.h1);
    ensure!(a.h0_rank == b.h0_rank, "h0 rank differs");
    annihilated(&a.h1, m.order())
}

/// H^1(M1 + M2) = H^1(M1) + H^1(M2) over the same cyclic group.
pub fn check_additivity(rng: &mut ChaCha8Rng) -> Check {
    let n = rng.gen_range(2..=6);
    let (m1, m2) = loop {
        let m1 = cyclic_lattice(random_cyclic_generator(rng, n, 4));
        let m2 = cyclic_lattice(random_cyclic_generator(rng, n, 4));
        if m1.order() == m2.order() {
            break (m1, m2);
        }
    };
    let sum = direct_sum(&m1, &m2).map_err(|e| e.to_string())?;
    let h = |m: &GLattice| latcoh::cohomology::h1(m, &cfg()).map(|r| r.h1);
    let (a, b, c) = (h(&m1).unwrap(), h(&m2).unwrap(), h(&sum).unwrap());
    ensure!(c == a.direct_sum(&b), "H^1(sum) = {} but {} + {}", c, a, b);
    Ok(())
}

// ------------------------------------------------------------------ roots

/// Roots of `Z^{1,n}` with `K = (-3, 1, ..., 1)` by direct enumeration:
/// `a^2 - sum b_i^2 = -2`, `-3a - sum b_i = 0`. Cauchy-Schwarz on the second
/// equation gives `(9 - n) a^2 <= 2n`, and then `b_i^2 <= a^2 + 2`.
pub fn roots_by_enumeration(n: usize) -> Vec<Vec<i64>> {
    assert!(n < 9);
    let amax = ((2 * n) as f64 / (9 - n) as f64).sqrt().floor() as i64;
    let mut out = Vec::new();
    for a in -amax..=amax {
        let norm = a * a + 2;
        let bmax = (norm as f64).sqrt().floor() as i64;
        let mut b = vec![0i64; n];
        enumerate(&mut b, 0, norm, -3 * a, bmax, &mut |b| {
            let mut v = vec![a];
            v.extend_from_slice(b);
            out.push(v);
        });
    }
    out.sort();
    out
}

fn enumerate(
    b: &mut Vec<i64>,
    i: usize,
    sq_left: i64,
    sum_left: i64,
    bmax: i64,
    emit: &mut dyn FnMut(&[i64]),
) {
    let rest = (b.len() - i) as i64;
    if rest == 0 {
        if sq_left == 0 && sum_left == 0 {
            emit(b);
        }
        return;
    }
    // remaining coordinates: sum^2 <= rest * squares
    if sum_left * sum_left > rest * sq_left {
        return;
    }
    for x in -bmax..=bmax {
        if x * x <= sq_left {
            b[i] = x;
            enumerate(b, i + 1, sq_left - x * x, sum_left - x, bmax, emit);
        }
    }
    b[i] = 0;
}

pub fn check_roots(d: i64, expected: usize) -> Check {
    let pic = del_pezzo_pic(d).map_err(|e| e.to_string())?;
    let closure: Vec<Vec<i64>> = roots(&pic)
        .iter()
        .map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect())
        .collect();
    let mut closure_sorted = closure.clone();
    closure_sorted.sort();
    let enumerated = roots_by_enumeration(pic.rank() - 1);
    ensure!(
        enumerated.len() == expected,
        "enumeration found {} roots for d = {}",
        enumerated.len(),
        d
    );
    ensure!(
        closure.len() == expected,
        "closure found {} roots for d = {}",
        closure.len(),
        d
    );
    ensure!(
        closure_sorted == enumerated,
        "root sets differ for d = {}",
        d
    );
    Ok(())
}

pub fn elementary(p: u64, k: usize) -> FinAbGroup {
    FinAbGroup::from_orders(&vec![p; k], 0)
}

pub fn abs_order(g: &FinAbGroup) -> BigInt {
    g.order().expect("finite").abs()
}
