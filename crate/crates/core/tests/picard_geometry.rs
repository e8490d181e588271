mod common;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use latcoh::cohomology::{h1, invariants_h0, GLattice};
use latcoh::picard::{
    bertini_involution, charpoly_order, dejonquieres, dejonquieres_with_section, del_pezzo_pic,
    geiser_involution, q_sublattice, verify_row, weyl_search, PicardLattice, TableCase,
    WeylSearchConfig,
};
use latcoh::IntMatrix;

fn dot(gram: &IntMatrix, x: &[BigInt], y: &[BigInt]) -> BigInt {
    let gy = gram.apply(y).unwrap();
    x.iter().zip(&gy).map(|(a, b)| a * b).sum()
}

/// Preserves the form, is unimodular, fixes K, and has order exactly `p`.
fn assert_geometric(pic: &PicardLattice, g: &IntMatrix, p: u64) {
    assert_eq!(
        &g.transpose().mul(pic.gram()).unwrap().mul(g).unwrap(),
        pic.gram()
    );
    assert_eq!(common::det_big(g).abs(), BigInt::from(1));
    assert_eq!(g.apply(pic.canonical()).unwrap(), pic.canonical());
    assert!(!g.is_identity());
    assert!(g.pow(p).unwrap().is_identity());
}

#[test]
fn root_systems_by_two_methods() {
    for (d, n) in [(1, 240), (2, 126), (3, 72), (4, 40), (5, 20), (6, 8)] {
        common::check_roots(d, n).unwrap();
    }
}

#[test]
fn geiser_and_bertini_are_minus_one_on_q() {
    for (d, (pic, m)) in [
        (2, geiser_involution().unwrap()),
        (1, bertini_involution().unwrap()),
    ] {
        assert_eq!(pic.degree(), d);
        let g = &m.generators()[0];
        assert_geometric(&pic, g, 2);
        let q = q_sublattice(&pic);
        for i in 0..q.rank() {
            let v = q.basis.row(i).to_vec();
            let minus: Vec<BigInt> = v.iter().map(|x| -x).collect();
            assert_eq!(g.apply(&v).unwrap(), minus);
        }
    }
}

#[test]
fn geiser_and_bertini_cohomology() {
    let (pic, m) = geiser_involution().unwrap();
    let r = h1(&m, &common::cfg()).unwrap();
    assert_eq!(r.h1, common::elementary(2, 6));
    assert_eq!(r.h0_rank, 1);
    assert_eq!(charpoly_order(&m, &pic).unwrap(), BigInt::from(64));

    let (pic, m) = bertini_involution().unwrap();
    let r = h1(&m, &common::cfg()).unwrap();
    assert_eq!(r.h1, common::elementary(2, 8));
    assert_eq!(charpoly_order(&m, &pic).unwrap(), BigInt::from(256));
}

#[test]
fn searched_elements_are_geometric_and_deterministic() {
    for (d, p, k) in [(3, 3, 2), (1, 3, 4), (1, 5, 2)] {
        let cfg = WeylSearchConfig::default();
        let hit = weyl_search(d, p, &cfg).unwrap();
        assert_geometric(&hit.picard, hit.matrix(), p);
        assert_eq!(hit.lattice.order() as u64, p);
        let again = weyl_search(d, p, &cfg).unwrap();
        assert_eq!(hit.matrix(), again.matrix());
        assert_eq!(hit.trial, again.trial);
        let r = h1(&hit.lattice, &common::cfg()).unwrap();
        assert_eq!(r.h1, common::elementary(p, k), "d = {} p = {}", d, p);
    }
}

#[test]
fn other_seeds_give_the_same_cohomology() {
    for seed in [1u64, 2, 3] {
        let cfg = WeylSearchConfig {
            seed,
            ..Default::default()
        };
        let hit = weyl_search(3, 3, &cfg).unwrap();
        assert_eq!(
            h1(&hit.lattice, &common::cfg()).unwrap().h1,
            common::elementary(3, 2)
        );
    }
}

#[test]
fn corollary_exponent_count() {
    // (9 - d)/(p - 1) - j, with j = 1 exactly when p = d
    for case in [
        TableCase::Geiser,
        TableCase::Bertini,
        TableCase::Dp3P3,
        TableCase::Dp1P3,
        TableCase::Dp1P5,
    ] {
        let (p, d) = (case.prime() as i64, case.k_squared());
        let j = i64::from(p == d);
        let expected = (9 - d) / (p - 1) - j;
        let row = verify_row(case).unwrap();
        assert_eq!(
            row.h1.invariant_factors().len() as i64,
            expected,
            "{}",
            case
        );
        assert!(row
            .h1
            .invariant_factors()
            .iter()
            .all(|x| x == &BigInt::from(p)));
    }
}

#[test]
fn exact_sequence_order_relation() {
    for case in [
        TableCase::Geiser,
        TableCase::Bertini,
        TableCase::Dp3P3,
        TableCase::Dp1P3,
        TableCase::Dp1P5,
    ] {
        let row = verify_row(case).unwrap();
        let d = BigInt::from(case.k_squared());
        assert_eq!(
            common::abs_order(&row.h1_q),
            d * common::abs_order(&row.h1),
            "{}",
            case
        );
        assert!(row.passed(), "{:?}", row.checks);
    }
}

fn conic_bundle_facts(m: &GLattice, gram: &IntMatrix, fiber: &[BigInt]) -> (usize, BigInt) {
    let fixed = invariants_h0(m);
    let image = (0..fixed.rows()).fold(BigInt::zero(), |g, i| {
        num_integer::Integer::gcd(&g, &dot(gram, fixed.row(i), fiber))
    });
    (fixed.rows(), image)
}

#[test]
fn conic_bundles_up_to_genus_ten() {
    for g in 1..=10u32 {
        let cb = dejonquieres(g as i64).unwrap();
        assert_eq!(cb.rank(), 2 * g as usize + 4);
        assert_eq!(cb.k_squared(), 6 - 2 * g as i64);
        let m = cb.to_glattice().unwrap();
        let r = h1(&m, &common::cfg()).unwrap();
        assert_eq!(r.h1, common::elementary(2, 2 * g as usize), "g = {}", g);
        let q = h1(&cb.q_glattice().unwrap(), &common::cfg()).unwrap();
        assert_eq!(q.h1, common::elementary(2, 2 * g as usize + 1), "g = {}", g);
        let (rank, image) = conic_bundle_facts(&m, cb.gram(), &cb.fiber());
        assert_eq!(rank, 2);
        // {x.F : x in Pic^G} = 2Z, whatever the sign of K.F
        assert_eq!(image, BigInt::from(2));
        let alt = dejonquieres_with_section(g as i64, -2).unwrap();
        assert_eq!(
            h1(&alt.to_glattice().unwrap(), &common::cfg()).unwrap().h1,
            r.h1
        );
    }
}

#[test]
fn conic_bundle_fiber_is_isotropic_and_fixed() {
    let cb = dejonquieres(3).unwrap();
    let f = cb.fiber();
    assert!(dot(cb.gram(), &f, &f).is_zero());
    assert_eq!(cb.delta().apply(&f).unwrap(), f);
    assert_eq!(common::det_big(cb.gram()).abs(), BigInt::from(1));
}

#[test]
fn del_pezzo_lattices_are_unimodular() {
    for d in 1..=6 {
        let pic = del_pezzo_pic(d).unwrap();
        assert_eq!(common::det_big(pic.gram()).abs(), BigInt::from(1));
        let k = pic.canonical();
        assert_eq!(dot(pic.gram(), k, k), BigInt::from(d));
    }
}
