//! Property-level invariants across the polynomial and spectral kernels.

use num_bigint::BigInt;
use proptest::prelude::*;

use salem_core::cyclotomic::{cyclotomic, strip_cyclotomic_factors};
use salem_core::graphspec::{realize_starlike, tree_salem_poly, StarlikeTree};
use salem_core::intpoly::{salem_family_poly, IntPoly};
use salem_core::rootloc::{
    classify_number, prove_irreducible_one_big_root, unit_circle_location, IrreducibilityVerdict,
    NumberClass,
};

fn nonzero_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-9i64..=9, 1..=12)
        .prop_map(|v| IntPoly::from_i64(&v))
        .prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reciprocal_is_involutive(p in nonzero_poly()) {
        if p.constant_term() != BigInt::from(0) {
            let twice = p.reciprocal().unwrap().reciprocal().unwrap();
            prop_assert_eq!(twice, p);
        }
    }

    #[test]
    fn palindromic_iff_fixed_by_reciprocal(p in nonzero_poly()) {
        let is_pal = p.is_palindromic().unwrap();
        let fixed = p.reciprocal().unwrap() == p;
        prop_assert_eq!(is_pal, fixed);
    }

    #[test]
    fn location_counts_sum_to_degree(p in nonzero_poly()) {
        if p.constant_term() != BigInt::from(0) && p.degree() > 0 {
            let loc = unit_circle_location(&p).unwrap();
            prop_assert_eq!(loc.total(), p.degree());
        }
    }

    #[test]
    fn gcd_divides_both(a in nonzero_poly(), b in nonzero_poly()) {
        let g = a.gcd(&b);
        prop_assert!(g.divides(&a.primitive()) || a.is_zero());
        prop_assert!(g.divides(&b.primitive()) || b.is_zero());
    }

    #[test]
    fn masked_cyclotomic_blocks_certificate(
        v in prop::collection::vec(-4i64..=4, 1..=5),
        m in 1u64..=12,
    ) {
        // q monic with nonzero constant term, times Phi_m: never Proven.
        let mut coeffs = v;
        if coeffs[0] == 0 {
            coeffs[0] = 1;
        }
        coeffs.push(1);
        let q = IntPoly::from_i64(&coeffs);
        let masked = q.mul(&cyclotomic(m).unwrap());
        let cert = prove_irreducible_one_big_root(&masked).unwrap();
        prop_assert_eq!(cert.verdict, IrreducibilityVerdict::Inconclusive);
    }
}

#[test]
fn family_classifies_salem_over_the_full_rectangle() {
    for g in 2..=15u32 {
        for k in 3..=8u32 {
            let p = salem_family_poly(g, k).unwrap();
            let cls = classify_number(&p).unwrap();
            assert_eq!(cls.class, NumberClass::Salem, "g={g} k={k}");
            assert_eq!(cls.location.outside, 1);
            assert_eq!(cls.location.inside, 1);
            assert_eq!(cls.location.on, 2 * g as usize - 2);
        }
    }
}

#[test]
fn tree_salem_outputs_are_palindromic_monic_cyclotomic_free() {
    for arms in [
        vec![2usize, 1, 1, 1],
        vec![4, 1, 1, 1],
        vec![6, 1, 1, 1, 1],
        vec![3, 2, 1],
        vec![2, 2, 2],
    ] {
        let t = StarlikeTree::new(arms.clone()).unwrap();
        let g = realize_starlike(&t);
        if salem_core::graphspec::classify_coxeter(&g).unwrap()
            != salem_core::graphspec::CoxeterClass::NonCriticalDominant
        {
            continue;
        }
        let s = tree_salem_poly(&t).unwrap();
        assert!(s.is_monic(), "{arms:?}");
        assert!(s.is_palindromic().unwrap(), "{arms:?}");
        let (stripped, removed) = strip_cyclotomic_factors(&s).unwrap();
        assert_eq!(stripped, s, "{arms:?}");
        assert!(removed.is_empty(), "{arms:?}");
    }
}

#[test]
fn symplectic_charpolys_are_reciprocal_up_to_sign() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use salem_core::homology::{char_poly, transvection, SymplecticAction};

    let mut rng = StdRng::seed_from_u64(0x5a1e_0005);
    for _ in 0..50 {
        let g = rng.gen_range(2..=5usize);
        let mut action = SymplecticAction::identity(g);
        for _ in 0..rng.gen_range(1..=20usize) {
            let class: Vec<BigInt> = (0..2 * g)
                .map(|_| BigInt::from(rng.gen_range(-2i64..=2)))
                .collect();
            let t = transvection(&class, if rng.gen_bool(0.5) { 1 } else { -1 }, g).unwrap();
            action = t.compose_after(&action);
        }
        let cp = char_poly(&action);
        let rev = cp.reciprocal().unwrap();
        assert!(rev == cp || rev == cp.neg(), "{cp}");
    }
}

/// Products of building blocks with known root locations must locate to the
/// sum of their parts. This drives the gcd-split path hard: cyclotomic
/// factors (all roots on the circle), reciprocal pairs straddling it, and
/// off-circle quadratics, multiplied together in random combinations.
#[test]
fn locations_add_over_products() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    // (factor, (inside, on, outside))
    let blocks: Vec<(IntPoly, (usize, usize, usize))> = vec![
        (IntPoly::from_i64(&[1, -3, 1]), (1, 0, 1)),   // golden-type pair
        (IntPoly::from_i64(&[1, -1, 1]), (0, 2, 0)),   // Phi_6
        (IntPoly::from_i64(&[-1, 1]), (0, 1, 0)),      // x - 1
        (IntPoly::from_i64(&[1, 1]), (0, 1, 0)),       // x + 1
        (IntPoly::from_i64(&[-1, -1, -3, 1]), (2, 0, 1)), // Pisot cubic
        (IntPoly::from_i64(&[1, 0, 2]), (2, 0, 0)),    // 2x^2 + 1: inside pair
        (IntPoly::from_i64(&[2, 0, 1]), (0, 0, 2)),    // x^2 + 2: outside pair
        (IntPoly::from_i64(&[-3, 1]), (0, 0, 1)),      // x - 3
        (IntPoly::from_i64(&[3, 7]), (1, 0, 0)),       // 7x + 3
        (IntPoly::from_i64(&[1, -1, -1, -1, 1]), (1, 2, 1)), // Salem quartic
    ];
    let mut rng = StdRng::seed_from_u64(0x5a1e_0006);
    for _ in 0..150 {
        let mut product = IntPoly::one();
        let (mut inside, mut on, mut outside) = (0usize, 0usize, 0usize);
        for _ in 0..rng.gen_range(1..=4usize) {
            let (f, (i, o, u)) = &blocks[rng.gen_range(0..blocks.len())];
            product = product.mul(f);
            inside += i;
            on += o;
            outside += u;
        }
        let loc = unit_circle_location(&product).unwrap();
        assert_eq!(
            (loc.inside, loc.on, loc.outside),
            (inside, on, outside),
            "location mismatch on {product}"
        );
    }
}

#[test]
fn theorem_b_witnesses_are_monotone_prefixes() {
    use salem_core::verify::verify_theorem_b;
    let small = verify_theorem_b(4).unwrap();
    let large = verify_theorem_b(6).unwrap();
    for (k, v) in &small.witnesses {
        assert!(
            large.witnesses.iter().any(|(lk, lv)| lk == k && lv == v),
            "witness {k} changed between g_max runs"
        );
    }
}
