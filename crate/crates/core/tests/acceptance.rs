//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! with the pinned tolerances spelled out in code.
//!
//! Criterion 4 (table replication) runs against the bundled tables verbatim
//! and is expected to surface the three defective cells of the second
//! published table; see the assertion message there.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use salem_core::algebraic::AlgebraicReal;
use salem_core::dataset::bundled_tables;
use salem_core::graphspec::check_spectral_bounds;
use salem_core::homology::{self, transvection, SymplecticAction};
use salem_core::intpoly::{salem_family_poly, IntPoly};
use salem_core::numfmt::parse_decimal;
use salem_core::powerpoly::power_min_poly;
use salem_core::rootloc::unit_circle_location;
use salem_core::verify::{
    verify_cover_degrees, verify_limit, verify_tables, verify_theorem_a, verify_theorem_b, Verdict,
};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Criterion 1: irreducibility certificates for every genus in [2, 25], each
/// showing one root outside, |constant| = 1, and an empty cyclotomic scan.
#[test]
fn criterion_1_irreducibility_through_genus_25() {
    let rep = verify_theorem_b(25).expect("theorem-b pipeline");
    let ok = rep.verdict == Verdict::Pass;
    // The witnesses must actually show the certificate shape.
    let mut certs = 0;
    for (k, v) in &rep.witnesses {
        if k.ends_with("_certificate") {
            assert!(v.contains("outside=1"), "{k}: {v}");
            assert!(v.contains("|constant|=1"), "{k}: {v}");
            assert!(v.contains("cyclotomic=[]"), "{k}: {v}");
            certs += 1;
        }
    }
    assert_eq!(certs, 24);
    println!("criterion 1: {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "theorem-b certificates failed: {:?}", rep.witnesses);
}

/// Criterion 2: for every (g, k) in [2,10] x [3,6] the Thurston, tree, and
/// homology paths produce the identical family polynomial (exact equality),
/// the polynomial classifies Salem, and the geometric and homological
/// stretch factors are the same algebraic number.
#[test]
fn criterion_2_three_path_agreement() {
    let mut all = true;
    for g in 2..=10u32 {
        for k in 3..=6u32 {
            let rep = verify_theorem_a(g, k).expect("theorem-a pipeline");
            if rep.verdict != Verdict::Pass {
                all = false;
                eprintln!("  (g={g}, k={k}) {:?}", rep.witnesses);
            }
        }
    }
    println!("criterion 2: {}", if all { "PASS" } else { "FAIL" });
    assert!(all, "three-path agreement failed somewhere in [2,10]x[3,6]");
}

/// Criterion 3: the exact sign certificate puts lambda(f_10,4) inside
/// (3 - 1e-3, 3), and lambda(f_g,4) is strictly increasing for g in [2,10]
/// by pairwise exact comparisons.
#[test]
fn criterion_3_limit_and_monotonicity() {
    let rep = verify_limit(4, &parse_decimal("1e-3").unwrap(), 10).expect("limit pipeline");
    let mut ok = rep.verdict == Verdict::Pass;

    let mut previous: Option<AlgebraicReal> = None;
    for g in 2..=10u32 {
        let p = salem_family_poly(g, 4).unwrap();
        let lambda = AlgebraicReal::largest_root(&p).unwrap();
        if let Some(prev) = &previous {
            if prev.cmp(&lambda) != Ordering::Less {
                ok = false;
                eprintln!("  lambda(f_{g}) is not above its predecessor");
            }
        }
        previous = Some(lambda);
    }
    println!("criterion 3: {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok);
}

/// Criterion 4: table replication over the verbatim dataset at the pinned
/// tolerance 5e-4.
///
/// This criterion is red by publication errata, not by implementation
/// defect: the second table's deg-4 stretch cell (1.722) does not belong to
/// its printed polynomial (largest root 2.08102), the deg-8 cell truncates
/// 1.80979 to 1.809 (off by 7.9e-4), and the deg-12 "minimal polynomial" is
/// divisible by the cyclotomic x^2 + 1. The verifier isolates exactly those
/// three cells; every other row of all four tables passes. The companion
/// unit test `tables_pass_when_inconsistent_row_is_corrected` shows the
/// pipeline passes once the defective cells are repaired.
#[test]
fn criterion_4_table_replication() {
    let rep = verify_tables(&bundled_tables()).expect("tables pipeline");
    let failures: Vec<&str> = rep
        .witnesses
        .iter()
        .filter(|(_, v)| v == "FAILED")
        .map(|(k, _)| k.as_str())
        .collect();
    let ok = rep.verdict == Verdict::Pass;
    println!(
        "criterion 4: {}{}",
        if ok { "PASS" } else { "FAIL" },
        if ok {
            String::new()
        } else {
            format!(" (defective published cells: {failures:?})")
        }
    );
    assert!(
        ok,
        "table replication fails on the published errata cells {failures:?}: \
         the deg-4 stretch value 1.722 belongs to a different polynomial \
         (largest root 2.08102), the deg-8 value 1.809 truncates 1.80979, \
         and the deg-12 polynomial is divisible by x^2+1"
    );
}

/// Criterion 5: powered Salem polynomials keep degree 2h and the
/// irreducibility certificate for k in [1,6], staying Salem for h >= 2.
#[test]
fn criterion_5_cover_degree_realization() {
    let mut all = true;
    for g in [4u32, 5, 8, 10] {
        let rep = verify_cover_degrees(g, 6).expect("covers pipeline");
        if rep.verdict != Verdict::Pass {
            all = false;
            eprintln!("  g={g}: {:?}", rep.witnesses);
        }
    }
    println!("criterion 5: {}", if all { "PASS" } else { "FAIL" });
    assert!(all);
}

/// Criterion 6: exact spectral bounds k+1 < mu^2 < k^2/(k-1) and mu
/// irrational for all (n, k) in [1,30] x [3,10].
///
/// Red by a boundary slip in the published bound, not by implementation
/// defect: for n = 1 the tree T(1, k*1) is the star on k+2 vertices, whose
/// spectral radius is sqrt(k+1) *exactly*, so the strict lower bound
/// degenerates to equality for the entire n = 1 column (and mu is even an
/// integer at k = 3 and k = 8). Every pair with n >= 2 passes the strict
/// bounds. The published statement's "n >= 1" should read "n >= 2".
#[test]
fn criterion_6_spectral_bounds() {
    let mut failing: Vec<(usize, usize)> = Vec::new();
    for n in 1..=30usize {
        for k in 3..=10usize {
            let rep = check_spectral_bounds(n, k).expect("bounds pipeline");
            if !(rep.holds && rep.mu_not_integer) {
                failing.push((n, k));
                // The failure shape must be the exact star degeneracy:
                // equality at the lower bound, mu = sqrt(k+1).
                assert_eq!(n, 1, "unexpected failure beyond the star column: {rep:?}");
                assert!(!rep.holds);
                let square = {
                    let s = ((k + 1) as f64).sqrt().round() as usize;
                    s * s == k + 1
                };
                assert_eq!(rep.mu_not_integer, !square, "T(1, {k}*1): {rep:?}");
            }
        }
    }
    let expected: Vec<(usize, usize)> = (3..=10).map(|k| (1, k)).collect();
    println!(
        "criterion 6: {}{}",
        if failing.is_empty() { "PASS" } else { "FAIL" },
        if failing.is_empty() {
            String::new()
        } else {
            format!(" (strict bound degenerates to equality on the n=1 stars: {failing:?})")
        }
    );
    assert_eq!(failing, expected, "failures must be exactly the n=1 column");
    assert!(
        failing.is_empty(),
        "k+1 < mu^2 is an equality for T(1, k*1) = K_(1,k+1): the published \
         bound needs n >= 2; all 232 pairs with n >= 2 verify strictly"
    );
}

// ---------------------------------------------------------------------------
// Criterion 7: property suites with fixed seeds (no nondeterminism).
// ---------------------------------------------------------------------------

#[test]
fn criterion_7a_symplectic_invariance() {
    let mut rng = StdRng::seed_from_u64(0x5a1e_0001);
    for trial in 0..500 {
        let g = rng.gen_range(2..=6usize);
        let len = rng.gen_range(1..=50usize);
        let mut action = SymplecticAction::identity(g);
        for _ in 0..len {
            let class: Vec<BigInt> = (0..2 * g)
                .map(|_| BigInt::from(rng.gen_range(-2i64..=2)))
                .collect();
            let sign = if rng.gen_bool(0.5) { 1i8 } else { -1 };
            let t = transvection(&class, sign, g).unwrap();
            action = t.compose_after(&action);
        }
        assert!(action.is_symplectic(), "trial {trial} (g={g}, len={len})");
        // det M = 1: the constant charpoly coefficient is +1 in even size.
        let cp = homology::char_poly(&action);
        assert_eq!(cp.constant_term(), BigInt::one(), "trial {trial}");
    }
    println!("criterion 7a: PASS (500 symplectic words)");
}

#[test]
fn criterion_7b_reciprocal_and_palindromic_identities() {
    let mut rng = StdRng::seed_from_u64(0x5a1e_0002);
    let mut checked = 0;
    while checked < 500 {
        let deg = rng.gen_range(1..=12usize);
        let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-9i64..=9)).collect();
        let p = IntPoly::from_i64(&coeffs);
        if p.is_zero() {
            continue;
        }
        checked += 1;
        if !p.constant_term().is_zero() {
            let twice = p.reciprocal().unwrap().reciprocal().unwrap();
            assert_eq!(twice, p, "reciprocal involution on {p}");
        }
        let palindromic = p.is_palindromic().unwrap();
        assert_eq!(
            palindromic,
            p.reciprocal().unwrap() == p,
            "palindromic iff self-reciprocal on {p}"
        );
    }
    println!("criterion 7b: PASS (500 reciprocal identities)");
}

/// Double-precision Durand-Kerner root finder, used only as an oracle.
fn durand_kerner(coeffs: &[f64]) -> Vec<(f64, f64)> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |re: f64, im: f64| -> (f64, f64) {
        let mut r = 0.0f64;
        let mut i = 0.0f64;
        for c in monic.iter().rev() {
            let nr = r * re - i * im + c;
            let ni = r * im + i * re;
            r = nr;
            i = ni;
        }
        (r, i)
    };
    let mut roots: Vec<(f64, f64)> = (0..n)
        .map(|k| {
            let theta = 0.7 + 2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
            (1.3 * theta.cos(), 1.3 * theta.sin())
        })
        .collect();
    for _ in 0..400 {
        let mut delta: f64 = 0.0;
        for k in 0..n {
            let (pr, pi) = eval(roots[k].0, roots[k].1);
            let mut dr = 1.0f64;
            let mut di = 0.0f64;
            for j in 0..n {
                if j == k {
                    continue;
                }
                let ar = roots[k].0 - roots[j].0;
                let ai = roots[k].1 - roots[j].1;
                let nr = dr * ar - di * ai;
                let ni = dr * ai + di * ar;
                dr = nr;
                di = ni;
            }
            let denom = dr * dr + di * di;
            if denom == 0.0 {
                continue;
            }
            let qr = (pr * dr + pi * di) / denom;
            let qi = (pi * dr - pr * di) / denom;
            roots[k].0 -= qr;
            roots[k].1 -= qi;
            delta = delta.max(qr.hypot(qi));
        }
        if delta < 1e-13 {
            break;
        }
    }
    roots
}

#[test]
fn criterion_7c_unit_circle_agrees_with_float_oracle() {
    let mut rng = StdRng::seed_from_u64(0x5a1e_0003);
    let mut accepted = 0;
    let mut attempts = 0;
    while accepted < 200 {
        attempts += 1;
        assert!(attempts < 20_000, "oracle sampling starved");
        let deg = rng.gen_range(2..=10usize);
        let mut coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-9i64..=9)).collect();
        if coeffs[deg] == 0 {
            coeffs[deg] = 1;
        }
        if coeffs[0] == 0 {
            coeffs[0] = 1;
        }
        let p = IntPoly::from_i64(&coeffs);
        // Square-free inputs keep the float multiplicity bookkeeping easy.
        if p.square_free_part().unwrap() != p.primitive() {
            continue;
        }
        let floats: Vec<f64> = coeffs.iter().map(|&c| c as f64).collect();
        let roots = durand_kerner(&floats);
        // Residual sanity and circle separation; the pinned oracle tolerance
        // is 1e-6, so skip anything within 1e-4 of the circle.
        if roots
            .iter()
            .any(|(re, im)| ((re * re + im * im).sqrt() - 1.0).abs() < 1e-4)
        {
            continue;
        }
        accepted += 1;
        let mut inside = 0;
        let mut outside = 0;
        for (re, im) in &roots {
            if (re * re + im * im).sqrt() < 1.0 {
                inside += 1;
            } else {
                outside += 1;
            }
        }
        let loc = unit_circle_location(&p).unwrap();
        assert_eq!(
            (loc.inside, loc.on, loc.outside),
            (inside, 0, outside),
            "disagreement on {p}"
        );
    }
    println!("criterion 7c: PASS (200 circle-separated polynomials)");
}

#[test]
fn criterion_7d_power_composition_law() {
    let mut rng = StdRng::seed_from_u64(0x5a1e_0004);
    let mut checked = 0;
    while checked < 100 {
        let deg = rng.gen_range(1..=6usize);
        let mut coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-5i64..=5)).collect();
        coeffs[deg] = 1;
        let p = IntPoly::from_i64(&coeffs);
        let a = rng.gen_range(1..=4u32);
        let b = rng.gen_range(1..=3u32);
        let lhs = power_min_poly(&p, a * b).unwrap();
        let rhs = power_min_poly(&power_min_poly(&p, a).unwrap(), b).unwrap();
        assert_eq!(lhs, rhs, "composition law on {p} with a={a}, b={b}");
        checked += 1;
    }
    println!("criterion 7d: PASS (100 power compositions)");
}

/// Companion to criterion 2: the *stripped* stretch polynomial of T_A T_B
/// is the stripped family polynomial, across the whole rectangle (the two
/// differ from the raw polynomial exactly when k = 3 and g = 1 mod 3, where
/// a cyclotomic factor hides inside the family).
#[test]
fn stripped_defining_polynomials_match_family() {
    use salem_core::cyclotomic::strip_cyclotomic_factors;
    use salem_core::thurston::{standard_system, stretch_ta_tb};
    for g in 2..=10u32 {
        for k in 3..=6u32 {
            let sys = standard_system(g, k).unwrap();
            let stretch = stretch_ta_tb(&sys).unwrap();
            let family = salem_family_poly(g, k).unwrap();
            let (stripped, _) =
                strip_cyclotomic_factors(&family.square_free_part().unwrap()).unwrap();
            assert_eq!(
                stretch.defining(),
                &stripped,
                "stripped defining mismatch at g={g} k={k}"
            );
        }
    }
}

/// The five-decimal widths promised by the enclosure contract hold.
#[test]
fn enclosure_width_contract() {
    // A complex-dominant polynomial: (x-1)(x^2+4).
    let p = IntPoly::from_i64(&[-1, 1]).mul(&IntPoly::from_i64(&[4, 0, 1]));
    let width = rat(1, 1_000_000_000);
    match salem_core::modulus::max_root_modulus(&p, &width).unwrap() {
        salem_core::modulus::MaxModulus::Enclosure { lo, hi } => {
            assert!(&hi - &lo < width);
            assert!(lo < rat(2, 1) && rat(2, 1) <= hi);
        }
        other => panic!("expected enclosure, got {other:?}"),
    }
}
