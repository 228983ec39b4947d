//! Cyclotomic polynomials, exhaustive cyclotomic-factor detection, and the
//! stripping step used to expose Salem factors.
//!
//! Detection is exact trial division: for a polynomial of degree `d`, every
//! candidate index `m <= 2 d^2` with `phi(m) <= d` is tested. The bound is
//! justified by `phi(m) >= sqrt(m/2)`, so any cyclotomic factor of degree
//! `<= d` has index within range.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::intpoly::IntPoly;

/// Euler's totient via trial-division factorization.
pub fn totient(m: u64) -> u64 {
    assert!(m >= 1);
    let mut n = m;
    let mut phi = m;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            phi -= phi / p;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

fn divisors(m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            if d != m / d {
                out.push(m / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// The `m`-th cyclotomic polynomial, by dividing `x^m - 1` by the cyclotomic
/// polynomials of all proper divisors of `m`.
pub fn cyclotomic(m: u64) -> Result<IntPoly> {
    if m < 1 {
        return Err(Error::OutOfRange("cyclotomic index must be >= 1".into()));
    }
    let mut cache: BTreeMap<u64, IntPoly> = BTreeMap::new();
    cyclotomic_cached(m, &mut cache)
}

fn cyclotomic_cached(m: u64, cache: &mut BTreeMap<u64, IntPoly>) -> Result<IntPoly> {
    if let Some(p) = cache.get(&m) {
        return Ok(p.clone());
    }
    let p = if m == 1 {
        IntPoly::from_i64(&[-1, 1])
    } else {
        let mut q = IntPoly::x_pow_minus_one(m as usize);
        for d in divisors(m) {
            if d == m {
                continue;
            }
            let phi_d = cyclotomic_cached(d, cache)?;
            q = q.divexact(&phi_d)?;
        }
        q
    };
    cache.insert(m, p.clone());
    Ok(p)
}

/// All `m` with `Phi_m | p`, exhaustive over `phi(m) <= deg p`
/// (candidates enumerated up to `2 (deg p)^2`).
pub fn cyclotomic_factors(p: &IntPoly) -> Result<Vec<u64>> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial".into()));
    }
    let d = p.degree() as u64;
    if d == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut cache: BTreeMap<u64, IntPoly> = BTreeMap::new();
    for m in 1..=(2 * d * d) {
        if totient(m) > d {
            continue;
        }
        let phi = cyclotomic_cached(m, &mut cache)?;
        if phi.divides(p) {
            out.push(m);
        }
    }
    Ok(out)
}

/// Divides out every cyclotomic factor with multiplicity. Returns the
/// stripped polynomial and the list of `(m, multiplicity)` removed.
pub fn strip_cyclotomic_factors(p: &IntPoly) -> Result<(IntPoly, Vec<(u64, usize)>)> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial".into()));
    }
    let mut q = p.clone();
    let mut removed = Vec::new();
    loop {
        let ms = cyclotomic_factors(&q)?;
        if ms.is_empty() {
            return Ok((q, removed));
        }
        for m in ms {
            let phi = cyclotomic(m)?;
            let mut mult = 0usize;
            while phi.divides(&q) {
                q = q.divexact(&phi)?;
                mult += 1;
            }
            if mult > 0 {
                removed.push((m, mult));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> IntPoly {
        IntPoly::from_i64(v)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1).unwrap(), p(&[-1, 1]));
        assert_eq!(cyclotomic(2).unwrap(), p(&[1, 1]));
        assert_eq!(cyclotomic(3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(cyclotomic(4).unwrap(), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6).unwrap(), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12).unwrap(), p(&[1, 0, -1, 0, 1]));
        assert!(cyclotomic(0).is_err());
    }

    #[test]
    fn totient_values() {
        let expect = [
            (1u64, 1u64),
            (2, 1),
            (3, 2),
            (4, 2),
            (6, 2),
            (12, 4),
            (30, 8),
            (97, 96),
            (210, 48),
        ];
        for (m, t) in expect {
            assert_eq!(totient(m), t, "phi({m})");
        }
    }

    #[test]
    fn degree_matches_totient() {
        for m in 1..=60u64 {
            assert_eq!(cyclotomic(m).unwrap().degree() as u64, totient(m));
        }
    }

    #[test]
    fn product_over_divisors_is_x_pow_minus_one() {
        for m in [1u64, 2, 6, 12, 15, 24, 30] {
            let mut prod = IntPoly::one();
            for d in divisors(m) {
                prod = prod.mul(&cyclotomic(d).unwrap());
            }
            assert_eq!(prod, IntPoly::x_pow_minus_one(m as usize));
            assert!(cyclotomic(m).unwrap().divides(&prod));
        }
    }

    #[test]
    fn family_quartic_has_no_cyclotomic_factor() {
        assert_eq!(
            cyclotomic_factors(&p(&[1, -2, -2, -2, 1])).unwrap(),
            Vec::<u64>::new()
        );
    }

    #[test]
    fn detects_own_index() {
        assert_eq!(cyclotomic_factors(&p(&[1, -1, 1])).unwrap(), vec![6]);
    }

    #[test]
    fn detects_linear_factor() {
        // (x - 1)(x^2 - 3x + 1) = x^3 - 4x^2 + 4x - 1
        let q = p(&[-1, 1]).mul(&p(&[1, -3, 1]));
        assert_eq!(q, p(&[-1, 4, -4, 1]));
        assert_eq!(cyclotomic_factors(&q).unwrap(), vec![1]);
    }

    #[test]
    fn stripping_removes_multiplicity() {
        let q = cyclotomic(6)
            .unwrap()
            .mul(&cyclotomic(6).unwrap())
            .mul(&p(&[1, -3, 1]));
        let (stripped, removed) = strip_cyclotomic_factors(&q).unwrap();
        assert_eq!(stripped, p(&[1, -3, 1]));
        assert_eq!(removed, vec![(6, 2)]);
    }

    #[test]
    fn family_k3_picks_up_phi6_when_g_is_one_mod_three() {
        // p_{4,3} is divisible by Phi_6; the k = 3 column of the family is
        // not always irreducible.
        let q = crate::intpoly::salem_family_poly(4, 3).unwrap();
        let ms = cyclotomic_factors(&q).unwrap();
        assert!(ms.contains(&6), "expected Phi_6 | p_(4,3), got {ms:?}");
    }
}
