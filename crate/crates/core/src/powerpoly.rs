//! Power polynomials: the monic integer polynomial whose roots are the k-th
//! powers of the roots of a given monic polynomial.
//!
//! Computed through power sums and Newton's identities, entirely over the
//! integers. An independent resultant route lives in the test suite and must
//! agree coefficient for coefficient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intpoly::IntPoly;

/// Power sums `s_1 .. s_upto` of the roots of a monic integer polynomial,
/// via the Newton recurrences. All values are exact integers.
pub fn power_sums(p: &IntPoly, upto: usize) -> Result<Vec<BigInt>> {
    if p.is_zero() || !p.is_monic() {
        return Err(Error::DegenerateInput(
            "power sums need a monic polynomial".into(),
        ));
    }
    let n = p.degree();
    // e_j = (-1)^j * coeff(n - j), elementary symmetric functions.
    let e: Vec<BigInt> = (0..=n)
        .map(|j| {
            let c = p.coeff(n - j);
            if j % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    let mut s: Vec<BigInt> = Vec::with_capacity(upto + 1);
    s.push(BigInt::from(n as i64)); // s_0
    for j in 1..=upto {
        // s_j = e_1 s_{j-1} - e_2 s_{j-2} + ... + (-1)^j-1 (e_{j-1} s_1 - j e_j)
        let mut acc = BigInt::zero();
        let top = j.min(n);
        for i in 1..=top {
            let term = if i < j {
                &e[i] * &s[j - i]
            } else {
                &e[i] * BigInt::from(j as i64)
            };
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        s.push(acc);
    }
    s.remove(0);
    Ok(s)
}

/// The monic integer polynomial of the same degree whose roots are the k-th
/// powers (with multiplicity) of the roots of `p`.
///
/// ```
/// use salem_core::intpoly::IntPoly;
/// use salem_core::powerpoly::power_min_poly;
///
/// // Roots l, 1/l with l + 1/l = 3 square to roots with sum 7.
/// let p = IntPoly::from_i64(&[1, -3, 1]);
/// assert_eq!(power_min_poly(&p, 2).unwrap(), IntPoly::from_i64(&[1, -7, 1]));
/// ```
pub fn power_min_poly(p: &IntPoly, k: u32) -> Result<IntPoly> {
    if k < 1 {
        return Err(Error::OutOfRange("power exponent must be >= 1".into()));
    }
    if p.is_zero() || !p.is_monic() {
        return Err(Error::DegenerateInput(
            "power polynomial needs a monic polynomial".into(),
        ));
    }
    let n = p.degree();
    if n == 0 {
        return Ok(IntPoly::one());
    }
    if k == 1 {
        return Ok(p.clone());
    }
    let s = power_sums(p, n * k as usize)?;
    // The power sums of the k-th powers are s_{k j}; rebuild elementary
    // symmetric functions by inverting Newton's identities. Each division
    // by j is exact because the e'_j are symmetric functions of algebraic
    // integers with integer coordinates.
    let big_s: Vec<BigInt> = (1..=n).map(|j| s[k as usize * j - 1].clone()).collect();
    let mut e = vec![BigInt::one()];
    for j in 1..=n {
        let mut acc = BigInt::zero();
        for i in 1..=j {
            let term = &e[j - i] * &big_s[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (q, r) = acc.div_rem(&BigInt::from(j as i64));
        debug_assert!(r.is_zero(), "Newton inversion must divide exactly");
        if !r.is_zero() {
            return Err(Error::Inconclusive(
                "non-integral symmetric function in power polynomial".into(),
            ));
        }
        e.push(q);
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (j, ej) in e.iter().enumerate() {
        coeffs[n - j] = if j % 2 == 0 { ej.clone() } else { -ej };
    }
    Ok(IntPoly::new(coeffs))
}
