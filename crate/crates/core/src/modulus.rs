//! Certified maximum root modulus.
//!
//! The result is an exact algebraic number whenever a real root is certified
//! to attain the maximum; otherwise a rational enclosure of requested width.
//! All certificates come from exact annulus counts (unit-circle location of
//! the radius-scaled polynomial) plus, for exact ties, the parity of the
//! root-pair-product polynomial at r^2.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebraic::AlgebraicReal;
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::linalg::resultant;
use crate::powerpoly::power_min_poly;
use crate::rootloc::{unit_circle_location, RootLocation};
use crate::sturm::sturm_count;

/// Maximum modulus over all complex roots.
#[derive(Clone, Debug)]
pub enum MaxModulus {
    /// The maximum is attained by a real root (possibly tied by a complex
    /// conjugate pair), returned exactly.
    Real(AlgebraicReal),
    /// The maximum is attained by a complex pair or could not be separated
    /// from one; `lo < max <= hi` with `hi - lo` below the requested width.
    Enclosure { lo: BigRational, hi: BigRational },
}

impl MaxModulus {
    /// A certified upper bound within `width` of the true maximum.
    pub fn upper_bound(&self, width: &BigRational) -> BigRational {
        match self {
            MaxModulus::Real(r) => {
                let mut r = r.clone();
                r.refine_to_width(width);
                r.interval().1
            }
            MaxModulus::Enclosure { hi, .. } => hi.clone(),
        }
    }

    pub fn approx_f64(&self) -> f64 {
        match self {
            MaxModulus::Real(r) => r.to_f64(),
            MaxModulus::Enclosure { lo, hi } => {
                let m = (lo + hi) / BigRational::from(BigInt::from(2));
                crate::numfmt::rational_to_f64(&m)
            }
        }
    }

    /// Compares the maximum against a rational threshold; `None` when the
    /// enclosure straddles it.
    pub fn cmp_rational(&self, t: &BigRational) -> Option<Ordering> {
        match self {
            MaxModulus::Real(r) => Some(r.cmp_rational(t)),
            MaxModulus::Enclosure { lo, hi } => {
                if hi <= t {
                    Some(Ordering::Less)
                } else if lo >= t {
                    Some(Ordering::Greater)
                } else {
                    None
                }
            }
        }
    }
}

/// Counts of the roots of `f` relative to the circle of rational radius
/// `rho > 0`: `(|z| < rho, |z| = rho, |z| > rho)`.
pub fn radius_location(f: &IntPoly, rho: &BigRational) -> Result<RootLocation> {
    if rho <= &BigRational::zero() {
        return Err(Error::OutOfRange("radius must be positive".into()));
    }
    let (stripped, zeros_at_origin) = f.strip_x_powers();
    let scaled = stripped.scale_argument(rho);
    let mut loc = unit_circle_location(&scaled)?;
    loc.inside += zeros_at_origin;
    Ok(loc)
}

/// Number of real roots of `f` with absolute value strictly above `rho`,
/// counted without multiplicity (callers pass square-free `f`). Roots at
/// `+-rho` themselves are excluded.
fn real_roots_above_radius(f: &IntPoly, rho: &BigRational) -> Result<usize> {
    let bound = f.cauchy_bound() + BigRational::one();
    let mut n = 0;
    if *rho < bound {
        n += sturm_count(f, rho, &bound)?;
        n += sturm_count(f, &(-bound.clone()), &(-rho.clone()))?;
        // (-B, -rho] includes -rho; exclude it when it is a root.
        if f.sign_at(&(-rho.clone())) == 0 {
            n -= 1;
        }
    }
    Ok(n)
}

struct AnnulusCounts {
    complex_gt: usize,
    complex_ge: usize,
    total_gt: usize,
}

fn annulus_counts(f: &IntPoly, rho: &BigRational) -> Result<AnnulusCounts> {
    let loc = radius_location(f, rho)?;
    let real_gt = real_roots_above_radius(f, rho)?;
    let real_on = usize::from(f.sign_at(rho) == 0) + usize::from(f.sign_at(&(-rho.clone())) == 0);
    let complex_gt = loc.outside - real_gt;
    let complex_ge = complex_gt + loc.on - real_on;
    Ok(AnnulusCounts {
        complex_gt,
        complex_ge,
        total_gt: loc.outside,
    })
}

/// Nudges a rational until `f(q) != 0 != f(-q)`, moving by shrinking steps
/// in the direction `dir` (+1 up, -1 down).
fn nonroot_near(f: &IntPoly, start: &BigRational, dir: i32) -> BigRational {
    let mut q = start.clone();
    let mut step = BigRational::new(BigInt::one(), BigInt::from(1024));
    loop {
        if f.sign_at(&q) != 0 && f.sign_at(&(-q.clone())) != 0 {
            return q;
        }
        if dir > 0 {
            q += &step;
        } else {
            q -= &step;
        }
        step /= BigRational::from(BigInt::from(2));
    }
}

/// Maximum root modulus of `p`, exact when a real root attains it.
pub fn max_root_modulus(p: &IntPoly, target_width: &BigRational) -> Result<MaxModulus> {
    if p.is_zero() || p.degree() == 0 {
        return Err(Error::DegenerateInput(
            "maximum root modulus needs a nonconstant polynomial".into(),
        ));
    }
    let sf = p.square_free_part()?;
    let (f, zeros_at_origin) = sf.strip_x_powers();
    if f.degree() == 0 {
        // Only the origin.
        debug_assert!(zeros_at_origin > 0);
        return Ok(MaxModulus::Real(AlgebraicReal::from_rational(
            &BigRational::zero(),
        )));
    }

    let real_max = AlgebraicReal::largest_abs_root(&f)?;
    let Some(mut r) = real_max else {
        return enclosure_by_bisection(&f, &BigRational::zero(), target_width);
    };
    // Make the interval positive: the largest |real root| is > 0 since
    // f(0) != 0. Tighten it cheaply up front so the first annulus check
    // already has a meaningful inner radius.
    r.refine_to_width(&BigRational::new(BigInt::one(), BigInt::from(16)));
    while r.interval().0 <= BigRational::zero() {
        r.refine_once();
    }
    let mut tie_poly: Option<IntPoly> = None;
    for round in 0..256 {
        let (ilo, ihi) = r.interval();
        let l = nonroot_near(&f, &ilo, -1);
        let h = nonroot_near(&f, &ihi, 1);
        let at_l = annulus_counts(&f, &l)?;
        if at_l.complex_ge == 0 {
            return Ok(MaxModulus::Real(r));
        }
        let at_h = annulus_counts(&f, &h)?;
        if at_h.complex_gt >= 1 {
            // Some complex root lies strictly above h > r.
            return enclosure_by_bisection(&f, &h, target_width);
        }
        // All roots in the annulus (l, h] real => every complex root is <= l.
        let real_l = real_roots_above_radius(&f, &l)?;
        let real_h = real_roots_above_radius(&f, &h)?;
        if at_l.total_gt - at_h.total_gt == real_l - real_h && at_h.complex_ge == 0 {
            return Ok(MaxModulus::Real(r));
        }
        // Tie probe: if the pair-product polynomial vanishes at r^2 with odd
        // multiplicity, some conjugate pair has modulus exactly r, so the
        // maximum is attained by the real root as well.
        if round >= 4 && round % 4 == 0 {
            if tie_poly.is_none() {
                tie_poly = Some(pair_product_cofactor(&f)?);
            }
            let fp = tie_poly.as_ref().unwrap();
            if !fp.is_zero() && fp.degree() > 0 {
                if let Ok(r2) = square_of(&r) {
                    // fp is the square of the pair-product polynomial, so
                    // halve the multiplicity. A conjugate pair of modulus
                    // exactly r contributes an odd count of pair products
                    // equal to r^2, while straddling pairs contribute in
                    // conjugate (even) batches.
                    let mult = multiplicity_at(fp, &r2)? / 2;
                    if mult % 2 == 1 {
                        return Ok(MaxModulus::Real(r));
                    }
                }
            }
        }
        if &(&h - &l) < target_width && round > 8 {
            // Could not separate a complex pair from the real maximum; the
            // maximum lies in (l, h] either way.
            return Ok(MaxModulus::Enclosure { lo: l, hi: h });
        }
        r.refine_once();
    }
    let (l, h) = r.interval();
    Ok(MaxModulus::Enclosure { lo: l, hi: h })
}

/// Bisection enclosure `lo < max <= hi` of width below `target_width`,
/// knowing the maximum is strictly above `floor`.
fn enclosure_by_bisection(
    f: &IntPoly,
    floor: &BigRational,
    target_width: &BigRational,
) -> Result<MaxModulus> {
    let mut lo = floor.clone();
    let mut hi = f.cauchy_bound() + BigRational::one();
    while &(&hi - &lo) >= target_width {
        let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
        let loc = radius_location(f, &mid)?;
        if loc.outside >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(MaxModulus::Enclosure { lo, hi })
}

fn square_of(r: &AlgebraicReal) -> Result<AlgebraicReal> {
    if !r.defining().is_monic() {
        return Err(Error::Inconclusive(
            "tie probe needs a monic defining polynomial".into(),
        ));
    }
    let sq_poly = power_min_poly(r.defining(), 2)?;
    let mut r = r.clone();
    loop {
        let (lo, hi) = r.interval();
        if lo > BigRational::zero() {
            let (a, b) = (&lo * &lo, &hi * &hi);
            if let Ok(alg) = AlgebraicReal::from_bracket(&sq_poly, a, b) {
                return Ok(alg);
            }
        }
        r.refine_once();
    }
}

fn multiplicity_at(f: &IntPoly, at: &AlgebraicReal) -> Result<usize> {
    let mut mult = 0usize;
    for (factor, m) in f.square_free_decomposition()? {
        if at.sign_of_poly(&factor) == 0 {
            mult += m;
        }
    }
    Ok(mult)
}

/// `prod_{i<j} (w - z_i z_j)^2` for the roots of monic `f`: the pair-product
/// polynomial squared, namely `Res_y(f(y), y^n f(w/y)) / f_sq(w)` with
/// `f_sq = power_min_poly(f, 2)`. Used only as a parity probe, so the square
/// is fine.
fn pair_product_cofactor(f: &IntPoly) -> Result<IntPoly> {
    if !f.is_monic() {
        return Ok(IntPoly::zero());
    }
    let n = f.degree();
    if n <= 1 {
        return Ok(IntPoly::one());
    }
    // D(w) = Res_y(f(y), sum_j c_j w^j y^(n-j)), degree n^2 in w, computed by
    // evaluation and exact interpolation.
    let deg_d = n * n;
    let mut xs = Vec::with_capacity(deg_d + 1);
    let mut ys = Vec::with_capacity(deg_d + 1);
    for t in 0..=(deg_d as i64) {
        let mut g = vec![BigInt::zero(); n + 1];
        let mut tp = BigInt::one();
        for j in 0..=n {
            g[n - j] = f.coeff(j) * &tp;
            tp *= t;
        }
        xs.push(BigInt::from(t));
        ys.push(resultant(f, &IntPoly::new(g)));
    }
    let d = interpolate_integer_poly(&xs, &ys)?;
    let fsq = power_min_poly(f, 2)?;
    d.divexact(&fsq)
}

/// Newton divided-difference interpolation with exact rationals; the result
/// must be integral.
fn interpolate_integer_poly(xs: &[BigInt], ys: &[BigInt]) -> Result<IntPoly> {
    let n = xs.len();
    // Divided differences in place: after pass k, table[i] holds
    // f[x_i .. x_{i+k}].
    let mut table: Vec<BigRational> = ys.iter().map(|y| BigRational::from(y.clone())).collect();
    let mut coeffs = Vec::with_capacity(n);
    coeffs.push(table[0].clone());
    for k in 1..n {
        for i in 0..n - k {
            let dx = BigRational::from(&xs[i + k] - &xs[i]);
            table[i] = (&table[i + 1] - &table[i]) / dx;
        }
        coeffs.push(table[0].clone());
    }
    // Expand sum_k c_k prod_{j<k} (x - x_j) into the monomial basis.
    let mut acc = vec![BigRational::zero(); n];
    let mut basis = vec![BigRational::one()];
    for (k, c) in coeffs.iter().enumerate() {
        for (d, b) in basis.iter().enumerate() {
            acc[d] += b * c;
        }
        if k + 1 < n {
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, b) in basis.iter().enumerate() {
                next[d + 1] += b;
                next[d] -= b * BigRational::from(xs[k].clone());
            }
            basis = next;
        }
    }
    let mut out = Vec::with_capacity(n);
    for c in acc {
        if !c.is_integer() {
            return Err(Error::Inconclusive(
                "interpolation produced a non-integer coefficient".into(),
            ));
        }
        out.push(c.to_integer());
    }
    Ok(IntPoly::new(out))
}
