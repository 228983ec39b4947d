//! Exact root location relative to the unit circle, number classification
//! (Salem, Pisot, ...), and the Kronecker-style irreducibility certificate.
//!
//! Strategy per square-free factor:
//! * roots at +-1 are divided out directly;
//! * even-degree palindromic factors go through the trace transform
//!   `p(x) = x^(d/2) q(x + 1/x)` and exact Sturm counts on `q`;
//! * otherwise `gcd(p, p*)` splits off the (palindromic) part carrying any
//!   unit-circle roots, and the circle-free cofactor is counted by the
//!   Schur-Cohn recursion, falling back to Graeffe root-squaring with a
//!   Rouche dominance certificate when Schur-Cohn degenerates.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebraic::AlgebraicReal;
use crate::cyclotomic::cyclotomic_factors;
use crate::error::{Error, Result};
use crate::intpoly::IntPoly;
use crate::sturm::{count_real_roots, count_roots_above, sturm_count};

/// Root counts relative to the unit circle, with multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootLocation {
    pub inside: usize,
    pub on: usize,
    pub outside: usize,
}

impl RootLocation {
    pub fn total(&self) -> usize {
        self.inside + self.on + self.outside
    }

    fn zero() -> Self {
        RootLocation {
            inside: 0,
            on: 0,
            outside: 0,
        }
    }

    fn add_scaled(&mut self, other: &RootLocation, mult: usize) {
        self.inside += other.inside * mult;
        self.on += other.on * mult;
        self.outside += other.outside * mult;
    }
}

/// Exact counts of the roots of `p` inside, on, and outside the unit circle,
/// with multiplicity. Requires `p(0) != 0` (strip x-powers first).
///
/// ```
/// use salem_core::intpoly::IntPoly;
/// use salem_core::rootloc::unit_circle_location;
///
/// let p = IntPoly::parse_csv("1,-3,1").unwrap(); // x^2 - 3x + 1
/// let loc = unit_circle_location(&p).unwrap();
/// assert_eq!((loc.inside, loc.on, loc.outside), (1, 0, 1));
/// ```
pub fn unit_circle_location(p: &IntPoly) -> Result<RootLocation> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial".into()));
    }
    if p.constant_term().is_zero() {
        return Err(Error::DegenerateInput(
            "polynomial vanishes at zero; strip x-powers first".into(),
        ));
    }
    let mut loc = RootLocation::zero();
    if p.degree() == 0 {
        return Ok(loc);
    }
    for (factor, mult) in p.square_free_decomposition()? {
        let part = locate_squarefree(&factor)?;
        loc.add_scaled(&part, mult);
    }
    Ok(loc)
}

fn locate_squarefree(f: &IntPoly) -> Result<RootLocation> {
    let mut loc = RootLocation::zero();
    let mut f = f.primitive();
    if f.degree() == 0 {
        return Ok(loc);
    }
    // Roots at +-1 are simple (f is square-free); peel them off.
    let one = BigInt::one();
    if f.eval_int(&one).is_zero() {
        f = f.divexact(&IntPoly::from_i64(&[-1, 1]))?;
        loc.on += 1;
    }
    if f.eval_int(&(-&one)).is_zero() {
        f = f.divexact(&IntPoly::from_i64(&[1, 1]))?;
        loc.on += 1;
    }
    if f.degree() == 0 {
        return Ok(loc);
    }

    if f.is_palindromic()? && f.degree() % 2 == 0 {
        let part = locate_palindromic(&f)?;
        loc.add_scaled(&part, 1);
        return Ok(loc);
    }

    let fstar = f.reciprocal()?;
    let s = f.gcd(&fstar);
    if s.degree() == 0 {
        // No unit-circle roots: count the inside ones directly.
        let n = f.degree();
        let inside = match schur_cohn_inside(&f) {
            Some(k) => k,
            None => graeffe_inside(&f).ok_or_else(|| {
                Error::Inconclusive(format!(
                    "circle counting degenerated on {f} and Graeffe did not separate"
                ))
            })?,
        };
        loc.inside += inside;
        loc.outside += n - inside;
        return Ok(loc);
    }
    // s carries every root that pairs with its inverse (in particular all
    // on-circle roots); the cofactor is inverse-free. Both are strictly
    // smaller, so this recursion terminates.
    let cofactor = f.divexact(&s)?;
    let a = locate_squarefree(&s)?;
    loc.add_scaled(&a, 1);
    if cofactor.degree() > 0 {
        let b = locate_squarefree(&cofactor)?;
        loc.add_scaled(&b, 1);
    }
    Ok(loc)
}

/// Location for a square-free even-degree palindromic factor with no roots
/// at +-1, through the trace transform.
fn locate_palindromic(f: &IntPoly) -> Result<RootLocation> {
    let q = f.trace_transform()?;
    let n = q.degree();
    let two = BigRational::from(BigInt::from(2));
    // q(+-2) != 0 because f(+-1) != 0.
    let on_pairs = sturm_count(&q, &(-two.clone()), &two)?;
    let real_total = count_real_roots(&q)?;
    let straddling = real_total - on_pairs;
    let complex = n - real_total;
    Ok(RootLocation {
        inside: straddling + complex,
        on: 2 * on_pairs,
        outside: straddling + complex,
    })
}

/// Number of roots strictly inside the unit circle for a polynomial with no
/// roots on the circle, by the Schur-Cohn recursion:
/// `T p = a_0 p - a_n p*` has `T p(0) = a_0^2 - a_n^2 =: gamma`; when
/// `gamma > 0` the count is preserved, when `gamma < 0` it flips to the
/// complement. `gamma = 0` is the degenerate case, reported as `None`.
pub fn schur_cohn_inside(p: &IntPoly) -> Option<usize> {
    let n = p.deg()?;
    if n == 0 {
        return Some(0);
    }
    let a0 = p.coeff(0);
    let an = p.leading().unwrap().clone();
    let gamma = &a0 * &a0 - &an * &an;
    if gamma.is_zero() {
        return None;
    }
    let rev = p.reciprocal().ok()?;
    let tp = p.scale(&a0).sub(&rev.scale(&an)).strip_content();
    debug_assert!(tp.deg().map_or(true, |d| d < n));
    let inner = schur_cohn_inside(&tp)?;
    if gamma.is_positive() {
        Some(inner)
    } else {
        Some(n - inner)
    }
}

/// One Graeffe root-squaring step: returns a polynomial whose roots are the
/// squares of the roots of `p`.
pub fn graeffe_step(p: &IntPoly) -> IntPoly {
    let d = p.deg().unwrap_or(0);
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for i in 0..=d {
        if i % 2 == 0 {
            even.push(p.coeff(i));
        } else {
            odd.push(p.coeff(i));
        }
    }
    let e = IntPoly::new(even);
    let o = IntPoly::new(odd);
    // q(y) = e(y)^2 - y o(y)^2
    let q = e.mul(&e).sub(&IntPoly::x().mul(&o.mul(&o)));
    q.strip_content()
}

/// Inside count through iterated Graeffe steps and a Rouche dominance
/// certificate: once some coefficient satisfies `|a_k| > sum |a_j|, j != k`,
/// the polynomial has exactly `k` roots in the open unit disk and none on
/// the circle. Sound only when the input has no unit-circle roots (which the
/// callers guarantee); `None` if dominance is not reached.
pub fn graeffe_inside(p: &IntPoly) -> Option<usize> {
    let mut q = p.strip_content();
    for _ in 0..64 {
        if let Some(k) = rouche_dominant_index(&q) {
            return Some(k);
        }
        // Guard against runaway coefficient growth.
        if q.coeffs().iter().map(|c| c.bits()).max().unwrap_or(0) > 1 << 22 {
            return None;
        }
        q = graeffe_step(&q);
    }
    None
}

fn rouche_dominant_index(p: &IntPoly) -> Option<usize> {
    let d = p.deg()?;
    let mut total = BigInt::zero();
    for i in 0..=d {
        total += p.coeff(i).abs();
    }
    (0..=d).find(|&k| {
        let a = p.coeff(k).abs();
        &a + &a > total
    })
}

/// Classification tags for monic integer polynomials by root pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NumberClass {
    /// One real root > 1, at least one conjugate pair on the circle, the
    /// reciprocal root inside; degree >= 4.
    Salem,
    /// One real root > 1 and every other root strictly inside.
    Pisot,
    /// Every root on the unit circle.
    CyclotomicProduct,
    /// Exactly one root outside the circle but no Salem/Pisot pattern.
    OneBigRootOther,
    /// Anything else.
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberClassification {
    pub class: NumberClass,
    pub location: RootLocation,
}

/// Classifies the root pattern of a monic polynomial with nonzero constant
/// term. Irreducibility is the caller's business: the tags describe the
/// multiset of roots only.
pub fn classify_number(p: &IntPoly) -> Result<NumberClassification> {
    if p.is_zero() || !p.is_monic() {
        return Err(Error::DegenerateInput(
            "classification needs a monic polynomial".into(),
        ));
    }
    if p.constant_term().is_zero() {
        return Err(Error::DegenerateInput(
            "polynomial vanishes at zero; strip x-powers first".into(),
        ));
    }
    let location = unit_circle_location(p)?;
    let deg = p.degree();
    let class = if location.on == deg {
        NumberClass::CyclotomicProduct
    } else if location.outside == 1 {
        // The single outside root must be real and > 1 for Salem/Pisot.
        let big_root_real = count_roots_above(p, &BigRational::one())? == 1;
        if big_root_real && location.on == 0 {
            NumberClass::Pisot
        } else if big_root_real && location.on >= 2 && location.inside == 1 && deg >= 4 {
            NumberClass::Salem
        } else {
            NumberClass::OneBigRootOther
        }
    } else {
        NumberClass::Mixed
    };
    Ok(NumberClassification { class, location })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum IrreducibilityVerdict {
    Proven,
    Inconclusive,
}

/// Witness data for the one-big-root irreducibility certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityCertificate {
    pub verdict: IrreducibilityVerdict,
    pub outside_count: usize,
    pub constant_abs: BigInt,
    pub cyclotomic_indices: Vec<u64>,
    pub reason: String,
}

/// Kronecker-style irreducibility certificate for monic integer polynomials:
/// if exactly one root lies outside the unit circle, the constant term is a
/// nonzero integer, and no cyclotomic polynomial divides `p`, then any
/// nontrivial monic factorization would leave one factor with all roots in
/// the closed disk and nonzero constant term; by Kronecker's theorem that
/// factor would be a product of cyclotomic polynomials, a contradiction.
///
/// `Inconclusive` never means "reducible".
pub fn prove_irreducible_one_big_root(p: &IntPoly) -> Result<IrreducibilityCertificate> {
    if p.is_zero() || !p.is_monic() {
        return Err(Error::DegenerateInput(
            "irreducibility certificate needs a monic polynomial".into(),
        ));
    }
    let c0 = p.constant_term();
    if c0.is_zero() {
        return Ok(IrreducibilityCertificate {
            verdict: IrreducibilityVerdict::Inconclusive,
            outside_count: 0,
            constant_abs: BigInt::zero(),
            cyclotomic_indices: Vec::new(),
            reason: "constant term is zero".into(),
        });
    }
    let loc = unit_circle_location(p)?;
    if loc.outside != 1 {
        return Ok(IrreducibilityCertificate {
            verdict: IrreducibilityVerdict::Inconclusive,
            outside_count: loc.outside,
            constant_abs: c0.abs(),
            cyclotomic_indices: Vec::new(),
            reason: format!("{} roots outside the unit circle", loc.outside),
        });
    }
    let cyclo = cyclotomic_factors(p)?;
    if !cyclo.is_empty() {
        return Ok(IrreducibilityCertificate {
            verdict: IrreducibilityVerdict::Inconclusive,
            outside_count: loc.outside,
            constant_abs: c0.abs(),
            cyclotomic_indices: cyclo.clone(),
            reason: format!("cyclotomic factors present: {cyclo:?}"),
        });
    }
    Ok(IrreducibilityCertificate {
        verdict: IrreducibilityVerdict::Proven,
        outside_count: 1,
        constant_abs: c0.abs(),
        cyclotomic_indices: Vec::new(),
        reason: "one root outside, nonzero constant term, no cyclotomic factor".into(),
    })
}

/// Convenience: the largest real root together with its Salem/Pisot tag.
pub fn largest_root_with_class(p: &IntPoly) -> Result<(AlgebraicReal, NumberClassification)> {
    let root = AlgebraicReal::largest_root(p)?;
    let class = classify_number(p)?;
    Ok((root, class))
}
