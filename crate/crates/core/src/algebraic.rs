//! Real algebraic numbers as (square-free defining polynomial, isolating
//! rational interval), with exact comparison and refinement.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::intpoly::{rat_sign, IntPoly};
use crate::sturm::{count_roots_above, sturm_count};

/// A real algebraic number.
///
/// Invariants: `poly` is square-free, primitive, with positive leading
/// coefficient; `lo < hi`; `poly` has exactly one root in the open interval
/// `(lo, hi)` and does not vanish at either endpoint. Since the root is
/// simple, `poly` changes sign across the interval.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    poly: IntPoly,
    lo: BigRational,
    hi: BigRational,
}

impl AlgebraicReal {
    /// Builds from a half-open isolating bracket `(lo, hi]` containing
    /// exactly one distinct root of `p` (the bracket shape produced by
    /// Sturm isolation).
    pub fn from_bracket(p: &IntPoly, lo: BigRational, hi: BigRational) -> Result<AlgebraicReal> {
        let sf = p.square_free_part()?;
        if sf.degree() == 0 {
            return Err(Error::DegenerateInput(
                "constant polynomial has no roots".into(),
            ));
        }
        if sturm_count(&sf, &lo, &hi)? != 1 {
            return Err(Error::DegenerateInput(format!(
                "({lo}, {hi}] does not isolate one root of {sf}"
            )));
        }
        // If hi is the root itself, re-center the interval around it.
        if sf.sign_at(&hi) == 0 {
            let half = (&hi - &lo) / BigRational::from(BigInt::from(2));
            let mut delta = half;
            loop {
                let nlo = &hi - &delta;
                let nhi = &hi + &delta;
                if sf.sign_at(&nlo) != 0
                    && sf.sign_at(&nhi) != 0
                    && sturm_count(&sf, &nlo, &nhi)? == 1
                {
                    return Ok(AlgebraicReal {
                        poly: sf,
                        lo: nlo,
                        hi: nhi,
                    });
                }
                delta /= BigRational::from(BigInt::from(2));
            }
        }
        // Otherwise the root is interior (hi is not a root, else it would be
        // the one root of the bracket); nudge lo up off any root of sf
        // without crossing the isolated root.
        let mut lo = lo;
        if sf.sign_at(&lo) == 0 {
            let mut step = (&hi - &lo) / BigRational::from(BigInt::from(2));
            loop {
                let cand = &lo + &step;
                if sf.sign_at(&cand) != 0 && sturm_count(&sf, &cand, &hi)? == 1 {
                    lo = cand;
                    break;
                }
                step /= BigRational::from(BigInt::from(2));
            }
        }
        Ok(AlgebraicReal { poly: sf, lo, hi })
    }

    pub fn from_rational(r: &BigRational) -> AlgebraicReal {
        let poly = IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
        AlgebraicReal {
            poly,
            lo: r - BigRational::one(),
            hi: r + BigRational::one(),
        }
    }

    pub fn from_integer(n: i64) -> AlgebraicReal {
        AlgebraicReal::from_rational(&BigRational::from(BigInt::from(n)))
    }

    /// The largest real root of `p`.
    pub fn largest_root(p: &IntPoly) -> Result<AlgebraicReal> {
        let sf = p.square_free_part()?;
        if sf.degree() == 0 {
            return Err(Error::DegenerateInput(
                "constant polynomial has no roots".into(),
            ));
        }
        let bound = sf.cauchy_bound() + BigRational::one();
        let mut lo = -bound.clone();
        let mut hi = bound;
        let total = sturm_count(&sf, &lo, &hi)?;
        if total == 0 {
            return Err(Error::DegenerateInput(format!("{sf} has no real roots")));
        }
        // Shrink towards the top root: keep at least one root above lo.
        loop {
            if sturm_count(&sf, &lo, &hi)? == 1 {
                return AlgebraicReal::from_bracket(&sf, lo, hi);
            }
            let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
            if sturm_count(&sf, &mid, &hi)? >= 1 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    /// The real root of largest absolute value, if any real root exists.
    pub fn largest_abs_root(p: &IntPoly) -> Result<Option<AlgebraicReal>> {
        let sf = p.square_free_part()?;
        if sf.degree() == 0 || crate::sturm::count_real_roots(&sf)? == 0 {
            return Ok(None);
        }
        let top = AlgebraicReal::largest_root(&sf)?;
        let neg = sf.substitute_neg_x();
        let bottom_negated = AlgebraicReal::largest_root(&neg.primitive());
        match bottom_negated {
            Ok(b) => {
                // b = -(smallest root); compare |top| against b.
                let abs_top = if top.cmp_rational(&BigRational::zero()) == Ordering::Less {
                    top.negate()
                } else {
                    top.clone()
                };
                if abs_top.cmp(&b) == Ordering::Less {
                    Ok(Some(b))
                } else {
                    Ok(Some(abs_top))
                }
            }
            Err(_) => Ok(Some(top)),
        }
    }

    pub fn defining(&self) -> &IntPoly {
        &self.poly
    }

    pub fn interval(&self) -> (BigRational, BigRational) {
        (self.lo.clone(), self.hi.clone())
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// `-self`.
    pub fn negate(&self) -> AlgebraicReal {
        AlgebraicReal {
            poly: self.poly.substitute_neg_x().primitive(),
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    fn sign_lo(&self) -> i32 {
        self.poly.sign_at(&self.lo)
    }

    /// One bisection step.
    pub fn refine_once(&mut self) {
        let mid = (&self.lo + &self.hi) / BigRational::from(BigInt::from(2));
        let sm = self.poly.sign_at(&mid);
        if sm == 0 {
            // The root is exactly mid; shrink symmetrically around it.
            let quarter = (&self.hi - &self.lo) / BigRational::from(BigInt::from(8));
            self.lo = &mid - &quarter;
            self.hi = &mid + &quarter;
            return;
        }
        if sm == self.sign_lo() {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    pub fn refine_to_width(&mut self, w: &BigRational) {
        while &self.width() >= w {
            self.refine_once();
        }
    }

    /// Midpoint after refining the interval below `10^-decimals`. When the
    /// number itself is a round decimal the exact value is returned.
    pub fn approx(&self, decimals: u32) -> BigRational {
        let mut me = self.clone();
        let scale = BigInt::from(10u32).pow(decimals);
        let w = BigRational::new(BigInt::one(), scale.clone());
        me.refine_to_width(&w);
        let mid = (&me.lo + &me.hi) / BigRational::from(BigInt::from(2));
        if me.poly.sign_at(&mid) == 0 {
            return mid;
        }
        // Snap to the nearest decimal of the requested precision when that
        // decimal is exactly the root.
        let snapped = BigRational::new(
            (&mid * BigRational::from(scale.clone()))
                .round()
                .to_integer(),
            scale,
        );
        if me.poly.sign_at(&snapped) == 0 && me.lo < snapped && snapped < me.hi {
            return snapped;
        }
        mid
    }

    pub fn to_f64(&self) -> f64 {
        let m = self.approx(15);
        m.numer().to_f64().unwrap_or(f64::NAN) / m.denom().to_f64().unwrap_or(f64::NAN)
    }

    /// Exact comparison against a rational.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        if r <= &self.lo {
            return Ordering::Greater;
        }
        if r >= &self.hi {
            return Ordering::Less;
        }
        let s = self.poly.sign_at(r);
        if s == 0 {
            return Ordering::Equal;
        }
        // The unique root in (lo, hi) is right of r iff p keeps the sign it
        // has at lo on [lo, r].
        if s == self.sign_lo() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Exact comparison of two algebraic reals.
    pub fn cmp(&self, other: &AlgebraicReal) -> Ordering {
        if self.hi <= other.lo {
            return Ordering::Less;
        }
        if other.hi <= self.lo {
            return Ordering::Greater;
        }
        let g = self.poly.gcd(&other.poly);
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            let olo = if a.lo > b.lo {
                a.lo.clone()
            } else {
                b.lo.clone()
            };
            let ohi = if a.hi < b.hi {
                a.hi.clone()
            } else {
                b.hi.clone()
            };
            if olo < ohi && g.deg().map_or(false, |d| d > 0) {
                if sturm_count(&g, &olo, &ohi).unwrap_or(0) >= 1 {
                    // A common root inside both isolating intervals is
                    // necessarily both numbers.
                    let inside_a = sturm_count(&g, &a.lo, &a.hi).unwrap_or(0) >= 1;
                    let inside_b = sturm_count(&g, &b.lo, &b.hi).unwrap_or(0) >= 1;
                    if inside_a && inside_b {
                        return Ordering::Equal;
                    }
                }
            }
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            a.refine_once();
            b.refine_once();
        }
    }

    pub fn eq(&self, other: &AlgebraicReal) -> bool {
        self.cmp(other) == Ordering::Equal
    }

    /// Sign of `g(alpha)` for an arbitrary integer polynomial `g`, decided
    /// exactly: zero is certified through a gcd computation, nonzero through
    /// interval refinement.
    pub fn sign_of_poly(&self, g: &IntPoly) -> i32 {
        if g.is_zero() {
            return 0;
        }
        let h = self.poly.gcd(g);
        if h.deg().map_or(false, |d| d > 0) && sturm_count(&h, &self.lo, &self.hi).unwrap_or(0) >= 1
        {
            return 0;
        }
        let mut me = self.clone();
        loop {
            let (vlo, vhi) = g.eval_interval(&me.lo, &me.hi);
            if rat_sign(&vlo) > 0 {
                return 1;
            }
            if rat_sign(&vhi) < 0 {
                return -1;
            }
            if rat_sign(&vlo) == 0 && rat_sign(&vhi) == 0 {
                return 0;
            }
            me.refine_once();
        }
    }

    /// True iff the number is an integer, decided exactly.
    pub fn is_integer(&self) -> bool {
        let mut me = self.clone();
        me.refine_to_width(&BigRational::new(BigInt::one(), BigInt::from(2)));
        let lo_floor = me.lo.floor();
        let hi_floor = me.hi.floor();
        let mut candidates = vec![lo_floor.clone()];
        if hi_floor != lo_floor {
            candidates.push(hi_floor);
        }
        candidates.push(me.lo.ceil());
        candidates.push(me.hi.ceil());
        candidates.sort();
        candidates.dedup();
        candidates
            .iter()
            .any(|c| me.cmp_rational(c) == Ordering::Equal)
    }

    /// If the number is rational, returns it. The defining polynomial is
    /// square-free, so this just probes its rational roots inside the
    /// isolating interval.
    pub fn as_rational(&self) -> Option<BigRational> {
        // Rational root theorem on the primitive square-free polynomial.
        let c0 = self.poly.constant_term();
        let lead = self.poly.leading()?.clone();
        if c0.is_zero() {
            if self.cmp_rational(&BigRational::zero()) == Ordering::Equal {
                return Some(BigRational::zero());
            }
        }
        for p in divisors_of(&c0.abs()) {
            for q in divisors_of(&lead.abs()) {
                for sign in [1i64, -1] {
                    let cand = BigRational::new(&p * BigInt::from(sign), q.clone());
                    if self.cmp_rational(&cand) == Ordering::Equal {
                        return Some(cand);
                    }
                }
            }
        }
        None
    }
}

fn divisors_of(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    // Only used for small constant/leading coefficients of defining
    // polynomials; trial division is fine.
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            out.push(n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

/// Checks that the unique real root of `p` above `a` exists and is simple;
/// convenience used by Salem/Pisot classification.
pub fn count_real_roots_above_one(p: &IntPoly) -> Result<usize> {
    count_roots_above(p, &BigRational::one())
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {} in ({}, {})", self.poly, self.lo, self.hi)
    }
}
