//! Sturm chains over exact rational arithmetic.
//!
//! The chain is built with sign-preserving pseudo-remainders so every
//! element stays an integer polynomial; counts are therefore exact for any
//! rational endpoints.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::intpoly::IntPoly;

pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Result<SturmChain> {
        if p.is_zero() {
            return Err(Error::DegenerateInput("zero polynomial".into()));
        }
        let p0 = p.strip_content();
        let mut chain = vec![p0.clone()];
        let d = p0.derivative();
        if !d.is_zero() {
            chain.push(d.strip_content());
            loop {
                let n = chain.len();
                let r = chain[n - 2].signed_prem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(r.neg());
            }
        }
        Ok(SturmChain { chain })
    }

    /// Sign variations of the chain at `x`, zeros skipped.
    fn variations_at(&self, x: &BigRational) -> usize {
        let mut last = 0i32;
        let mut count = 0usize;
        for q in &self.chain {
            let s = q.sign_at(x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the open interval `(lo, hi)`.
    /// Requires nonvanishing endpoints.
    fn count_open_nonzero(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let a = self.variations_at(lo);
        let b = self.variations_at(hi);
        a.saturating_sub(b)
    }
}

/// Number of distinct real roots of `p` in the half-open interval `(lo, hi]`.
///
/// Endpoints are allowed to be roots; they are divided out exactly before
/// the variation count so the chain only ever sees nonvanishing endpoints.
pub fn sturm_count(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial".into()));
    }
    if lo >= hi {
        return Err(Error::OutOfRange(format!("empty interval ({lo}, {hi}]")));
    }
    let mut q = p.strip_content();
    let mut include_hi = 0usize;
    while q.sign_at(hi) == 0 {
        q = q.divexact(&linear_factor(hi))?;
        include_hi = 1;
        if q.is_zero() || q.degree() == 0 {
            return Ok(include_hi);
        }
    }
    while q.sign_at(lo) == 0 {
        q = q.divexact(&linear_factor(lo))?;
        if q.is_zero() || q.degree() == 0 {
            return Ok(include_hi);
        }
    }
    if q.degree() == 0 {
        return Ok(include_hi);
    }
    let chain = SturmChain::new(&q)?;
    Ok(chain.count_open_nonzero(lo, hi) + include_hi)
}

/// The primitive integer polynomial `den*x - num` vanishing at a rational.
fn linear_factor(r: &BigRational) -> IntPoly {
    IntPoly::new(vec![-r.numer().clone(), r.denom().clone()])
}

/// Number of distinct real roots of `p` anywhere on the line.
pub fn count_real_roots(p: &IntPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial".into()));
    }
    if p.degree() == 0 {
        return Ok(0);
    }
    let b = p.cauchy_bound() + BigRational::one();
    sturm_count(p, &(-b.clone()), &b)
}

/// Number of distinct real roots strictly greater than `a`.
pub fn count_roots_above(p: &IntPoly, a: &BigRational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial".into()));
    }
    if p.degree() == 0 {
        return Ok(0);
    }
    let mut b = p.cauchy_bound() + BigRational::one();
    if &b <= a {
        b = a + BigRational::one();
    }
    sturm_count(p, a, &b)
}

/// Isolating half-open brackets `(lo, hi]`, one per distinct real root,
/// in increasing order.
pub fn isolate_real_roots(p: &IntPoly) -> Result<Vec<(BigRational, BigRational)>> {
    if p.is_zero() {
        return Err(Error::DegenerateInput("zero polynomial".into()));
    }
    if p.degree() == 0 {
        return Ok(Vec::new());
    }
    let sf = p.square_free_part()?;
    if sf.degree() == 0 {
        return Ok(Vec::new());
    }
    let bound = sf.cauchy_bound() + BigRational::one();
    let lo = -bound.clone();
    let mut out = Vec::new();
    subdivide(&sf, &lo, &bound, &mut out)?;
    Ok(out)
}

fn subdivide(
    sf: &IntPoly,
    lo: &BigRational,
    hi: &BigRational,
    out: &mut Vec<(BigRational, BigRational)>,
) -> Result<()> {
    let n = sturm_count(sf, lo, hi)?;
    if n == 0 {
        return Ok(());
    }
    if n == 1 {
        out.push((lo.clone(), hi.clone()));
        return Ok(());
    }
    let mid = (lo + hi) / BigRational::from(BigInt::from(2));
    subdivide(sf, lo, &mid, out)?;
    subdivide(sf, &mid, hi, out)
}
