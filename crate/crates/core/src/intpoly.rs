//! Dense univariate polynomials over the integers.
//!
//! `IntPoly` is the lingua franca of the crate: every characteristic
//! polynomial, Salem polynomial and certificate witness is one of these.
//! Coefficients are arbitrary-precision and stored in ascending degree
//! order (`coeffs[i]` multiplies `x^i`). The zero polynomial is the empty
//! coefficient vector; otherwise the leading coefficient is nonzero.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    pub fn x() -> Self {
        IntPoly::from_i64(&[0, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^d`.
    pub fn monomial(c: BigInt, d: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); d + 1];
        v[d] = c;
        IntPoly { coeffs: v }
    }

    /// `x^m - 1`.
    pub fn x_pow_minus_one(m: usize) -> Self {
        let mut v = vec![BigInt::zero(); m + 1];
        v[0] = BigInt::from(-1);
        v[m] = BigInt::one();
        IntPoly { coeffs: v }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree of a polynomial known to be nonzero.
    pub fn degree(&self) -> usize {
        self.deg().expect("degree of zero polynomial")
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(v)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::new(v)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact quotient `self / divisor` over the integers.
    ///
    /// Fails with `InexactDivision` when the divisor does not divide exactly,
    /// and with `DegenerateInput` on a zero divisor.
    pub fn divexact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        if divisor.is_zero() {
            return Err(Error::DegenerateInput("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dn = self.degree();
        let dd = divisor.degree();
        if dn < dd {
            return Err(Error::InexactDivision);
        }
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for i in (0..=(dn - dd)).rev() {
            let top = rem[i + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * b;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(IntPoly::new(quot))
    }

    /// Tests divisibility without surfacing the quotient.
    pub fn divides(&self, dividend: &IntPoly) -> bool {
        dividend.divexact(self).is_ok()
    }

    /// Greatest common divisor of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and normalizes the leading coefficient to be
    /// positive. The zero polynomial maps to itself.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Divides out the (positive) content but keeps the sign of every
    /// coefficient, unlike `primitive`.
    pub(crate) fn strip_content(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let g = self.content();
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::new(v)
    }

    /// Pseudo-remainder of `self` by `divisor`, scaled so that the result is
    /// a *positive* constant multiple of `self mod divisor`, then reduced by
    /// its content with signs intact. The sign discipline is what makes the
    /// Sturm chains and the polynomial gcd below correct.
    pub(crate) fn signed_prem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree();
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut steps: u32 = 0;
        while let Some(dr) = rem.deg() {
            if dr < dd {
                break;
            }
            let top = rem.leading().unwrap().clone();
            let shift = dr - dd;
            let mut next = rem.scale(&lead);
            for (j, b) in divisor.coeffs.iter().enumerate() {
                next.coeffs[shift + j] -= &top * b;
            }
            rem = IntPoly::new(next.coeffs);
            steps += 1;
        }
        if lead.is_negative() && steps % 2 == 1 {
            rem = rem.neg();
        }
        rem.strip_content()
    }

    /// Primitive polynomial gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.signed_prem(&b);
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// `self / gcd(self, self')`, primitive with positive leading coefficient.
    pub fn square_free_part(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::DegenerateInput("zero polynomial".into()));
        }
        let p = self.primitive();
        if p.degree() == 0 {
            return Ok(IntPoly::one());
        }
        let g = p.gcd(&p.derivative());
        if g.degree() == 0 {
            return Ok(p);
        }
        rational_quotient(&p, &g)
    }

    /// Square-free decomposition (Musser's repeated-gcd chain): returns pairs
    /// `(factor, multiplicity)` with pairwise-coprime primitive square-free
    /// factors, so that `self = content * prod factor_i^mult_i` up to sign.
    pub fn square_free_decomposition(&self) -> Result<Vec<(IntPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::DegenerateInput("zero polynomial".into()));
        }
        let p = self.primitive();
        if p.degree() == 0 {
            return Ok(Vec::new());
        }
        // h_0 = p, h_{i+1} = gcd(h_i, h_i'); then sf_i = h_{i-1}/h_i is the
        // product of all factors of multiplicity >= i.
        let mut chain = vec![p];
        loop {
            let last = chain.last().unwrap();
            if last.degree() == 0 {
                break;
            }
            let g = last.gcd(&last.derivative());
            let stop = g.degree() == 0;
            chain.push(g);
            if stop {
                break;
            }
        }
        let mut sf = Vec::new();
        for i in 1..chain.len() {
            sf.push(rational_quotient(&chain[i - 1], &chain[i])?);
        }
        let mut out = Vec::new();
        for i in 0..sf.len() {
            let factor = if i + 1 < sf.len() {
                rational_quotient(&sf[i], &sf[i + 1])?
            } else {
                sf[i].clone()
            };
            if factor.degree() > 0 {
                out.push((factor, i + 1));
            }
        }
        Ok(out)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Sign of `self` at a rational point, computed homogeneously so no
    /// rational reduction is needed: sign of `sum c_i u^i v^(d-i)` for
    /// `x = u/v` with `v > 0`.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let u = x.numer();
        let v = x.denom();
        let d = self.degree();
        let mut upow = BigInt::one();
        let mut acc = BigInt::zero();
        let mut vpows = Vec::with_capacity(d + 1);
        let mut vp = BigInt::one();
        for _ in 0..=d {
            vpows.push(vp.clone());
            vp *= v;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * &upow * &vpows[d - i];
            }
            upow *= u;
        }
        sign_of(&acc)
    }

    /// Evaluates `self` over a rational interval with interval arithmetic
    /// (Horner form). Returns an enclosure of `{p(x) : x in [lo, hi]}`.
    pub fn eval_interval(&self, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
        let mut alo = BigRational::zero();
        let mut ahi = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            // [alo, ahi] * [lo, hi]
            let p1 = &alo * lo;
            let p2 = &alo * hi;
            let p3 = &ahi * lo;
            let p4 = &ahi * hi;
            let mut mn = p1.clone();
            let mut mx = p1;
            for p in [p2, p3, p4] {
                if p < mn {
                    mn = p.clone();
                }
                if p > mx {
                    mx = p;
                }
            }
            let c = BigRational::from(c.clone());
            alo = mn + &c;
            ahi = mx + &c;
        }
        (alo, ahi)
    }

    /// The reciprocal polynomial `x^d p(1/x)` (coefficient reversal).
    pub fn reciprocal(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::DegenerateInput("zero polynomial".into()));
        }
        let mut v = self.coeffs.clone();
        v.reverse();
        Ok(IntPoly::new(v))
    }

    /// True iff the coefficients read the same forwards and backwards.
    pub fn is_palindromic(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::DegenerateInput("zero polynomial".into()));
        }
        let n = self.coeffs.len();
        Ok((0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i]))
    }

    /// `p(c x)` as an integer polynomial after clearing the denominator:
    /// returns `den^deg * p((num/den) x)` for `c = num/den`.
    pub fn scale_argument(&self, c: &BigRational) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let d = self.degree();
        let num = c.numer();
        let den = c.denom();
        let mut npow = BigInt::one();
        let mut dpows = vec![BigInt::one(); d + 1];
        for i in (0..d).rev() {
            dpows[i] = &dpows[i + 1] * den;
        }
        let mut v = Vec::with_capacity(d + 1);
        for (i, coef) in self.coeffs.iter().enumerate() {
            v.push(coef * &npow * &dpows[i]);
            npow *= num;
        }
        IntPoly::new(v)
    }

    /// `p(-x)`.
    pub fn substitute_neg_x(&self) -> IntPoly {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        IntPoly::new(v)
    }

    /// For a palindromic polynomial of even degree `2n` with `p(0) != 0`,
    /// the unique `q` of degree `n` with `p(x) = x^n q(x + 1/x)`.
    ///
    /// Unit-circle root pairs of `p` correspond to real roots of `q`
    /// in `(-2, 2)`.
    pub fn trace_transform(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::DegenerateInput("zero polynomial".into()));
        }
        if !self.is_palindromic()? || self.degree() % 2 != 0 {
            return Err(Error::DegenerateInput(
                "trace transform needs an even-degree palindromic polynomial".into(),
            ));
        }
        let n = self.degree() / 2;
        // t_j(y) = x^j + x^-j in y = x + 1/x: t_0 = 2, t_1 = y,
        // t_{j+1} = y t_j - t_{j-1}.
        let mut t_prev = IntPoly::from_i64(&[2]);
        let mut t_cur = IntPoly::x();
        let mut q = IntPoly::constant(self.coeff(n));
        for j in 1..=n {
            q = q.add(&t_cur.scale(&self.coeff(n + j)));
            let next = IntPoly::x().mul(&t_cur).sub(&t_prev);
            t_prev = t_cur;
            t_cur = next;
        }
        Ok(q)
    }

    /// `x^d c(x + 1/x + 2)` for `c = self` of degree `d`, expanded exactly
    /// using `x + 1/x + 2 = (x+1)^2 / x`. This is the transform sending the
    /// eigenvalue variable of `N N^t` to the stretch variable.
    pub fn compose_x_plus_inv_plus_two(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::DegenerateInput("zero polynomial".into()));
        }
        let d = self.degree();
        let xp1_sq = IntPoly::from_i64(&[1, 2, 1]);
        let mut acc = IntPoly::zero();
        let mut pw = IntPoly::one(); // (x+1)^(2j)
        for j in 0..=d {
            let term = pw
                .scale(&self.coeff(j))
                .mul(&IntPoly::monomial(BigInt::one(), d - j));
            acc = acc.add(&term);
            if j < d {
                pw = pw.mul(&xp1_sq);
            }
        }
        Ok(acc)
    }

    /// Strips all factors of `x`, returning the cofactor and the multiplicity.
    pub fn strip_x_powers(&self) -> (IntPoly, usize) {
        if self.is_zero() {
            return (IntPoly::zero(), 0);
        }
        let k = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        (IntPoly::new(self.coeffs[k..].to_vec()), k)
    }

    /// Cauchy root bound: every complex root has modulus
    /// `< 1 + max|c_i| / |lead|`.
    pub fn cauchy_bound(&self) -> BigRational {
        if self.is_zero() || self.degree() == 0 {
            return BigRational::one();
        }
        let lead = self.leading().unwrap().abs();
        let mx = self
            .coeffs
            .iter()
            .take(self.degree())
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero);
        BigRational::one() + BigRational::new(mx, lead)
    }

    /// Parses the comma-separated ascending coefficient format,
    /// e.g. `1,-2,-2,-2,1`.
    pub fn parse_csv(s: &str) -> Result<IntPoly> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InputError("empty polynomial string".into()));
        }
        let mut v = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let c: BigInt = tok
                .parse()
                .map_err(|_| Error::InputError(format!("bad coefficient `{tok}`")))?;
            v.push(c);
        }
        Ok(IntPoly::new(v))
    }

    /// Renders the comma-separated ascending coefficient format.
    pub fn to_csv(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Quotient of `a` by a divisor `b` that divides `a` in `Q[x]`; the result
/// is scaled back to a primitive integer polynomial. Errors if `b` does not
/// divide `a` over the rationals.
pub(crate) fn rational_quotient(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    if b.is_zero() {
        return Err(Error::DegenerateInput("division by zero polynomial".into()));
    }
    if a.is_zero() {
        return Ok(IntPoly::zero());
    }
    let da = a.degree();
    let db = b.degree();
    if da < db {
        return Err(Error::InexactDivision);
    }
    // Scale a by lead(b)^(da-db+1) so the classical division is integral.
    let lead = b.leading().unwrap();
    let scaled = a.scale(&lead.pow((da - db + 1) as u32));
    let q = scaled.divexact(b)?;
    Ok(q.primitive())
}

/// The polynomial `p_{g,k}(x) = x^{2g} - (k-2)(x + ... + x^{2g-1}) + 1`
/// whose largest root is the stretch factor of the two-multitwist family.
pub fn salem_family_poly(g: u32, k: u32) -> Result<IntPoly> {
    if g < 2 || k < 3 {
        return Err(Error::OutOfRange(format!(
            "salem_family_poly needs g >= 2 and k >= 3, got g={g}, k={k}"
        )));
    }
    let d = 2 * g as usize;
    let mid = BigInt::from(-((k as i64) - 2));
    let mut v = vec![mid; d + 1];
    v[0] = BigInt::one();
    v[d] = BigInt::one();
    Ok(IntPoly::new(v))
}

/// `(x - 1) * p_{g,k}(x) = x^{2g+1} - (k-1) x^{2g} + (k-1) x - 1`.
pub fn salem_family_q_poly(g: u32, k: u32) -> Result<IntPoly> {
    let p = salem_family_poly(g, k)?;
    Ok(IntPoly::from_i64(&[-1, 1]).mul(&p))
}

pub(crate) fn sign_of(x: &BigInt) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub(crate) fn rat_sign(x: &BigRational) -> i32 {
    sign_of(x.numer())
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
