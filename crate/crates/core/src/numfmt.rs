//! Exact decimal parsing and formatting for rationals, plus rational
//! square-root bounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Parses a decimal or scientific literal (`2.618`, `-3`, `1e-3`, `2.5e2`)
/// into an exact rational.
pub fn parse_decimal(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::InputError("empty number".into()));
    }
    let (mantissa, exp10) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = s[pos + 1..]
                .parse()
                .map_err(|_| Error::InputError(format!("bad exponent in `{s}`")))?;
            (&s[..pos], e)
        }
        None => (s, 0i64),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.find('.') {
        Some(pos) => (&digits[..pos], &digits[pos + 1..]),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::InputError(format!("bad number `{s}`")));
    }
    let mut num = BigInt::zero();
    for c in int_part.chars().chain(frac_part.chars()) {
        let d = c
            .to_digit(10)
            .ok_or_else(|| Error::InputError(format!("bad digit `{c}` in `{s}`")))?;
        num = num * 10 + d;
    }
    if sign < 0 {
        num = -num;
    }
    let shift = exp10 - frac_part.len() as i64;
    let mut r = BigRational::from(num);
    if shift >= 0 {
        r *= BigRational::from(BigInt::from(10u32).pow(shift as u32));
    } else {
        r /= BigRational::from(BigInt::from(10u32).pow((-shift) as u32));
    }
    Ok(r)
}

/// Renders a rational with exactly `decimals` fractional digits
/// (round-half-away-from-zero).
pub fn format_decimals(r: &BigRational, decimals: u32) -> String {
    let scale = BigInt::from(10u32).pow(decimals);
    let scaled = r * BigRational::from(scale.clone());
    // round half away from zero
    let two = BigInt::from(2);
    let num = scaled.numer().clone();
    let den = scaled.denom().clone();
    let doubled = &num * &two;
    let q = &doubled / &den; // truncation toward zero
    let rounded = if q.is_negative() {
        (q - BigInt::one()) / &two
    } else {
        (q + BigInt::one()) / &two
    };
    let neg = rounded.is_negative();
    let mag = rounded.abs();
    let digits = mag.to_string();
    let d = decimals as usize;
    let s = if digits.len() <= d {
        format!("0.{}{}", "0".repeat(d - digits.len()), digits)
    } else if d == 0 {
        digits
    } else {
        format!(
            "{}.{}",
            &digits[..digits.len() - d],
            &digits[digits.len() - d..]
        )
    };
    if neg {
        format!("-{s}")
    } else {
        s
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    let n = r.numer().to_f64().unwrap_or(f64::NAN);
    let d = r.denom().to_f64().unwrap_or(f64::NAN);
    if d.is_finite() && n.is_finite() {
        n / d
    } else {
        // Fall back through a fixed-precision decimal rendering.
        format_decimals(r, 18).parse().unwrap_or(f64::NAN)
    }
}

/// Rational bounds `(lo, hi)` with `lo^2 <= x <= hi^2` and
/// `hi - lo <= 1/2^precision_bits`, for `x >= 0`.
pub fn sqrt_bounds(x: &BigRational, precision_bits: u32) -> Result<(BigRational, BigRational)> {
    if x.is_negative() {
        return Err(Error::OutOfRange("square root of a negative".into()));
    }
    if x.is_zero() {
        return Ok((BigRational::zero(), BigRational::zero()));
    }
    // Scale so that we take an integer square root of n * 4^p / d.
    let p = precision_bits + 1;
    let scale = BigInt::one() << (2 * p);
    let scaled = (x * BigRational::from(scale)).floor().to_integer();
    let s = scaled.sqrt(); // floor of integer sqrt
    let denom = BigInt::one() << p;
    let lo = BigRational::new(s.clone(), denom.clone());
    let hi = BigRational::new(s + BigInt::one(), denom);
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parses_plain_and_scientific() {
        assert_eq!(parse_decimal("2.618").unwrap(), rat(2618, 1000));
        assert_eq!(parse_decimal("-3").unwrap(), rat(-3, 1));
        assert_eq!(parse_decimal("1e-3").unwrap(), rat(1, 1000));
        assert_eq!(parse_decimal("2.5e2").unwrap(), rat(250, 1));
        assert_eq!(parse_decimal("0.001").unwrap(), rat(1, 1000));
        assert!(parse_decimal("abc").is_err());
        assert!(parse_decimal("").is_err());
    }

    #[test]
    fn formats_fixed_decimals() {
        assert_eq!(format_decimals(&rat(2618, 1000), 3), "2.618");
        assert_eq!(format_decimals(&rat(1, 3), 4), "0.3333");
        assert_eq!(format_decimals(&rat(2, 3), 4), "0.6667");
        assert_eq!(format_decimals(&rat(-5, 2), 2), "-2.50");
        assert_eq!(format_decimals(&rat(7, 1), 0), "7");
        // exact half rounds away from zero
        assert_eq!(format_decimals(&rat(25, 10), 0), "3");
        assert_eq!(format_decimals(&rat(-25, 10), 0), "-3");
    }

    #[test]
    fn sqrt_bounds_bracket() {
        for (n, d) in [(2i64, 1i64), (5, 1), (13, 4), (1, 3), (1000003, 7)] {
            let x = rat(n, d);
            let (lo, hi) = sqrt_bounds(&x, 30).unwrap();
            assert!(&lo * &lo <= x, "{n}/{d}");
            assert!(&hi * &hi >= x, "{n}/{d}");
            assert!(&hi - &lo <= rat(1, 1 << 30));
        }
    }
}
