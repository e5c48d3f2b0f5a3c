//! Exact rational helpers. Every fractional quantity (average thresholds,
//! coverage fractions, edge density) goes through here; nothing in the
//! library touches floating point.

use num_rational::Ratio;
use num_traits::Signed;

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Parses `"p"` or `"p/q"`. Decimal notation is rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::BadRational(text.to_string());
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let is_int = |s: &str| {
        let digits = s.strip_prefix('-').unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(num) || !is_int(den) || den.starts_with('-') {
        return Err(bad());
    }
    let p: i64 = num.parse().map_err(|_| bad())?;
    let q: i64 = den.parse().map_err(|_| bad())?;
    if q == 0 {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

pub fn ceil_to_i64(x: Rational) -> i64 {
    x.ceil().to_integer()
}

pub fn floor_to_i64(x: Rational) -> i64 {
    x.floor().to_integer()
}

/// Least integer `>= x`, clamped below at zero.
pub fn ceil_nonneg(x: Rational) -> usize {
    let c = ceil_to_i64(x);
    if c <= 0 {
        0
    } else {
        c as usize
    }
}

pub fn int(x: usize) -> Rational {
    Rational::from_integer(x as i64)
}

pub(crate) fn require_open_unit(rho: Rational) -> Result<()> {
    if rho.is_positive() && rho < Rational::from_integer(1) {
        Ok(())
    } else {
        Err(Error::RhoOutOfRange(rho))
    }
}

pub(crate) fn require_open_interval(value: Rational, low: i64, high: i64) -> Result<()> {
    let (lo, hi) = (Rational::from_integer(low), Rational::from_integer(high));
    if value > lo && value < hi {
        Ok(())
    } else {
        Err(Error::FactorOutOfRange {
            value,
            low: lo,
            high: hi,
        })
    }
}

/// Formats as `p` or `p/q` in lowest terms.
pub fn format_rational(x: Rational) -> String {
    if *x.denom() == 1 {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
