//! Exact rational numbers and their canonical text form.
//!
//! All utilities, probabilities, and belief weights in this workspace are
//! arbitrary-precision rationals. The interchange format is a string:
//! an optionally signed integer, or `numerator/denominator`, e.g. `"3"`,
//! `"-1"`, `"5/2"`. Floating point is never used.

use crate::error::{GameError, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from numerator and denominator. Panics on a zero denominator;
/// use only with literal constants.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse the canonical text form. Whitespace around tokens is tolerated,
/// decimals and exponents are not.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let (ns, ds) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let bad = || GameError::Validation(format!("not a rational: {s:?}"));
    let n: BigInt = ns.parse().map_err(|_| bad())?;
    let d: BigInt = ds.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(GameError::Validation(format!("zero denominator: {s:?}")));
    }
    Ok(Rat::new(n, d))
}

/// Canonical text form: lowest terms, `-` on the numerator, no `/1`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Render a rational in `[0,1]` as a percentage with a fixed number of
/// decimal places, rounding half away from zero. `render_pct(9/125, 1)`
/// is `"7.2"`; `render_pct(9/125, 0)` is `"7"`.
pub fn render_pct(r: &Rat, decimals: u32) -> String {
    let scale = BigInt::from(10u32).pow(decimals);
    // value * 100 * 10^d, rounded half away from zero
    let scaled = r * Rat::from_integer(BigInt::from(100) * &scale);
    let two = BigInt::from(2);
    let (n, d) = (scaled.numer().clone(), scaled.denom().clone());
    let rounded = if n.is_negative() {
        -((-&n * &two + &d) / (&d * &two))
    } else {
        (&n * &two + &d) / (&d * &two)
    };
    if decimals == 0 {
        return rounded.to_string();
    }
    let neg = rounded.is_negative();
    let abs = rounded.abs().to_string();
    let abs = format!("{:0>width$}", abs, width = decimals as usize + 1);
    let cut = abs.len() - decimals as usize;
    let (int, frac) = abs.split_at(cut);
    format!("{}{}.{}", if neg { "-" } else { "" }, int, frac)
}
