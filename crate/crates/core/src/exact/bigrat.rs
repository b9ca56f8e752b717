//! Arbitrary-precision rationals and rendering helpers.
//!
//! `BigRat` is `num`'s reduced rational over `BigInt`; it already maintains
//! the positive-denominator, gcd-1 invariant this crate relies on.

use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use super::squarefree::perfect_square_root;

pub type BigRat = BigRational;

pub fn rat_int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> BigRat {
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

/// Square root of a nonnegative rational when it is itself rational.
pub fn rational_square_root(x: &BigRat) -> Option<BigRat> {
    if x.is_negative() {
        return None;
    }
    let num = perfect_square_root(x.numer().magnitude())?;
    let den = perfect_square_root(x.denom().magnitude())?;
    Some(BigRat::new(
        BigInt::from_biguint(Sign::Plus, num),
        BigInt::from_biguint(Sign::Plus, den),
    ))
}

/// Decimal rendering with `digits` digits after the point, rounded toward zero.
/// Exactness lives elsewhere; this is display plumbing.
pub fn decimal_fixed(x: &BigRat, digits: usize) -> String {
    let neg = x.is_negative();
    let abs = x.abs();
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (abs.numer() * &scale) / abs.denom();
    let s = scaled.to_string();
    let (ip, fp) = if s.len() > digits {
        let split = s.len() - digits;
        (s[..split].to_string(), s[split..].to_string())
    } else {
        ("0".to_string(), format!("{:0>width$}", s, width = digits))
    };
    let sign = if neg && !(ip == "0" && fp.chars().all(|c| c == '0')) {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        format!("{sign}{ip}")
    } else {
        format!("{sign}{ip}.{fp}")
    }
}

/// floor(log10(|x|)) for nonzero rationals; used to place significant digits.
fn magnitude_exponent(x: &BigRat) -> i64 {
    debug_assert!(!x.is_zero());
    let num_digits = x.numer().magnitude().to_string().len() as i64;
    let den_digits = x.denom().magnitude().to_string().len() as i64;
    // first guess within +-1, then correct exactly
    let mut e = num_digits - den_digits;
    let ten = BigRat::from_integer(BigInt::from(10));
    let pow = |k: i64| -> BigRat {
        if k >= 0 {
            BigRat::from_integer(BigInt::from(10u32).pow(k as u32))
        } else {
            BigRat::new(BigInt::one(), BigInt::from(10u32).pow((-k) as u32))
        }
    };
    let abs = x.abs();
    while abs < pow(e) {
        e -= 1;
    }
    while abs >= pow(e) * &ten {
        e += 1;
    }
    e
}

/// Decimal rendering with `sig` significant digits (truncated, not rounded,
/// so a caller holding an enclosure of width below one ulp stays certified).
pub fn decimal_significant(x: &BigRat, sig: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let e = magnitude_exponent(x);
    if e >= sig as i64 {
        // integer part already longer than the requested digits
        return decimal_fixed(x, 0);
    }
    let frac_digits = (sig as i64 - 1 - e).max(0) as usize;
    decimal_fixed(x, frac_digits)
}
