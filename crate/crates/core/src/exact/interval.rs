//! Rational interval arithmetic with outward rounding.
//!
//! Endpoints are exact rationals, so addition, multiplication and division
//! introduce no rounding at all; only square roots widen the interval, by
//! less than 2^-bits relative to the scaled integer square root.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};

use super::bigrat::BigRat;
use super::surd::QuadSurd;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    lo: BigRat,
    hi: BigRat,
}

impl RatInterval {
    pub fn new(lo: BigRat, hi: BigRat) -> Result<Self> {
        if lo > hi {
            return Err(Error::Domain(format!(
                "interval endpoints out of order: {lo} > {hi}"
            )));
        }
        Ok(RatInterval { lo, hi })
    }

    pub fn point(x: BigRat) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &BigRat {
        &self.lo
    }

    pub fn hi(&self) -> &BigRat {
        &self.hi
    }

    pub fn width(&self) -> BigRat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRat {
        (&self.hi + &self.lo) / BigRat::from_integer(BigInt::from(2))
    }

    pub fn contains(&self, x: &BigRat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = if self.lo >= other.lo { &self.lo } else { &other.lo };
        let hi = if self.hi <= other.hi { &self.hi } else { &other.hi };
        if lo <= hi {
            Some(RatInterval {
                lo: lo.clone(),
                hi: hi.clone(),
            })
        } else {
            None
        }
    }

    pub fn strictly_below(&self, other: &Self) -> bool {
        self.hi < other.lo
    }

    pub fn add(&self, other: &Self) -> Self {
        RatInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        RatInterval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn neg(&self) -> Self {
        RatInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().expect("nonempty").clone();
        let hi = products.iter().max().expect("nonempty").clone();
        RatInterval { lo, hi }
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.contains(&BigRat::zero()) {
            return Err(Error::DivisionByZero);
        }
        let recip = RatInterval {
            lo: other.hi.recip(),
            hi: other.lo.recip(),
        };
        Ok(self.mul(&recip))
    }

    /// Outward-rounded square root at roughly 2^-bits absolute precision.
    /// A lower endpoint below zero is clamped; callers certify nonnegativity
    /// of the true value before evaluating.
    pub fn sqrt(&self, bits: u32) -> Result<Self> {
        if self.hi.is_negative() {
            return Err(Error::Domain(
                "square root of a negative interval".to_string(),
            ));
        }
        let lo = if self.lo.is_negative() {
            BigRat::zero()
        } else {
            rat_sqrt_floor(&self.lo, bits)
        };
        let hi = rat_sqrt_ceil(&self.hi, bits);
        Ok(RatInterval { lo, hi })
    }
}

/// Largest t/(den * 2^bits) not exceeding sqrt(num/den).
fn rat_sqrt_floor(x: &BigRat, bits: u32) -> BigRat {
    debug_assert!(!x.is_negative());
    let num = x.numer();
    let den = x.denom();
    // sqrt(n/d) = sqrt(n d)/d
    let m = (num * den) << (2 * bits as usize);
    let t = m.sqrt();
    BigRat::new(t, den << (bits as usize))
}

fn rat_sqrt_ceil(x: &BigRat, bits: u32) -> BigRat {
    debug_assert!(!x.is_negative());
    let num = x.numer();
    let den = x.denom();
    let m = (num * den) << (2 * bits as usize);
    let t = m.sqrt() + BigInt::one();
    BigRat::new(t, den << (bits as usize))
}

impl QuadSurd {
    /// Certified enclosure of the value at the requested precision.
    pub fn enclosure(&self, bits: u32) -> RatInterval {
        if let Some(r) = self.to_rational() {
            return RatInterval::point(r);
        }
        let d = BigRat::from_integer(self.d().clone());
        let root = RatInterval {
            lo: rat_sqrt_floor(&d, bits),
            hi: rat_sqrt_ceil(&d, bits),
        };
        let b = RatInterval::point(BigRat::from_integer(self.b().clone()));
        let a = RatInterval::point(BigRat::from_integer(self.a().clone()));
        let c = RatInterval::point(BigRat::from_integer(self.c().clone()));
        a.add(&b.mul(&root))
            .div(&c)
            .expect("canonical denominator is nonzero")
    }

    /// Decimal rendering certified against a shrinking enclosure.
    pub fn decimal(&self, sig_digits: usize) -> String {
        use super::bigrat::decimal_significant;
        if let Some(r) = self.to_rational() {
            return decimal_significant(&r, sig_digits);
        }
        let mut bits = (sig_digits as u32) * 4 + 32;
        loop {
            let enc = self.enclosure(bits);
            let lo_s = decimal_significant(enc.lo(), sig_digits);
            let hi_s = decimal_significant(enc.hi(), sig_digits);
            if lo_s == hi_s {
                return lo_s;
            }
            bits *= 2;
            if bits > 1 << 20 {
                // value sits just below a rendering boundary; hi endpoint is
                // within one ulp, so report it
                return hi_s;
            }
        }
    }
}
