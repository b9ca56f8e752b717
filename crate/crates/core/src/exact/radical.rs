//! Bound values: exact surds when a radicand denests, certified rational
//! enclosures otherwise.
//!
//! The bound functions of the crate all have the shape "surd expression with
//! one inner square root". When the inner radicand is a rational square, or
//! a rational square times the radicand of the surrounding field, the whole
//! expression collapses to a `QuadSurd` and comparisons become symbolic.
//! Equality is only ever concluded on that branch; the interval branch can
//! decide strict orderings but never equality.

use std::fmt;

use num::bigint::BigInt;

use super::interval::RatInterval;
use super::surd::QuadSurd;
use crate::error::{Error, Result};

/// Expression tree over exact surd leaves with square-root nodes.
#[derive(Clone, Debug, PartialEq)]
pub enum RadExpr {
    Surd(QuadSurd),
    Sqrt(Box<RadExpr>),
    Add(Box<RadExpr>, Box<RadExpr>),
    Sub(Box<RadExpr>, Box<RadExpr>),
    Mul(Box<RadExpr>, Box<RadExpr>),
    Div(Box<RadExpr>, Box<RadExpr>),
}

impl RadExpr {
    pub fn surd(x: QuadSurd) -> Self {
        RadExpr::Surd(x)
    }

    pub fn sqrt(x: RadExpr) -> Self {
        RadExpr::Sqrt(Box::new(x))
    }

    pub fn add(a: RadExpr, b: RadExpr) -> Self {
        RadExpr::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: RadExpr, b: RadExpr) -> Self {
        RadExpr::Sub(Box::new(a), Box::new(b))
    }

    pub fn mul(a: RadExpr, b: RadExpr) -> Self {
        RadExpr::Mul(Box::new(a), Box::new(b))
    }

    pub fn div(a: RadExpr, b: RadExpr) -> Self {
        RadExpr::Div(Box::new(a), Box::new(b))
    }

    fn collect_field_hints(&self, out: &mut Vec<BigInt>) {
        match self {
            RadExpr::Surd(x) => {
                if !x.is_rational() && !out.contains(x.d()) {
                    out.push(x.d().clone());
                }
            }
            RadExpr::Sqrt(inner) => inner.collect_field_hints(out),
            RadExpr::Add(a, b) | RadExpr::Sub(a, b) | RadExpr::Mul(a, b) | RadExpr::Div(a, b) => {
                a.collect_field_hints(out);
                b.collect_field_hints(out);
            }
        }
    }

    /// Outward-rounded enclosure. Inner radicands certified nonnegative by
    /// the caller may still straddle zero at low precision; `sqrt` clamps.
    pub fn eval_interval(&self, bits: u32) -> Result<RatInterval> {
        match self {
            RadExpr::Surd(x) => Ok(x.enclosure(bits)),
            RadExpr::Sqrt(inner) => inner.eval_interval(bits)?.sqrt(bits),
            RadExpr::Add(a, b) => Ok(a.eval_interval(bits)?.add(&b.eval_interval(bits)?)),
            RadExpr::Sub(a, b) => Ok(a.eval_interval(bits)?.sub(&b.eval_interval(bits)?)),
            RadExpr::Mul(a, b) => Ok(a.eval_interval(bits)?.mul(&b.eval_interval(bits)?)),
            RadExpr::Div(a, b) => a.eval_interval(bits)?.div(&b.eval_interval(bits)?),
        }
    }

    /// Collapses the tree to a single surd when every square root denests
    /// into the fields already present; records one certificate per denested
    /// root.
    fn try_exact(&self, hints: &[BigInt], certs: &mut Vec<SquareCertificate>) -> Option<QuadSurd> {
        match self {
            RadExpr::Surd(x) => Some(x.clone()),
            RadExpr::Sqrt(inner) => {
                let radicand = inner.try_exact(hints, certs)?;
                let root = radicand.sqrt_with_hints(hints)?;
                certs.push(SquareCertificate {
                    radicand,
                    root: root.clone(),
                });
                Some(root)
            }
            RadExpr::Add(a, b) => a
                .try_exact(hints, certs)?
                .checked_add(&b.try_exact(hints, certs)?)
                .ok(),
            RadExpr::Sub(a, b) => a
                .try_exact(hints, certs)?
                .checked_sub(&b.try_exact(hints, certs)?)
                .ok(),
            RadExpr::Mul(a, b) => a
                .try_exact(hints, certs)?
                .checked_mul(&b.try_exact(hints, certs)?)
                .ok(),
            RadExpr::Div(a, b) => a
                .try_exact(hints, certs)?
                .checked_div(&b.try_exact(hints, certs)?)
                .ok(),
        }
    }
}

/// Witness that a radicand was an exact square: root * root = radicand.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareCertificate {
    pub radicand: QuadSurd,
    pub root: QuadSurd,
}

impl fmt::Display for SquareCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sqrt({}) = {}", self.radicand, self.root)
    }
}

/// An algebraic bound: exact surd when the inner radicand denests, otherwise
/// a refinable certified enclosure.
#[derive(Clone, Debug)]
pub struct BoundValue {
    expr: RadExpr,
    exact: Option<QuadSurd>,
    certificates: Vec<SquareCertificate>,
}

pub const REFINE_START_BITS: u32 = 64;
pub const REFINE_CAP_BITS: u32 = 4096;

impl BoundValue {
    pub fn new(expr: RadExpr) -> Self {
        let mut hints = Vec::new();
        expr.collect_field_hints(&mut hints);
        let mut certificates = Vec::new();
        let exact = expr.try_exact(&hints, &mut certificates);
        if exact.is_none() {
            certificates.clear();
        }
        BoundValue {
            expr,
            exact,
            certificates,
        }
    }

    pub fn from_surd(x: QuadSurd) -> Self {
        BoundValue {
            expr: RadExpr::Surd(x.clone()),
            exact: Some(x),
            certificates: Vec::new(),
        }
    }

    pub fn exact(&self) -> Option<&QuadSurd> {
        self.exact.as_ref()
    }

    pub fn certificates(&self) -> &[SquareCertificate] {
        &self.certificates
    }

    pub fn expr(&self) -> &RadExpr {
        &self.expr
    }

    pub fn enclosure(&self, bits: u32) -> Result<RatInterval> {
        match &self.exact {
            Some(x) => Ok(x.enclosure(bits)),
            None => self.expr.eval_interval(bits),
        }
    }

    /// Nested refinement chain: each interval contains the next and widths
    /// at least halve, the contract comparison loops rely on.
    pub fn refined(&self, levels: u32) -> Result<Vec<RatInterval>> {
        let mut out: Vec<RatInterval> = Vec::with_capacity(levels as usize);
        let mut bits = REFINE_START_BITS;
        for _ in 0..levels {
            let mut next = self.enclosure(bits)?;
            if let Some(prev) = out.last() {
                let two = num::rational::BigRational::from_integer(BigInt::from(2));
                loop {
                    next = next
                        .intersect(prev)
                        .expect("enclosures of one value always overlap");
                    if next.width() * &two <= prev.width() || bits >= REFINE_CAP_BITS {
                        break;
                    }
                    bits = (bits * 2).min(REFINE_CAP_BITS);
                    next = self.enclosure(bits)?;
                }
            }
            out.push(next);
            bits = (bits * 2).min(REFINE_CAP_BITS * 2);
        }
        Ok(out)
    }

    pub fn decimal(&self, sig_digits: usize) -> Result<String> {
        if let Some(x) = &self.exact {
            return Ok(x.decimal(sig_digits));
        }
        use super::bigrat::decimal_significant;
        let mut bits = (sig_digits as u32) * 4 + 32;
        loop {
            let enc = self.enclosure(bits)?;
            let lo_s = decimal_significant(enc.lo(), sig_digits);
            let hi_s = decimal_significant(enc.hi(), sig_digits);
            if lo_s == hi_s {
                return Ok(lo_s);
            }
            bits *= 2;
            if bits > 1 << 20 {
                return Ok(hi_s);
            }
        }
    }

    /// Human-readable exact form when available, else a certified decimal.
    pub fn render(&self, sig_digits: usize) -> String {
        match &self.exact {
            Some(x) => x.to_string(),
            None => self
                .decimal(sig_digits)
                .map(|d| format!("~{d}"))
                .unwrap_or_else(|e| format!("<{e}>")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum BoundOrdering {
    Less,
    Equal(Vec<SquareCertificate>),
    Greater,
}

impl BoundOrdering {
    pub fn is_equal(&self) -> bool {
        matches!(self, BoundOrdering::Equal(_))
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            BoundOrdering::Less => "<",
            BoundOrdering::Equal(_) => "=",
            BoundOrdering::Greater => ">",
        }
    }
}

/// Exact comparison of a surd against a bound value.
///
/// Strict orderings between distinct algebraic numbers terminate under
/// doubling precision; equality is returned only with the symbolic
/// certificate chain that collapsed the bound to a surd. Hitting the
/// precision cap without either signals a missed perfect-square case.
pub fn bound_cmp(x: &QuadSurd, y: &BoundValue) -> Result<BoundOrdering> {
    if let Some(exact) = y.exact() {
        return Ok(match x.cmp_exact(exact) {
            std::cmp::Ordering::Less => BoundOrdering::Less,
            std::cmp::Ordering::Equal => BoundOrdering::Equal(y.certificates().to_vec()),
            std::cmp::Ordering::Greater => BoundOrdering::Greater,
        });
    }
    let mut bits = REFINE_START_BITS;
    loop {
        let ix = x.enclosure(bits);
        let iy = y.enclosure(bits)?;
        if ix.strictly_below(&iy) {
            return Ok(BoundOrdering::Less);
        }
        if iy.strictly_below(&ix) {
            return Ok(BoundOrdering::Greater);
        }
        if bits >= REFINE_CAP_BITS {
            return Err(Error::Indeterminate {
                bits,
                lhs_lo: ix.lo().to_string(),
                lhs_hi: ix.hi().to_string(),
                rhs_lo: iy.lo().to_string(),
                rhs_hi: iy.hi().to_string(),
            });
        }
        bits *= 2;
    }
}
