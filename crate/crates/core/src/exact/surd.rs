//! Exact arithmetic in real quadratic fields.
//!
//! A `QuadSurd` is the canonical form of (a + b*sqrt(d))/c over arbitrary
//! precision integers: d squarefree, c positive, gcd(a, b, c) = 1, and
//! rationals embedded as b = 0, d = 1. Canonical fields make equality a
//! plain field comparison, and ordering never touches floating point.

use std::cmp::Ordering;
use std::fmt;

use num::bigint::{BigInt, Sign};
use num::integer::Integer;
use num::traits::{One, Signed, Zero};

use super::bigrat::BigRat;
use super::squarefree::{perfect_square_root, squarefree_split};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl QuadSurd {
    /// Canonicalizes (a + b*sqrt(d))/c. The square part of d is folded into
    /// b, rationals land on the d = 1 embedding, and gcd(a, b, c) = 1 with
    /// c > 0.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let (a, mut b, mut c, d) = (a.into(), b.into(), c.into(), d.into());
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if d.is_negative() {
            return Err(Error::UnsupportedField(d));
        }
        let (square, mut d) = if b.is_zero() || d.is_zero() {
            (BigInt::one(), BigInt::one())
        } else {
            let (s, f) = squarefree_split(d.magnitude());
            (
                BigInt::from_biguint(Sign::Plus, s),
                BigInt::from_biguint(Sign::Plus, f),
            )
        };
        b *= square;
        let mut a = a;
        if d.is_zero() || d.is_one() {
            // sqrt(0) = 0, sqrt(1) = 1: fold into the rational part
            if d.is_one() {
                a += &b;
            }
            b = BigInt::zero();
            d = BigInt::one();
        }
        if b.is_zero() {
            d = BigInt::one();
        }
        if c.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        let g = a.gcd(&b).gcd(&c);
        if !g.is_zero() && !g.is_one() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        if a.is_zero() && b.is_zero() {
            c = BigInt::one();
        }
        Ok(QuadSurd { a, b, c, d })
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        let n = n.into();
        QuadSurd {
            a: n,
            b: BigInt::zero(),
            c: BigInt::one(),
            d: BigInt::one(),
        }
    }

    pub fn from_rat(r: &BigRat) -> Self {
        QuadSurd::new(r.numer().clone(), 0, r.denom().clone(), 1).expect("denominator is nonzero")
    }

    /// sqrt(n) for a nonnegative integer, reduced to canonical form.
    pub fn sqrt_int(n: impl Into<BigInt>) -> Result<Self> {
        QuadSurd::new(0, 1, 1, n)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<BigRat> {
        if self.is_rational() {
            Some(BigRat::new(self.a.clone(), self.c.clone()))
        } else {
            None
        }
    }

    /// Radicand shared by two operands, or the mismatch error.
    fn common_field(&self, other: &Self) -> Result<BigInt> {
        if self.is_rational() {
            Ok(other.d.clone())
        } else if other.is_rational() || self.d == other.d {
            Ok(self.d.clone())
        } else {
            Err(Error::FieldMismatch(self.d.clone(), other.d.clone()))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let d = self.common_field(other)?;
        QuadSurd::new(
            &self.a * &other.c + &other.a * &self.c,
            &self.b * &other.c + &other.b * &self.c,
            &self.c * &other.c,
            d,
        )
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_field(other)?;
        QuadSurd::new(
            &self.a * &other.a + &self.b * &other.b * &d,
            &self.a * &other.b + &self.b * &other.a,
            &self.c * &other.c,
            d,
        )
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // 1/((a + b sqrt d)/c) = c (a - b sqrt d) / (a^2 - b^2 d)
        let norm = &self.a * &self.a - &self.b * &self.b * &self.d;
        QuadSurd::new(&self.c * &self.a, -(&self.c * &self.b), norm, self.d.clone())
    }

    pub fn neg(&self) -> Self {
        QuadSurd {
            a: -&self.a,
            b: -&self.b,
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn conj(&self) -> Self {
        QuadSurd {
            a: self.a.clone(),
            b: -&self.b,
            c: self.c.clone(),
            d: self.d.clone(),
        }
    }

    /// Exact sign via integer arithmetic only.
    pub fn sign(&self) -> i32 {
        sign_pair(&self.a, &self.b, &self.d)
    }

    /// Exact ordering, including operands from distinct quadratic fields.
    /// The difference has the shape A + B sqrt(d1) + C sqrt(d2); its sign is
    /// resolved by sign tracking and squaring, never numerically.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        let a_part = &self.a * &other.c - &other.a * &self.c;
        let b_part = &self.b * &other.c;
        let c_part = -(&other.b * &self.c);
        let s = if self.d == other.d {
            sign_pair(&a_part, &(b_part + c_part), &self.d)
        } else if b_part.is_zero() {
            sign_pair(&a_part, &c_part, &other.d)
        } else if c_part.is_zero() {
            sign_pair(&a_part, &b_part, &self.d)
        } else {
            sign_mixed(&a_part, &b_part, &self.d, &c_part, &other.d)
        };
        match s {
            x if x < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    /// Exact floor. The candidate from the integer square root is off by at
    /// most the open unit interval around b*sqrt(d), which the divisions
    /// below absorb exactly.
    pub fn floor(&self) -> BigInt {
        if self.is_rational() {
            return self.a.div_floor(&self.c);
        }
        let s = (&self.b * &self.b * &self.d).sqrt();
        if self.b.is_positive() {
            (&self.a + s).div_floor(&self.c)
        } else {
            (&self.a - s - BigInt::one()).div_floor(&self.c)
        }
    }

    pub fn round_nearest(&self) -> BigInt {
        // floor(x + 1/2)
        let shifted = QuadSurd::new(
            BigInt::from(2) * &self.a + &self.c,
            BigInt::from(2) * &self.b,
            BigInt::from(2) * &self.c,
            self.d.clone(),
        )
        .expect("denominator stays nonzero");
        shifted.floor()
    }

    /// Distance to the nearest integer.
    pub fn dist_to_nearest_int(&self) -> Self {
        let n = Self::from_int(self.round_nearest());
        self.checked_sub(&n).expect("integers embed in any field").abs()
    }

    /// Exact square root when it lies in a quadratic field reachable without
    /// factoring: the value is a rational square, d_hint times a rational
    /// square for one of the supplied radicands, or a denestable surd.
    pub fn sqrt_with_hints(&self, hints: &[BigInt]) -> Option<Self> {
        match self.sign() {
            x if x < 0 => return None,
            0 => return Some(Self::zero()),
            _ => {}
        }
        if let Some(r) = self.to_rational() {
            let num = r.numer().magnitude();
            let den = r.denom().magnitude();
            if let (Some(n), Some(m)) = (perfect_square_root(num), perfect_square_root(den)) {
                return Some(Self::from_rat(&BigRat::new(n.into(), m.into())));
            }
            for d in hints {
                if d <= &BigInt::one() {
                    continue;
                }
                // r = v^2 * d  <=>  r/d is a rational square
                let scaled = &r / BigRat::from_integer(d.clone());
                let num = scaled.numer().magnitude();
                let den = scaled.denom().magnitude();
                if let (Some(n), Some(m)) = (perfect_square_root(num), perfect_square_root(den)) {
                    // sqrt(r) = (n/m) sqrt(d)
                    return QuadSurd::new(0, BigInt::from(n), BigInt::from(m), d.clone()).ok();
                }
            }
            return None;
        }
        self.denest_sqrt()
    }

    /// sqrt((a + b sqrt d)/c) = u + v sqrt(d) when the classical denesting
    /// criterion holds: a^2 - b^2 d and (a +- w)/(2c) are rational squares.
    fn denest_sqrt(&self) -> Option<Self> {
        let norm = &self.a * &self.a - &self.b * &self.b * &self.d;
        if norm.is_negative() {
            return None;
        }
        let w = BigInt::from_biguint(Sign::Plus, perfect_square_root(norm.magnitude())?);
        for w_signed in [w.clone(), -w] {
            let u_sq = BigRat::new(&self.a + &w_signed, BigInt::from(2) * &self.c);
            if u_sq.is_negative() {
                continue;
            }
            let (num, den) = (u_sq.numer().magnitude(), u_sq.denom().magnitude());
            let (Some(un), Some(ud)) = (perfect_square_root(num), perfect_square_root(den)) else {
                continue;
            };
            let u = BigRat::new(un.into(), ud.into());
            if u.is_zero() {
                continue;
            }
            // v = b / (2 c u)
            let v = BigRat::new(self.b.clone(), BigInt::from(2) * &self.c) / &u;
            // candidate u + v sqrt(d), verified by squaring
            let denom = u.denom().lcm(v.denom());
            let cand = QuadSurd::new(
                u.numer() * (&denom / u.denom()),
                v.numer() * (&denom / v.denom()),
                denom,
                self.d.clone(),
            )
            .ok()?;
            if cand.sign() >= 0 {
                if let Ok(sq) = cand.checked_mul(&cand) {
                    if sq == *self {
                        return Some(cand);
                    }
                }
            }
        }
        None
    }

    /// Exact square root in any quadratic field, factoring as needed.
    pub fn sqrt_exact(&self) -> Option<Self> {
        match self.sign() {
            x if x < 0 => return None,
            0 => return Some(Self::zero()),
            _ => {}
        }
        if let Some(r) = self.to_rational() {
            // sqrt(n/m) = sqrt(n m)/m
            return QuadSurd::new(0, 1, r.denom().clone(), r.numer() * r.denom()).ok();
        }
        self.denest_sqrt()
    }
}

/// Sign of p + q*sqrt(d) with d >= 1.
fn sign_pair(p: &BigInt, q: &BigInt, d: &BigInt) -> i32 {
    if d.is_one() {
        return sign_of(&(p + q));
    }
    if q.is_zero() {
        return sign_of(p);
    }
    if p.is_zero() {
        return sign_of(q);
    }
    let sp = sign_of(p);
    if sp == sign_of(q) {
        return sp;
    }
    // opposite signs: compare p^2 against q^2 d (equality impossible for
    // squarefree d >= 2 with q != 0)
    let t = p * p - q * q * d;
    if t.is_positive() {
        sp
    } else {
        -sp
    }
}

/// Sign of A + B sqrt(d1) + C sqrt(d2) for distinct squarefree d1, d2 >= 2
/// and nonzero B, C.
fn sign_mixed(a: &BigInt, b: &BigInt, d1: &BigInt, c: &BigInt, d2: &BigInt) -> i32 {
    let su = sign_pair(a, b, d1);
    let sv = sign_of(c);
    if su == 0 {
        return sv;
    }
    if sv == 0 || su == sv {
        return su;
    }
    // |A + B sqrt(d1)| vs |C sqrt(d2)|: square both sides, the difference
    // stays inside Q(sqrt(d1))
    let u_sq_rat = a * a + b * b * d1 - c * c * d2;
    let u_sq_irr = BigInt::from(2) * a * b;
    match sign_pair(&u_sq_rat, &u_sq_irr, d1) {
        0 => 0,
        x if x > 0 => su,
        _ => sv,
    }
}

fn sign_of(x: &BigInt) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

impl PartialOrd for QuadSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}

impl Ord for QuadSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            if self.c.is_one() {
                return write!(f, "{}", self.a);
            }
            return write!(f, "{}/{}", self.a, self.c);
        }
        let root = if self.b.magnitude().is_one() {
            format!("sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", self.b.magnitude(), self.d)
        };
        let numerator = if self.a.is_zero() {
            if self.b.is_negative() {
                format!("-{root}")
            } else {
                root
            }
        } else if self.a.is_negative() && self.b.is_positive() {
            // e.g. (sqrt(3)-1)/2 rather than (-1+sqrt(3))/2
            format!("{root}{}", self.a)
        } else if self.b.is_negative() {
            format!("{}-{root}", self.a)
        } else {
            format!("{}+{root}", self.a)
        };
        if self.c.is_one() {
            if self.a.is_zero() {
                write!(f, "{numerator}")
            } else {
                write!(f, "({numerator})")
            }
        } else if self.a.is_zero() {
            write!(f, "{numerator}/{}", self.c)
        } else {
            write!(f, "({numerator})/{}", self.c)
        }
    }
}

macro_rules! surd_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &QuadSurd {
            type Output = QuadSurd;
            fn $method(self, rhs: &QuadSurd) -> QuadSurd {
                self.$checked(rhs).expect("operands share a quadratic field")
            }
        }
    };
}

surd_binop!(Add, add, checked_add);
surd_binop!(Sub, sub, checked_sub);
surd_binop!(Mul, mul, checked_mul);
surd_binop!(Div, div, checked_div);

impl std::ops::Neg for &QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> QuadSurd {
        QuadSurd::neg(self)
    }
}
