//! Canonical continued fractions of rationals and quadratic surds.
//!
//! The representation keeps a_0 in the preperiod, so a purely periodic value
//! like the golden ratio reads `[1; (1)]`. Canonical form means: minimal
//! period, preperiod not absorbable into a rotation of the period, and
//! finite expansions ending in a quotient >= 2 (single terms excepted).

use std::collections::HashMap;
use std::fmt;

use num::bigint::BigInt;
use num::integer::Integer;
use num::traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::bigrat::BigRat;
use crate::exact::surd::QuadSurd;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CFExpansion {
    pre: Vec<BigInt>,
    period: Vec<BigInt>,
}

/// One convergent p_n/q_n. Seeds p_{-1} = 1, q_{-1} = 0, so q_0 = 1 always.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Convergent {
    pub n: usize,
    pub p: BigInt,
    pub q: BigInt,
}

impl CFExpansion {
    /// Builds and canonicalizes an expansion from raw quotient lists.
    pub fn new(pre: Vec<impl Into<BigInt>>, period: Vec<impl Into<BigInt>>) -> Result<Self> {
        let mut pre: Vec<BigInt> = pre.into_iter().map(Into::into).collect();
        let mut period: Vec<BigInt> = period.into_iter().map(Into::into).collect();
        if pre.is_empty() && period.is_empty() {
            return Err(Error::Domain("empty continued fraction".to_string()));
        }
        if pre.is_empty() {
            pre.push(period[0].clone());
            period.rotate_left(1);
        }
        for a in pre.iter().skip(1).chain(period.iter()) {
            if a < &BigInt::one() {
                return Err(Error::Domain(format!(
                    "partial quotient {a} below 1 past position 0"
                )));
            }
        }
        // minimal period: shortest divisor-length word that tiles it
        if !period.is_empty() {
            let len = period.len();
            for l in 1..len {
                if len % l == 0 && (l..len).all(|i| period[i] == period[i % l]) {
                    period.truncate(l);
                    break;
                }
            }
            // absorb preperiod tail into a rotation of the period
            while pre.len() > 1 && pre.last() == period.last() {
                pre.pop();
                period.rotate_right(1);
            }
        } else {
            // canonical finite form: last quotient >= 2 unless single term
            while pre.len() > 1 && pre.last() == Some(&BigInt::one()) {
                pre.pop();
                *pre.last_mut().expect("nonempty") += 1;
            }
        }
        Ok(CFExpansion { pre, period })
    }

    /// `[overline(word)]` under the a_0-in-preperiod convention.
    pub fn purely_periodic(word: Vec<impl Into<BigInt>>) -> Result<Self> {
        let word: Vec<BigInt> = word.into_iter().map(Into::into).collect();
        if word.is_empty() {
            return Err(Error::Domain("empty period".to_string()));
        }
        let mut period = word.clone();
        period.rotate_left(1);
        Self::new(vec![word[0].clone()], period)
    }

    pub fn preperiod(&self) -> &[BigInt] {
        &self.pre
    }

    pub fn period(&self) -> &[BigInt] {
        &self.period
    }

    pub fn is_rational(&self) -> bool {
        self.period.is_empty()
    }

    pub fn is_periodic(&self) -> bool {
        !self.period.is_empty()
    }

    /// Finite length in quotients, if rational.
    pub fn finite_len(&self) -> Option<usize> {
        self.is_rational().then_some(self.pre.len())
    }

    /// Partial quotient a_i.
    pub fn quotient(&self, i: usize) -> Result<BigInt> {
        if i < self.pre.len() {
            return Ok(self.pre[i].clone());
        }
        if self.period.is_empty() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.pre.len(),
            });
        }
        Ok(self.period[(i - self.pre.len()) % self.period.len()].clone())
    }

    /// Exact value; rationals come back on the d = 1 embedding.
    pub fn value(&self) -> QuadSurd {
        if self.is_rational() {
            let mut acc = BigRat::from_integer(self.pre.last().expect("nonempty").clone());
            for a in self.pre.iter().rev().skip(1) {
                acc = BigRat::from_integer(a.clone()) + acc.recip();
            }
            return QuadSurd::from_rat(&acc);
        }
        let tail = purely_periodic_value(&self.period);
        let mut acc = tail;
        for a in self.pre.iter().rev().take(self.pre.len() - 1) {
            acc = &QuadSurd::from_int(a.clone()) + &acc.inv().expect("tails are positive");
        }
        &QuadSurd::from_int(self.pre[0].clone()) + &acc.inv().expect("tails are positive")
    }

    /// Complete quotient [a_n; a_{n+1}, ...].
    pub fn tail(&self, n: usize) -> Result<QuadSurd> {
        if n < self.pre.len() {
            let sub = CFExpansion::new(self.pre[n..].to_vec(), self.period.clone())?;
            return Ok(sub.value());
        }
        if self.period.is_empty() {
            return Err(Error::IndexOutOfRange {
                index: n,
                len: self.pre.len(),
            });
        }
        let offset = (n - self.pre.len()) % self.period.len();
        let mut word = self.period.clone();
        word.rotate_left(offset);
        Ok(purely_periodic_value(&word))
    }

    /// Convergents for n = 0..=up_to (clipped at the end of a finite
    /// expansion).
    pub fn convergents(&self, up_to: usize) -> Vec<Convergent> {
        let mut out = Vec::with_capacity(up_to + 1);
        let mut p_prev = BigInt::one();
        let mut q_prev = BigInt::zero();
        let mut p_prev2 = BigInt::zero();
        let mut q_prev2 = BigInt::one();
        for n in 0..=up_to {
            let Ok(a) = self.quotient(n) else { break };
            let p = &a * &p_prev + &p_prev2;
            let q = &a * &q_prev + &q_prev2;
            out.push(Convergent {
                n,
                p: p.clone(),
                q: q.clone(),
            });
            p_prev2 = std::mem::replace(&mut p_prev, p);
            q_prev2 = std::mem::replace(&mut q_prev, q);
        }
        out
    }

    /// Tails eventually coincide: for periodic expansions the minimal
    /// periods are rotations of each other, rationals are all equivalent.
    pub fn equivalent(&self, other: &Self) -> bool {
        match (self.is_rational(), other.is_rational()) {
            (true, true) => true,
            (false, false) => {
                self.period.len() == other.period.len() && {
                    let doubled: Vec<&BigInt> =
                        self.period.iter().chain(self.period.iter()).collect();
                    doubled
                        .windows(self.period.len())
                        .any(|w| w.iter().zip(other.period.iter()).all(|(x, y)| *x == y))
                }
            }
            _ => false,
        }
    }

    /// For each residue class i of n modulo the period length, the exact
    /// limit of q_n/q_{n+1} along n congruent to i: the reversed period,
    /// rotated so it starts with a_{n+1} and read downward.
    pub fn reversed_ratio_limits(&self) -> Result<Vec<QuadSurd>> {
        if !self.is_periodic() {
            return Err(Error::NotPeriodic);
        }
        let m = self.period.len();
        let s = self.pre.len();
        let mut out = Vec::with_capacity(m);
        for i in 0..m {
            // word_t = a_{n+1-t} for t = 0..m-1, with n = i (mod m)
            let word: Vec<BigInt> = (0..m)
                .map(|t| {
                    let idx = (i + 1 + m + m * s) as i64 - t as i64 - s as i64;
                    self.period[(idx as usize) % m].clone()
                })
                .collect();
            out.push(
                purely_periodic_value(&word)
                    .inv()
                    .expect("periodic values exceed 1"),
            );
        }
        Ok(out)
    }

    /// Expands an exact value; irrational surds close their period by
    /// reduced-state recurrence, never by truncation.
    pub fn expand(x: &QuadSurd, max_terms: usize) -> Result<Self> {
        if max_terms == 0 {
            return Err(Error::Domain("max_terms must be at least 1".to_string()));
        }
        if let Some(r) = x.to_rational() {
            return Self::expand_rational(&r, max_terms);
        }
        // state (P + sqrt(D))/Q with Q dividing D - P^2
        let (mut p, mut q, d) = to_pqd(x);
        let sd = d.sqrt();
        let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
        let mut quotients: Vec<BigInt> = Vec::new();
        loop {
            if let Some(&start) = seen.get(&(p.clone(), q.clone())) {
                let period = quotients.split_off(start);
                return Self::new(quotients, period);
            }
            if quotients.len() >= max_terms {
                return Err(Error::BudgetExceeded { max_terms });
            }
            seen.insert((p.clone(), q.clone()), quotients.len());
            let a = floor_pqd(&p, &q, &sd);
            let p_next = &a * &q - &p;
            let q_next = (&d - &p_next * &p_next) / &q;
            quotients.push(a);
            p = p_next;
            q = q_next;
        }
    }

    fn expand_rational(r: &BigRat, max_terms: usize) -> Result<Self> {
        let mut num = r.numer().clone();
        let mut den = r.denom().clone();
        let mut quotients = Vec::new();
        while !den.is_zero() {
            if quotients.len() >= max_terms {
                return Err(Error::BudgetExceeded { max_terms });
            }
            let a = num.div_floor(&den);
            let rem = &num - &a * &den;
            quotients.push(a);
            num = std::mem::replace(&mut den, rem);
        }
        Self::new(quotients, Vec::<BigInt>::new())
    }
}

/// Exact floor of (P + sqrt(D))/Q given sd = isqrt(D), D not a square.
fn floor_pqd(p: &BigInt, q: &BigInt, sd: &BigInt) -> BigInt {
    if q.is_positive() {
        (p + sd).div_floor(q)
    } else {
        (p + sd + BigInt::one()).div_floor(q)
    }
}

/// Converts a canonical irrational surd to the (P, Q, D) state form.
fn to_pqd(x: &QuadSurd) -> (BigInt, BigInt, BigInt) {
    let (mut p, mut q, mut d) = if x.b().is_positive() {
        (
            x.a().clone(),
            x.c().clone(),
            x.b() * x.b() * x.d(),
        )
    } else {
        (
            -x.a().clone(),
            -x.c().clone(),
            x.b() * x.b() * x.d(),
        )
    };
    if !((&d - &p * &p) % &q).is_zero() {
        let scale = q.abs();
        p *= &scale;
        d *= &scale * &scale;
        q *= &scale;
    }
    (p, q, d)
}

/// Value of [overline(word)]: positive root of the period's Mobius matrix.
pub(crate) fn purely_periodic_value(word: &[BigInt]) -> QuadSurd {
    let mut m00 = BigInt::one();
    let mut m01 = BigInt::zero();
    let mut m10 = BigInt::zero();
    let mut m11 = BigInt::one();
    for a in word {
        // right-multiply by [[a, 1], [1, 0]]
        let n00 = &m00 * a + &m01;
        let n10 = &m10 * a + &m11;
        m01 = std::mem::replace(&mut m00, n00);
        m11 = std::mem::replace(&mut m10, n10);
    }
    // y = (m00 y + m01)/(m10 y + m11)
    let lin = &m00 - &m11;
    let disc = (&m11 - &m00) * (&m11 - &m00) + BigInt::from(4) * &m10 * &m01;
    QuadSurd::new(lin, 1, BigInt::from(2) * m10, disc).expect("period matrix is nonsingular")
}

impl fmt::Display for CFExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.pre[0])?;
        if self.pre.len() > 1 || !self.period.is_empty() {
            write!(f, ";")?;
        }
        for (i, a) in self.pre.iter().enumerate().skip(1) {
            write!(f, " {a}{}", if i + 1 < self.pre.len() { "," } else { "" })?;
        }
        if !self.period.is_empty() {
            write!(f, " (")?;
            for (i, a) in self.period.iter().enumerate() {
                write!(f, "{a}{}", if i + 1 < self.period.len() { ", " } else { "" })?;
            }
            write!(f, ")")?;
        }
        write!(f, "]")
    }
}
