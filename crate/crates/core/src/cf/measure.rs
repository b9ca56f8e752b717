//! The irrationality measure function and the approximation qualities
//! q_{n+1} ||q_n a|| the spectrum constants are built from.

use num::bigint::BigInt;

use super::expansion::{CFExpansion, Convergent};
use crate::error::{Error, Result};
use crate::exact::bigrat::BigRat;
use crate::exact::surd::QuadSurd;

/// One evaluation of psi_alpha: value = ||q_n alpha|| on the active step.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasureSample {
    pub t: BigRat,
    pub value: QuadSurd,
    pub active_index: usize,
}

/// q_{n+1} * |q_n alpha - p_n|, exactly.
pub fn approx_quality(alpha: &CFExpansion, n: usize) -> Result<QuadSurd> {
    Ok(quality_sweep(alpha, n)?.pop().expect("sweep reaches n"))
}

/// Qualities for every index 0..=n in one pass over the convergents.
pub fn quality_sweep(alpha: &CFExpansion, n: usize) -> Result<Vec<QuadSurd>> {
    if !alpha.is_periodic() {
        return Err(Error::Domain(
            "approximation quality requires an irrational expansion".to_string(),
        ));
    }
    let value = alpha.value();
    let convs = alpha.convergents(n + 1);
    let mut out = Vec::with_capacity(n + 1);
    for w in convs.windows(2) {
        let (cur, next) = (&w[0], &w[1]);
        let err = &(&value * &QuadSurd::from_int(cur.q.clone())) - &QuadSurd::from_int(cur.p.clone());
        out.push(&err.abs() * &QuadSurd::from_int(next.q.clone()));
    }
    Ok(out)
}

/// lim_{t -> q_n^-} t psi_alpha(t) = q_n ||q_{n-1} alpha||.
pub fn left_limit(alpha: &CFExpansion, n: usize) -> Result<QuadSurd> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, len: 0 });
    }
    approx_quality(alpha, n - 1)
}

/// psi_alpha(t) = min_{1 <= q <= t} ||q alpha||, via the Lagrange step
/// structure: the value is ||q_n alpha|| for the largest n with q_n <= t.
pub fn psi(alpha: &CFExpansion, t: &BigRat) -> Result<MeasureSample> {
    if t < &BigRat::from_integer(BigInt::from(1)) {
        return Err(Error::Domain(format!("psi needs t >= 1, got {t}")));
    }
    let value = alpha.value();
    let mut active: Option<Convergent> = None;
    let mut p_prev = BigInt::from(1);
    let mut q_prev = BigInt::from(0);
    let mut p_prev2 = BigInt::from(0);
    let mut q_prev2 = BigInt::from(1);
    let mut n = 0usize;
    while let Ok(a) = alpha.quotient(n) {
        let p = &a * &p_prev + &p_prev2;
        let q = &a * &q_prev + &q_prev2;
        if &BigRat::from_integer(q.clone()) > t {
            break;
        }
        active = Some(Convergent {
            n,
            p: p.clone(),
            q: q.clone(),
        });
        p_prev2 = std::mem::replace(&mut p_prev, p);
        q_prev2 = std::mem::replace(&mut q_prev, q);
        n += 1;
    }
    let c = active.expect("q_0 = 1 <= t");
    let err = &(&value * &QuadSurd::from_int(c.q.clone())) - &QuadSurd::from_int(c.p.clone());
    Ok(MeasureSample {
        t: t.clone(),
        value: err.abs(),
        active_index: c.n,
    })
}

/// Brute-force oracle for psi: exact minimum of ||q alpha|| over q <= t.
/// Test support; quadratic in t.
pub fn psi_brute_force(alpha_value: &QuadSurd, t: &BigRat) -> Result<QuadSurd> {
    let limit = t.to_integer();
    if limit < BigInt::from(1) {
        return Err(Error::Domain(format!("psi needs t >= 1, got {t}")));
    }
    let mut best: Option<QuadSurd> = None;
    let mut q = BigInt::from(1);
    while q <= limit {
        let dist = (&QuadSurd::from_int(q.clone()) * alpha_value).dist_to_nearest_int();
        best = Some(match best {
            None => dist,
            Some(b) => b.min(dist),
        });
        q += 1;
    }
    Ok(best.expect("at least q = 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::bigrat::rat;

    fn surd(a: i64, b: i64, c: i64, d: i64) -> QuadSurd {
        QuadSurd::new(a, b, c, d).unwrap()
    }

    fn alpha0_cf() -> CFExpansion {
        CFExpansion::new(vec![1], vec![1]).unwrap()
    }

    #[test]
    fn quality_of_alpha0_small_indices() {
        // n = 1: q_2 |q_1 a0 - p_1| = 2|a0 - 2| = 3 - sqrt5
        assert_eq!(approx_quality(&alpha0_cf(), 1).unwrap(), surd(3, -1, 1, 5));
        // n = 2: q_3 |q_2 a0 - p_2| = 3|2 a0 - 3| = 3 sqrt5 - 6
        assert_eq!(approx_quality(&alpha0_cf(), 2).unwrap(), surd(-6, 3, 1, 5));
    }

    #[test]
    fn quality_stays_below_one() {
        let one = QuadSurd::one();
        for n in 0..40 {
            let v = approx_quality(&alpha0_cf(), n).unwrap();
            assert!(v.sign() > 0 && v < one);
        }
    }

    #[test]
    fn left_limit_is_shifted_quality() {
        let a1 = CFExpansion::new(vec![1], vec![2, 1]).unwrap();
        for n in 1..30 {
            assert_eq!(
                left_limit(&a1, n).unwrap(),
                approx_quality(&a1, n - 1).unwrap()
            );
        }
        assert!(left_limit(&a1, 0).is_err());
    }

    #[test]
    fn psi_at_small_t() {
        // t = 1: ||a0|| = 2 - a0 = (3 - sqrt5)/2, active q_n = 1
        let s = psi(&alpha0_cf(), &rat(1, 1)).unwrap();
        assert_eq!(s.value, surd(3, -1, 2, 5));
        // t = 5: ||5 a0|| = (5 sqrt5 - 11)/2 at q_n = 5
        let s = psi(&alpha0_cf(), &rat(5, 1)).unwrap();
        assert_eq!(s.value, surd(-11, 5, 2, 5));
        assert_eq!(s.active_index, 4);
        // step function: t = 4 sees the same step as t = 3
        assert_eq!(
            psi(&alpha0_cf(), &rat(4, 1)).unwrap().value,
            psi(&alpha0_cf(), &rat(3, 1)).unwrap().value
        );
        assert!(psi(&alpha0_cf(), &rat(1, 2)).is_err());
    }

    #[test]
    fn psi_matches_brute_force_on_samples() {
        let cases = [
            CFExpansion::new(vec![1], vec![1]).unwrap(),
            CFExpansion::new(vec![1], vec![2]).unwrap(),
            CFExpansion::new(vec![0], vec![2, 1]).unwrap(),
            CFExpansion::new(vec![3, 2], vec![1, 1, 2]).unwrap(),
        ];
        for cf in &cases {
            let v = cf.value();
            for t in [1i64, 2, 3, 7, 20, 53] {
                let sample = psi(cf, &rat(t, 1)).unwrap();
                let oracle = psi_brute_force(&v, &rat(t, 1)).unwrap();
                assert_eq!(sample.value, oracle, "cf {cf} at t = {t}");
            }
        }
    }

    #[test]
    fn psi_accepts_rational_t() {
        let s = psi(&alpha0_cf(), &rat(7, 2)).unwrap();
        assert_eq!(s.active_index, psi(&alpha0_cf(), &rat(3, 1)).unwrap().active_index);
    }
}
