//! The discrete spectra: the numbers alpha_k with their Dirichlet constants
//! D_k, the beta_k family, the auxiliary constants gamma and beta, Markoff
//! triples, and exact Dirichlet/Lagrange constants of arbitrary quadratic
//! irrationals.

pub mod markoff;

use num::bigint::BigInt;

use crate::cf::expansion::{purely_periodic_value, CFExpansion};
use crate::error::{Error, Result};
use crate::exact::radical::BoundValue;
use crate::exact::surd::QuadSurd;

pub use markoff::{lagrange_l, lagrange_value_of, markoff_numbers, markoff_triples, MarkoffTriple};

/// Period word of alpha_k: 1 repeated 2k-1 times then 2; for k = 0 just 1.
fn alpha_word(k: u32) -> Vec<BigInt> {
    if k == 0 {
        return vec![BigInt::from(1)];
    }
    let mut word = vec![BigInt::from(1); (2 * k - 1) as usize];
    word.push(BigInt::from(2));
    word
}

/// alpha_k = [overline(1_{2k-1}, 2)]; alpha_0 = [overline(1)].
pub fn alpha_k_cf(k: u32) -> CFExpansion {
    CFExpansion::purely_periodic(alpha_word(k)).expect("valid period word")
}

pub fn alpha_k(k: u32) -> QuadSurd {
    alpha_k_cf(k).value()
}

/// 1/alpha_k = [0; overline(1_{2k-1}, 2)].
pub fn inv_alpha_k_cf(k: u32) -> CFExpansion {
    CFExpansion::new(vec![BigInt::from(0)], alpha_word(k)).expect("valid period word")
}

/// D_0 = 1/2 + 1/(2 sqrt 5); D_k = (2 alpha_k + 1)/(2 alpha_k + 2) for k >= 1.
pub fn dirichlet_d_k(k: u32) -> QuadSurd {
    if k == 0 {
        let half = QuadSurd::new(1, 0, 2, 1).expect("valid");
        let inv_2root5 = QuadSurd::new(0, 2, 1, 5)
            .expect("valid")
            .inv()
            .expect("nonzero");
        return &half + &inv_2root5;
    }
    let a = alpha_k(k);
    let two = QuadSurd::from_int(2);
    let one = QuadSurd::one();
    let num = &(&two * &a) + &one;
    let den = &(&two * &a) + &two;
    &num / &den
}

fn ones(n: i64) -> Result<Vec<BigInt>> {
    if n < 0 {
        return Err(Error::Domain(format!("1_{n} run is undefined")));
    }
    Ok(vec![BigInt::from(1); n as usize])
}

fn beta_cf(prefix_ones: i64, k: u32) -> Result<CFExpansion> {
    if k == 0 {
        return Err(Error::Domain("beta family starts at k = 1".to_string()));
    }
    let mut pre = vec![BigInt::from(0)];
    pre.extend(ones(prefix_ones)?);
    let mut period = vec![BigInt::from(2)];
    period.extend(ones(2 * k as i64 - 1)?);
    CFExpansion::new(pre, period)
}

/// beta_k = [0; 1_{k-1}, overline(2, 1_{2k-1})], k >= 1.
pub fn beta_k_cf(k: u32) -> Result<CFExpansion> {
    beta_cf(k as i64 - 1, k)
}

pub fn beta_k(k: u32) -> Result<QuadSurd> {
    Ok(beta_k_cf(k)?.value())
}

/// beta_k^(1) = [0; 1_k, overline(2, 1_{2k-1})], k >= 1.
pub fn beta_k_1_cf(k: u32) -> Result<CFExpansion> {
    beta_cf(k as i64, k)
}

pub fn beta_k_1(k: u32) -> Result<QuadSurd> {
    Ok(beta_k_1_cf(k)?.value())
}

/// beta_k^(2) = [0; 1_{k-2}, overline(2, 1_{2k-1})], k >= 2. The k = 1 case
/// would need the undefined run 1_{-1} and is rejected.
pub fn beta_k_2_cf(k: u32) -> Result<CFExpansion> {
    beta_cf(k as i64 - 2, k)
}

pub fn beta_k_2(k: u32) -> Result<QuadSurd> {
    Ok(beta_k_2_cf(k)?.value())
}

/// gamma = [2; overline(1_{2k-1}, 2)] = (2 alpha_k + 1)/alpha_k, k >= 1.
pub fn gamma_k(k: u32) -> Result<QuadSurd> {
    if k == 0 {
        return Err(Error::Domain("gamma is defined for k >= 1".to_string()));
    }
    let a = alpha_k(k);
    let two = QuadSurd::from_int(2);
    let one = QuadSurd::one();
    Ok(&(&(&two * &a) + &one) / &a)
}

pub fn gamma_k_cf(k: u32) -> Result<CFExpansion> {
    if k == 0 {
        return Err(Error::Domain("gamma is defined for k >= 1".to_string()));
    }
    CFExpansion::new(vec![BigInt::from(2)], alpha_word(k))
}

/// beta = [1; overline(2, 1_{2k-1})] = (3 alpha_k + 1)/(2 alpha_k + 1), k >= 1.
pub fn beta_const_k(k: u32) -> Result<QuadSurd> {
    if k == 0 {
        return Err(Error::Domain("beta is defined for k >= 1".to_string()));
    }
    let a = alpha_k(k);
    let one = QuadSurd::one();
    let two = QuadSurd::from_int(2);
    let three = QuadSurd::from_int(3);
    Ok(&(&(&three * &a) + &one) / &(&(&two * &a) + &one))
}

pub fn beta_const_k_cf(k: u32) -> Result<CFExpansion> {
    if k == 0 {
        return Err(Error::Domain("beta is defined for k >= 1".to_string()));
    }
    let mut period = vec![BigInt::from(2)];
    period.extend(vec![BigInt::from(1); (2 * k - 1) as usize]);
    CFExpansion::new(vec![BigInt::from(1)], period)
}

/// Subsequential limits of q_{n+1}||q_n alpha|| per period offset. The limit
/// along an offset class is 1/(1 + rho/tau) with tau the tail two past n and
/// rho the reversed-ratio limit; all values stay in the surd's field.
fn dirichlet_class_limits(alpha: &CFExpansion) -> Result<Vec<QuadSurd>> {
    if !alpha.is_periodic() {
        return Err(Error::Domain(
            "Dirichlet constant needs a quadratic irrational".to_string(),
        ));
    }
    let period = alpha.period();
    let m = period.len();
    let mut out = Vec::with_capacity(m);
    for offset in 0..m {
        let mut tail_word = period.to_vec();
        tail_word.rotate_left((offset + 2) % m);
        let tau = purely_periodic_value(&tail_word);
        let rev_word: Vec<BigInt> = (0..m)
            .map(|t| period[(offset + 1 + m + m - t) % m].clone())
            .collect();
        let rho = purely_periodic_value(&rev_word).inv()?;
        // 1/(1 + rho/tau) = tau/(tau + rho)
        out.push(tau.checked_div(&tau.checked_add(&rho)?)?);
    }
    Ok(out)
}

/// D(alpha) = limsup q_{n+1}||q_n alpha||: the exact maximum over the
/// period's residue classes of the subsequential limits.
pub fn dirichlet_constant(alpha: &CFExpansion) -> Result<QuadSurd> {
    Ok(dirichlet_class_limits(alpha)?
        .into_iter()
        .max()
        .expect("periodic expansions have at least one class"))
}

/// lambda(alpha) = (liminf q_n ||q_n alpha||)^{-1} = max over classes of
/// tail(n+1) + lim q_{n-1}/q_n.
pub fn lagrange_constant(alpha: &CFExpansion) -> Result<QuadSurd> {
    if !alpha.is_periodic() {
        return Err(Error::Domain(
            "Lagrange constant needs a quadratic irrational".to_string(),
        ));
    }
    let period = alpha.period();
    let m = period.len();
    let mut best: Option<QuadSurd> = None;
    for offset in 0..m {
        let mut tail_word = period.to_vec();
        tail_word.rotate_left((offset + 1) % m);
        let tau = purely_periodic_value(&tail_word);
        let rev_word: Vec<BigInt> = (0..m)
            .map(|t| period[(offset + m + m - t) % m].clone())
            .collect();
        let rho = purely_periodic_value(&rev_word).inv()?;
        let candidate = tau.checked_add(&rho)?;
        best = Some(match best {
            None => candidate,
            Some(b) => b.max(candidate),
        });
    }
    Ok(best.expect("nonempty period"))
}

/// Labeled point of one of the two spectra.
#[derive(Clone, Debug)]
pub enum SpectrumLabel {
    DirichletK(u32),
    LagrangeJ { j: usize, markoff_number: u128 },
    Custom(String),
}

#[derive(Clone, Debug)]
pub struct SpectrumPoint {
    pub label: SpectrumLabel,
    pub value: BoundValue,
}

pub fn dirichlet_point(k: u32) -> SpectrumPoint {
    SpectrumPoint {
        label: SpectrumLabel::DirichletK(k),
        value: BoundValue::from_surd(dirichlet_d_k(k)),
    }
}

pub fn lagrange_point(j: usize) -> Result<SpectrumPoint> {
    let (m, value) = lagrange_l(j)?;
    Ok(SpectrumPoint {
        label: SpectrumLabel::LagrangeJ {
            j,
            markoff_number: m,
        },
        value: BoundValue::from_surd(value),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surd(a: i64, b: i64, c: i64, d: i64) -> QuadSurd {
        QuadSurd::new(a, b, c, d).unwrap()
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha_k(0), surd(1, 1, 2, 5));
        assert_eq!(alpha_k(1), surd(1, 1, 2, 3));
        // alpha_2 round-trips through its expansion
        let a2 = alpha_k(2);
        assert_eq!(a2, surd(3, 2, 5, 6));
        assert_eq!(
            CFExpansion::expand(&a2, 64).unwrap(),
            alpha_k_cf(2)
        );
    }

    #[test]
    fn dirichlet_constants_match_closed_forms() {
        assert_eq!(dirichlet_d_k(0), surd(5, 1, 10, 5));
        assert_eq!(dirichlet_d_k(1), surd(3, 1, 6, 3));
    }

    #[test]
    fn dirichlet_sequence_is_monotone_below_lesca_endpoint() {
        let endpoint = surd(1, 1, 4, 5);
        let mut prev = dirichlet_d_k(0);
        for k in 1..=5 {
            let next = dirichlet_d_k(k);
            assert!(prev < next, "D_{} < D_{k}", k - 1);
            prev = next;
        }
        assert!(prev < endpoint);
    }

    #[test]
    fn beta_family_values_and_equivalence() {
        assert_eq!(beta_k(1).unwrap(), surd(-1, 1, 2, 3));
        for k in 1..=4u32 {
            assert!(beta_k_cf(k).unwrap().equivalent(&alpha_k_cf(k)));
            assert!(beta_k_1_cf(k).unwrap().equivalent(&alpha_k_cf(k)));
            if k >= 2 {
                assert!(beta_k_2_cf(k).unwrap().equivalent(&alpha_k_cf(k)));
            }
        }
        // beta_2^(2) = [0; overline(2, 1_3)]: empty 1_0 prefix
        assert_eq!(
            beta_k_2_cf(2).unwrap(),
            CFExpansion::new(vec![0], vec![2, 1, 1, 1]).unwrap()
        );
        assert!(beta_k_2(1).is_err());
        assert!(beta_k(0).is_err());
    }

    #[test]
    fn gamma_and_beta_agree_with_their_periods() {
        for k in 1..=4u32 {
            let g = gamma_k(k).unwrap();
            assert_eq!(g, gamma_k_cf(k).unwrap().value(), "gamma route mismatch at k = {k}");
            assert!(g > QuadSurd::from_int(2));
            let b = beta_const_k(k).unwrap();
            assert_eq!(b, beta_const_k_cf(k).unwrap().value(), "beta route mismatch at k = {k}");
        }
        assert_eq!(gamma_k(1).unwrap(), surd(1, 1, 1, 3));
        assert_eq!(beta_const_k(1).unwrap(), surd(1, 1, 2, 3));
    }

    #[test]
    fn dirichlet_constant_reproduces_d_k() {
        assert_eq!(dirichlet_constant(&alpha_k_cf(0)).unwrap(), dirichlet_d_k(0));
        for k in 1..=4u32 {
            assert_eq!(
                dirichlet_constant(&alpha_k_cf(k)).unwrap(),
                dirichlet_d_k(k),
                "D(alpha_{k})"
            );
        }
    }

    #[test]
    fn dirichlet_constant_is_an_equivalence_invariant() {
        // beta_1 ~ alpha_1 with a nontrivial preperiod
        assert_eq!(
            dirichlet_constant(&beta_k_cf(1).unwrap()).unwrap(),
            dirichlet_d_k(1)
        );
        // prepending quotients does not move the constant
        let shifted = CFExpansion::new(vec![5, 3, 1], vec![1, 2]).unwrap();
        assert_eq!(dirichlet_constant(&shifted).unwrap(), dirichlet_d_k(1));
        let rational = CFExpansion::new(vec![3, 7, 16], Vec::<BigInt>::new()).unwrap();
        assert!(dirichlet_constant(&rational).is_err());
    }

    #[test]
    fn lagrange_constants_of_markoff_words() {
        assert_eq!(
            lagrange_constant(&alpha_k_cf(0)).unwrap(),
            surd(0, 1, 1, 5)
        );
        let period2 = CFExpansion::purely_periodic(vec![2]).unwrap();
        assert_eq!(lagrange_constant(&period2).unwrap(), surd(0, 1, 1, 8));
        let markoff5 = CFExpansion::purely_periodic(vec![2, 2, 1, 1]).unwrap();
        assert_eq!(lagrange_constant(&markoff5).unwrap(), surd(0, 1, 5, 221));
    }
}
