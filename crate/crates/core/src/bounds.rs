//! The approximation bound functions f_0, f_k, g_k and g_m.
//!
//! Every family evaluates to a `BoundValue`: exact surd whenever the inner
//! radicand denests into the surrounding field (the perfect-square branch
//! carrying all the equality cases), certified enclosure otherwise. The
//! x-independent radicand constants are exact surds computed once per
//! (family, index) and cached.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num::bigint::BigInt;
use num::traits::One;

use crate::error::{Error, Result};
use crate::exact::bigrat::BigRat;
use crate::exact::radical::{BoundValue, RadExpr};
use crate::exact::surd::QuadSurd;
use crate::spectra;

/// Bound family selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundFamily {
    /// f_0(x) = (sqrt5 + 1)/(sqrt5 + sqrt(5 - 4/x^2))
    F0,
    /// f_k(x) = 2 D_k/(1 + sqrt(1 - C_k/x^2)) with the parity-split C_k
    Fk(u32),
    /// g_k(x) = 2 D_k/(1 + sqrt(1 - 4 D_k (1 - D_k)/x^2))
    Gk(u32),
    /// g_m(x) = 2/(L_m (1 + sqrt(1 + 4/(L_m^2 x^2))) x)
    Gm(usize),
}

/// The x-independent data of a family: the constant under the inner square
/// root and the x -> infinity limit the values approach from above.
#[derive(Clone, Debug)]
pub struct BoundSpec {
    pub family: BoundFamily,
    pub radicand_constant: QuadSurd,
    pub asymptote: QuadSurd,
}

fn cache() -> &'static Mutex<HashMap<BoundFamily, BoundSpec>> {
    static CACHE: OnceLock<Mutex<HashMap<BoundFamily, BoundSpec>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The radicand constant of f_k: 2 alpha_k/((2 beta_k + 1)(alpha_k + 1)) for
/// odd k, 2 alpha_k/((beta_k^(1) + beta_k^(2) + 1)(alpha_k + 1)) for even k.
pub fn fk_radicand_constant(k: u32) -> Result<QuadSurd> {
    if k == 0 {
        return Err(Error::Domain("f_k starts at k = 1; use f_0".to_string()));
    }
    let a = spectra::alpha_k(k);
    let one = QuadSurd::one();
    let two = QuadSurd::from_int(2);
    let weight = if k % 2 == 1 {
        &(&two * &spectra::beta_k(k)?) + &one
    } else {
        &(&spectra::beta_k_1(k)? + &spectra::beta_k_2(k)?) + &one
    };
    let num = &two * &a;
    let den = &weight * &(&a + &one);
    num.checked_div(&den)
}

/// The radicand constant of g_k: 4 D_k (1 - D_k).
pub fn gk_radicand_constant(k: u32) -> Result<QuadSurd> {
    if k == 0 {
        return Err(Error::Domain("g_k starts at k = 1".to_string()));
    }
    let d = spectra::dirichlet_d_k(k);
    let four = QuadSurd::from_int(4);
    let one = QuadSurd::one();
    (&four * &d).checked_mul(&one.checked_sub(&d)?)
}

/// Computed equality of the f_k and g_k radicand constants (they coincide at
/// k = 1, making f_1 and g_1 the same function).
pub fn fk_equals_gk(k: u32) -> Result<bool> {
    Ok(fk_radicand_constant(k)? == gk_radicand_constant(k)?)
}

pub fn bound_spec(family: BoundFamily) -> Result<BoundSpec> {
    if let Some(hit) = cache().lock().unwrap().get(&family) {
        return Ok(hit.clone());
    }
    let spec = match family {
        BoundFamily::F0 => BoundSpec {
            family,
            radicand_constant: QuadSurd::from_rat(&BigRat::new(BigInt::from(4), BigInt::from(5))),
            asymptote: spectra::dirichlet_d_k(0),
        },
        BoundFamily::Fk(k) => BoundSpec {
            family,
            radicand_constant: fk_radicand_constant(k)?,
            asymptote: spectra::dirichlet_d_k(k),
        },
        BoundFamily::Gk(k) => BoundSpec {
            family,
            radicand_constant: gk_radicand_constant(k)?,
            asymptote: spectra::dirichlet_d_k(k),
        },
        BoundFamily::Gm(m) => {
            let (_, l) = spectra::lagrange_l(m)?;
            // inner radicand constant 4/L_m^2; x-scaled limit 1/L_m
            let four = QuadSurd::from_int(4);
            BoundSpec {
                family,
                radicand_constant: four.checked_div(&l.checked_mul(&l)?)?,
                asymptote: l.inv()?,
            }
        }
    };
    cache()
        .lock()
        .unwrap()
        .entry(family)
        .or_insert(spec.clone());
    Ok(spec)
}

fn check_x_domain(x: &BigRat) -> Result<()> {
    if x < &BigRat::from_integer(BigInt::one()) {
        return Err(Error::Domain(format!("bound functions need x >= 1, got {x}")));
    }
    Ok(())
}

/// f_0(x) in the paper's own shape, so the certificate shows 5 - 4/x^2.
pub fn eval_f0(x: &BigRat) -> Result<BoundValue> {
    check_x_domain(x)?;
    let x_surd = QuadSurd::from_rat(x);
    let five = QuadSurd::from_int(5);
    let four = QuadSurd::from_int(4);
    let root5 = QuadSurd::sqrt_int(5)?;
    let radicand = five.checked_sub(&four.checked_div(&x_surd.checked_mul(&x_surd)?)?)?;
    if radicand.sign() < 0 {
        return Err(Error::Domain(format!("f_0 radicand negative at x = {x}")));
    }
    let expr = RadExpr::div(
        RadExpr::surd(root5.checked_add(&QuadSurd::one())?),
        RadExpr::add(RadExpr::surd(root5), RadExpr::sqrt(RadExpr::surd(radicand))),
    );
    Ok(BoundValue::new(expr))
}

/// Shared shape 2 D/(1 + sqrt(1 - K/x^2)) for f_k and g_k.
fn eval_dk_shape(d: &QuadSurd, constant: &QuadSurd, x: &BigRat) -> Result<BoundValue> {
    check_x_domain(x)?;
    let x_surd = QuadSurd::from_rat(x);
    let one = QuadSurd::one();
    let radicand =
        one.checked_sub(&constant.checked_div(&x_surd.checked_mul(&x_surd)?)?)?;
    if radicand.sign() < 0 {
        return Err(Error::Domain(format!("bound radicand negative at x = {x}")));
    }
    let expr = RadExpr::div(
        RadExpr::surd(QuadSurd::from_int(2).checked_mul(d)?),
        RadExpr::add(
            RadExpr::surd(one),
            RadExpr::sqrt(RadExpr::surd(radicand)),
        ),
    );
    Ok(BoundValue::new(expr))
}

pub fn eval_fk(k: u32, x: &BigRat) -> Result<BoundValue> {
    let spec = bound_spec(BoundFamily::Fk(k))?;
    eval_dk_shape(&spectra::dirichlet_d_k(k), &spec.radicand_constant, x)
}

pub fn eval_gk(k: u32, x: &BigRat) -> Result<BoundValue> {
    let spec = bound_spec(BoundFamily::Gk(k))?;
    eval_dk_shape(&spectra::dirichlet_d_k(k), &spec.radicand_constant, x)
}

/// g_m(x) = 2/(L_m (1 + sqrt(1 + 4/(L_m^2 x^2))) x).
pub fn eval_gm(m: usize, x: &BigRat) -> Result<BoundValue> {
    check_x_domain(x)?;
    let spec = bound_spec(BoundFamily::Gm(m))?;
    let (_, l) = spectra::lagrange_l(m)?;
    let x_surd = QuadSurd::from_rat(x);
    let one = QuadSurd::one();
    let radicand = one.checked_add(
        &spec
            .radicand_constant
            .checked_div(&x_surd.checked_mul(&x_surd)?)?,
    )?;
    let expr = RadExpr::div(
        RadExpr::surd(QuadSurd::from_int(2)),
        RadExpr::mul(
            RadExpr::surd(l.checked_mul(&x_surd)?),
            RadExpr::add(RadExpr::surd(one), RadExpr::sqrt(RadExpr::surd(radicand))),
        ),
    );
    Ok(BoundValue::new(expr))
}

/// Evaluates any family at a rational point.
pub fn eval_bound(family: BoundFamily, x: &BigRat) -> Result<BoundValue> {
    match family {
        BoundFamily::F0 => eval_f0(x),
        BoundFamily::Fk(k) => eval_fk(k, x),
        BoundFamily::Gk(k) => eval_gk(k, x),
        BoundFamily::Gm(m) => eval_gm(m, x),
    }
}
