//! Proposition 1 sweeps: alpha_k against g_k, and the reciprocal variant
//! with its shifted extremal class.

use super::{bound_row, witnesses_unbounded, VerifyReport};
use crate::bounds::{eval_gk, fk_equals_gk};
use crate::cf::expansion::CFExpansion;
use crate::cf::measure::quality_sweep;
use crate::error::Result;
use crate::exact::bigrat::BigRat;
use crate::exact::radical::{bound_cmp, BoundOrdering};
use crate::spectra;

/// Certified-equality residue (mod 2k) of n for q_{n+1}||q_n a|| = g_k(q_{n+1}).
/// Computed convention (q_0 = 1): class 2k-3 for alpha_k, 2k-1 for 1/alpha_k.
pub fn extremal_residue(k: u32, reciprocal: bool) -> usize {
    let m = 2 * k as i64;
    let r = if reciprocal { m - 1 } else { m - 3 };
    r.rem_euclid(m) as usize
}

fn sweep_variant(
    report: &mut VerifyReport,
    label: &str,
    alpha: &CFExpansion,
    k: u32,
    n_max: usize,
    expected_residue: usize,
) -> Result<()> {
    let d_k = spectra::dirichlet_d_k(k);
    let modulus = 2 * k as usize;
    let qualities = quality_sweep(alpha, n_max)?;
    let convs = alpha.convergents(n_max + 1);
    let mut equalities = Vec::new();
    for n in 0..n_max {
        let q_next = &convs[n + 1].q;
        let bound = eval_gk(k, &BigRat::from_integer(q_next.clone()))?;
        let ord = bound_cmp(&qualities[n], &bound)?;
        let mut row = bound_row(n, q_next, &qualities[n], &bound, &ord);
        row.note = format!("{label}");
        match &ord {
            BoundOrdering::Greater => {
                report.refute(format!("{label}: n = {n} exceeds g_{k}(q_{{n+1}})"));
            }
            BoundOrdering::Equal(_) => {
                equalities.push(n);
                if n % modulus != expected_residue {
                    report.refute(format!(
                        "{label}: certified equality at n = {n} off the predicted class {expected_residue} (mod {modulus})"
                    ));
                }
            }
            BoundOrdering::Less => {
                // off the extremal class the values must sit below D_k
                if n % modulus != expected_residue && qualities[n] >= d_k {
                    report.refute(format!(
                        "{label}: n = {n} off the extremal class but >= D_{k}"
                    ));
                }
            }
        }
        report.rows.push(row);
    }
    // the class must be fully populated, not just unrefuted
    let predicted: Vec<usize> = (0..n_max)
        .filter(|n| n % modulus == expected_residue && *n >= expected_residue)
        .collect();
    if equalities != predicted {
        report.refute(format!(
            "{label}: equality indices {equalities:?} differ from the predicted progression {predicted:?}"
        ));
    }
    if let Err(reason) = witnesses_unbounded(&equalities, expected_residue, n_max - 1, modulus * 2)
    {
        report.refute(format!("{label}: {reason}"));
    }
    report.note(format!(
        "{label}: certified equality exactly at n = {expected_residue} (mod {modulus}), {} witnesses",
        equalities.len()
    ));
    Ok(())
}

/// For alpha_k and 1/alpha_k: q_{n+1}||q_n a|| <= g_k(q_{n+1}) everywhere,
/// equality certified exactly on the extremal class, every other class
/// strictly below D_k.
pub fn check_prop1(k: u32, n_max: usize) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("prop1");
    report.param("k", k).param("N", n_max);
    if k == 0 {
        return Err(crate::error::Error::Domain(
            "Proposition 1 needs k >= 1".to_string(),
        ));
    }
    sweep_variant(
        &mut report,
        "alpha_k",
        &spectra::alpha_k_cf(k),
        k,
        n_max,
        extremal_residue(k, false),
    )?;
    sweep_variant(
        &mut report,
        "1/alpha_k",
        &spectra::inv_alpha_k_cf(k),
        k,
        n_max,
        extremal_residue(k, true),
    )?;
    report.note(format!(
        "computed relationship: f_{k} and g_{k} radicand constants {}",
        if fk_equals_gk(k)? {
            "coincide (f = g)"
        } else {
            "differ"
        }
    ));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_follow_the_paper_progressions() {
        assert_eq!(extremal_residue(1, false), 1);
        assert_eq!(extremal_residue(1, true), 1);
        assert_eq!(extremal_residue(2, false), 1);
        assert_eq!(extremal_residue(2, true), 3);
        assert_eq!(extremal_residue(3, false), 3);
        assert_eq!(extremal_residue(3, true), 5);
    }

    #[test]
    fn k1_and_k2_confirm() {
        for (k, n) in [(1u32, 60usize), (2, 60)] {
            let r = check_prop1(k, n).unwrap();
            assert!(r.verdict.is_confirmed(), "k = {k}: {:?}", r.verdict);
            assert!(r.rows.iter().any(|row| row.certified));
        }
    }

    #[test]
    fn k1_reports_the_f_g_coincidence() {
        let r = check_prop1(1, 30).unwrap();
        assert!(r.notes.iter().any(|n| n.contains("coincide")));
        // computed fact: the constants also coincide at k = 2 (both 5/8)
        let r2 = check_prop1(2, 30).unwrap();
        assert!(r2.notes.iter().any(|n| n.contains("coincide")));
        let r3 = check_prop1(3, 30).unwrap();
        assert!(r3.notes.iter().any(|n| n.contains("differ")));
    }
}
