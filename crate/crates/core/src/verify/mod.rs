//! Executable checks: theorem sweeps with exact comparisons and exhaustive
//! oracles for the auxiliary lemmas.
//!
//! Every ordering in a report row comes from `surd cmp` or `bound_cmp`;
//! nothing is ever decided by floating point. "Infinitely many n" claims are
//! verified at desk scale as: witness set nonempty, gaps bounded by twice
//! the period length, and a witness within that window of the sweep end.

pub mod lemmas;
pub mod prop1;
pub mod props;
pub mod theorem1;
pub mod theorem2;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exact::radical::{BoundOrdering, BoundValue};
use crate::exact::surd::QuadSurd;

pub use lemmas::{lemma5_check, lemma_oracle, LemmaDirection, LemmaInstance};
pub use prop1::check_prop1;
pub use props::{check_prop_b, check_szekeres, prop_a_count};
pub use theorem1::{check_theorem1, check_theorem1_part1, check_theorem1_part2};
pub use theorem2::check_theorem2;

/// Decimal digits carried in report rows.
pub const ROW_DIGITS: usize = 30;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: i64,
    pub q: String,
    pub value: String,
    pub value_decimal: String,
    pub bound: String,
    pub bound_decimal: String,
    pub ordering: String,
    pub certified: bool,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "detail")]
pub enum Verdict {
    Confirmed,
    Refuted { witness: String },
    Inconclusive { reason: String },
}

impl Verdict {
    pub fn is_confirmed(&self) -> bool {
        matches!(self, Verdict::Confirmed)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub statement: String,
    pub params: BTreeMap<String, String>,
    pub rows: Vec<ReportRow>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn new(statement: impl Into<String>) -> Self {
        VerifyReport {
            statement: statement.into(),
            params: BTreeMap::new(),
            rows: Vec::new(),
            verdict: Verdict::Confirmed,
            notes: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.notes.push(text.into());
        self
    }

    pub fn refute(&mut self, witness: impl Into<String>) {
        if self.verdict.is_confirmed() {
            self.verdict = Verdict::Refuted {
                witness: witness.into(),
            };
        }
    }
}

pub(crate) fn surd_row(
    n: usize,
    q: &num::BigInt,
    value: &QuadSurd,
    bound_text: String,
    bound_decimal: String,
    ordering: &str,
    certified: bool,
) -> ReportRow {
    ReportRow {
        n: n as i64,
        q: q.to_string(),
        value: value.to_string(),
        value_decimal: value.decimal(ROW_DIGITS),
        bound: bound_text,
        bound_decimal,
        ordering: ordering.to_string(),
        certified,
        note: String::new(),
    }
}

pub(crate) fn bound_row(
    n: usize,
    q: &num::BigInt,
    value: &QuadSurd,
    bound: &BoundValue,
    ord: &BoundOrdering,
) -> ReportRow {
    surd_row(
        n,
        q,
        value,
        bound.render(ROW_DIGITS),
        bound
            .decimal(ROW_DIGITS)
            .unwrap_or_else(|e| format!("<{e}>")),
        ord.symbol(),
        ord.is_equal(),
    )
}

/// Desk-scale shadow of "infinitely many n": nonempty witness set whose gaps
/// (including the lead-in from `n_min` and the tail up to `n_max`) stay
/// within `max_gap`.
pub(crate) fn witnesses_unbounded(
    witnesses: &[usize],
    n_min: usize,
    n_max: usize,
    max_gap: usize,
) -> std::result::Result<(), String> {
    let Some(first) = witnesses.first() else {
        return Err("no witnesses found".to_string());
    };
    if *first > n_min + max_gap {
        return Err(format!(
            "first witness n = {first} sits beyond the lead-in window {n_min} + {max_gap}"
        ));
    }
    for w in witnesses.windows(2) {
        if w[1] - w[0] > max_gap {
            return Err(format!(
                "witness gap {} to {} exceeds the period window {max_gap}",
                w[0], w[1]
            ));
        }
    }
    let last = *witnesses.last().expect("nonempty");
    if n_max - last > max_gap {
        return Err(format!(
            "no witness in the tail window: last at {last}, sweep end {n_max}"
        ));
    }
    Ok(())
}
