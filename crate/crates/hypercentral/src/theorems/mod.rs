//! Verification checks: each theorem, lemma, corollary, and the
//! counterexample family, evaluated on concrete finite instances and
//! reported as structured [`CheckReport`]s.

pub mod bounds;
pub mod checks;
pub mod example;

use std::collections::BTreeMap;

use serde::Serialize;

/// Outcome of one verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    PremisesUnmet,
}

/// A named integer or real quantity attached to a report.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Quantity {
    Int(i64),
    Real(f64),
}

impl Quantity {
    /// Large counts degrade to reals (rounded to 12 significant digits)
    /// rather than silently truncating.
    pub fn count(v: u128) -> Quantity {
        if v <= i64::MAX as u128 {
            Quantity::Int(v as i64)
        } else {
            Quantity::real(v as f64)
        }
    }

    pub fn real(v: f64) -> Quantity {
        Quantity::Real(round_sig(v, 12))
    }
}

/// Rounds to `digits` significant digits; report floats carry exactly this
/// precision so serialized documents are bit-stable.
pub fn round_sig(v: f64, digits: i32) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    let magnitude = v.abs().log10().floor() as i32;
    let factor = 10f64.powi(digits - 1 - magnitude);
    (v * factor).round() / factor
}

/// Structured outcome of one theorem/claim verification.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub group_name: String,
    pub premises_ok: bool,
    pub quantities: BTreeMap<String, Quantity>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckReport {
    /// A report with satisfied premises; verdict from `holds`.
    pub fn concluded(
        check_name: &str,
        group_name: &str,
        holds: bool,
        quantities: BTreeMap<String, Quantity>,
        witness: Option<String>,
    ) -> Self {
        CheckReport {
            check_name: check_name.to_string(),
            group_name: group_name.to_string(),
            premises_ok: true,
            quantities,
            verdict: if holds { Verdict::Holds } else { Verdict::Fails },
            witness,
        }
    }

    /// A report whose premises failed; the reason lands in the witness
    /// field.
    pub fn premises_unmet(check_name: &str, group_name: &str, reason: &str) -> Self {
        CheckReport {
            check_name: check_name.to_string(),
            group_name: group_name.to_string(),
            premises_ok: false,
            quantities: BTreeMap::new(),
            verdict: Verdict::PremisesUnmet,
            witness: Some(format!("premise: {reason}")),
        }
    }

    pub fn rename_group(mut self, name: &str) -> Self {
        self.group_name = name.to_string();
        self
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn quantity(&self, key: &str) -> Option<Quantity> {
        self.quantities.get(key).copied()
    }

    pub fn int_quantity(&self, key: &str) -> Option<i64> {
        match self.quantities.get(key) {
            Some(Quantity::Int(v)) => Some(*v),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_sig_keeps_twelve_digits() {
        assert_eq!(round_sig(1.0 / 3.0, 12), 0.333333333333);
        assert_eq!(round_sig(123456789012345.0, 12), 123456789012000.0);
        assert_eq!(round_sig(0.0, 12), 0.0);
    }

    #[test]
    fn verdict_serializes_snake_case() {
        assert_eq!(
            serde_json::to_string(&Verdict::PremisesUnmet).unwrap(),
            "\"premises_unmet\""
        );
    }

    #[test]
    fn large_counts_degrade_to_reals() {
        assert_eq!(Quantity::count(7), Quantity::Int(7));
        match Quantity::count(u128::MAX) {
            Quantity::Real(_) => {}
            other => panic!("expected real, got {other:?}"),
        }
    }
}
