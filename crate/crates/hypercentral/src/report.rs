//! Report documents: deterministic serialization of check results to JSON
//! and CSV, plus the exit-code contract.
//!
//! Serialization is bit-stable: keys are emitted in sorted order, floats
//! carry 12 significant digits, and reports are sorted by
//! `(check_name, group_name)`. Two runs over the same inputs differ only
//! in the timestamp field.

use serde::Serialize;

use crate::theorems::{CheckReport, Quantity, Verdict};

/// Tallies per verdict; field order is alphabetical so serialized keys
/// come out sorted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub fails: usize,
    pub holds: usize,
    pub premises_unmet: usize,
}

/// A full report document. Field order is alphabetical for sorted keys.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub reports: Vec<CheckReport>,
    pub summary: Summary,
    pub timestamp: String,
    pub tool_version: String,
}

impl ReportDocument {
    pub fn new(mut reports: Vec<CheckReport>) -> Self {
        reports.sort_by(|a, b| {
            (&a.check_name, &a.group_name, &a.witness)
                .cmp(&(&b.check_name, &b.group_name, &b.witness))
        });
        let mut summary = Summary::default();
        for r in &reports {
            debug_assert!(
                r.premises_ok || r.verdict == Verdict::PremisesUnmet,
                "verdict requires satisfied premises"
            );
            match r.verdict {
                Verdict::Holds => summary.holds += 1,
                Verdict::Fails => summary.fails += 1,
                Verdict::PremisesUnmet => summary.premises_unmet += 1,
            }
        }
        ReportDocument {
            reports,
            summary,
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// One row per report, quantities flattened to `key=value` pairs
    /// joined by `|`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("check_name,group_name,premises_ok,verdict,quantities,witness\n");
        for r in &self.reports {
            let quantities = r
                .quantities
                .iter()
                .map(|(k, v)| match v {
                    Quantity::Int(i) => format!("{k}={i}"),
                    Quantity::Real(x) => format!("{k}={x}"),
                })
                .collect::<Vec<_>>()
                .join("|");
            let verdict = match r.verdict {
                Verdict::Holds => "holds",
                Verdict::Fails => "fails",
                Verdict::PremisesUnmet => "premises_unmet",
            };
            let row = [
                csv_field(&r.check_name),
                csv_field(&r.group_name),
                r.premises_ok.to_string(),
                verdict.to_string(),
                csv_field(&quantities),
                csv_field(r.witness.as_deref().unwrap_or("")),
            ];
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// Exit-code contract: 1 when anything fails, 3 when premises-unmet
    /// results are the only outcomes and strict mode asked for them,
    /// otherwise 0.
    pub fn exit_code(&self, strict_premises: bool) -> i32 {
        if self.summary.fails > 0 {
            1
        } else if strict_premises
            && self.summary.premises_unmet > 0
            && self.summary.holds == 0
        {
            3
        } else {
            0
        }
    }

    /// The document with the volatile timestamp blanked, for byte
    /// comparisons.
    pub fn without_timestamp(mut self) -> Self {
        self.timestamp = String::new();
        self
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn sample(verdict_holds: Option<bool>) -> CheckReport {
        match verdict_holds {
            Some(h) => CheckReport::concluded("kos", "S3", h, BTreeMap::new(), None),
            None => CheckReport::premises_unmet("kos", "S3", "nope"),
        }
    }

    #[test]
    fn empty_document_has_zeroed_summary() {
        let doc = ReportDocument::new(vec![]);
        assert_eq!(doc.summary, Summary::default());
        assert_eq!(doc.exit_code(false), 0);
        assert_eq!(doc.exit_code(true), 0);
        let json = doc.to_json();
        assert!(json.contains("\"holds\": 0"));
    }

    #[test]
    fn exit_codes_follow_the_contract() {
        let ok = ReportDocument::new(vec![sample(Some(true))]);
        assert_eq!(ok.exit_code(false), 0);
        assert_eq!(ok.exit_code(true), 0);

        let bad = ReportDocument::new(vec![sample(Some(true)), sample(Some(false))]);
        assert_eq!(bad.exit_code(false), 1);

        let unmet = ReportDocument::new(vec![sample(None)]);
        assert_eq!(unmet.exit_code(false), 0);
        assert_eq!(unmet.exit_code(true), 3);

        let mixed = ReportDocument::new(vec![sample(Some(true)), sample(None)]);
        assert_eq!(mixed.exit_code(true), 0);
    }

    #[test]
    fn theorem1_report_serializes_the_bound_fields() {
        let g = crate::catalog::symmetric(3).unwrap();
        let whole = crate::group::SubgroupRef::whole(&g);
        let report = crate::theorems::checks::verify_theorem1(&g, &whole).unwrap();
        let doc = ReportDocument::new(vec![report]);
        let json = doc.to_json();
        assert!(json.contains("\"lhs_index\": 6"));
        assert!(json.contains("\"rhs_bound\": 6"));
        assert!(json.contains("\"verdict\": \"holds\""));
        let csv = doc.to_csv();
        assert!(csv.lines().nth(1).unwrap().contains("lhs_index=6"));
        assert!(csv.lines().nth(1).unwrap().contains("holds"));
    }

    #[test]
    fn reports_sort_by_check_then_group() {
        let a = CheckReport::concluded("kos", "Zb", true, BTreeMap::new(), None);
        let b = CheckReport::concluded("kos", "Aa", true, BTreeMap::new(), None);
        let c = CheckReport::concluded("claim_star", "Zz", true, BTreeMap::new(), None);
        let doc = ReportDocument::new(vec![a, b, c]);
        let order: Vec<&str> = doc
            .reports
            .iter()
            .map(|r| r.check_name.as_str())
            .collect();
        assert_eq!(order, ["claim_star", "kos", "kos"]);
        assert_eq!(doc.reports[1].group_name, "Aa");
    }
}
