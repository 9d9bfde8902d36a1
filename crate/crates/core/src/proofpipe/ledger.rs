//! The coefficient ledger: every named quantity the pipeline computes, with
//! its canonical serialization and, where the source derivation states a
//! value, a comparison outcome.

use super::pqr::Case;
use crate::symring::{parse_ratexpr, RatExpr, ZPoly};
use serde::Serialize;

/// Comparison outcome for one ledger entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    /// Exact rational equality with the stated value.
    Match,
    /// Equal up to the recorded nonzero rational scale.
    MatchScaled,
    /// Differs from the stated value (fails verification).
    Mismatch,
    /// Differs from a printed value that is provably inconsistent with the
    /// source's own adjacent arithmetic (known print slip; reported but not
    /// counted as a verification failure).
    MismatchPrint,
    /// No stated value to compare against.
    Unstated,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::MatchScaled => "match(scale)",
            Status::Mismatch => "mismatch",
            Status::MismatchPrint => "mismatch(print)",
            Status::Unstated => "unstated",
        }
    }
}

/// How a stated value should be compared.
#[derive(Clone)]
pub enum Stated {
    /// Nothing stated.
    None,
    /// Must match exactly (scale 1) or up to a nonzero rational scale, which
    /// is then recorded.
    Exact(String),
    /// Compared up to scale by design (the source normalizes differently).
    UpToScale(String),
    /// Printed value known to carry a transcription slip; engine value is
    /// authoritative, outcome reported as `MismatchPrint` unless it matches.
    Print(String, String),
}

#[derive(Debug, Clone, Serialize)]
pub struct LedgerEntry {
    pub name: String,
    pub symbolic: String,
    pub paper_value: Option<String>,
    pub scale: Option<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Audit table for one pipeline run.
#[derive(Debug, Clone, Serialize)]
pub struct Ledger {
    pub case: &'static str,
    pub entries: Vec<LedgerEntry>,
    pub conclusions: Vec<String>,
}

impl Ledger {
    pub fn new(case: Case) -> Ledger {
        Ledger {
            case: case.name(),
            entries: Vec::new(),
            conclusions: Vec::new(),
        }
    }

    pub fn conclude(&mut self, line: impl Into<String>) {
        self.conclusions.push(line.into());
    }

    /// Record a logical step that is assumed, not computed (e.g. "a vanishing
    /// polynomial identity in z with u-only coefficients has all coefficients
    /// zero"). Kept in the table so the audit trail distinguishes computed
    /// identities from reasoning steps.
    pub fn record_assumption(&mut self, name: impl Into<String>, statement: &str) {
        self.entries.push(LedgerEntry {
            name: name.into(),
            symbolic: "(assumption)".into(),
            paper_value: None,
            scale: None,
            status: Status::Unstated,
            note: Some(statement.to_string()),
        });
    }

    /// Record one coefficient with an optional stated value. The ring is
    /// localized at A and X only; a denominator outside that set means a
    /// normalization invariant broke upstream and is surfaced here rather
    /// than absorbed.
    pub fn record(&mut self, name: impl Into<String>, value: &RatExpr, stated: Stated) {
        let name = name.into();
        assert!(
            value.is_localized_at_a(),
            "localization invariant broken at ledger entry {name}: denominator {} \
is not a rational multiple of a power of A",
            value.den()
        );
        let symbolic = value.to_string();
        let entry = match stated {
            Stated::None => LedgerEntry {
                name,
                symbolic,
                paper_value: None,
                scale: None,
                status: Status::Unstated,
                note: None,
            },
            Stated::Exact(s) | Stated::UpToScale(s) => {
                let want = parse_ratexpr(&s)
                    .unwrap_or_else(|e| panic!("bad stated value for {name}: {e}"));
                let (status, scale) = compare(value, &want);
                LedgerEntry {
                    name,
                    symbolic,
                    paper_value: Some(want.to_string()),
                    scale,
                    status,
                    note: None,
                }
            }
            Stated::Print(s, note) => {
                // known print slips are compared exactly: a scaled "match"
                // would bury the documented discrepancy
                let want = parse_ratexpr(&s)
                    .unwrap_or_else(|e| panic!("bad stated value for {name}: {e}"));
                let status = if value == &want {
                    Status::Match
                } else {
                    Status::MismatchPrint
                };
                LedgerEntry {
                    name,
                    symbolic,
                    paper_value: Some(want.to_string()),
                    scale: None,
                    status,
                    note: Some(note),
                }
            }
        };
        self.entries.push(entry);
    }

    /// Record every nonzero coefficient of a z-polynomial under `base<k>`
    /// names, attaching stated values where provided.
    pub fn record_zpoly(&mut self, base: &str, value: &ZPoly, stated: &[(u32, Stated)]) {
        let mut degrees: Vec<u32> = value.coeffs().map(|(k, _)| *k).collect();
        for (k, _) in stated {
            if !degrees.contains(k) {
                degrees.push(*k);
            }
        }
        degrees.sort_unstable();
        for k in degrees {
            let c = value.coeff(k);
            let st = stated
                .iter()
                .find(|(j, _)| *j == k)
                .map(|(_, s)| s.clone())
                .unwrap_or(Stated::None);
            self.record(format!("{base}{k}"), &c, st);
        }
    }

    pub fn entry(&self, name: &str) -> Option<&LedgerEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Genuine mismatches (known print slips excluded).
    pub fn mismatches(&self) -> Vec<&LedgerEntry> {
        self.entries
            .iter()
            .filter(|e| e.status == Status::Mismatch)
            .collect()
    }

    pub fn noted_print_slips(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| e.status == Status::MismatchPrint)
            .count()
    }

    /// CSV with the fixed column set: name, symbolic, paper_value, scale, status.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,symbolic,paper_value,scale,status\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                csv_field(&e.name),
                csv_field(&e.symbolic),
                csv_field(e.paper_value.as_deref().unwrap_or("")),
                csv_field(e.scale.as_deref().unwrap_or("")),
                csv_field(e.status.as_str()),
            ));
        }
        out
    }
}

fn compare(value: &RatExpr, want: &RatExpr) -> (Status, Option<String>) {
    if value == want {
        return (Status::Match, None);
    }
    if let Some(scale) = value.constant_ratio(want) {
        return (Status::MatchScaled, Some(scale.to_string()));
    }
    (Status::Mismatch, None)
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
