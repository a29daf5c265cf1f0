//! Report serialization: JSON and CSV with a fixed column order, and a plain
//! text rendering. Values are decimal strings, so nothing is truncated and
//! re-serializing a parsed report is byte-identical.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::verify::VerificationRecord;

/// Pretty JSON array of records.
pub fn to_json(records: &[VerificationRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize")
}

pub fn from_json(s: &str) -> Result<Vec<VerificationRecord>> {
    serde_json::from_str(s).map_err(|e| Error::BadGrid(format!("malformed report JSON: {e}")))
}

/// CSV with the columns family,n,k,spec,lhs,rhs,case_label,match,millis.
pub fn to_csv(records: &[VerificationRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(r).expect("records serialize");
    }
    String::from_utf8(w.into_inner().expect("csv flush")).expect("csv is utf-8")
}

/// One line per record for terminals.
pub fn to_text(records: &[VerificationRecord]) -> String {
    let mut out = String::new();
    for r in records {
        let status = if r.is_match { "ok  " } else { "FAIL" };
        let _ = writeln!(
            out,
            "{status} {} n={} k={} [{}] case '{}': lhs = {}, rhs = {}",
            r.family, r.n, r.k, r.spec, r.case_label, r.lhs, r.rhs
        );
    }
    out
}
