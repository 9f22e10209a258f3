//! Canonical JSON certificates for SOS-clique families.
//!
//! ```text
//! {
//!   "schema_version": "1",
//!   "family_type": "A",
//!   "ell": 6,
//!   "k": 2,
//!   "signatures": [
//!     [0, 1, 1, -1, -1, 0, 0],
//!     ...
//!   ],
//!   "provenance": "plane q=2",
//!   "exact": false
//! }
//! ```
//!
//! Keys appear in this order, values are integers, booleans or strings, and
//! the document ends with a newline. A canonical document reads and writes
//! back byte for byte.

use std::fmt::Write as _;

use serde::Deserialize;

use crate::cliquesearch::CliqueFamily;
use crate::error::{Error, Result};
use crate::sos::{signature_violation, Signature};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    family: CliqueFamily,
    /// Free text describing where the family came from.
    pub provenance: String,
    /// True when the family came from a completed exact search, so its size
    /// is `mu_k(A_l)`.
    pub exact: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    schema_version: String,
    family_type: String,
    ell: u64,
    k: u64,
    signatures: Vec<Vec<i64>>,
    provenance: String,
    exact: bool,
}

impl Certificate {
    pub fn new(family: CliqueFamily, provenance: impl Into<String>, exact: bool) -> Self {
        Certificate {
            family,
            provenance: provenance.into(),
            exact,
        }
    }

    pub fn family(&self) -> &CliqueFamily {
        &self.family
    }

    pub fn into_family(self) -> CliqueFamily {
        self.family
    }

    pub fn to_json(&self) -> String {
        let f = &self.family;
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"schema_version\": {},", quote(SCHEMA_VERSION));
        let _ = writeln!(out, "  \"family_type\": \"A\",");
        let _ = writeln!(out, "  \"ell\": {},", f.ell());
        let _ = writeln!(out, "  \"k\": {},", f.k());
        if f.is_empty() {
            out.push_str("  \"signatures\": [],\n");
        } else {
            out.push_str("  \"signatures\": [\n");
            let rows = f.rows();
            for (i, r) in rows.iter().enumerate() {
                let cells: Vec<String> = r.iter().map(i32::to_string).collect();
                let sep = if i + 1 < rows.len() { "," } else { "" };
                let _ = writeln!(out, "    [{}]{sep}", cells.join(", "));
            }
            out.push_str("  ],\n");
        }
        let _ = writeln!(out, "  \"provenance\": {},", quote(&self.provenance));
        let _ = writeln!(out, "  \"exact\": {}", self.exact);
        out.push_str("}\n");
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Document = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let invalid = |index: Option<usize>, message: String| Error::Validation { index, message };
        if doc.schema_version != SCHEMA_VERSION {
            return Err(invalid(
                None,
                format!("unsupported schema_version {:?}", doc.schema_version),
            ));
        }
        if doc.family_type != "A" {
            return Err(invalid(
                None,
                format!("family_type must be \"A\", got {:?}", doc.family_type),
            ));
        }
        if doc.ell == 0 || doc.k == 0 || doc.ell > u32::MAX as u64 || doc.k > u32::MAX as u64 {
            return Err(invalid(
                None,
                format!("need ell >= 1 and k >= 1, got ell={}, k={}", doc.ell, doc.k),
            ));
        }
        let (ell, k) = (doc.ell as usize, doc.k as usize);
        let mut members = Vec::with_capacity(doc.signatures.len());
        for (i, row) in doc.signatures.iter().enumerate() {
            if row.len() != ell + 1 {
                return Err(invalid(
                    Some(i),
                    format!("length {} does not match ell + 1 = {}", row.len(), ell + 1),
                ));
            }
            let narrow: Vec<i32> = row.iter().map(|&x| x.clamp(-2, 2) as i32).collect();
            if let Some(msg) = signature_violation(&narrow, k) {
                return Err(invalid(Some(i), msg));
            }
            if let Some(j) = doc.signatures[..i].iter().position(|r| r == row) {
                return Err(invalid(Some(i), format!("duplicates signature {j}")));
            }
            members.push(Signature::from_i32(&narrow, k)?);
        }
        let family = CliqueFamily::new(k, ell, members)?;
        Ok(Certificate {
            family,
            provenance: doc.provenance,
            exact: doc.exact,
        })
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}
