//! Structured pass/fail reports for the verification commands.
//!
//! Every check in the crate (relation suites, morphism checks, module
//! comparisons, ...) produces a [`CheckReport`]: a titled list of identities
//! with an observed verdict and an expected verdict.  A report *passes* when
//! every entry's observation matches its expectation; this lets a report
//! carry deliberately failing probe entries (documented discrepancies) while
//! still passing overall.
//!
//! Reports print as human-readable tables or as JSON lines with `identity`,
//! `status`, `expected`, and `witness` fields.

use std::fmt;

use serde::Serialize;

/// One checked identity.
#[derive(Debug, Clone, Serialize)]
pub struct CheckEntry {
    /// Human-readable statement of the identity, e.g. `x1*y1 - q1*y1*x1 - 1`.
    pub identity: String,
    /// Whether the identity held under exact evaluation.
    pub holds: bool,
    /// Whether it was expected to hold.  Probe entries that document a known
    /// failure set this to `false`.
    pub expected_to_hold: bool,
    /// On a failed identity, a witness (typically the nonzero residue).
    pub witness: Option<String>,
}

impl CheckEntry {
    /// An identity expected to hold.
    pub fn expected(identity: impl Into<String>, holds: bool, witness: Option<String>) -> Self {
        CheckEntry {
            identity: identity.into(),
            holds,
            expected_to_hold: true,
            witness,
        }
    }

    /// A probe entry documenting an identity expected to fail.
    pub fn probe(identity: impl Into<String>, holds: bool, witness: Option<String>) -> Self {
        CheckEntry {
            identity: identity.into(),
            holds,
            expected_to_hold: false,
            witness,
        }
    }

    /// True when the observation matches the expectation.
    pub fn ok(&self) -> bool {
        self.holds == self.expected_to_hold
    }
}

/// A titled list of checked identities.
#[derive(Debug, Clone, Default)]
pub struct CheckReport {
    pub title: String,
    pub entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new(title: impl Into<String>) -> Self {
        CheckReport {
            title: title.into(),
            entries: Vec::new(),
        }
    }

    /// Record an identity expected to hold.
    pub fn check(&mut self, identity: impl Into<String>, holds: bool, witness: Option<String>) {
        self.entries
            .push(CheckEntry::expected(identity, holds, witness));
    }

    /// Record a probe identity expected to fail.
    pub fn probe(&mut self, identity: impl Into<String>, holds: bool, witness: Option<String>) {
        self.entries
            .push(CheckEntry::probe(identity, holds, witness));
    }

    /// Append all entries of `other`.
    pub fn merge(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    /// True when every entry's observation matches its expectation.
    pub fn passed(&self) -> bool {
        self.entries.iter().all(CheckEntry::ok)
    }

    /// Number of entries whose observation mismatches the expectation.
    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|e| !e.ok()).count()
    }

    /// JSON-lines rendering: one object per entry.
    pub fn to_json_lines(&self) -> String {
        #[derive(Serialize)]
        struct Line<'a> {
            identity: &'a str,
            status: &'a str,
            expected: &'a str,
            #[serde(skip_serializing_if = "Option::is_none")]
            witness: &'a Option<String>,
        }
        let mut out = String::new();
        for e in &self.entries {
            let line = Line {
                identity: &e.identity,
                status: if e.holds { "pass" } else { "fail" },
                expected: if e.expected_to_hold { "pass" } else { "fail" },
                witness: &e.witness,
            };
            out.push_str(&serde_json::to_string(&line).expect("report entries serialize"));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for e in &self.entries {
            let verdict = match (e.holds, e.expected_to_hold) {
                (true, true) => "pass",
                (false, false) => "fail (expected)",
                (true, false) => "PASS (unexpected!)",
                (false, true) => "FAIL",
            };
            write!(f, "  [{verdict}] {}", e.identity)?;
            if let Some(w) = &e.witness {
                if !e.ok() || !e.expected_to_hold {
                    write!(f, "  witness: {w}")?;
                }
            }
            writeln!(f)?;
        }
        write!(
            f,
            "  {} checked, {} mismatch(es)",
            self.entries.len(),
            self.failures()
        )
    }
}
