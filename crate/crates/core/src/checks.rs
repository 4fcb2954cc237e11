//! Identity check records shared by the verifier, the soliton analyzer and
//! the reports.

use serde::Serialize;

use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Hypotheses not met; the identity was not evaluated.
    Skipped,
}

/// The first slot where the two sides disagree. Slot indices are 1-based
/// frame indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub part: Option<String>,
    pub slot: Vec<usize>,
    pub left: Vec<Scalar>,
    pub right: Vec<Scalar>,
}

/// One identity evaluated on every frame slot.
///
/// `left` and `right` hold both sides over all slots, flattened in slot order;
/// vector-valued sides contribute all their components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub statement: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub left: Vec<Scalar>,
    pub right: Vec<Scalar>,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn skipped(id: &str, statement: &str, reason: impl Into<String>) -> Self {
        CheckRecord {
            id: id.to_string(),
            statement: statement.to_string(),
            status: Status::Skipped,
            witness: None,
            note: Some(reason.into()),
            left: Vec::new(),
            right: Vec::new(),
        }
    }

    /// A single scalar equality.
    pub fn equality(id: &str, statement: &str, left: Scalar, right: Scalar) -> Self {
        let mut c = Checker::new(id, statement);
        c.compare(None, &[], std::slice::from_ref(&left), std::slice::from_ref(&right));
        c.finish()
    }

    /// A predicate with no natural two-sided form, e.g. "decomposition exists".
    pub fn predicate(id: &str, statement: &str, holds: bool, note: impl Into<String>) -> Self {
        CheckRecord {
            id: id.to_string(),
            statement: statement.to_string(),
            status: if holds { Status::Pass } else { Status::Fail },
            witness: None,
            note: Some(note.into()),
            left: Vec::new(),
            right: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Accumulates slot comparisons for one identity.
pub struct Checker {
    id: String,
    statement: String,
    left: Vec<Scalar>,
    right: Vec<Scalar>,
    witness: Option<Witness>,
}

impl Checker {
    pub fn new(id: &str, statement: &str) -> Self {
        Checker {
            id: id.to_string(),
            statement: statement.to_string(),
            left: Vec::new(),
            right: Vec::new(),
            witness: None,
        }
    }

    /// Compares both sides at one slot. `slot` uses 0-based frame indices.
    pub fn compare(&mut self, part: Option<&str>, slot: &[usize], left: &[Scalar], right: &[Scalar]) {
        debug_assert_eq!(left.len(), right.len());
        if self.witness.is_none() && left != right {
            self.witness = Some(Witness {
                part: part.map(str::to_string),
                slot: slot.iter().map(|i| i + 1).collect(),
                left: left.to_vec(),
                right: right.to_vec(),
            });
        }
        self.left.extend_from_slice(left);
        self.right.extend_from_slice(right);
    }

    pub fn finish(self) -> CheckRecord {
        CheckRecord {
            id: self.id,
            statement: self.statement,
            status: if self.witness.is_none() { Status::Pass } else { Status::Fail },
            witness: self.witness,
            note: None,
            left: self.left,
            right: self.right,
        }
    }
}

pub const FRAME_SLOT_NOTE: &str = "identities are evaluated on every tuple of frame vectors; \
components are constant, so by multilinearity this is equivalent to all vector fields";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub note: String,
    pub records: Vec<CheckRecord>,
}

impl Default for VerificationReport {
    fn default() -> Self {
        VerificationReport { note: FRAME_SLOT_NOTE.to_string(), records: Vec::new() }
    }
}

impl VerificationReport {
    pub fn new(records: Vec<CheckRecord>) -> Self {
        VerificationReport { records, ..Default::default() }
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.records.extend(other.records);
    }

    pub fn get(&self, id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    /// No evaluated record failed.
    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.failed())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checker_records_first_witness_only() {
        let mut c = Checker::new("Eq X", "a = b");
        c.compare(None, &[0], &[Scalar::one()], &[Scalar::one()]);
        c.compare(Some("part"), &[1, 2], &[Scalar::zero()], &[Scalar::one()]);
        c.compare(None, &[2, 2], &[Scalar::zero()], &[Scalar::from(5)]);
        let rec = c.finish();
        assert_eq!(rec.status, Status::Fail);
        let w = rec.witness.unwrap();
        assert_eq!(w.slot, vec![2, 3]);
        assert_eq!(w.part.as_deref(), Some("part"));
        assert_eq!(rec.left.len(), 3);
    }

    #[test]
    fn skipped_records_do_not_fail_report() {
        let report = VerificationReport::new(vec![
            CheckRecord::equality("a", "", Scalar::one(), Scalar::one()),
            CheckRecord::skipped("b", "", "hypothesis not met"),
        ]);
        assert!(report.all_pass());
        assert_eq!(report.failures().count(), 0);
    }
}
