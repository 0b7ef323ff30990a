//! Pass/fail records produced by the identity checkers.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not evaluated, e.g. because an enumeration would exceed its cap.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub identity: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records whether `lhs == rhs`; on mismatch both sides go into the detail.
    pub fn check_eq<T: PartialEq + std::fmt::Display>(
        &mut self,
        identity: &str,
        n: usize,
        r: Option<usize>,
        lhs: &T,
        rhs: &T,
    ) -> bool {
        let ok = lhs == rhs;
        self.records.push(CheckRecord {
            identity: identity.to_string(),
            n,
            r,
            status: if ok { Status::Pass } else { Status::Fail },
            detail: (!ok).then(|| format!("lhs = {lhs}; rhs = {rhs}")),
        });
        ok
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.records.push(record);
    }

    pub fn pass(&mut self, identity: &str, n: usize, r: Option<usize>, detail: Option<String>) {
        self.push(CheckRecord {
            identity: identity.to_string(),
            n,
            r,
            status: Status::Pass,
            detail,
        });
    }

    pub fn fail(&mut self, identity: &str, n: usize, r: Option<usize>, detail: String) {
        self.push(CheckRecord {
            identity: identity.to_string(),
            n,
            r,
            status: Status::Fail,
            detail: Some(detail),
        });
    }

    pub fn skip(&mut self, identity: &str, n: usize, r: Option<usize>, detail: String) {
        self.push(CheckRecord {
            identity: identity.to_string(),
            n,
            r,
            status: Status::Skipped,
            detail: Some(detail),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    /// True when nothing failed. Skipped records do not count as failures.
    pub fn passed(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn serializes_as_flat_records() {
        let mut rep = Report::new();
        rep.check_eq("transfer_second_kind", 5, Some(2), &1, &1);
        let s = serde_json::to_string(&rep).unwrap();
        assert_eq!(
            s,
            r#"[{"identity":"transfer_second_kind","n":5,"r":2,"status":"pass"}]"#
        );
    }

    #[test]
    fn first_failure_is_reported() {
        let mut rep = Report::new();
        rep.check_eq("a", 1, None, &1, &1);
        rep.skip("b", 2, None, "too big".into());
        assert!(rep.passed());
        rep.check_eq("c", 3, None, &1, &2);
        rep.check_eq("d", 4, None, &1, &3);
        let f = rep.first_failure().unwrap();
        assert_eq!(f.identity, "c");
        assert_eq!(f.detail.as_deref(), Some("lhs = 1; rhs = 2"));
    }
}
