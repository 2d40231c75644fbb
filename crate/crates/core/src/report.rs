//! Validation reports.
//!
//! Every checker in the crate returns a [`Report`]: one [`Check`] per law,
//! and a [`Witness`] (element, pair or triple of indices) for each failure.

use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    pub fn of(indices: impl IntoIterator<Item = usize>) -> Self {
        Witness {
            indices: indices.into_iter().collect(),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.indices)?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub law: &'static str,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    /// Records `law`, failing it when a witness is supplied.
    pub fn record(&mut self, law: &'static str, witness: Option<Witness>) -> &mut Self {
        let status = if witness.is_some() { Status::Fail } else { Status::Pass };
        self.checks.push(Check { law, status, witness });
        self
    }

    pub fn pass(&mut self, law: &'static str) -> &mut Self {
        self.record(law, None)
    }

    pub fn fail(&mut self, law: &'static str, witness: Witness) -> &mut Self {
        self.record(law, Some(witness))
    }

    /// Records `law` as passing when `ok`, otherwise with `witness()`.
    pub fn check(&mut self, law: &'static str, ok: bool, witness: impl FnOnce() -> Witness) -> &mut Self {
        if ok {
            self.pass(law)
        } else {
            self.fail(law, witness())
        }
    }

    pub fn skip(&mut self, law: &'static str) -> &mut Self {
        self.checks.push(Check {
            law,
            status: Status::Skipped,
            witness: None,
        });
        self
    }

    pub fn extend(&mut self, other: Report) -> &mut Self {
        self.checks.extend(other.checks);
        self
    }

    pub fn is_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn failed(&self, law: &str) -> bool {
        self.failures().any(|c| c.law == law)
    }

    pub fn get(&self, law: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.law == law)
    }

    pub fn witness(&self, law: &str) -> Option<&Witness> {
        self.failures().find(|c| c.law == law).and_then(|c| c.witness.as_ref())
    }

    pub fn into_result(self) -> Result<(), Report> {
        if self.is_pass() {
            Ok(())
        } else {
            Err(self)
        }
    }

    /// One line naming the failed laws, or `"all checks passed"`.
    pub fn summary(&self) -> String {
        let failed: Vec<String> = self
            .failures()
            .map(|c| match &c.witness {
                Some(w) => format!("{} {}", c.law, w),
                None => c.law.to_string(),
            })
            .collect();
        if failed.is_empty() {
            "all checks passed".to_string()
        } else {
            failed.join("; ")
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            write!(f, "{:<8}{}", check.status, check.law)?;
            if let Some(w) = &check.witness {
                write!(f, "  witness {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
