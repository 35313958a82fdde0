//! Structured axiom reports.

use std::fmt;

use serde::Serialize;

use crate::tensorcat::Mor;

/// One nonzero entry of a failing clause's difference matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffEntry {
    pub row: usize,
    pub col: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clause {
    /// Stable key, e.g. `brace_triple(vi.4)`.
    pub key: String,
    pub statement: String,
    pub passed: bool,
    /// `lhs - rhs` as `rows x cols` plus its nonzero entries; absent on pass.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub difference: Option<Difference>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Difference {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<DiffEntry>,
}

impl Difference {
    fn of(d: &Mor) -> Difference {
        Difference {
            rows: d.rows(),
            cols: d.cols(),
            entries: d
                .nonzero_entries()
                .map(|(row, col, v)| DiffEntry { row, col, value: v.to_string() })
                .collect(),
        }
    }
}

/// A list of checked clauses plus informational properties.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub clauses: Vec<Clause>,
    /// Facts that are reported but are not pass/fail conditions, e.g. whether
    /// the structure is commutative.
    pub properties: Vec<(String, bool)>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Report {
        Report {
            subject: subject.into(),
            ..Default::default()
        }
    }

    /// Records `lhs == rhs`. A type mismatch counts as a failure.
    pub fn equation(&mut self, key: &str, statement: &str, lhs: &Mor, rhs: &Mor) -> bool {
        let (passed, difference, note) = match lhs.sub(rhs) {
            Ok(d) if d.is_zero() => (true, None, None),
            Ok(d) => (false, Some(Difference::of(&d)), None),
            Err(e) => (false, None, Some(format!("type mismatch: {e}"))),
        };
        self.clauses.push(Clause {
            key: key.to_string(),
            statement: statement.to_string(),
            passed,
            difference,
            note,
        });
        passed
    }

    /// Records a condition that is not an equation (e.g. invertibility).
    pub fn condition(&mut self, key: &str, statement: &str, passed: bool, note: Option<String>) -> bool {
        self.clauses.push(Clause {
            key: key.to_string(),
            statement: statement.to_string(),
            passed,
            difference: None,
            note,
        });
        passed
    }

    pub fn property(&mut self, name: &str, value: bool) {
        self.properties.push((name.to_string(), value));
    }

    pub fn get_property(&self, name: &str) -> Option<bool> {
        self.properties.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    /// Appends every clause of `other` with keys prefixed by `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.clauses {
            c.key = format!("{prefix}/{}", c.key);
            self.clauses.push(c);
        }
        for (n, v) in other.properties {
            self.properties.push((format!("{prefix}/{n}"), v));
        }
    }

    pub fn all_passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Clause> {
        self.clauses.iter().filter(|c| !c.passed)
    }

    pub fn clause(&self, key: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.key == key)
    }

    pub fn passed(&self, key: &str) -> bool {
        self.clause(key).is_some_and(|c| c.passed)
    }

    /// Keys of failing clauses, in check order.
    pub fn failed_keys(&self) -> Vec<&str> {
        self.failures().map(|c| c.key.as_str()).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let passed = self.clauses.iter().filter(|c| c.passed).count();
        writeln!(f, "{}: {}/{} clauses pass", self.subject, passed, self.clauses.len())?;
        for c in &self.clauses {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "  {tag}  {:<44} {}", c.key, c.statement)?;
            if let Some(n) = &c.note {
                writeln!(f, "        note: {n}")?;
            }
            if let Some(d) = &c.difference {
                writeln!(f, "        difference {}x{}, {} nonzero:", d.rows, d.cols, d.entries.len())?;
                for e in d.entries.iter().take(8) {
                    writeln!(f, "          ({}, {}) = {}", e.row, e.col, e.value)?;
                }
                if d.entries.len() > 8 {
                    writeln!(f, "          ... {} more", d.entries.len() - 8)?;
                }
            }
        }
        for (n, v) in &self.properties {
            writeln!(f, "  info  {n} = {v}")?;
        }
        Ok(())
    }
}
