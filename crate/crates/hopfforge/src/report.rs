//! Pass/fail reports shared by all verifiers.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Witness on failure, or a short note on success.
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self { title: title.into(), checks: Vec::new() }
    }

    pub fn pass(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed: true, detail: detail.into() });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed: false, detail: witness.into() });
    }

    /// Records a check whose outcome is `Err(witness)` on failure.
    pub fn record(&mut self, name: impl Into<String>, outcome: Result<String, String>) {
        match outcome {
            Ok(d) => self.pass(name, d),
            Err(w) => self.fail(name, w),
        }
    }

    pub fn extend(&mut self, other: Report) {
        let prefix = other.title;
        for c in other.checks {
            let name = if prefix.is_empty() { c.name } else { format!("{prefix}: {}", c.name) };
            self.checks.push(Check { name, ..c });
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.title.is_empty() {
            writeln!(f, "== {} ==", self.title)?;
        }
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag}  {:<width$}  {}", c.name, c.detail)?;
        }
        Ok(())
    }
}
