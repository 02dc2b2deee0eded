use std::fmt::Write as _;
use std::path::Path;

use crate::error::{CliError, CliResult};

/// One named assertion of an experiment.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A table of numeric rows plus the verdicts of the experiment's assertions.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub id: String,
    pub params: Vec<(String, String)>,
    pub seed: Option<u64>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
    pub checks: Vec<Check>,
}

/// Twelve significant digits.
pub fn fmt_num(x: f64) -> String {
    format!("{x:.11e}")
}

impl Report {
    pub fn new(id: &str, columns: &[&str]) -> Self {
        Report {
            id: id.to_string(),
            params: Vec::new(),
            seed: None,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn param(&mut self, name: &str, value: impl ToString) {
        self.params.push((name.to_string(), value.to_string()));
    }

    pub fn row(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match the header");
        self.rows.push(row);
    }

    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.to_string(), passed, detail: detail.into() });
    }

    pub fn check_named(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn column(&self, name: &str) -> Vec<f64> {
        let i = self.columns.iter().position(|c| c == name).unwrap_or_else(|| panic!("no column {name}"));
        self.rows.iter().map(|r| r[i]).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut s = self.columns.join(",");
        s.push('\n');
        for r in &self.rows {
            s.push_str(&r.iter().map(|x| fmt_num(*x)).collect::<Vec<_>>().join(","));
            s.push('\n');
        }
        s
    }

    /// Human-readable header and verdicts.
    pub fn summary(&self) -> String {
        let mut s = format!("experiment {}\n", self.id);
        if let Some(seed) = self.seed {
            let _ = writeln!(s, "  seed = {seed}");
        }
        for (k, v) in &self.params {
            let _ = writeln!(s, "  {k} = {v}");
        }
        for c in &self.checks {
            let _ = writeln!(s, "  [{}] {}: {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail);
        }
        let _ = write!(s, "verdict: {}", if self.passed() { "pass" } else { "FAIL" });
        s
    }
}

pub fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    std::fs::write(path, contents).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}
