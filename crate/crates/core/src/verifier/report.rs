use std::fmt::Write as _;

use serde::Serialize;

use super::{CheckResult, Status};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub budget_exceeded: usize,
    pub counterexamples: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub version: String,
    pub catalog: Vec<String>,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(catalog: Vec<String>, results: Vec<CheckResult>) -> Self {
        let mut summary = Summary {
            total: results.len(),
            ..Summary::default()
        };
        for r in &results {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skipped => summary.skipped += 1,
                Status::BudgetExceeded => summary.budget_exceeded += 1,
            }
            if r.flag.is_some() {
                summary.counterexamples += 1;
            }
        }
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            catalog,
            results,
            summary,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_table(&self) -> String {
        let rows: Vec<[String; 5]> = self
            .results
            .iter()
            .map(|r| {
                let status = match &r.flag {
                    Some(flag) => format!("{} {flag}", r.status),
                    None => r.status.to_string(),
                };
                let (expected, observed) = match (&r.status, &r.reason) {
                    (Status::Skipped | Status::BudgetExceeded, Some(reason)) => {
                        (reason.clone(), String::new())
                    }
                    _ => (r.expected.to_string(), r.observed.to_string()),
                };
                [r.group.clone(), r.check.clone(), status, expected, observed]
            })
            .collect();
        let header = ["group", "check", "status", "expected", "observed"].map(String::from);
        let mut widths = header.clone().map(|h| h.chars().count());
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for row in std::iter::once(&header).chain(&rows) {
            let mut line = String::new();
            for (i, cell) in row.iter().enumerate() {
                if i + 1 < row.len() {
                    let pad = widths[i] - cell.chars().count();
                    let _ = write!(line, "{cell}{:pad$}  ", "");
                } else {
                    line.push_str(cell);
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "\n{} checks: {} pass, {} fail, {} skipped, {} budget exceeded, {} counterexamples",
            s.total, s.pass, s.fail, s.skipped, s.budget_exceeded, s.counterexamples
        );
        out
    }

    /// 1 on any failure, otherwise 3 if a search ran out of budget, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 {
            1
        } else if self.summary.budget_exceeded > 0 {
            3
        } else {
            0
        }
    }
}
