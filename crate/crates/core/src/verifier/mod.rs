//! Formula-versus-oracle checks over a catalog of groups, and scans for the
//! questions that remain open outside the nilpotent case.

mod catalog;
mod checks;
mod report;

pub use catalog::{default_catalog, parse_catalog, run_catalog, CatalogEntry, Subject};
pub use checks::{run_check, run_pair_check, scan_question};
pub use report::{Report, Summary};

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::graphcore::Certificate;

macro_rules! ids {
    ($name:ident { $($variant:ident => $s:literal),* $(,)? }) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name {
            $($variant),*
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $s),*
                }
            }
        }

        impl FromStr for $name {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, String> {
                match s.trim() {
                    $($s => Ok($name::$variant),)*
                    other => Err(format!("unknown {}: {other}", stringify!($name))),
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.serialize_str(self.as_str())
            }
        }
    };
}

ids!(CheckId {
    MaxConnectivity => "max-connectivity",
    Eulerian => "eulerian",
    Hamiltonian => "hamiltonian",
    TotalDomination => "total-domination",
    CliqueChromatic => "clique-chromatic",
    CompleteDelta => "complete-delta",
    LexDecomposition => "lex-decomposition",
    DegreeLifting => "degree-lifting",
    CoprimeProduct => "coprime-product",
    DegreeFormulas => "degree-formulas",
    GraphDeterminesQuotient => "graph-determines-quotient",
    KappaFrattiniScaling => "kappa-frattini-scaling",
    EdgeConnectivityDiameter => "edge-connectivity-diameter",
    TdProductSubmultiplicative => "td-product-submultiplicative",
    TdSandwich => "td-sandwich",
});

ids!(Question {
    Conn => "conn",
    Ham => "ham",
    Chrom => "chrom",
});

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    BudgetExceeded,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::BudgetExceeded => "budget-exceeded",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub group: String,
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Set to `COUNTEREXAMPLE` when a scan fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flag: Option<String>,
    pub expected: Value,
    pub observed: Value,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<Certificate>,
    pub nodes: u64,
}

impl CheckResult {
    pub(crate) fn new(group: &str, check: &str) -> Self {
        CheckResult {
            group: group.to_string(),
            check: check.to_string(),
            status: Status::Skipped,
            reason: None,
            flag: None,
            expected: Value::Null,
            observed: Value::Null,
            certificates: Vec::new(),
            nodes: 0,
        }
    }

    pub fn new_skipped(group: &str, check: &str, reason: impl Into<String>) -> Self {
        CheckResult::new(group, check).skipped(reason)
    }

    pub(crate) fn skipped(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Skipped;
        self.reason = Some(reason.into());
        self
    }

    pub(crate) fn compared(mut self, pass: bool, expected: Value, observed: Value) -> Self {
        self.status = if pass { Status::Pass } else { Status::Fail };
        self.expected = expected;
        self.observed = observed;
        self
    }

    pub(crate) fn budget(mut self, nodes: u64, reason: impl Into<String>) -> Self {
        self.status = Status::BudgetExceeded;
        self.nodes = nodes;
        self.reason = Some(reason.into());
        self
    }
}
