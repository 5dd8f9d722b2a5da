use rayon::prelude::*;

use super::{run_check, run_pair_check, CheckId, CheckResult, Report};
use crate::graphcore::SearchBudget;
use crate::groupkit::{build_group_with_guard, parse_spec, Group, DEFAULT_MAX_ORDER};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subject {
    Group(String),
    /// Two groups compared by graph-determines-quotient only.
    Pair(String, String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub subject: Subject,
    pub max_order: usize,
}

impl CatalogEntry {
    pub fn group(spec: &str) -> Self {
        CatalogEntry {
            subject: Subject::Group(spec.to_string()),
            max_order: DEFAULT_MAX_ORDER,
        }
    }

    pub fn describe(&self) -> String {
        match &self.subject {
            Subject::Group(s) => s.clone(),
            Subject::Pair(a, b) => format!("{a} ~ {b}"),
        }
    }
}

/// Groups up to order 200 covering cyclic and noncyclic, abelian and
/// nonabelian, and r, s ∈ {0, 1, 2}; three larger groups for the checks that
/// stay cheap at their size; and one isomorphic and one non-isomorphic pair.
pub fn default_catalog() -> Vec<CatalogEntry> {
    let mut specs: Vec<String> = (2..=36).chain([60, 100]).map(|n| format!("C{n}")).collect();
    specs.extend([2, 3, 5, 7].map(|p| format!("C{p}^2")));
    specs.extend(
        [
            "C4 x C3",
            "C8",
            "C2 x C6",
            "C2^2 x C3",
            "C2^2 x C9",
            "C2^2 x C3^2",
            "C4 x C3^2",
            "C3^2 x C5",
            "Heis3",
            "Heis5",
            "C2^2 x Heis3",
            "C2^2 x C9 x C3",
            "Ex(1)",
        ]
        .map(String::from),
    );
    let mut out: Vec<CatalogEntry> = specs.iter().map(|s| CatalogEntry::group(s)).collect();
    for s in ["C210", "C2^2 x C3^2 x C5^2", "C7^2 x C5"] {
        out.push(CatalogEntry {
            subject: Subject::Group(s.into()),
            max_order: 1000,
        });
    }
    for (a, b) in [
        ("C2^2 x C9 x C3", "C2^2 x Heis3"),
        ("C2^2 x C9", "C2^2 x C3^2"),
    ] {
        out.push(CatalogEntry {
            subject: Subject::Pair(a.into(), b.into()),
            max_order: DEFAULT_MAX_ORDER,
        });
    }
    out
}

/// One entry per line: a group spec, or two specs joined by `~` for a pair.
/// Blank lines and lines starting with `#` are ignored.
pub fn parse_catalog(text: &str, max_order: usize) -> Vec<CatalogEntry> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let subject = match l.split_once('~') {
                Some((a, b)) => Subject::Pair(a.trim().into(), b.trim().into()),
                None => Subject::Group(l.into()),
            };
            CatalogEntry { subject, max_order }
        })
        .collect()
}

fn build(spec: &str, max_order: usize) -> Result<Group, String> {
    parse_spec(spec)
        .and_then(|s| build_group_with_guard(&s, max_order))
        .map_err(|e| e.to_string())
}

enum Task<'a> {
    Single(&'a str, Result<&'a Group, &'a str>, CheckId),
    Pair(String, Result<(&'a Group, &'a Group), &'a str>),
}

/// Evaluates every check on every group entry, and graph-determines-quotient
/// on every pair, on `jobs` worker threads. Results keep catalog order, so
/// the report does not depend on the number of workers.
pub fn run_catalog(
    catalog: &[CatalogEntry],
    checks: &[CheckId],
    jobs: usize,
    budget: SearchBudget,
) -> Report {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let results = pool.install(|| {
        let built: Vec<Vec<Result<Group, String>>> = catalog
            .par_iter()
            .map(|e| match &e.subject {
                Subject::Group(s) => vec![build(s, e.max_order)],
                Subject::Pair(a, b) => vec![build(a, e.max_order), build(b, e.max_order)],
            })
            .collect();
        let mut tasks = Vec::new();
        for (entry, groups) in catalog.iter().zip(&built) {
            match &entry.subject {
                Subject::Group(s) => {
                    for &c in checks {
                        tasks.push(Task::Single(
                            s,
                            groups[0].as_ref().map_err(String::as_str),
                            c,
                        ));
                    }
                }
                Subject::Pair(..) if checks.contains(&CheckId::GraphDeterminesQuotient) => {
                    let pair = match (&groups[0], &groups[1]) {
                        (Ok(a), Ok(b)) => Ok((a, b)),
                        (Err(e), _) | (_, Err(e)) => Err(e.as_str()),
                    };
                    tasks.push(Task::Pair(entry.describe(), pair));
                }
                Subject::Pair(..) => {}
            }
        }
        tasks
            .par_iter()
            .map(|t| match t {
                Task::Single(spec, Ok(g), c) => run_check(g, spec, *c, budget),
                Task::Single(spec, Err(e), c) => CheckResult::new(spec, c.as_str()).skipped(*e),
                Task::Pair(label, Ok((a, b))) => run_pair_check(a, b, label),
                Task::Pair(label, Err(e)) => {
                    CheckResult::new(label, CheckId::GraphDeterminesQuotient.as_str()).skipped(*e)
                }
            })
            .collect::<Vec<_>>()
    });
    Report::new(
        catalog.iter().map(CatalogEntry::describe).collect(),
        results,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_file_format() {
        let entries = parse_catalog("# groups\nC6\n\nC2^2 x C9 ~ C2^2 x C3^2\n", 200);
        assert_eq!(entries.len(), 2);
        assert_eq!(
            entries[1].subject,
            Subject::Pair("C2^2 x C9".into(), "C2^2 x C3^2".into())
        );
    }

    #[test]
    fn empty_catalog() {
        let r = run_catalog(&[], CheckId::ALL, 2, SearchBudget::default());
        assert!(r.results.is_empty());
        assert_eq!(r.summary.total, 0);
    }

    #[test]
    fn build_failures_become_skips() {
        let entries = parse_catalog("C2^3\nC500\nD7", 200);
        let r = run_catalog(&entries, &[CheckId::Eulerian], 1, SearchBudget::default());
        assert!(r
            .results
            .iter()
            .all(|x| x.status == super::super::Status::Skipped));
        assert_eq!(r.results.len(), 3);
    }

    #[test]
    fn worker_count_does_not_matter() {
        let entries = parse_catalog("C12\nC2^2 x C3\nHeis3\nC2^2 x C9 ~ C2^2 x C3^2", 200);
        let a = run_catalog(&entries, CheckId::ALL, 1, SearchBudget::default());
        let b = run_catalog(&entries, CheckId::ALL, 4, SearchBudget::default());
        assert_eq!(a.to_json(), b.to_json());
    }
}
