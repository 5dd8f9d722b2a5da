use serde::Serialize;

use super::{components, Graph, NodeCounter, SearchBudget, Searched};
use crate::bitset::BitSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum HamiltonOutcome {
    /// `dirac` records that δ ≥ |V|/2 already decided the answer; the cycle
    /// is found by search either way.
    Yes {
        cycle: Vec<usize>,
        dirac: bool,
    },
    No {
        reason: String,
    },
    BudgetExceeded,
}

impl HamiltonOutcome {
    pub fn cycle(&self) -> Option<&[usize]> {
        match self {
            HamiltonOutcome::Yes { cycle, .. } => Some(cycle),
            _ => None,
        }
    }
}

/// Backtracking search for a Hamiltonian cycle. The path starts at a
/// minimum-degree vertex and extends through neighbours of least remaining
/// degree first. Branches are cut when an unvisited vertex has fewer than
/// two usable neighbours, when two vertices both need the path end, or when
/// the unvisited part is no longer reachable from the path end.
pub fn hamiltonian(g: &Graph, budget: SearchBudget) -> Searched<HamiltonOutcome> {
    let n = g.vertex_count();
    let no = |reason: &str| Searched {
        outcome: HamiltonOutcome::No {
            reason: reason.to_string(),
        },
        nodes: 0,
    };
    if n < 3 {
        return no("fewer than 3 vertices");
    }
    if components(g).len() > 1 {
        return no("disconnected");
    }
    let min_deg = (0..n).map(|v| g.degree(v)).min().unwrap();
    if min_deg < 2 {
        return no("a vertex has degree below 2");
    }
    let dirac = 2 * min_deg >= n;
    let start = (0..n).min_by_key(|&v| (g.degree(v), v)).unwrap();
    let mut search = Search {
        g,
        start,
        path: vec![start],
        unvisited: BitSet::full(n),
        counter: NodeCounter::new(budget),
    };
    search.unvisited.remove(start);
    let outcome = match search.extend(start) {
        Some(true) => HamiltonOutcome::Yes {
            cycle: search.path.clone(),
            dirac,
        },
        Some(false) => {
            debug_assert!(!dirac, "search refuted a Dirac graph");
            HamiltonOutcome::No {
                reason: "search space exhausted".into(),
            }
        }
        None => HamiltonOutcome::BudgetExceeded,
    };
    Searched {
        outcome,
        nodes: search.counter.nodes,
    }
}

struct Search<'a> {
    g: &'a Graph,
    start: usize,
    path: Vec<usize>,
    unvisited: BitSet,
    counter: NodeCounter,
}

impl Search<'_> {
    /// `Some(true)` on success (path left in place), `Some(false)` when the
    /// subtree is exhausted, `None` when the budget ran out.
    fn extend(&mut self, end: usize) -> Option<bool> {
        if !self.counter.tick() {
            return None;
        }
        let g = self.g;
        let remaining = self.unvisited.count();
        if remaining == 0 {
            return Some(g.has_edge(end, self.start));
        }
        let mut open = self.unvisited.clone();
        open.insert(self.start);
        open.insert(end);
        let mut forced = None;
        let mut avail = vec![0usize; g.vertex_count()];
        for u in self.unvisited.iter() {
            let a = g.row(u).intersection_count(&open);
            avail[u] = a;
            if a < 2 {
                return Some(false);
            }
            if a == 2 && end != self.start && g.has_edge(u, end) {
                // u must follow the current end, and if its other option is
                // the start it must also be the last vertex
                if g.has_edge(u, self.start) && remaining > 1 {
                    return Some(false);
                }
                if forced.is_some() {
                    return Some(false);
                }
                forced = Some(u);
            }
        }
        if !self.unvisited_reachable_from(end) {
            return Some(false);
        }
        let candidates: Vec<usize> = match forced {
            Some(u) => vec![u],
            None => {
                let mut c: Vec<usize> = g
                    .row(end)
                    .iter()
                    .filter(|&w| self.unvisited.contains(w))
                    .collect();
                c.sort_by_key(|&w| (avail[w], w));
                c
            }
        };
        for w in candidates {
            self.path.push(w);
            self.unvisited.remove(w);
            match self.extend(w) {
                Some(false) => {}
                other => return other,
            }
            self.unvisited.insert(w);
            self.path.pop();
        }
        Some(false)
    }

    fn unvisited_reachable_from(&self, end: usize) -> bool {
        let g = self.g;
        let mut reach = g.row(end).clone();
        reach.intersect_with(&self.unvisited);
        let mut frontier = reach.clone();
        while !frontier.is_empty() {
            let mut next = BitSet::new(g.vertex_count());
            for v in frontier.iter() {
                next.union_with(g.row(v));
            }
            next.intersect_with(&self.unvisited);
            next.difference_with(&reach);
            reach.union_with(&next);
            frontier = next;
        }
        reach.count() == self.unvisited.count()
    }
}
