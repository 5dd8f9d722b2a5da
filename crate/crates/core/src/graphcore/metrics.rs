use serde::Serialize;

use super::Graph;
use crate::bitset::BitSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasicMetrics {
    /// `None` for the empty graph.
    pub min_degree: Option<usize>,
    pub is_connected: bool,
    pub component_count: usize,
    /// `None` when disconnected or empty.
    pub diameter: Option<usize>,
}

/// Connected components, each sorted, ordered by least vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = BitSet::new(n);
    let mut out = Vec::new();
    for s in 0..n {
        if seen.contains(s) {
            continue;
        }
        let mut comp = BitSet::new(n);
        comp.insert(s);
        seen.insert(s);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if seen.insert(w) {
                    comp.insert(w);
                    stack.push(w);
                }
            }
        }
        out.push(comp.iter().collect());
    }
    out
}

/// The empty graph counts as disconnected.
pub fn is_connected(g: &Graph) -> bool {
    g.vertex_count() > 0 && components(g).len() == 1
}

/// Largest BFS layer index reached from `s`.
pub(crate) fn eccentricity(g: &Graph, s: usize) -> usize {
    let n = g.vertex_count();
    let mut visited = BitSet::new(n);
    visited.insert(s);
    let mut frontier = BitSet::new(n);
    frontier.insert(s);
    let mut depth = 0;
    loop {
        let mut next = BitSet::new(n);
        for v in frontier.iter() {
            next.union_with(g.row(v));
        }
        next.difference_with(&visited);
        if next.is_empty() {
            return depth;
        }
        visited.union_with(&next);
        frontier = next;
        depth += 1;
    }
}

pub fn basic_metrics(g: &Graph) -> BasicMetrics {
    let n = g.vertex_count();
    let min_degree = (0..n).map(|v| g.degree(v)).min();
    let component_count = components(g).len();
    let is_connected = n > 0 && component_count == 1;
    let diameter = is_connected.then(|| (0..n).map(|v| eccentricity(g, v)).max().unwrap_or(0));
    BasicMetrics {
        min_degree,
        is_connected,
        component_count,
        diameter,
    }
}
