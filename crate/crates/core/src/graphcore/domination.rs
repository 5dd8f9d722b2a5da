//! Exact total domination number by iterative deepening over set size.
//!
//! A vertex `u` covers its neighbours, and itself when marked
//! self-dominating. At each node the search branches on the undominated
//! vertex with the fewest usable dominators; candidates already tried by an
//! earlier sibling are excluded from later siblings.

use serde::Serialize;

use super::{Graph, GraphError, NodeCounter, SearchBudget, Searched};
use crate::bitset::BitSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum DominationOutcome {
    Found {
        gamma: usize,
        set: Vec<usize>,
    },
    /// No set smaller than `lower` exists; `best` is a valid set found
    /// greedily.
    BudgetExceeded {
        lower: usize,
        best: Vec<usize>,
    },
}

struct Search<'a> {
    n: usize,
    cover: &'a [BitSet],
    dominators: &'a [BitSet],
    chosen: Vec<usize>,
    counter: NodeCounter,
}

impl Search<'_> {
    fn run(&mut self, undominated: &BitSet, excluded: &BitSet, left: usize) -> Option<bool> {
        if !self.counter.tick() {
            return None;
        }
        if undominated.is_empty() {
            return Some(true);
        }
        if left == 0 {
            return Some(false);
        }
        let mut max_cover = 0;
        for u in 0..self.n {
            if !excluded.contains(u) {
                max_cover = max_cover.max(self.cover[u].intersection_count(undominated));
            }
        }
        if max_cover == 0 || undominated.count().div_ceil(max_cover) > left {
            return Some(false);
        }
        let mut pivot = None;
        let mut fewest = usize::MAX;
        for v in undominated.iter() {
            let mut options = self.dominators[v].clone();
            options.difference_with(excluded);
            let k = options.count();
            if k < fewest {
                fewest = k;
                pivot = Some(options);
                if k <= 1 {
                    break;
                }
            }
        }
        let options = pivot.unwrap();
        let mut excluded = excluded.clone();
        for u in options.iter() {
            let mut rest = undominated.clone();
            rest.difference_with(&self.cover[u]);
            self.chosen.push(u);
            match self.run(&rest, &excluded, left - 1)? {
                true => return Some(true),
                false => {
                    self.chosen.pop();
                }
            }
            excluded.insert(u);
        }
        Some(false)
    }
}

fn greedy(n: usize, cover: &[BitSet]) -> Vec<usize> {
    let mut undominated = BitSet::full(n);
    let mut set = Vec::new();
    while !undominated.is_empty() {
        let u = (0..n)
            .max_by_key(|&u| {
                (
                    cover[u].intersection_count(&undominated),
                    std::cmp::Reverse(u),
                )
            })
            .unwrap();
        undominated.difference_with(&cover[u]);
        set.push(u);
    }
    set.sort_unstable();
    set
}

/// γ_t with a witness set. Fails with `Undefined` when some vertex has no
/// possible dominator.
pub fn total_domination(
    g: &Graph,
    budget: SearchBudget,
) -> Result<Searched<DominationOutcome>, GraphError> {
    let n = g.vertex_count();
    let dominators: Vec<BitSet> = (0..n).map(|v| g.dominators(v)).collect();
    if let Some(v) = (0..n).find(|&v| dominators[v].is_empty()) {
        return Err(GraphError::Undefined { vertex: v });
    }
    // dominators are symmetric: u dominates v iff v dominates u
    let cover = &dominators;
    let upper = greedy(n, cover);
    let max_cover = cover.iter().map(BitSet::count).max().unwrap_or(0);
    let mut k = if n == 0 { 0 } else { n.div_ceil(max_cover) };
    let mut search = Search {
        n,
        cover,
        dominators: &dominators,
        chosen: Vec::new(),
        counter: NodeCounter::new(budget),
    };
    while k < upper.len() {
        match search.run(&BitSet::full(n), &BitSet::new(n), k) {
            Some(true) => {
                let mut set = std::mem::take(&mut search.chosen);
                set.sort_unstable();
                return Ok(Searched {
                    outcome: DominationOutcome::Found { gamma: k, set },
                    nodes: search.counter.nodes,
                });
            }
            Some(false) => k += 1,
            None => {
                return Ok(Searched {
                    outcome: DominationOutcome::BudgetExceeded {
                        lower: k,
                        best: upper,
                    },
                    nodes: search.counter.nodes,
                })
            }
        }
    }
    Ok(Searched {
        outcome: DominationOutcome::Found {
            gamma: upper.len(),
            set: upper,
        },
        nodes: search.counter.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::{verify_certificate, Certificate};

    fn gamma(g: &Graph) -> usize {
        match total_domination(g, SearchBudget::default())
            .unwrap()
            .outcome
        {
            DominationOutcome::Found { gamma, set } => {
                assert_eq!(set.len(), gamma);
                assert!(verify_certificate(
                    g,
                    &Certificate::DominatingSet { vertices: set }
                ));
                gamma
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn triangle_needs_two() {
        assert_eq!(gamma(&Graph::complete(3)), 2);
        let mut k3 = Graph::complete(3);
        k3.mark_self_dominating(1);
        assert_eq!(gamma(&k3), 1);
    }

    #[test]
    fn undominatable_vertex() {
        let g = Graph::from_edges(3, &[(0, 1)]);
        assert_eq!(
            total_domination(&g, SearchBudget::default()),
            Err(GraphError::Undefined { vertex: 2 })
        );
    }

    #[test]
    fn k3_times_k4() {
        let g = Graph::complete(3).direct_product(&Graph::complete(4));
        assert_eq!(gamma(&g), 3);
    }

    #[test]
    fn two_disjoint_edges() {
        let k2 = Graph::complete(2);
        assert_eq!(gamma(&k2.direct_product(&k2)), 4);
    }

    #[test]
    fn cycles() {
        // γ_t(C_n) = ⌊n/2⌋ + ⌈n/4⌉ − ⌊n/4⌋
        for n in 3..14 {
            assert_eq!(
                gamma(&Graph::cycle(n)),
                n / 2 + n.div_ceil(4) - n / 4,
                "C{n}"
            );
        }
    }
}
