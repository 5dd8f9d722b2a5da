//! Maximum clique (branch and bound with greedy colouring bounds) and exact
//! chromatic number (DSATUR branch and bound seeded with the clique).

use serde::Serialize;

use super::{Graph, NodeCounter, SearchBudget, Searched};
use crate::bitset::BitSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CliqueOutcome {
    Found {
        clique: Vec<usize>,
    },
    /// Largest clique seen before the budget ran out.
    BudgetExceeded {
        best: Vec<usize>,
    },
}

impl CliqueOutcome {
    pub fn clique(&self) -> &[usize] {
        match self {
            CliqueOutcome::Found { clique } => clique,
            CliqueOutcome::BudgetExceeded { best } => best,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ChromaticOutcome {
    Exact {
        chi: usize,
        colouring: Vec<usize>,
    },
    Bracket {
        lower: usize,
        upper: usize,
        colouring: Vec<usize>,
    },
}

/// Greedy sequential colouring of `cand`; vertices are returned grouped by
/// colour with the colour number (1-based) of each.
fn colour_sort(g: &Graph, cand: &BitSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.count());
    let mut colours = Vec::with_capacity(order.capacity());
    let mut uncoloured = cand.clone();
    let mut k = 0;
    while !uncoloured.is_empty() {
        k += 1;
        let mut q = uncoloured.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q.difference_with(g.row(v));
            uncoloured.remove(v);
            order.push(v);
            colours.push(k);
        }
    }
    (order, colours)
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    counter: NodeCounter,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, mut cand: BitSet, current: &mut Vec<usize>) -> bool {
        if !self.counter.tick() {
            return false;
        }
        let (order, colours) = colour_sort(self.g, &cand);
        for idx in (0..order.len()).rev() {
            if current.len() + colours[idx] <= self.best.len() {
                return true;
            }
            let v = order[idx];
            current.push(v);
            let mut next = cand.clone();
            next.intersect_with(self.g.row(v));
            if next.is_empty() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else if !self.expand(next, current) {
                current.pop();
                return false;
            }
            current.pop();
            cand.remove(v);
        }
        true
    }
}

pub fn clique_number(g: &Graph, budget: SearchBudget) -> Searched<CliqueOutcome> {
    let mut search = CliqueSearch {
        g,
        best: Vec::new(),
        counter: NodeCounter::new(budget),
    };
    let complete =
        g.vertex_count() == 0 || search.expand(BitSet::full(g.vertex_count()), &mut Vec::new());
    let mut best = search.best;
    best.sort_unstable();
    Searched {
        outcome: if complete {
            CliqueOutcome::Found { clique: best }
        } else {
            CliqueOutcome::BudgetExceeded { best }
        },
        nodes: search.counter.nodes,
    }
}

const UNCOLOURED: usize = usize::MAX;

struct ColourState<'a> {
    g: &'a Graph,
    colour: Vec<usize>,
    /// neighbour_colours[v][c] = number of neighbours of v with colour c
    neighbour_colours: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    uncoloured: usize,
}

impl<'a> ColourState<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        ColourState {
            g,
            colour: vec![UNCOLOURED; n],
            neighbour_colours: vec![vec![0; n.max(1)]; n],
            saturation: vec![0; n],
            uncoloured: n,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        self.uncoloured -= 1;
        for w in self.g.neighbors(v) {
            let slot = &mut self.neighbour_colours[w][c];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = std::mem::replace(&mut self.colour[v], UNCOLOURED);
        self.uncoloured += 1;
        for w in self.g.neighbors(v) {
            let slot = &mut self.neighbour_colours[w][c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// Uncoloured vertex of maximum saturation, then maximum uncoloured
    /// degree, then least index.
    fn pick(&self) -> usize {
        let n = self.g.vertex_count();
        let mut best = UNCOLOURED;
        let mut key = (0, 0);
        for v in 0..n {
            if self.colour[v] != UNCOLOURED {
                continue;
            }
            let free_deg = self
                .g
                .neighbors(v)
                .filter(|&w| self.colour[w] == UNCOLOURED)
                .count();
            let k = (self.saturation[v], free_deg);
            if best == UNCOLOURED || k > key {
                best = v;
                key = k;
            }
        }
        best
    }
}

fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let mut st = ColourState::new(g);
    while st.uncoloured > 0 {
        let v = st.pick();
        let c = (0..).find(|&c| st.neighbour_colours[v][c] == 0).unwrap();
        st.assign(v, c);
    }
    st.colour
}

struct ChromaticSearch<'a> {
    st: ColourState<'a>,
    lower: usize,
    upper: usize,
    best: Vec<usize>,
    counter: NodeCounter,
}

impl ChromaticSearch<'_> {
    fn search(&mut self, used: usize) -> bool {
        if !self.counter.tick() {
            return false;
        }
        if self.st.uncoloured == 0 {
            if used < self.upper {
                self.upper = used;
                self.best = self.st.colour.clone();
            }
            return true;
        }
        let v = self.st.pick();
        let limit = (used + 1).min(self.upper - 1);
        for c in 0..limit {
            if self.st.neighbour_colours[v][c] != 0 {
                continue;
            }
            self.st.assign(v, c);
            let ok = self.search(used.max(c + 1));
            self.st.unassign(v);
            if !ok {
                return false;
            }
            if self.upper == self.lower {
                return true;
            }
        }
        true
    }
}

pub fn chromatic_number(g: &Graph, budget: SearchBudget) -> Searched<ChromaticOutcome> {
    let n = g.vertex_count();
    if n == 0 {
        return Searched {
            outcome: ChromaticOutcome::Exact {
                chi: 0,
                colouring: vec![],
            },
            nodes: 0,
        };
    }
    let clique = clique_number(g, budget);
    let greedy = dsatur_greedy(g);
    let upper = greedy.iter().max().unwrap() + 1;
    let lower = clique.outcome.clique().len();
    let mut nodes = clique.nodes;
    if lower == upper {
        return Searched {
            outcome: ChromaticOutcome::Exact {
                chi: upper,
                colouring: greedy,
            },
            nodes,
        };
    }
    let remaining = SearchBudget::new(budget.max_nodes.saturating_sub(nodes));
    let mut search = ChromaticSearch {
        st: ColourState::new(g),
        lower,
        upper,
        best: greedy,
        counter: NodeCounter::new(remaining),
    };
    for (c, &v) in clique.outcome.clique().iter().enumerate() {
        search.st.assign(v, c);
    }
    let finished = search.search(lower);
    nodes += search.counter.nodes;
    let outcome = if finished && matches!(clique.outcome, CliqueOutcome::Found { .. })
        || search.upper == lower
    {
        ChromaticOutcome::Exact {
            chi: search.upper,
            colouring: search.best,
        }
    } else {
        ChromaticOutcome::Bracket {
            lower,
            upper: search.upper,
            colouring: search.best,
        }
    };
    Searched { outcome, nodes }
}
