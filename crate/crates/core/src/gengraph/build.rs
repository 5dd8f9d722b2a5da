use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::graphcore::Graph;
use crate::groupkit::group::ClosureScratch;
use crate::groupkit::Group;

/// A graph whose vertices stand for group elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingGraph {
    pub graph: Graph,
    /// graph vertex → group element index, ascending
    pub vertex_elements: Vec<usize>,
}

impl GeneratingGraph {
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Graph vertex of element `x`, if present.
    pub fn vertex_of(&self, x: usize) -> Option<usize> {
        self.vertex_elements.binary_search(&x).ok()
    }

    pub fn labels(&self, g: &Group) -> Vec<String> {
        self.vertex_elements
            .iter()
            .map(|&x| g.label(x).to_string())
            .collect()
    }
}

fn cyclic_subgroups(g: &Group) -> Vec<BitSet> {
    let n = g.order();
    (0..n)
        .map(|a| {
            let mut set = BitSet::new(n);
            let mut x = 0;
            loop {
                set.insert(x);
                x = g.mul(x, a);
                if x == 0 {
                    break set;
                }
            }
        })
        .collect()
}

/// Γ(G): every element is a vertex, `x ~ y` iff x ≠ y and ⟨x, y⟩ = G.
/// Elements that generate G on their own are marked self-dominating.
pub fn generating_graph(g: &Group) -> GeneratingGraph {
    let n = g.order();
    let cyc = cyclic_subgroups(g);
    let rows: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map_init(
            || ClosureScratch::new(n),
            |scratch, a| {
                (a + 1..n)
                    .filter(|&b| {
                        // one inside the other's cyclic subgroup: the pair
                        // generates only if that subgroup is everything
                        if cyc[a].contains(b) {
                            cyc[a].count() == n
                        } else if cyc[b].contains(a) {
                            cyc[b].count() == n
                        } else {
                            g.generates_pair(a, b, scratch)
                        }
                    })
                    .collect()
            },
        )
        .collect();
    let mut graph = Graph::new(n);
    for (a, row) in rows.iter().enumerate() {
        for &b in row {
            graph.add_edge(a, b);
        }
        if cyc[a].count() == n {
            graph.mark_self_dominating(a);
        }
    }
    GeneratingGraph {
        graph,
        vertex_elements: (0..n).collect(),
    }
}

/// Δ: the subgraph induced on non-isolated vertices.
pub fn delta_graph(gamma: &GeneratingGraph) -> GeneratingGraph {
    let keep: Vec<usize> = (0..gamma.vertex_count())
        .filter(|&v| gamma.graph.degree(v) > 0)
        .collect();
    GeneratingGraph {
        graph: gamma.graph.induced(&keep),
        vertex_elements: keep.iter().map(|&v| gamma.vertex_elements[v]).collect(),
    }
}
