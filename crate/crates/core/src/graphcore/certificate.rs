use serde::{Deserialize, Serialize};

use super::{components, Graph};
use crate::bitset::BitSet;

/// Witness for a computed invariant. Vertex sequences and sets refer to
/// graph vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// Removing these vertices disconnects the graph.
    VertexCut {
        vertices: Vec<usize>,
    },
    /// The graph is complete on `n` vertices, so κ = n − 1 by convention.
    CompleteGraph {
        n: usize,
    },
    /// Removing these edges disconnects the graph.
    EdgeCut {
        edges: Vec<(usize, usize)>,
    },
    /// Closed walk, first vertex repeated at the end.
    EulerCircuit {
        walk: Vec<usize>,
    },
    HamCycle {
        cycle: Vec<usize>,
    },
    Clique {
        vertices: Vec<usize>,
    },
    /// Colour of each vertex.
    Colouring {
        classes: Vec<usize>,
    },
    DominatingSet {
        vertices: Vec<usize>,
    },
    /// A Hamiltonian cycle and, for an even number of vertices, two chords
    /// given by cycle positions (0-based): the first joins two even
    /// positions, the second two odd positions.
    HChords {
        cycle: Vec<usize>,
        chords: Option<((usize, usize), (usize, usize))>,
    },
}

fn distinct_in_range(n: usize, vs: &[usize]) -> Option<BitSet> {
    let mut set = BitSet::new(n);
    for &v in vs {
        if v >= n || !set.insert(v) {
            return None;
        }
    }
    Some(set)
}

fn is_ham_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.vertex_count();
    n >= 3
        && cycle.len() == n
        && distinct_in_range(n, cycle).is_some()
        && (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

/// Re-checks a certificate against the graph from its definition.
pub fn verify_certificate(g: &Graph, c: &Certificate) -> bool {
    let n = g.vertex_count();
    match c {
        Certificate::VertexCut { vertices } => {
            let Some(removed) = distinct_in_range(n, vertices) else {
                return false;
            };
            let rest: Vec<usize> = (0..n).filter(|&v| !removed.contains(v)).collect();
            components(&g.induced(&rest)).len() >= 2
        }
        Certificate::CompleteGraph { n: m } => *m == n && g.is_complete(),
        Certificate::EdgeCut { edges } => {
            if n <= 1 {
                return edges.is_empty();
            }
            let mut h = g.clone();
            for &(u, v) in edges {
                if u >= n || v >= n || !h.has_edge(u, v) {
                    return false;
                }
                h.remove_edge(u, v);
            }
            components(&h).len() >= 2
        }
        Certificate::EulerCircuit { walk } => {
            let m = g.edge_count();
            if m == 0 || walk.len() != m + 1 || walk[0] != walk[m] {
                return false;
            }
            let mut h = g.clone();
            for w in walk.windows(2) {
                if w[0] >= n || w[1] >= n || !h.has_edge(w[0], w[1]) {
                    return false;
                }
                h.remove_edge(w[0], w[1]);
            }
            true
        }
        Certificate::HamCycle { cycle } => is_ham_cycle(g, cycle),
        Certificate::Clique { vertices } => {
            distinct_in_range(n, vertices).is_some()
                && vertices
                    .iter()
                    .enumerate()
                    .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| g.has_edge(u, v)))
        }
        Certificate::Colouring { classes } => {
            classes.len() == n && g.edges().iter().all(|&(u, v)| classes[u] != classes[v])
        }
        Certificate::DominatingSet { vertices } => match distinct_in_range(n, vertices) {
            Some(set) => (0..n).all(|v| g.dominators(v).intersects(&set)),
            None => false,
        },
        Certificate::HChords { cycle, chords } => {
            if !is_ham_cycle(g, cycle) {
                return false;
            }
            match chords {
                None => n % 2 == 1,
                Some(((a, b), (c, d))) => {
                    let chord_ok = |x: usize, y: usize, parity: usize| {
                        x < n
                            && y < n
                            && x != y
                            && x % 2 == parity
                            && y % 2 == parity
                            && g.has_edge(cycle[x], cycle[y])
                    };
                    n.is_multiple_of(2) && chord_ok(*a, *b, 0) && chord_ok(*c, *d, 1)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ham_cycles_on_triangle() {
        let k3 = Graph::complete(3);
        assert!(verify_certificate(
            &k3,
            &Certificate::HamCycle {
                cycle: vec![0, 1, 2]
            }
        ));
        assert!(!verify_certificate(
            &k3,
            &Certificate::HamCycle {
                cycle: vec![0, 1, 1]
            }
        ));
        assert!(!verify_certificate(
            &Graph::complete(2),
            &Certificate::HamCycle { cycle: vec![0, 1] }
        ));
    }

    #[test]
    fn cuts() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert!(verify_certificate(
            &path,
            &Certificate::VertexCut { vertices: vec![1] }
        ));
        assert!(!verify_certificate(
            &path,
            &Certificate::VertexCut { vertices: vec![0] }
        ));
        assert!(verify_certificate(
            &path,
            &Certificate::EdgeCut {
                edges: vec![(0, 1)]
            }
        ));
        assert!(!verify_certificate(
            &path,
            &Certificate::EdgeCut {
                edges: vec![(0, 2)]
            }
        ));
        assert!(verify_certificate(
            &Graph::new(1),
            &Certificate::EdgeCut { edges: vec![] }
        ));
    }

    #[test]
    fn domination_uses_marks() {
        let mut k3 = Graph::complete(3);
        let single = Certificate::DominatingSet { vertices: vec![0] };
        assert!(!verify_certificate(&k3, &single));
        k3.mark_self_dominating(0);
        assert!(verify_certificate(&k3, &single));
    }

    #[test]
    fn euler_walk_must_use_every_edge() {
        let k3 = Graph::complete(3);
        assert!(verify_certificate(
            &k3,
            &Certificate::EulerCircuit {
                walk: vec![0, 1, 2, 0]
            }
        ));
        assert!(!verify_certificate(
            &k3,
            &Certificate::EulerCircuit {
                walk: vec![0, 1, 0, 0]
            }
        ));
    }

    #[test]
    fn chords_need_matching_parity() {
        let k4 = Graph::complete(4);
        let cycle = vec![0, 1, 2, 3];
        let good = Certificate::HChords {
            cycle: cycle.clone(),
            chords: Some(((0, 2), (1, 3))),
        };
        assert!(verify_certificate(&k4, &good));
        let bad = Certificate::HChords {
            cycle: cycle.clone(),
            chords: Some(((0, 1), (1, 3))),
        };
        assert!(!verify_certificate(&k4, &bad));
        assert!(!verify_certificate(
            &k4,
            &Certificate::HChords {
                cycle,
                chords: None
            }
        ));
        let c6 = Graph::cycle(6);
        let none = Certificate::HChords {
            cycle: (0..6).collect(),
            chords: Some(((0, 2), (1, 3))),
        };
        assert!(!verify_certificate(&c6, &none));
    }

    #[test]
    fn tagged_json() {
        let c = Certificate::Clique {
            vertices: vec![1, 2],
        };
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(text, r#"{"kind":"Clique","vertices":[1,2]}"#);
        assert_eq!(serde_json::from_str::<Certificate>(&text).unwrap(), c);
    }
}
