use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::GraphError;
use crate::bitset::BitSet;

/// Undirected loopless graph with bit-set adjacency rows. Vertices may be
/// marked self-dominating, which only affects total domination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<BitSet>,
    self_dominating: BitSet,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            rows: vec![BitSet::new(n); n],
            self_dominating: BitSet::new(n),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 0..n {
            g.rows[v] = BitSet::full(n);
            g.rows[v].remove(v);
        }
        g
    }

    pub fn null(n: usize) -> Self {
        Graph::new(n)
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Blocks of the given sizes, with every edge between distinct blocks.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n = parts.iter().sum();
        let mut block = Vec::with_capacity(n);
        for (b, &size) in parts.iter().enumerate() {
            block.extend(std::iter::repeat_n(b, size));
        }
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if block[u] != block[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Tensor product; vertex `(a, b)` is `a * |other| + b`. A pair is
    /// self-dominating when both coordinates are.
    pub fn direct_product(&self, other: &Graph) -> Graph {
        let m = other.n;
        let mut g = Graph::new(self.n * m);
        for a in 0..self.n {
            for b in 0..m {
                let x = a * m + b;
                for a2 in self.rows[a].iter() {
                    for b2 in other.rows[b].iter() {
                        g.rows[x].insert(a2 * m + b2);
                    }
                }
                if self.is_self_dominating(a) && other.is_self_dominating(b) {
                    g.self_dominating.insert(x);
                }
            }
        }
        g
    }

    /// Tensor product reading each self-dominating mark as a loop: `(a, b)`
    /// and `(a2, b2)` are adjacent when each coordinate pair is an edge or a
    /// marked vertex repeated. Same numbering and marks as
    /// [`Graph::direct_product`].
    pub fn direct_product_with_loops(&self, other: &Graph) -> Graph {
        let m = other.n;
        let mut g = self.direct_product(other);
        for a in self.self_dominating.iter() {
            for b in 0..m {
                for b2 in other.rows[b].iter() {
                    g.add_edge(a * m + b, a * m + b2);
                }
            }
        }
        for b in other.self_dominating.iter() {
            for a in 0..self.n {
                for a2 in self.rows[a].iter() {
                    g.add_edge(a * m + b, a2 * m + b);
                }
            }
        }
        g
    }

    /// Lexicographic product Γ[Δ]; vertex `(a, b)` is `a * |other| + b`.
    pub fn lex_product(&self, other: &Graph) -> Graph {
        let m = other.n;
        let mut g = Graph::new(self.n * m);
        for a in 0..self.n {
            for b in 0..m {
                let x = a * m + b;
                for a2 in self.rows[a].iter() {
                    for b2 in 0..m {
                        g.rows[x].insert(a2 * m + b2);
                    }
                }
                for b2 in other.rows[b].iter() {
                    g.rows[x].insert(a * m + b2);
                }
            }
        }
        g
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut g = Graph::new(k);
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
            if self.is_self_dominating(u) {
                g.self_dominating.insert(i);
            }
        }
        g
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "loops are not allowed");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn row(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].iter()
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                self.rows[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    pub fn mark_self_dominating(&mut self, v: usize) {
        self.self_dominating.insert(v);
    }

    #[inline]
    pub fn is_self_dominating(&self, v: usize) -> bool {
        self.self_dominating.contains(v)
    }

    pub fn self_dominating(&self) -> &BitSet {
        &self.self_dominating
    }

    pub fn without_marks(&self) -> Graph {
        Graph {
            n: self.n,
            rows: self.rows.clone(),
            self_dominating: BitSet::new(self.n),
        }
    }

    /// Vertices that can dominate `v`: its neighbours, plus `v` itself when
    /// marked.
    pub fn dominators(&self, v: usize) -> BitSet {
        let mut row = self.rows[v].clone();
        if self.is_self_dominating(v) {
            row.insert(v);
        }
        row
    }

    pub fn to_json(&self, labels: Option<&[String]>) -> GraphJson {
        GraphJson {
            order: self.n,
            vertices: match labels {
                Some(l) => l.to_vec(),
                None => (0..self.n).map(|v| v.to_string()).collect(),
            },
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            self_dominating: self.self_dominating.iter().collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Graph, GraphError> {
        if json.vertices.len() != json.order {
            return Err(GraphError::Precondition(format!(
                "{} labels for order {}",
                json.vertices.len(),
                json.order
            )));
        }
        let mut g = Graph::new(json.order);
        for &[u, v] in &json.edges {
            if u >= json.order || v >= json.order || u == v {
                return Err(GraphError::Precondition(format!("bad edge [{u}, {v}]")));
            }
            g.add_edge(u, v);
        }
        for &v in &json.self_dominating {
            if v >= json.order {
                return Err(GraphError::Precondition(format!("bad mark {v}")));
            }
            g.mark_self_dominating(v);
        }
        Ok(g)
    }

    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            let label = labels.map_or_else(|| v.to_string(), |l| l[v].clone());
            let _ = writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\""));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// `{order, vertices, edges}` adjacency form; edges sorted, `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub order: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub self_dominating: Vec<usize>,
}
