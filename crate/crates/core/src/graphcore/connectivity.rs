//! Vertex and edge connectivity by unit-capacity maximum flow (Dinic).

use std::collections::VecDeque;

use super::{components, Certificate, Graph};

/// A connectivity value with a cut witnessing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connectivity {
    pub value: usize,
    pub certificate: Certificate,
}

struct FlowNet {
    head: Vec<usize>,
    next: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u32>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            head: vec![NONE; nodes],
            next: Vec::new(),
            to: Vec::new(),
            cap: Vec::new(),
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    fn add_arc(&mut self, u: usize, v: usize, cap: u32, rev_cap: u32) {
        for (a, b, c) in [(u, v, cap), (v, u, rev_cap)] {
            self.to.push(b);
            self.cap.push(c);
            self.next.push(self.head[a]);
            self.head[a] = self.to.len() - 1;
        }
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let mut e = self.head[u];
            while e != NONE {
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    q.push_back(v);
                }
                e = self.next[e];
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, f: u32) -> u32 {
        if u == t {
            return f;
        }
        while self.iter[u] != NONE {
            let e = self.iter[u];
            let v = self.to[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let d = self.dfs(v, t, f.min(self.cap[e]));
                if d > 0 {
                    self.cap[e] -= d;
                    self.cap[e ^ 1] += d;
                    return d;
                }
            }
            self.iter[u] = self.next[e];
        }
        0
    }

    /// Maximum flow, stopping early once `limit` is reached.
    fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut flow = 0;
        while flow < limit && self.bfs(s, t) {
            self.iter.clone_from(&self.head);
            loop {
                let f = self.dfs(s, t, limit - flow);
                if f == 0 {
                    break;
                }
                flow += f;
                if flow >= limit {
                    break;
                }
            }
        }
        flow
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let mut e = self.head[u];
            while e != NONE {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
                e = self.next[e];
            }
        }
        seen
    }
}

/// Local vertex connectivity between non-adjacent `s` and `t`; returns the
/// flow value and, when below `limit`, a minimum separating vertex set.
fn local_vertex_cut(g: &Graph, s: usize, t: usize, limit: usize) -> (usize, Option<Vec<usize>>) {
    let n = g.vertex_count();
    let big = n as u32 + 1;
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, c, 0);
    }
    for (u, v) in g.edges() {
        net.add_arc(2 * u + 1, 2 * v, big, 0);
        net.add_arc(2 * v + 1, 2 * u, big, 0);
    }
    let flow = net.max_flow(2 * s + 1, 2 * t, limit as u32) as usize;
    if flow >= limit {
        return (flow, None);
    }
    let seen = net.reachable(2 * s + 1);
    let cut = (0..n)
        .filter(|&v| seen[2 * v] && !seen[2 * v + 1])
        .collect();
    (flow, Some(cut))
}

/// κ(Γ): least number of vertices whose removal disconnects, with the
/// convention κ(K_n) = n − 1. Uses a minimum-degree vertex v, flows to every
/// non-neighbour of v, and flows between non-adjacent pairs of neighbours.
pub fn vertex_connectivity(g: &Graph) -> Connectivity {
    let n = g.vertex_count();
    if g.is_complete() {
        return Connectivity {
            value: n.saturating_sub(1),
            certificate: Certificate::CompleteGraph { n },
        };
    }
    if components(g).len() > 1 {
        return Connectivity {
            value: 0,
            certificate: Certificate::VertexCut { vertices: vec![] },
        };
    }
    let v = (0..n).min_by_key(|&v| (g.degree(v), v)).unwrap();
    let mut best = g.degree(v);
    let mut best_cut: Vec<usize> = g.neighbors(v).collect();
    // a common neighbour gives a path of its own, so |N(x) ∩ N(y)| bounds
    // the local connectivity from below
    for w in 0..n {
        if w == v || g.has_edge(v, w) || g.row(v).intersection_count(g.row(w)) >= best {
            continue;
        }
        if let (k, Some(cut)) = local_vertex_cut(g, v, w, best) {
            best = k;
            best_cut = cut;
        }
    }
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if g.has_edge(x, y) || g.row(x).intersection_count(g.row(y)) >= best {
                continue;
            }
            if let (k, Some(cut)) = local_vertex_cut(g, x, y, best) {
                best = k;
                best_cut = cut;
            }
        }
    }
    Connectivity {
        value: best,
        certificate: Certificate::VertexCut { vertices: best_cut },
    }
}

/// λ(Γ) via flows from vertex 0 to every other vertex; λ(K₁) = 0.
pub fn edge_connectivity(g: &Graph) -> Connectivity {
    let n = g.vertex_count();
    if n <= 1 || components(g).len() > 1 {
        return Connectivity {
            value: 0,
            certificate: Certificate::EdgeCut { edges: vec![] },
        };
    }
    let v = (0..n).min_by_key(|&v| (g.degree(v), v)).unwrap();
    let mut best = g.degree(v);
    let mut best_cut: Vec<(usize, usize)> = g.neighbors(v).map(|w| (v.min(w), v.max(w))).collect();
    let edges = g.edges();
    for t in 1..n {
        let mut net = FlowNet::new(n);
        for &(a, b) in &edges {
            net.add_arc(a, b, 1, 1);
        }
        let flow = net.max_flow(0, t, best as u32) as usize;
        if flow < best {
            let seen = net.reachable(0);
            best = flow;
            best_cut = edges
                .iter()
                .copied()
                .filter(|&(a, b)| seen[a] != seen[b])
                .collect();
        }
    }
    best_cut.sort_unstable();
    Connectivity {
        value: best,
        certificate: Certificate::EdgeCut { edges: best_cut },
    }
}
