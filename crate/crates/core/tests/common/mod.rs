//! Brute-force oracles shared by the integration tests. Everything here is
//! computed from the multiplication table alone.

#![allow(dead_code)]

use gengraph::graphcore::Graph;
use gengraph::groupkit::{build_group, build_group_with_guard, parse_spec, Group};

pub fn grp(spec: &str) -> Group {
    build_group(&parse_spec(spec).unwrap()).unwrap()
}

pub fn grp_up_to(spec: &str, max_order: usize) -> Group {
    build_group_with_guard(&parse_spec(spec).unwrap(), max_order).unwrap()
}

/// Size of the subgroup generated by `seeds`, by breadth-first closure.
pub fn span(g: &Group, seeds: &[usize]) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = vec![0];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for &s in seeds {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                queue.push(y);
            }
        }
    }
    queue.len()
}

pub fn generates(g: &Group, x: usize, y: usize) -> bool {
    span(g, &[x, y]) == g.order()
}

/// Γ(G) on all elements; single generators are marked self-dominating.
pub fn brute_gamma(g: &Group) -> Graph {
    let n = g.order();
    let mut gamma = Graph::new(n);
    for x in 0..n {
        for y in x + 1..n {
            if generates(g, x, y) {
                gamma.add_edge(x, y);
            }
        }
        if span(g, &[x]) == n {
            gamma.mark_self_dominating(x);
        }
    }
    gamma
}

/// Δ(G) with its vertices listed as ascending group elements.
pub fn brute_delta(g: &Group) -> (Graph, Vec<usize>) {
    let gamma = brute_gamma(g);
    let vertices: Vec<usize> = (0..g.order()).filter(|&x| gamma.degree(x) > 0).collect();
    (gamma.induced(&vertices), vertices)
}

pub fn prime_factors(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn totient(n: usize) -> usize {
    prime_factors(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Primes whose Sylow subgroup is cyclic, i.e. some element order has full
/// p-part.
pub fn cyclic_sylow_primes(g: &Group) -> Vec<usize> {
    let orders: Vec<usize> = (0..g.order()).map(|x| span(g, &[x])).collect();
    prime_factors(g.order())
        .into_iter()
        .filter(|&(p, e)| orders.iter().any(|&o| o % p.pow(e) == 0))
        .map(|(p, _)| p)
        .collect()
}

pub fn is_cycle_of(graph: &Graph, cycle: &[usize]) -> bool {
    let n = graph.vertex_count();
    let mut seen = vec![false; n];
    n >= 3
        && cycle.len() == n
        && cycle
            .iter()
            .all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
        && (0..n).all(|i| graph.has_edge(cycle[i], cycle[(i + 1) % n]))
}

/// Every vertex has a neighbour in `set`, or is itself a marked member.
pub fn totally_dominates(graph: &Graph, set: &[usize]) -> bool {
    (0..graph.vertex_count()).all(|v| {
        set.iter()
            .any(|&s| graph.has_edge(s, v) || (s == v && graph.is_self_dominating(v)))
    })
}

pub fn is_proper_colouring(graph: &Graph, colours: &[usize]) -> bool {
    colours.len() == graph.vertex_count()
        && graph.edges().iter().all(|&(u, v)| colours[u] != colours[v])
}

pub fn is_clique(graph: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| graph.has_edge(u, v)))
}

/// Minimum number of vertices whose removal disconnects the graph or leaves
/// one vertex, by trying every subset in order of size.
pub fn exhaustive_vertex_connectivity(graph: &Graph) -> usize {
    let n = graph.vertex_count();
    assert!(n <= 16);
    let mut best = n.saturating_sub(1);
    for mask in 0u32..(1 << n) {
        let removed = mask.count_ones() as usize;
        if removed >= best {
            continue;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) == 0).collect();
        if !connected(graph, &rest) {
            best = removed;
        }
    }
    best
}

/// Minimum number of edges whose removal disconnects the graph: the least
/// cut over all bipartitions.
pub fn exhaustive_edge_connectivity(graph: &Graph) -> usize {
    let n = graph.vertex_count();
    assert!((2..=16).contains(&n));
    (1u32..(1 << (n - 1)))
        .map(|mask| {
            graph
                .edges()
                .iter()
                .filter(|&&(u, v)| (mask >> u) & 1 != (mask >> v) & 1)
                .count()
        })
        .min()
        .unwrap()
}

pub fn connected(graph: &Graph, vertices: &[usize]) -> bool {
    let Some(&start) = vertices.first() else {
        return true;
    };
    let inside: Vec<bool> = (0..graph.vertex_count())
        .map(|v| vertices.contains(&v))
        .collect();
    let mut seen = vec![false; graph.vertex_count()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for v in graph.neighbors(u) {
            if inside[v] && !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == vertices.len()
}

/// Hamiltonicity by trying every ordering of the vertices after the first.
pub fn exhaustive_hamiltonian(graph: &Graph) -> bool {
    let n = graph.vertex_count();
    assert!(n <= 10);
    if n < 3 {
        return false;
    }
    fn extend(graph: &Graph, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let n = used.len();
        let last = *path.last().unwrap();
        if path.len() == n {
            return graph.has_edge(last, path[0]);
        }
        for v in 1..n {
            if !used[v] && graph.has_edge(last, v) {
                used[v] = true;
                path.push(v);
                if extend(graph, path, used) {
                    return true;
                }
                path.pop();
                used[v] = false;
            }
        }
        false
    }
    let mut used = vec![false; n];
    used[0] = true;
    extend(graph, &mut vec![0], &mut used)
}
