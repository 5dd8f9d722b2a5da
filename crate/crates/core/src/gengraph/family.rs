//! Δ of the semidirect products (∏ C_{p_i}³) ⋊ C₂² built from the
//! combinatorial description of its vertices and edges, without a Cayley
//! table.
//!
//! A vertex is `(n_{11},…,n_{d3}; h_j)` with `n_{ij} ≠ 0` for every block
//! i. Two vertices with `h_j ≠ h_k` are adjacent when, for every block, they
//! differ in the remaining coordinate l ∉ {j, k}.

use rayon::prelude::*;

use super::{delta_graph, generating_graph, GenError, GeneratingGraph, Result};
use crate::graphcore::Graph;
use crate::groupkit::build::{family_element, family_index, family_primes, FamilyElement};
use crate::groupkit::{
    build_group_with_guard, example_family_order, Factor, GroupError, GroupSpec,
};

/// Large enough for d = 2 (5400 vertices).
pub const DEFAULT_FAMILY_VERTEX_GUARD: usize = 10_000;

fn vertex_count(primes: &[usize]) -> Option<usize> {
    primes.iter().try_fold(3usize, |acc, &p| {
        acc.checked_mul(p.checked_mul(p)?.checked_mul(p - 1)?)
    })
}

pub fn example_family_graph(d: usize, max_vertices: usize) -> Result<GeneratingGraph> {
    if d == 0 {
        return Err(GroupError::InvalidParameter("family index must be at least 1".into()).into());
    }
    let primes = family_primes(d);
    let count = vertex_count(&primes).unwrap_or(usize::MAX);
    if count > max_vertices {
        return Err(GenError::Guard {
            vertices: count,
            max: max_vertices,
        });
    }
    let order = example_family_order(d).expect("order fits when vertex count does");
    let vertices: Vec<FamilyElement> = (0..order)
        .map(|x| family_element(&primes, x))
        .filter(|e| e.h != 0 && (0..d).all(|i| e.coords[3 * i + e.h - 1] != 0))
        .collect();
    debug_assert_eq!(vertices.len(), count);
    let adjacent = |a: &FamilyElement, b: &FamilyElement| {
        if a.h == b.h {
            return false;
        }
        // h ∈ {1,2,3}; the third index is the one not in {a.h, b.h}
        let l = 6 - a.h - b.h - 1;
        (0..d).all(|i| a.coords[3 * i + l] != b.coords[3 * i + l])
    };
    let rows: Vec<Vec<usize>> = (0..count)
        .into_par_iter()
        .map(|u| {
            (u + 1..count)
                .filter(|&v| adjacent(&vertices[u], &vertices[v]))
                .collect()
        })
        .collect();
    let mut graph = Graph::new(count);
    for (u, row) in rows.iter().enumerate() {
        for &v in row {
            graph.add_edge(u, v);
        }
    }
    Ok(GeneratingGraph {
        graph,
        vertex_elements: vertices.iter().map(|e| family_index(&primes, e)).collect(),
    })
}

/// Compares the rule-based graph with Δ computed by closure on the Cayley
/// table of the same group; both index vertices by element in ascending
/// order, so equality is plain equality.
pub fn example_family_cross_check(d: usize, max_order: usize) -> Result<bool> {
    let spec = GroupSpec {
        factors: vec![Factor::ExampleFamily(d)],
    };
    let g = build_group_with_guard(&spec, max_order)?;
    let brute = delta_graph(&generating_graph(&g));
    let rule = example_family_graph(d, usize::MAX)?;
    Ok(brute == rule)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_member_is_24_regular() {
        let gg = example_family_graph(1, DEFAULT_FAMILY_VERTEX_GUARD).unwrap();
        assert_eq!(gg.vertex_count(), 54);
        assert!(gg.graph.degrees().iter().all(|&d| d == 24));
    }

    #[test]
    fn guard_applies() {
        assert!(matches!(
            example_family_graph(2, 100),
            Err(GenError::Guard { vertices: 5400, .. })
        ));
    }

    #[test]
    fn matches_cayley_table() {
        assert!(example_family_cross_check(1, 200).unwrap());
    }
}
