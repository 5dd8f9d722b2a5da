use serde::Serialize;

use super::{require_valid, vertices_of, ConstructionError, Result};
use crate::gengraph::{delta_graph, generating_graph};
use crate::graphcore::{
    td_bounds, total_domination, Certificate, DominationOutcome, Graph, MultipartiteParams,
    SearchBudget, TdBounds,
};
use crate::groupkit::structure::p_elements;
use crate::groupkit::{nilpotent_structure, quotient_mod_frattini, Group, NilpotentStructure};

/// K_{a_1} × ⋯ × K_{a_s}; the vertex (c_1, …, c_s) has index
/// ((c_1·a_2 + c_2)·a_3 + …)·a_s + c_s.
pub fn complete_product(parts: &MultipartiteParams) -> Graph {
    let mut factors = parts.parts().iter().map(|&a| Graph::complete(a));
    let first = factors.next().expect("parts are nonempty");
    factors.fold(first, |acc, k| acc.direct_product(&k))
}

fn encode(parts: &[usize], coords: &[usize]) -> usize {
    parts
        .iter()
        .zip(coords)
        .fold(0, |acc, (&a, &c)| acc * a + c)
}

/// Inverse of the vertex numbering of [`complete_product`].
pub fn product_coordinates(parts: &[usize], mut v: usize) -> Vec<usize> {
    let mut coords = vec![0; parts.len()];
    for (c, &a) in coords.iter_mut().zip(parts).rev() {
        *c = v % a;
        v /= a;
    }
    coords
}

/// The diagonal {(k, …, k) : 0 ≤ k ≤ s} of K_{a_1} × ⋯ × K_{a_s}, which is
/// totally dominating when a_1 > s.
pub fn product_dominating_set(parts: &MultipartiteParams) -> Result<Certificate> {
    let a = parts.parts();
    let s = a.len();
    if a[0] <= s {
        return Err(ConstructionError::Precondition(format!(
            "smallest factor {} is not larger than s = {s}",
            a[0]
        )));
    }
    let vertices = (0..=s).map(|k| encode(a, &vec![k; s])).collect();
    let cert = Certificate::DominatingSet { vertices };
    let graph = complete_product(parts);
    if !crate::graphcore::verify_certificate(&graph, &cert) {
        return Err(ConstructionError::Invalid("diagonal set".into()));
    }
    Ok(cert)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicSubgroup {
    pub generator: usize,
    pub elements: Vec<usize>,
}

/// Identification of Δ(G/Φ) with K_{q_1+1} × ⋯ × K_{q_s+1}. Element
/// indices refer to the Frattini quotient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TdReduction {
    pub structure: NilpotentStructure,
    pub parts: MultipartiteParams,
    /// For each noncyclic prime q_j, its q_j + 1 nontrivial cyclic
    /// subgroups of C_{q_j}², each with its least element as generator.
    pub subgroup_index: Vec<Vec<CyclicSubgroup>>,
    /// Least nonidentity element of each cyclic Sylow subgroup.
    pub cyclic_generators: Vec<usize>,
}

impl TdReduction {
    /// The quotient element g_1⋯g_r · x_1⋯x_s where x_j generates the
    /// c_j-th subgroup at q_j.
    fn lift(&self, quotient: &Group, coords: &[usize]) -> usize {
        let noncyclic = self
            .subgroup_index
            .iter()
            .zip(coords)
            .map(|(subs, &c)| subs[c].generator);
        self.cyclic_generators
            .iter()
            .copied()
            .chain(noncyclic)
            .fold(0, |acc, x| quotient.mul(acc, x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TdOutcome {
    pub gamma: usize,
    /// A minimum total dominating set of Δ(G), as elements of G.
    pub set: Vec<usize>,
    pub reduction: Option<TdReduction>,
    pub bounds: Option<TdBounds>,
    pub nodes: u64,
}

fn reduction(g: &Group) -> Result<(TdReduction, Group, Vec<usize>)> {
    let structure = nilpotent_structure(g)?;
    structure.require_two_generated()?;
    let fq = quotient_mod_frattini(g)?;
    let q = &fq.quotient;
    let cyclic_generators = structure
        .cyclic_primes()
        .iter()
        .map(|&p| {
            p_elements(q, p)
                .iter()
                .find(|&x| x != 0)
                .expect("Sylow subgroup is nontrivial")
        })
        .collect();
    let subgroup_index: Vec<Vec<CyclicSubgroup>> = structure
        .noncyclic_primes()
        .iter()
        .map(|&p| {
            let sylow = p_elements(q, p);
            let mut covered = vec![false; q.order()];
            let mut subs = Vec::new();
            for x in sylow.iter().filter(|&x| x != 0) {
                if covered[x] {
                    continue;
                }
                let elements = q.closure(&[x]).elements();
                for &y in &elements {
                    covered[y] = true;
                }
                subs.push(CyclicSubgroup {
                    generator: x,
                    elements,
                });
            }
            subs
        })
        .collect();
    let parts = MultipartiteParams::new(subgroup_index.iter().map(Vec::len).collect())?;
    let r = TdReduction {
        structure,
        parts,
        subgroup_index,
        cyclic_generators,
    };
    Ok((r, fq.quotient, fq.representatives))
}

/// γ_t(Δ(G)) for nilpotent 2-generated G. Cyclic G gives 1 with a generator.
/// Otherwise the product K_{q_1+1} × ⋯ × K_{q_s+1} is solved exactly and the
/// solution lifted to G/Φ and then to coset representatives in G; the
/// lifted set is re-checked on Δ(G).
pub fn nilpotent_td(g: &Group, budget: SearchBudget) -> Result<TdOutcome> {
    if g.order() < 2 {
        return Err(ConstructionError::Precondition(
            "Δ of the trivial group is empty".into(),
        ));
    }
    let delta = delta_graph(&generating_graph(g));
    if let Some(gen) = g.cyclic_generator() {
        let set = vec![gen];
        let vertices = vertices_of(&delta, &set)?;
        require_valid(
            &delta,
            &Certificate::DominatingSet { vertices },
            "generator",
        )?;
        return Ok(TdOutcome {
            gamma: 1,
            set,
            reduction: None,
            bounds: None,
            nodes: 0,
        });
    }
    let (red, quotient, representatives) = reduction(g)?;
    let bounds = td_bounds(&red.parts)?;
    let found = total_domination(&complete_product(&red.parts), budget)?;
    let DominationOutcome::Found { gamma, set } = found.outcome else {
        return Err(ConstructionError::BudgetExceeded { nodes: found.nodes });
    };
    let parts = red.parts.parts();
    let set: Vec<usize> = set
        .iter()
        .map(|&v| representatives[red.lift(&quotient, &product_coordinates(parts, v))])
        .collect();
    let vertices = vertices_of(&delta, &set)?;
    require_valid(
        &delta,
        &Certificate::DominatingSet { vertices },
        "lifted dominating set",
    )?;
    Ok(TdOutcome {
        gamma,
        set,
        reduction: Some(red),
        bounds: Some(bounds),
        nodes: found.nodes,
    })
}
