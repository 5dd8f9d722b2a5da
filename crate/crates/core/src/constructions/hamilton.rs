use serde::Serialize;

use super::{require_valid, vertices_of, ConstructionError, Result};
use crate::gengraph::{delta_graph, generating_graph, GeneratingGraph};
use crate::graphcore::{
    hamiltonian, verify_certificate, Certificate, Graph, HamiltonOutcome, SearchBudget,
};
use crate::groupkit::build::cyclic;
use crate::groupkit::structure::p_elements;
use crate::groupkit::{
    nilpotent_structure, quotient_mod_frattini, totient_profile, Group, GroupError,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CycleMethod {
    GeneratorPowers,
    PGroupPaths,
    C2TimesPGluing,
    Search,
}

/// A Hamiltonian cycle of Δ(G) as a sequence of group elements, together
/// with the same cycle on the vertex indices of Δ(G).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementCycle {
    pub elements: Vec<usize>,
    pub vertices: Vec<usize>,
    pub method: CycleMethod,
}

impl ElementCycle {
    pub fn certificate(&self) -> Certificate {
        Certificate::HamCycle {
            cycle: self.vertices.clone(),
        }
    }

    pub fn labels(&self, g: &Group) -> Vec<String> {
        self.elements
            .iter()
            .map(|&x| g.label(x).to_string())
            .collect()
    }
}

fn checked_cycle(
    delta: &GeneratingGraph,
    elements: Vec<usize>,
    method: CycleMethod,
) -> Result<ElementCycle> {
    let vertices = vertices_of(delta, &elements)?;
    let cycle = ElementCycle {
        elements,
        vertices,
        method,
    };
    require_valid(delta, &cycle.certificate(), "Hamiltonian cycle")?;
    Ok(cycle)
}

/// (1, g, g², …) for a generator g of the cyclic group G.
fn generator_powers(g: &Group) -> Vec<usize> {
    let gen = g.cyclic_generator().expect("group is cyclic");
    let mut out = Vec::with_capacity(g.order());
    let mut x = 0;
    for _ in 0..g.order() {
        out.push(x);
        x = g.mul(x, gen);
    }
    out
}

/// The cycle (1, g, …, g^{n−1}) in Δ(C_n), with g the element 1 of the
/// standard table.
pub fn cyclic_hamiltonian(n: usize) -> Result<ElementCycle> {
    if n < 3 {
        return Err(ConstructionError::Precondition(format!(
            "Δ(C_{n}) has fewer than 3 vertices"
        )));
    }
    let g = cyclic(n);
    checked_cycle(
        &delta_graph(&generating_graph(&g)),
        generator_powers(&g),
        CycleMethod::GeneratorPowers,
    )
}

fn prime_of_pgroup(g: &Group) -> Option<u64> {
    match totient_profile(g.order() as u64).factorization.as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

/// The paths H_i = (b f_i, a f_i, a b f_i, …, a b^{p−1} f_i, b² f_i, a² f_i,
/// …, a^{p−1} b^{p−1} f_i) over Φ(P) = {f_1 = 1, f_2, …} in ascending order.
/// Row x lists b^x and then a^x b^y for y = 0..p−1.
fn pgroup_paths(g: &Group, a: usize, b: usize, p: usize) -> Result<Vec<Vec<usize>>> {
    let fq = quotient_mod_frattini(g)?;
    let paths = fq
        .frattini_elements
        .iter()
        .map(|&f| {
            let mut path = Vec::with_capacity(p * p - 1);
            for x in 1..p {
                path.push(g.mul(g.pow(b, x), f));
                for y in 0..p {
                    path.push(g.mul(g.mul(g.pow(a, x), g.pow(b, y)), f));
                }
            }
            path
        })
        .collect();
    Ok(paths)
}

fn require_noncyclic_pgroup(g: &Group) -> Result<usize> {
    let p = prime_of_pgroup(g)
        .ok_or_else(|| ConstructionError::Precondition("not a p-group".into()))?;
    if g.is_cyclic() {
        return Err(ConstructionError::Precondition("p-group is cyclic".into()));
    }
    Ok(p as usize)
}

/// The concatenated path cycle of Δ(P) for a noncyclic p-group P generated
/// by `a` and `b`. For odd p and an even number of vertices the chords
/// {b, ab} (positions 0, 2) and {a, ab²} (positions 1, 3) are returned as an
/// `HChords` certificate. For p = 2 the concatenation is not guaranteed to
/// be a cycle; if it fails, the cycle comes from search.
pub fn pgroup_hamiltonian(
    g: &Group,
    a: usize,
    b: usize,
) -> Result<(ElementCycle, Option<Certificate>)> {
    let p = require_noncyclic_pgroup(g)?;
    if !g.is_generating_pair(a, b) {
        return Err(ConstructionError::Precondition(format!(
            "{a} and {b} do not generate"
        )));
    }
    let delta = delta_graph(&generating_graph(g));
    let elements: Vec<usize> = pgroup_paths(g, a, b, p)?.concat();
    let cycle = match checked_cycle(&delta, elements, CycleMethod::PGroupPaths) {
        Ok(c) => c,
        Err(ConstructionError::Invalid(_)) if p == 2 => {
            search_cycle(&delta, SearchBudget::default())?
        }
        Err(e) => return Err(e),
    };
    if p == 2 || cycle.vertices.len() % 2 == 1 {
        return Ok((cycle, None));
    }
    let witness = Certificate::HChords {
        cycle: cycle.vertices.clone(),
        chords: Some(((0, 2), (1, 3))),
    };
    require_valid(&delta, &witness, "chords {b, ab} and {a, ab²}")?;
    Ok((cycle, Some(witness)))
}

fn search_cycle(delta: &GeneratingGraph, budget: SearchBudget) -> Result<ElementCycle> {
    let found = hamiltonian(&delta.graph, budget);
    match found.outcome {
        HamiltonOutcome::Yes { cycle, .. } => Ok(ElementCycle {
            elements: cycle.iter().map(|&v| delta.vertex_elements[v]).collect(),
            vertices: cycle,
            method: CycleMethod::Search,
        }),
        HamiltonOutcome::No { reason } => Err(ConstructionError::Invalid(format!(
            "search found no cycle: {reason}"
        ))),
        HamiltonOutcome::BudgetExceeded => {
            Err(ConstructionError::BudgetExceeded { nodes: found.nodes })
        }
    }
}

/// Hamiltonian cycle of Δ(C₂ × P) for a p-group P with p odd. The product
/// is built as `C2.direct_product(P)`, so the element x^j h has index
/// (j mod 2)·|P| + h. Returns the product group and the cycle over it.
///
/// For noncyclic P, with h_{ij} the j-th entry of the path H_i, the cycle
/// is u_{11}, …, u_{mk}, v_{11}, …, v_{mk} where u_{ij} = x^j h_{ij} and
/// v_{ij} = x^j h_{i,j+3} (second index mod k).
pub fn c2_times_p_hamiltonian(p_group: &Group) -> Result<(Group, ElementCycle)> {
    let p = prime_of_pgroup(p_group)
        .ok_or_else(|| ConstructionError::Precondition("not a nontrivial p-group".into()))?;
    if p == 2 {
        return Err(ConstructionError::Precondition("p must be odd".into()));
    }
    let g = cyclic(2).direct_product(p_group);
    let delta = delta_graph(&generating_graph(&g));
    if p_group.is_cyclic() {
        let cycle = checked_cycle(&delta, generator_powers(&g), CycleMethod::GeneratorPowers)?;
        return Ok((g, cycle));
    }
    let (a, b) = p_group
        .least_generating_pair()
        .ok_or(ConstructionError::Group(GroupError::NotTwoGenerated))?;
    let paths = pgroup_paths(p_group, a, b, p as usize)?;
    let n = p_group.order();
    let x_pow = |j: usize, h: usize| (j % 2) * n + h;
    let mut elements = Vec::with_capacity(2 * paths.len() * paths[0].len());
    for path in &paths {
        elements.extend(path.iter().enumerate().map(|(j, &h)| x_pow(j + 1, h)));
    }
    for path in &paths {
        let k = path.len();
        elements.extend((0..k).map(|j| x_pow(j + 1, path[(j + 3) % k])));
    }
    let cycle = checked_cycle(&delta, elements, CycleMethod::C2TimesPGluing)?;
    Ok((g, cycle))
}

/// Looks for a Hamiltonian cycle certificate with one chord joining two
/// even positions and one joining two odd positions. Odd cycles need no
/// chords. `None` only means this cycle carries no such pair.
pub fn h_membership(graph: &Graph, cycle: &[usize]) -> Result<Option<Certificate>> {
    let plain = Certificate::HamCycle {
        cycle: cycle.to_vec(),
    };
    if !verify_certificate(graph, &plain) {
        return Err(ConstructionError::Precondition(
            "not a Hamiltonian cycle of the graph".into(),
        ));
    }
    let n = cycle.len();
    let make = |chords| Certificate::HChords {
        cycle: cycle.to_vec(),
        chords,
    };
    if n % 2 == 1 {
        return Ok(Some(make(None)));
    }
    let chord_with_parity = |parity: usize| {
        (parity..n).step_by(2).find_map(|i| {
            (i + 2..n)
                .step_by(2)
                .find(|&j| graph.has_edge(cycle[i], cycle[j]))
                .map(|j| (i, j))
        })
    };
    Ok(match (chord_with_parity(0), chord_with_parity(1)) {
        (Some(even), Some(odd)) => Some(make(Some((even, odd)))),
        _ => None,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum NilpotentHamilton {
    Yes(ElementCycle),
    No { reason: String },
    BudgetExceeded { nodes: u64 },
}

/// A Hamiltonian cycle of Δ(G) for nilpotent 2-generated G: generator
/// powers when G is cyclic, the path construction for noncyclic p-groups,
/// the gluing construction for C₂ × P with p odd, and search otherwise.
pub fn nilpotent_hamiltonian(g: &Group, budget: SearchBudget) -> Result<NilpotentHamilton> {
    let st = nilpotent_structure(g)?;
    st.require_two_generated()?;
    if g.order() <= 2 {
        return Ok(NilpotentHamilton::No {
            reason: format!("Δ(G) has {} vertices", g.order()),
        });
    }
    let delta = delta_graph(&generating_graph(g));
    let found = if g.is_cyclic() {
        checked_cycle(&delta, generator_powers(g), CycleMethod::GeneratorPowers)
    } else if prime_of_pgroup(g).is_some() {
        let (a, b) = g.least_generating_pair().expect("two-generated");
        pgroup_hamiltonian(g, a, b).map(|(c, _)| c)
    } else if let Some(elements) = c2_times_odd_pgroup(g)? {
        checked_cycle(&delta, elements, CycleMethod::C2TimesPGluing)
    } else {
        search_cycle(&delta, budget)
    };
    match found {
        Ok(cycle) => Ok(NilpotentHamilton::Yes(cycle)),
        Err(ConstructionError::BudgetExceeded { nodes }) => {
            Ok(NilpotentHamilton::BudgetExceeded { nodes })
        }
        Err(e) => Err(e),
    }
}

/// When G = C₂ × P with P a p-group for odd p, the gluing cycle of the
/// internally built C₂ × P carried over to G: (j, h) ↦ x^j ι(h), with x the
/// involution of G and ι the embedding of the Sylow p-subgroup.
fn c2_times_odd_pgroup(g: &Group) -> Result<Option<Vec<usize>>> {
    let factors = totient_profile(g.order() as u64).factorization;
    let [(2, 1), (p, _)] = factors.as_slice() else {
        return Ok(None);
    };
    let (sylow, embed) = g.subgroup(&p_elements(g, *p))?;
    let involution = (1..g.order())
        .find(|&x| g.element_order(x) == 2)
        .expect("order is even");
    let n = sylow.order();
    let (_, cycle) = c2_times_p_hamiltonian(&sylow)?;
    let carried = cycle
        .elements
        .iter()
        .map(|&e| {
            let h = embed[e % n];
            if e / n == 1 {
                g.mul(involution, h)
            } else {
                h
            }
        })
        .collect();
    Ok(Some(carried))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupkit::{build_group, parse_spec};

    fn grp(s: &str) -> Group {
        build_group(&parse_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn cyclic_cycles() {
        assert_eq!(cyclic_hamiltonian(3).unwrap().elements, vec![0, 1, 2]);
        assert_eq!(cyclic_hamiltonian(4).unwrap().elements, vec![0, 1, 2, 3]);
        assert!(cyclic_hamiltonian(2).is_err());
    }

    #[test]
    fn c3_squared_paths() {
        let g = grp("C3^2");
        let (a, b) = g.least_generating_pair().unwrap();
        let (cycle, chords) = pgroup_hamiltonian(&g, a, b).unwrap();
        let word = |x: usize, y: usize| g.mul(g.pow(a, x), g.pow(b, y));
        let expected = vec![
            word(0, 1),
            word(1, 0),
            word(1, 1),
            word(1, 2),
            word(0, 2),
            word(2, 0),
            word(2, 1),
            word(2, 2),
        ];
        assert_eq!(cycle.elements, expected);
        assert!(matches!(
            chords,
            Some(Certificate::HChords {
                chords: Some(((0, 2), (1, 3))),
                ..
            })
        ));
    }

    #[test]
    fn heisenberg_paths() {
        let g = grp("Heis3");
        let (a, b) = g.least_generating_pair().unwrap();
        let (cycle, chords) = pgroup_hamiltonian(&g, a, b).unwrap();
        assert_eq!(cycle.elements.len(), 24);
        assert_eq!(cycle.method, CycleMethod::PGroupPaths);
        assert!(chords.is_some());
    }

    #[test]
    fn gluing_over_c3_squared() {
        let (g, cycle) = c2_times_p_hamiltonian(&grp("C3^2")).unwrap();
        assert_eq!(g.order(), 18);
        assert_eq!(cycle.elements.len(), 16);
        let (_, cycle) = c2_times_p_hamiltonian(&grp("Heis3")).unwrap();
        assert_eq!(cycle.elements.len(), 48);
        let (_, cycle) = c2_times_p_hamiltonian(&grp("C9")).unwrap();
        assert_eq!(cycle.method, CycleMethod::GeneratorPowers);
        assert!(c2_times_p_hamiltonian(&grp("C2^2")).is_err());
    }

    #[test]
    fn chords_on_plain_cycle_absent() {
        let c6 = Graph::cycle(6);
        assert_eq!(h_membership(&c6, &[0, 1, 2, 3, 4, 5]).unwrap(), None);
        let k5 = Graph::complete(5);
        assert!(h_membership(&k5, &[0, 1, 2, 3, 4]).unwrap().is_some());
    }

    #[test]
    fn nilpotent_dispatch() {
        let method =
            |s: &str| match nilpotent_hamiltonian(&grp(s), SearchBudget::default()).unwrap() {
                NilpotentHamilton::Yes(c) => Some(c.method),
                _ => None,
            };
        assert_eq!(method("C12"), Some(CycleMethod::GeneratorPowers));
        assert_eq!(method("C5^2"), Some(CycleMethod::PGroupPaths));
        assert_eq!(method("C2 x Heis3"), Some(CycleMethod::C2TimesPGluing));
        assert_eq!(method("C2^2 x C3^2"), Some(CycleMethod::Search));
        assert_eq!(method("C2"), None);
    }
}
