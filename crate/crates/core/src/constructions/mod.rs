//! Explicit witnesses: Hamiltonian cycles for cyclic groups, p-groups and
//! C₂ × P, chord certificates, the clique and colouring of Γ(C_n), and
//! total dominating sets lifted from products of complete graphs. Every
//! witness is re-checked against a graph built by closure before it is
//! returned.

mod colouring;
mod domination;
mod hamilton;

pub use colouring::cyclic_clique_colouring;
pub use domination::{
    complete_product, nilpotent_td, product_coordinates, product_dominating_set, CyclicSubgroup,
    TdOutcome, TdReduction,
};
pub use hamilton::{
    c2_times_p_hamiltonian, cyclic_hamiltonian, h_membership, nilpotent_hamiltonian,
    pgroup_hamiltonian, CycleMethod, ElementCycle, NilpotentHamilton,
};

use thiserror::Error;

use crate::gengraph::{GenError, GeneratingGraph};
use crate::graphcore::{verify_certificate, Certificate, GraphError};
use crate::groupkit::GroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("construction failed verification: {0}")]
    Invalid(String),
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
}

pub type Result<T> = std::result::Result<T, ConstructionError>;

/// Graph vertices of the given elements; fails if one is not a vertex.
pub(crate) fn vertices_of(gg: &GeneratingGraph, elements: &[usize]) -> Result<Vec<usize>> {
    elements
        .iter()
        .map(|&x| {
            gg.vertex_of(x)
                .ok_or_else(|| ConstructionError::Invalid(format!("element {x} is not a vertex")))
        })
        .collect()
}

pub(crate) fn require_valid(gg: &GeneratingGraph, c: &Certificate, what: &str) -> Result<()> {
    if verify_certificate(&gg.graph, c) {
        Ok(())
    } else {
        Err(ConstructionError::Invalid(what.to_string()))
    }
}
