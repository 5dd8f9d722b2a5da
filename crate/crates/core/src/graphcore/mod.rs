//! Exact graph algorithms and constructors.
//!
//! Search routines take a [`SearchBudget`] counting node expansions, so the
//! same input and budget always give the same outcome.

mod certificate;
mod clique;
mod connectivity;
mod domination;
mod euler;
mod formulas;
mod graph;
mod hamilton;
mod metrics;

pub use certificate::{verify_certificate, Certificate};
pub use clique::{chromatic_number, clique_number, ChromaticOutcome, CliqueOutcome};
pub use connectivity::{edge_connectivity, vertex_connectivity, Connectivity};
pub use domination::{total_domination, DominationOutcome};
pub use euler::{eulerian_circuit, EulerObstruction};
pub use formulas::{kappa_product_formula, td_bounds, MultipartiteParams, TdBounds};
pub use graph::{Graph, GraphJson};
pub use hamilton::{hamiltonian, HamiltonOutcome};
pub use metrics::{basic_metrics, components, is_connected, BasicMetrics};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("total domination undefined: vertex {vertex} has no possible dominator")]
    Undefined { vertex: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl SearchBudget {
    pub const DEFAULT_NODES: u64 = 10_000_000;

    pub fn new(max_nodes: u64) -> Self {
        SearchBudget { max_nodes }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(Self::DEFAULT_NODES)
    }
}

/// Node counter shared by the search routines.
#[derive(Debug)]
pub(crate) struct NodeCounter {
    pub nodes: u64,
    max: u64,
}

impl NodeCounter {
    pub fn new(budget: SearchBudget) -> Self {
        NodeCounter {
            nodes: 0,
            max: budget.max_nodes,
        }
    }

    /// Counts one expansion; `false` once the budget is spent.
    #[inline]
    pub fn tick(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.max
    }
}

/// A search result together with the number of nodes expanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Searched<T> {
    pub outcome: T,
    pub nodes: u64,
}
