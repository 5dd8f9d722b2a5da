//! Generating graphs Γ(G) and Δ(G), their degree census against the
//! closed-form counts for nilpotent groups, and the structural identities
//! relating Γ(G) to Γ(G/Φ(G)) and to direct products.

mod build;
mod family;
mod identities;
mod profile;

pub use build::{delta_graph, generating_graph, GeneratingGraph};
pub use family::{example_family_cross_check, example_family_graph, DEFAULT_FAMILY_VERTEX_GUARD};
pub use identities::{
    componentwise_criterion_check, connectedness_lifting_check, degree_lifting_check,
    delta_product_check, gamma_product_containment, internal_delta_product,
    lex_decomposition_check, quotient_bijection_check, IdentityCheck, ProductContainment,
};
pub use profile::{
    degree_census, degree_profile, recover_cyclic_radical, DegreeClass, DegreeProfile,
};

use thiserror::Error;

use crate::graphcore::GraphError;
use crate::groupkit::GroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("observed value disagrees with formula: {0}")]
    InternalMismatch(String),
    #[error("ratio {num}/{den} is not an integer")]
    NonIntegral { num: usize, den: usize },
    #[error("{vertices} vertices exceed the guard {max}")]
    Guard { vertices: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, GenError>;
