//! Finite groups as validated Cayley tables, plus the subgroup machinery
//! needed for generating graphs: closure, Frattini subgroups, Sylow
//! structure and quotients.

pub(crate) mod build;
mod frattini;
pub(crate) mod group;
mod numth;
mod spec;
pub(crate) mod structure;

pub use build::{build_group, build_group_with_guard, example_family_order, DEFAULT_MAX_ORDER};
pub use frattini::{
    frattini, quotient_mod_frattini, subgroup_lattice, FrattiniMethod, FrattiniQuotient,
    DEFAULT_LATTICE_GUARD,
};
pub use group::{ElementSet, Group};
pub use numth::{gcd, is_prime, nth_odd_prime, totient_profile, TotientProfile};
pub use spec::{parse_spec, Factor, GroupSpec};
pub use structure::{
    abelian_order_histogram, find_isomorphism, is_nilpotent, nilpotent_structure, sylow_split,
    NilpotentStructure,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("group order {order} exceeds the configured guard {max}")]
    OrderGuard { order: usize, max: usize },
    #[error("invalid Cayley table: {0}")]
    InvalidCayley(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("group is not nilpotent")]
    NotNilpotent,
    #[error("group needs more than 2 generators")]
    NotTwoGenerated,
}

pub type Result<T> = std::result::Result<T, GroupError>;
