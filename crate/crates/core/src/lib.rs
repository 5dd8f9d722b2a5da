//! Generating graphs of finite 2-generated groups.
//!
//! [`groupkit`] builds groups from Cayley tables, [`gengraph`] realises
//! their generating graphs, [`graphcore`] holds the exact graph algorithms,
//! [`constructions`] the explicit witnesses, and [`verifier`] runs the
//! formula-versus-oracle checks over a catalog.

pub mod bitset;
pub mod constructions;
pub mod gengraph;
pub mod graphcore;
pub mod groupkit;
pub mod verifier;
