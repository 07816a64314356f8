//! Extremal constructions for expansions of graphs into 3-uniform
//! hypergraphs: projective norm graphs and their quotients, crosscut
//! constructions, full subgraphs, and exact small-scale Turán oracles.

pub mod constructions;
pub mod embedding;
pub mod error;
pub mod field;
pub mod graph;
pub mod oracle;
pub mod patterns;
pub mod report;
pub mod suites;
pub mod triples;

pub use error::{Error, Result};
