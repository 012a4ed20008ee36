//! Exact hyperbolic geometry for the pair of pants, used as an independent
//! check on the combinatorial engine.

pub mod geodesic;
pub mod matrix;
pub mod oracle;

pub use geodesic::{axis_of, crossing, interleaved, Endpoint, Geodesic};
pub use matrix::{classify_element, matrix_of, ElementKind, GroupMatrix, Representation};
pub use oracle::{oracle_intersection, oracle_self_intersection, Oracle, OracleCount};
