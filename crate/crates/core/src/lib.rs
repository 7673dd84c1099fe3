//! Seidel switching, lower and upper switching classes, and the
//! NAE-SAT reductions to P10-free and C7-free switching.

pub mod canon;
pub mod cli;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod lower;
pub mod minor;
pub mod oracle;
pub mod patterns;
pub mod profile;
pub mod recognize;
pub mod sat;
pub mod search;
pub mod upper;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
