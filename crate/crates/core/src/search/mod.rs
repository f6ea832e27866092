//! Independent oracles: exhaustive enumeration for tiny complete graphs,
//! a backtracking triangulation finder, and a second face tracer.

pub mod classify;
pub mod graph;
pub mod oracle;
pub mod triangular;
