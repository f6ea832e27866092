//! Current graphs and the rotation systems they generate.

pub mod derive;
pub mod log;
pub mod graph;
pub mod format;
pub mod index3;
