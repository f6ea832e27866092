pub mod bounds;
pub mod certificate;
pub mod currents;
pub mod distribution;
pub mod error;
pub mod exec;
pub mod faces;
pub mod fixtures;
pub mod label;
pub mod properties;
pub mod recipes;
pub mod rotation;
pub mod rotfmt;
pub mod rules;
pub mod search;
pub mod surface;
pub mod surgery;

pub use error::{Error, Result};
pub use label::Label;
pub use rotation::RotationSystem;
pub use surface::{Embedding, Surface};
