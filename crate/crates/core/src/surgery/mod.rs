//! Surgery on embeddings: primitive operations and replayable scripts.

pub mod ops;
pub mod script;
pub mod placement;
