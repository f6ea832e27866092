//! Constructions of minimum genus embeddings of complete graphs with
//! prescribed nontriangular faces, assembled from surgery primitives.
//!
//! Every recipe records its steps in a [`Script`] and checks its output by
//! tracing it again; nothing is trusted from the script itself.

pub mod case2_5;
pub mod downgrade;
pub mod paths;
pub mod triples;
pub mod split;
pub mod case8;
pub mod nonorientable;
pub mod maxgenus;
pub mod general;
pub mod construct;

use crate::bounds::genus_bounds;
use crate::distribution::format_type;
use crate::error::{Error, Result};
use crate::surface::{Embedding, Surface};
use crate::surgery::placement::{search, Found, Move, PLACEMENT_BUDGET};
use crate::surgery::script::{Recorder, Script};

/// Output of a recipe: where it started, where it ended and how.
#[derive(Clone, Debug)]
pub struct Built {
    pub input: Embedding,
    pub output: Embedding,
    pub script: Script,
}

impl Built {
    fn from_recorder(input: Embedding, rec: Recorder) -> Self {
        Built { input, output: rec.emb, script: rec.script }
    }

    /// Appends another recipe run that started from this output.
    pub fn then(mut self, next: Built) -> Self {
        self.output = next.output;
        self.script.steps.extend(next.script.steps);
        self
    }
}

fn verr(msg: impl Into<String>) -> Error {
    Error::Verification(msg.into())
}

/// Checks that `emb` embeds a complete graph on `surface` with exactly the
/// nontriangular faces of `ty`.
pub fn check_result(emb: &Embedding, ty: &[usize], surface: Surface) -> Result<()> {
    if !emb.sys.is_complete() {
        return Err(verr(format!("{} edges missing", emb.sys.complement_edges().len())));
    }
    if emb.surface != surface {
        return Err(verr(format!("surface is {}, expected {surface}", emb.surface)));
    }
    let got = emb.embedding_type();
    if got != ty {
        return Err(verr(format!("type is {}, expected {}", format_type(&got), format_type(ty))));
    }
    Ok(())
}

/// The orientable minimum genus surface of K_n.
pub fn min_surface(n: usize) -> Result<Surface> {
    Ok(Surface { orientable: true, genus: genus_bounds(n as u64)?.orientable })
}

/// The nonorientable minimum genus surface of K_n.
pub fn min_nonorientable(n: usize) -> Result<Surface> {
    Ok(Surface { orientable: false, genus: genus_bounds(n as u64)?.nonorientable })
}

/// Runs a placement search and records the winning steps.
fn run(rec: &mut Recorder, moves: &[Move], what: &str, accept: impl Fn(&Embedding) -> bool) -> Result<()> {
    match search(&rec.emb, moves, PLACEMENT_BUDGET, accept)? {
        Some(found) => {
            rec.absorb(found);
            Ok(())
        }
        None => Err(verr(format!("{what}: no placement reaches the stated result"))),
    }
}

fn try_run(rec: &Recorder, moves: &[Move], accept: impl Fn(&Embedding) -> bool) -> Result<Option<Found>> {
    search(&rec.emb, moves, PLACEMENT_BUDGET, accept)
}
