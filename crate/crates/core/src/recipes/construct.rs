//! Picks a construction for K_n and a requested type.
//!
//! | n (mod 12)   | excess | route                                                       |
//! |--------------|--------|-------------------------------------------------------------|
//! | 0, 3, 4, 7   | 0      | search for a triangulation of K_n                           |
//! | 2, 5         | 5      | triangular K_n - K2, one handle, chord exchanges            |
//! | 1, 6, 9, 10  | 3      | triangular K_n - P3 to type (6), then chord exchanges       |
//! | 8, 11        | 2      | triangular K_n plus a degree 5 vertex, delete it; exchange  |
//!
//! Fixed inputs take over where they exist: K5 by enumeration, K8 and K9
//! from the split-complete G9, K10 from the K10 - P3 table, K20 from its
//! index 3 seed, K23 from the K23 + p table and K30 from its seed. Search
//! is used only up to [`SEARCH_MAX_N`] vertices; larger n without a fixture
//! report the missing input.

use super::case2_5::case2_5_types;
use super::case8::case8;
use super::downgrade::downgrade_type;
use super::paths::{k30_variant, p3_type6, K30Variant};
use super::split::{k8_from_g9, split_complete_type6};
use super::triples::k3_min_genus;
use super::{check_result, min_surface, Built};
use crate::bounds::genus_bounds;
use crate::currents::index3::{derive_index3, parse_seed};
use crate::distribution::{format_type, types_for_excess};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::fixtures::FixtureStore;
use crate::label::Label;
use crate::rotfmt::parse_rot;
use crate::search::classify::first_of_type;
use crate::search::graph::parse_graph;
use crate::search::triangular::{find_triangular, Outcome, SearchSpec};
use crate::surface::Embedding;
use crate::surgery::script::{Recorder, Step};

pub const SEARCH_MAX_N: usize = 17;

/// Node budget per first-level branch for searches run by [`construct`].
pub const CONSTRUCT_BUDGET: u64 = 20_000_000;

fn unchanged(emb: Embedding) -> Built {
    Built { input: emb.clone(), output: emb, script: Default::default() }
}

/// A triangulation of `graph` found by search, or the reason there is none.
pub fn searched(graph: &str, exec: Exec) -> Result<Embedding> {
    let mut spec = SearchSpec::new(parse_graph(graph)?, true);
    spec.budget = CONSTRUCT_BUDGET;
    match find_triangular(&spec, exec)? {
        Outcome::Found(sys) => Embedding::new(sys),
        Outcome::Exhausted => Err(Error::Verification(format!("{graph} has no orientable triangulation"))),
        Outcome::Budget => Err(Error::FixtureMissing(format!("search for a triangulation of {graph} was inconclusive"))),
    }
}

fn search_or_missing(n: usize, graph: &str, exec: Exec) -> Result<Embedding> {
    if n > SEARCH_MAX_N {
        return Err(Error::FixtureMissing(format!(
            "K{n} needs a triangulation of {graph}; none is stored and search is limited to n <= {SEARCH_MAX_N}"
        )));
    }
    searched(graph, exec)
}

fn rot_fixture(store: &FixtureStore, name: &str) -> Result<Embedding> {
    Embedding::new(parse_rot(&store.load(name)?)?)
}

fn seed_fixture(store: &FixtureStore, name: &str) -> Result<Embedding> {
    Embedding::new(derive_index3(&parse_seed(&store.load(name)?)?)?)
}

/// Applies chord exchanges to reach `target` from a type (6) or (5) result.
fn lower(from: Built, target: &[usize]) -> Result<Built> {
    if from.output.embedding_type() == target {
        return Ok(from);
    }
    let next = downgrade_type(&from.output, target)?;
    Ok(from.then(next))
}

/// K_n with an extra vertex p of degree 5, p deleted: type (5).
fn five_from_p(emb: &Embedding) -> Result<Built> {
    let mut rec = Recorder::new(emb.clone());
    rec.step(Step::DelVertex { v: Label::tag("p") })?;
    Ok(Built { input: emb.clone(), output: rec.emb, script: rec.script })
}

fn k5(target: &[usize]) -> Result<Built> {
    if target == [6, 5] || target == [5, 4, 4, 4] {
        return Err(Error::Refusal(format!(
            "K5 has no toroidal embedding of type {}; all 7776 rotation systems of K5 confirm it",
            format_type(target)
        )));
    }
    let sys = first_of_type(5, 1, target)?.ok_or_else(|| Error::Verification(format!("no K5 system of type {}", format_type(target))))?;
    Ok(unchanged(Embedding::new(sys)?))
}

fn k8(target: &[usize], exec: Exec) -> Result<Built> {
    if target != [4, 4] {
        return Err(Error::Refusal(format!(
            "K8 does not have a nearly triangular minimum genus embedding; every minimum genus embedding of K8 is of type (4,4), so type {} does not occur",
            format_type(target)
        )));
    }
    k8_from_g9(&searched("split:9:4", exec)?)
}

fn k9(target: &[usize], exec: Exec) -> Result<Built> {
    let g9 = searched("split:9:4", exec)?;
    lower(split_complete_type6(&g9, &Label::Num(0))?, target)
}

fn k30(store: &FixtureStore, target: &[usize]) -> Result<Built> {
    let base = seed_fixture(store, "k30_seed")?;
    if target == [6] {
        let e = k30_variant(&base, K30Variant::E)?;
        let six = p3_type6(&e.output)?;
        return Ok(e.then(six));
    }
    k3_min_genus(&base, &Label::Num(0), target)
}

/// A verified embedding of K_n of type `target` at the minimum orientable
/// genus.
pub fn construct(n: usize, target: &[usize], store: &FixtureStore, exec: Exec) -> Result<Built> {
    let b = genus_bounds(n as u64)?;
    let mut target = target.to_vec();
    target.sort_unstable_by(|a, b| b.cmp(a));
    let allowed = types_for_excess(b.t as usize);
    if !allowed.contains(&target) {
        let names: Vec<String> = allowed.iter().map(|t| format_type(t)).collect();
        return Err(Error::Domain(format!(
            "K{n} has excess {}; its minimum genus types are {}",
            b.t,
            names.join(" ")
        )));
    }
    let t = &target[..];
    let built = match n {
        5 => k5(t)?,
        8 => k8(t, exec)?,
        9 => k9(t, exec)?,
        10 => lower(p3_type6(&rot_fixture(store, "k10_p3")?)?, t)?,
        20 => lower(case8(&seed_fixture(store, "k20_seed")?, 1)?, t)?,
        23 => lower(five_from_p(&rot_fixture(store, "k23_p")?)?, t)?,
        30 => k30(store, t)?,
        _ => match b.t {
            0 => unchanged(search_or_missing(n, &format!("K{n}"), exec)?),
            5 => case2_5_types(&search_or_missing(n, &format!("K{n}-K2"), exec)?, t)?,
            3 => lower(p3_type6(&search_or_missing(n, &format!("K{n}-P3"), exec)?)?, t)?,
            2 => lower(five_from_p(&search_or_missing(n, &format!("K{n}+p:5"), exec)?)?, t)?,
            other => unreachable!("excess {other} does not occur"),
        },
    };
    check_result(&built.output, t, min_surface(n)?)?;
    Ok(built)
}

/// Every pair in `jobs`, constructed independently.
pub fn construct_batch(jobs: &[(usize, Vec<usize>)], store: &FixtureStore, exec: Exec) -> Vec<Result<Built>> {
    exec.map(jobs.to_vec(), |(n, t)| construct(n, &t, store, Exec::Sequential))
}
