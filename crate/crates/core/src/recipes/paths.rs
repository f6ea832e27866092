//! Adding a missing path with one handle, and the edge flips that turn the
//! K30 - K3 triangulation into triangulations of K30 minus other 3-edge graphs.

use std::collections::BTreeMap;
use std::fmt;

use super::{check_result, min_surface, run, verr, Built};
use crate::error::{Error, Result};
use crate::label::Label;
use crate::surface::Embedding;
use crate::surgery::ops::CornerRef;
use crate::surgery::placement::Move;
use crate::surgery::script::{Recorder, Step};

/// Shape of a graph with three edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Triangle,
    /// Path on two edges plus a disjoint edge.
    PathAndEdge,
    Matching,
    Star,
    /// Path on three edges.
    Path,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Shape::Triangle => "K3",
            Shape::PathAndEdge => "P2+K2",
            Shape::Matching => "3K2",
            Shape::Star => "K1,3",
            Shape::Path => "P3",
        };
        f.write_str(s)
    }
}

/// Classifies a three-edge graph by vertex count and degrees.
pub fn shape_of(edges: &[(Label, Label)]) -> Result<Shape> {
    if edges.len() != 3 {
        return Err(Error::Precondition(format!("{} missing edges, expected 3", edges.len())));
    }
    let mut deg: BTreeMap<&Label, usize> = BTreeMap::new();
    for (u, v) in edges {
        *deg.entry(u).or_default() += 1;
        *deg.entry(v).or_default() += 1;
    }
    let max = deg.values().copied().max().unwrap_or(0);
    Ok(match (deg.len(), max) {
        (3, _) => Shape::Triangle,
        (4, 3) => Shape::Star,
        (4, _) => Shape::Path,
        (5, _) => Shape::PathAndEdge,
        _ => Shape::Matching,
    })
}

/// The missing path of K_n - P3 as (a, b, c, d).
fn missing_path(emb: &Embedding) -> Result<[Label; 4]> {
    let miss = emb.sys.complement_edges();
    if shape_of(&miss)? != Shape::Path {
        return Err(Error::Precondition("missing edges do not form a path on three edges".into()));
    }
    let mut adj: BTreeMap<Label, Vec<Label>> = BTreeMap::new();
    for (u, v) in &miss {
        adj.entry(u.clone()).or_default().push(v.clone());
        adj.entry(v.clone()).or_default().push(u.clone());
    }
    let a = adj.iter().find(|(_, n)| n.len() == 1).map(|(l, _)| l.clone()).expect("path end");
    let b = adj[&a][0].clone();
    let c = adj[&b].iter().find(|&x| *x != a).expect("path").clone();
    let d = adj[&c].iter().find(|&x| *x != b).expect("path").clone();
    Ok([a, b, c, d])
}

fn triangles_on(emb: &Embedding, u: &Label, v: &Label) -> Result<Vec<String>> {
    let (ui, vi) = (emb.sys.require(u)?, emb.sys.require(v)?);
    Ok(emb
        .faces_with_edge(ui, vi)
        .into_iter()
        .filter(|&f| emb.faces[f].len() == 3)
        .map(|f| emb.faces[f].hash.clone())
        .collect())
}

/// Adds the missing path a-b-c-d of a triangular K_n - P3 with one handle:
/// (b, c) joins a triangle [a, c, x] to a triangle [d, b, x'], then (a, b)
/// and (c, d) go into the merged face, leaving a 6-gon.
pub fn p3_type6(emb: &Embedding) -> Result<Built> {
    if !emb.is_triangular() || !emb.surface.orientable {
        return Err(Error::Precondition("input must be an orientable triangulation".into()));
    }
    let [a, b, c, d] = missing_path(emb)?;
    let n = emb.sys.vertex_count();
    let target = min_surface(n)?;
    for f1 in triangles_on(emb, &a, &c)? {
        for f2 in triangles_on(emb, &b, &d)? {
            let ci = emb.sys.require(&c)?;
            let bi = emb.sys.require(&b)?;
            let xc = CornerRef { face: f1.clone(), index: emb.face(&f1)?.corners_at(ci)[0] };
            let yc = CornerRef { face: f2.clone(), index: emb.face(&f2)?.corners_at(bi)[0] };
            let mut rec = Recorder::new(emb.clone());
            rec.step(Step::Handle { x: c.clone(), xc, y: b.clone(), yc })?;
            let moves = [Move::Add(a.clone(), b.clone()), Move::Add(c.clone(), d.clone())];
            let ok = run(&mut rec, &moves, "p3", |e| e.embedding_type() == [6] && e.surface == target);
            if ok.is_ok() {
                check_result(&rec.emb, &[6], target)?;
                return Ok(Built::from_recorder(emb.clone(), rec));
            }
        }
    }
    Err(verr("no pair of triangles on (a, c) and (b, d) leaves a 6-gon"))
}

/// Which graph is missing from K30 after the flips.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum K30Variant {
    A,
    B,
    C,
    D,
    E,
}

impl K30Variant {
    pub const ALL: [K30Variant; 5] = [K30Variant::A, K30Variant::B, K30Variant::C, K30Variant::D, K30Variant::E];

    /// Edge flips `-(a,b)+(c,d)`, in order.
    pub fn flips(self) -> Vec<[&'static str; 4]> {
        match self {
            K30Variant::A => vec![],
            K30Variant::B => vec![["0", "10", "x", "y"]],
            K30Variant::C => vec![["0", "10", "x", "y"], ["1", "26", "x", "z"]],
            K30Variant::D => vec![["0", "10", "x", "y"], ["8", "10", "x", "z"], ["10", "x", "y", "z"]],
            K30Variant::E => vec![["1", "26", "x", "z"], ["11", "16", "1", "26"], ["6", "x", "11", "16"]],
        }
    }

    /// Shape of the missing graph these flips produce.
    pub fn shape(self) -> Shape {
        match self {
            K30Variant::A => Shape::Triangle,
            K30Variant::B => Shape::PathAndEdge,
            K30Variant::C => Shape::Matching,
            K30Variant::D => Shape::Star,
            K30Variant::E => Shape::Path,
        }
    }
}

impl fmt::Display for K30Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Applies the flips of `variant` to the triangulation of K30 - K3 on
/// vertices 0..26, x, y, z. The result is checked to be triangular on the
/// same surface with the expected missing graph.
pub fn k30_variant(base: &Embedding, variant: K30Variant) -> Result<Built> {
    let mut rec = Recorder::new(base.clone());
    for [a, b, c, d] in variant.flips() {
        let l = |s: &str| -> Result<Label> { s.parse() };
        rec.step(Step::Flip { a: l(a)?, b: l(b)?, c: l(c)?, d: l(d)? })?;
    }
    let out = &rec.emb;
    if !out.is_triangular() || out.surface != base.surface {
        return Err(verr(format!("variant {variant} is not a triangulation of {}", base.surface)));
    }
    let got = shape_of(&out.sys.complement_edges())?;
    if got != variant.shape() {
        return Err(verr(format!("variant {variant} misses {got}, expected {}", variant.shape())));
    }
    Ok(Built::from_recorder(base.clone(), rec))
}

/// All five variants, A through E.
pub fn k30_variants(base: &Embedding) -> Result<Vec<Built>> {
    K30Variant::ALL.iter().map(|&v| k30_variant(base, v)).collect()
}
