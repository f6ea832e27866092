//! All seven types of K_n from a triangulation of K_n - K2: one handle
//! carries the missing edge (x, y), opening the 8-gon [x, a, b, x, y, c, d, y],
//! and chord exchanges split it.

use super::{check_result, min_surface, try_run, Built};
use crate::distribution::format_type;
use crate::error::{Error, Result};
use crate::label::Label;
use crate::surface::Embedding;
use crate::surgery::ops::CornerRef;
use crate::surgery::placement::Move;
use crate::surgery::script::{Recorder, Step};

pub const TYPES: [&[usize]; 7] =
    [&[8], &[7, 4], &[6, 5], &[6, 4, 4], &[5, 5, 4], &[5, 4, 4, 4], &[4, 4, 4, 4, 4]];

/// The 8-gon read as [x, a, b, x, y, c, d, y].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Octagon {
    pub a: Label,
    pub b: Label,
    pub c: Label,
    pub d: Label,
}

/// Reads the 8-gon of `emb` against the pattern, if it has one.
pub fn read_octagon(emb: &Embedding, x: &Label, y: &Label) -> Option<Octagon> {
    let f = emb.faces.iter().find(|f| f.len() == 8)?;
    let l = f.labels(&emb.sys);
    (0..8).find_map(|r| {
        let at = |i: usize| &l[(r + i) % 8];
        (at(0) == x && at(3) == x && at(4) == y && at(7) == y).then(|| Octagon {
            a: at(1).clone(),
            b: at(2).clone(),
            c: at(5).clone(),
            d: at(6).clone(),
        })
    })
}

fn the_missing_edge(emb: &Embedding) -> Result<(Label, Label)> {
    match emb.sys.complement_edges().as_slice() {
        [(x, y)] => Ok((x.clone(), y.clone())),
        m => Err(Error::Precondition(format!("{} missing edges, expected 1", m.len()))),
    }
}

/// Triangles at `v` as (corner, the other two vertices in face order).
fn triangles_at(emb: &Embedding, v: &Label) -> Result<Vec<(CornerRef, Label, Label)>> {
    let vi = emb.sys.require(v)?;
    let mut out = Vec::new();
    for f in emb.faces.iter().filter(|f| f.len() == 3) {
        if let Some(&i) = f.corners_at(vi).first() {
            let p = emb.sys.label(f.corners[(i + 1) % 3].vertex).clone();
            let q = emb.sys.label(f.corners[(i + 2) % 3].vertex).clone();
            out.push((CornerRef { face: f.hash.clone(), index: i }, p, q));
        }
    }
    Ok(out)
}

fn moves_for(target: &[usize], o: &Octagon, y: &Label) -> Vec<Move> {
    let ex = |p: &Label, q: &Label| Move::Exchange(p.clone(), q.clone());
    match target {
        [7, 4] => vec![ex(&o.a, y)],
        [6, 4, 4] => vec![ex(&o.a, &o.d)],
        [5, 5, 4] => vec![ex(&o.a, &o.c)],
        [5, 4, 4, 4] => vec![ex(&o.a, &o.d), ex(&o.b, y)],
        [4, 4, 4, 4, 4] => vec![ex(&o.a, &o.d), ex(&o.b, &o.c)],
        _ => vec![],
    }
}

/// K_n of the requested type from a triangular K_n - K2.
pub fn case2_5_types(emb: &Embedding, target: &[usize]) -> Result<Built> {
    if !TYPES.contains(&target) {
        return Err(Error::Domain(format!("type {} is not one of the seven", format_type(target))));
    }
    if !emb.is_triangular() || !emb.surface.orientable {
        return Err(Error::Precondition("input must be an orientable triangulation".into()));
    }
    let (x, y) = the_missing_edge(emb)?;
    let surface = min_surface(emb.sys.vertex_count())?;
    let tx = triangles_at(emb, &x)?;
    let ty = triangles_at(emb, &y)?;
    for (cx, a, b) in &tx {
        for (cy, c, d) in &ty {
            let pair_ok = if target == [6, 5] {
                // [x, a, b] and [y, b, c] with a != c
                (b == c && a != d) || (a == d && b != c) || (a == c && b != d) || (b == d && a != c)
            } else if target == [8] {
                true
            } else {
                a != c && a != d && b != c && b != d
            };
            if !pair_ok {
                continue;
            }
            let mut rec = Recorder::new(emb.clone());
            rec.step(Step::Handle { x: x.clone(), xc: cx.clone(), y: y.clone(), yc: cy.clone() })?;
            let Some(o) = read_octagon(&rec.emb, &x, &y) else { continue };
            if target == [8] {
                check_result(&rec.emb, target, surface)?;
                return Ok(Built::from_recorder(emb.clone(), rec));
            }
            let moves = if target == [6, 5] {
                // the shared vertex sits next to x on one side and next to y
                // on the other; moving the edge from it to its other
                // neighbor on the x side gives (6,5)
                let shared = [&o.a, &o.b].into_iter().find(|v| **v == o.c || **v == o.d);
                let Some(s) = shared else { continue };
                let other = if *s == o.a { &o.b } else { &o.a };
                vec![Move::Exchange(other.clone(), s.clone())]
            } else {
                moves_for(target, &o, &y)
            };
            let accept = |e: &Embedding| e.embedding_type() == target;
            if let Some(found) = try_run(&rec, &moves, accept)? {
                rec.absorb(found);
                check_result(&rec.emb, target, surface)?;
                return Ok(Built::from_recorder(emb.clone(), rec));
            }
        }
    }
    Err(Error::Precondition(format!(
        "no pair of triangles at {x} and {y} supports type {}",
        format_type(target)
    )))
}
