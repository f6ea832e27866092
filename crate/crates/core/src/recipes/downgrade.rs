//! From one 5- or 6-sided face to several quadrilaterals by chord exchanges.

use super::{try_run, verr, Built};
use crate::distribution::format_type;
use crate::error::Result;
use crate::label::Label;
use crate::surface::Embedding;
use crate::surgery::placement::Move;
use crate::surgery::script::Recorder;

fn big_face(emb: &Embedding) -> Result<Vec<Label>> {
    let big: Vec<_> = emb.faces.iter().filter(|f| f.len() > 3).collect();
    match big.as_slice() {
        [f] => Ok(f.labels(&emb.sys)),
        _ => Err(verr(format!("expected one nontriangular face, type is {}", format_type(&emb.embedding_type())))),
    }
}

/// Candidate exchange lists, in the order they are tried.
fn plans(face: &[Label], target: &[usize]) -> Vec<Vec<Move>> {
    let n = face.len();
    let at = |i: usize| face[i % n].clone();
    let mut out = Vec::new();
    match (n, target) {
        (5, [4, 4]) => {
            // [.. a, b, c ..]: move (a, c) into the face
            for b in 0..5 {
                out.push(vec![Move::Exchange(at(b + 4), at(b + 1))]);
            }
        }
        (6, [5, 4]) | (6, [4, 4, 4]) => {
            // [a, v, w, a', x, y]: (y, v) cuts off a, (w, x) cuts off a'
            for r in 0..6 {
                let (v, w, x, y) = (at(r + 1), at(r + 2), at(r + 4), at(r + 5));
                let mut plan = vec![Move::Exchange(y, v)];
                if target.len() == 3 {
                    plan.push(Move::Exchange(w, x));
                }
                out.push(plan);
            }
        }
        _ => {}
    }
    out.retain(|p| p.iter().all(|m| !matches!(m, Move::Exchange(u, v) if u == v)));
    out
}

/// Exchanges across every pair of corners two apart, up to `depth` moves.
fn broad(face: &[Label], depth: usize) -> Vec<Vec<Move>> {
    let n = face.len();
    let mut one = Vec::new();
    for i in 0..n {
        let (a, c) = (face[i].clone(), face[(i + 2) % n].clone());
        if a != c && !one.contains(&Move::Exchange(a.clone(), c.clone())) {
            one.push(Move::Exchange(a, c));
        }
    }
    let mut out: Vec<Vec<Move>> = one.iter().map(|m| vec![m.clone()]).collect();
    if depth > 1 {
        for a in &one {
            for b in &one {
                if a != b {
                    out.push(vec![a.clone(), b.clone()]);
                }
            }
        }
    }
    out
}

/// Turns a type (5) embedding into type (4,4), or a type (6) embedding into
/// type (5,4) or (4,4,4). The surface is unchanged.
///
/// The fixed exchanges are tried first; faces with repeated vertices, which
/// only occur off orientable surfaces, fall back to exchanges between any
/// two corners two apart on the large face.
pub fn downgrade_type(emb: &Embedding, target: &[usize]) -> Result<Built> {
    let face = big_face(emb)?;
    let ok = match face.len() {
        5 => target == [4, 4],
        6 => target == [5, 4] || target == [4, 4, 4],
        _ => false,
    };
    if !ok {
        return Err(verr(format!(
            "cannot go from type {} to {}",
            format_type(&emb.embedding_type()),
            format_type(target)
        )));
    }
    let mut rec = Recorder::new(emb.clone());
    let accept = |e: &Embedding| e.embedding_type() == target && e.surface == emb.surface;
    for plan in plans(&face, target) {
        if let Some(found) = try_run(&rec, &plan, accept)? {
            rec.absorb(found);
            return Ok(Built::from_recorder(emb.clone(), rec));
        }
    }
    let depth = target.len() - 1;
    for plan in broad(&face, depth) {
        if let Some(found) = try_run(&rec, &plan, accept)? {
            rec.absorb(found);
            return Ok(Built::from_recorder(emb.clone(), rec));
        }
    }
    Err(verr(format!("no exchange reaches type {}", format_type(target))))
}
