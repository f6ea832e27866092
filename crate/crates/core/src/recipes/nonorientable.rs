//! Nonorientable constructions: crosscaps instead of handles.

use super::downgrade::downgrade_type;
use super::{check_result, min_nonorientable, run, verr, Built};
use crate::distribution::format_type;
use crate::error::{Error, Result};
use crate::label::Label;
use crate::surface::{Embedding, Surface};
use crate::surgery::ops;
use crate::surgery::placement::Move;
use crate::surgery::script::{Recorder, Step};

/// Euler genus: 2 - V + E - F.
pub fn euler_genus(emb: &Embedding) -> u64 {
    if emb.surface.orientable {
        2 * emb.surface.genus
    } else {
        emb.surface.genus
    }
}

/// Every crosscap on a segment of the rotation at `v` that `accept` takes.
fn twists(emb: &Embedding, v: &Label, accept: impl Fn(&Embedding) -> bool) -> Result<Vec<(Step, Embedding)>> {
    let row = emb.sys.row_labels(emb.sys.require(v)?);
    let d = row.len();
    let mut out = Vec::new();
    for i in 0..d {
        for len in 1..d {
            let (a, b) = (&row[i], &row[(i + len - 1) % d]);
            let Ok(next) = ops::twist_segment(emb, v, a, b) else { continue };
            if accept(&next) {
                out.push((Step::Twist { v: v.clone(), a: a.clone(), b: b.clone() }, next));
            }
        }
    }
    Ok(out)
}

fn twist_search(rec: &mut Recorder, v: &Label, accept: impl Fn(&Embedding) -> bool) -> Result<()> {
    match twists(&rec.emb, v, accept)?.into_iter().next() {
        Some((step, _)) => rec.step(step).map(|_| ()),
        None => Err(verr(format!("no crosscap at {v} merges the faces as required"))),
    }
}

fn on_one_face(e: &Embedding, ls: &[&Label]) -> bool {
    let idx: Vec<_> = ls.iter().filter_map(|l| e.sys.index_of(l)).collect();
    idx.len() == ls.len() && e.faces.iter().any(|f| idx.iter().all(|&i| f.vertex_multiplicity(i) > 0))
}

fn face_with(emb: &Embedding, len: usize, need: &[(&Label, usize)]) -> bool {
    emb.faces.iter().any(|f| {
        f.len() == len
            && need.iter().all(|(l, k)| emb.sys.index_of(l).is_some_and(|i| f.vertex_multiplicity(i) == *k))
    })
}

/// Nonorientable K_n of type (5) or (4,4) from a triangulation of K_n - K2
/// on any surface, using vertex `v` adjacent to both ends of the missing
/// edge. The Euler genus goes up by one.
pub fn nonorientable_knk2(emb: &Embedding, v: &Label, target: &[usize]) -> Result<Built> {
    if target != [5] && target != [4, 4] {
        return Err(Error::Domain(format!("type {} is not reachable here", format_type(target))));
    }
    if !emb.is_triangular() {
        return Err(Error::Precondition("input must be a triangulation".into()));
    }
    let (x, y) = match emb.sys.complement_edges().as_slice() {
        [(x, y)] => (x.clone(), y.clone()),
        m => return Err(Error::Precondition(format!("{} missing edges, expected 1", m.len()))),
    };
    let surface = Surface { orientable: false, genus: euler_genus(emb) + 1 };
    let mut rec = Recorder::new(emb.clone());
    rec.step(Step::Delete { u: v.clone(), v: x.clone() })?;
    rec.step(Step::Delete { u: v.clone(), v: y.clone() })?;
    let f0 = rec.emb.faces.len();
    twist_search(&mut rec, v, |e| {
        e.faces.len() + 1 == f0 && !e.surface.orientable && face_with(e, 8, &[(&x, 1), (&y, 1), (v, 2)])
    })?;
    let moves = [Move::Add(x.clone(), y.clone()), Move::Add(v.clone(), x), Move::Add(v.clone(), y)];
    run(&mut rec, &moves, "re-insertion", |e| e.embedding_type() == target && e.surface == surface)?;
    check_result(&rec.emb, target, surface)?;
    Ok(Built::from_recorder(emb.clone(), rec))
}

/// The three N3 embeddings of K7, types (6), (5,4) and (4,4,4), from a
/// torus triangulation: a crosscap on one edge opens [a, b, c, a, b, d],
/// exchanging (b, d) leaves a 6-gon repeating only b, and chord exchanges
/// give the other two.
pub fn k7_nonorientable(torus: &Embedding) -> Result<[Built; 3]> {
    if torus.sys.vertex_count() != 7 || !torus.sys.is_complete() || !torus.is_triangular() {
        return Err(Error::Precondition("input must be a triangulation of K7".into()));
    }
    let (a, b) = (torus.sys.label(0).clone(), torus.sys.label(1).clone());
    let bi = 1;
    let d = torus.sys.label(torus.sys.succ(bi, 0)).clone();
    let mut rec = Recorder::new(torus.clone());
    rec.step(Step::Crosscap { u: a, v: b.clone() })?;
    let n3 = Surface { orientable: false, genus: 3 };
    check_result(&rec.emb, &[6], n3)?;
    let accept = |e: &Embedding| {
        e.embedding_type() == [6]
            && e.faces.iter().filter(|f| f.len() == 6).all(|f| {
                let vs = f.vertices();
                let bi = e.sys.index_of(&b).expect("b");
                vs.iter().filter(|&&w| w == bi).count() == 2 && {
                    let mut u = vs.clone();
                    u.sort_unstable();
                    u.dedup();
                    u.len() == 5
                }
            })
    };
    run(&mut rec, &[Move::Exchange(b.clone(), d)], "k7 exchange", accept)?;
    let six = Built::from_recorder(torus.clone(), rec);
    let mut out = Vec::new();
    for t in [&[5usize, 4][..], &[4, 4, 4][..]] {
        let next = downgrade_type(&six.output, t)?;
        check_result(&next.output, t, n3)?;
        out.push(six.clone().then(next));
    }
    let [p, q]: [Built; 2] = out.try_into().expect("two");
    Ok([six, p, q])
}

/// Nonorientable K_{12s+8} of type (5) or (4,4) from the same triangulation
/// as the orientable construction, with two crosscaps in place of a handle.
pub fn nonorientable_case8(emb: &Embedding, s: u32, target: &[usize]) -> Result<Built> {
    if target != [5] && target != [4, 4] {
        return Err(Error::Domain(format!("type {} is not reachable here", format_type(target))));
    }
    super::case8::check_structure(emb, s)?;
    let (x, y0, y1, y) = (Label::tag("x"), Label::tag("y_0"), Label::tag("y_1"), Label::tag("y"));
    let row = emb.sys.row_labels(emb.sys.require(&x)?);
    let d = row.len();
    let (alpha, beta) = (0..d)
        .map(|i| (row[i].clone(), row[(i + 1) % d].clone()))
        .find(|(p, q)| p.num().is_some_and(|k| k % 2 == 0) && q.num().is_some_and(|k| k % 2 == 1))
        .ok_or_else(|| Error::Precondition("row x has no even entry followed by an odd one".into()))?;
    let surface = min_nonorientable(12 * s as usize + 8)?;
    let mut rec = Recorder::new(emb.clone());
    rec.step(Step::Delete { u: y0.clone(), v: alpha.clone() })?;
    rec.step(Step::Delete { u: y1.clone(), v: beta.clone() })?;
    rec.step(Step::Delete { u: alpha.clone(), v: beta.clone() })?;
    let f0 = rec.emb.faces.len();
    let first = twists(&rec.emb, &alpha, |e| e.faces.len() + 1 == f0 && on_one_face(e, &[&x, &y0]))?;
    let pair = first.into_iter().find_map(|(s1, e1)| {
        let second = twists(&e1, &beta, |e| e.faces.len() + 2 == f0 && on_one_face(e, &[&x, &y0, &y1])).ok()?;
        second.into_iter().next().map(|(s2, _)| (s1, s2))
    });
    let (s1, s2) = pair.ok_or_else(|| verr(format!("no pair of crosscaps at {alpha} and {beta} joins x, y_0 and y_1")))?;
    rec.step(s1)?;
    rec.step(s2)?;
    run(&mut rec, &[Move::Add(y0.clone(), y1.clone())], "(y_0, y_1)", |_| true)?;
    rec.step(Step::Contract { u: y0, v: y1, w: y.clone() })?;
    let moves = [
        Move::Add(x.clone(), y.clone()),
        Move::Add(alpha.clone(), beta.clone()),
        Move::Add(y.clone(), alpha),
        Move::Add(y, beta),
    ];
    run(&mut rec, &moves, "case 8 re-insertion", |e| e.embedding_type() == target && e.surface == surface)?;
    check_result(&rec.emb, target, surface)?;
    Ok(Built::from_recorder(emb.clone(), rec))
}

/// Steps a nearly triangular embedding up to `N_k` one crosscap at a time;
/// every crosscap sits on an edge between the nontriangular face (or any
/// face, while all are triangles) and another face. Returns every
/// intermediate embedding, starting with the input.
pub fn crosscap_interpolation(emb: &Embedding, k: u64) -> Result<Vec<Built>> {
    let start = euler_genus(emb);
    let top = emb.sys.edge_count() as u64 + 1 - emb.sys.vertex_count() as u64;
    if k < start || k > top {
        return Err(Error::Domain(format!("genus {k} is outside [{start}, {top}]")));
    }
    let mut out = vec![Built { input: emb.clone(), output: emb.clone(), script: Default::default() }];
    let mut rec = Recorder::new(emb.clone());
    while euler_genus(&rec.emb) < k || rec.emb.surface.orientable {
        let cur = &rec.emb;
        let f = cur.faces.iter().position(|f| f.len() > 3).unwrap_or(0);
        let face = &cur.faces[f];
        let edge = face
            .corners
            .iter()
            .map(|c| (c.vertex, c.next))
            .find(|&(u, v)| cur.faces_with_edge(u, v).len() == 2)
            .ok_or_else(|| verr("the large face has no edge shared with another face"))?;
        let (u, v) = (cur.sys.label(edge.0).clone(), cur.sys.label(edge.1).clone());
        rec.step(Step::Crosscap { u, v })?;
        if rec.emb.faces.iter().filter(|f| f.len() > 3).count() > 1 {
            return Err(verr("crosscap left two nontriangular faces"));
        }
        out.push(Built::from_recorder(emb.clone(), rec.clone()));
        if euler_genus(&rec.emb) > k {
            return Err(verr("overshot the target genus"));
        }
    }
    Ok(out)
}
