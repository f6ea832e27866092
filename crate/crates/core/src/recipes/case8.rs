//! K_{12s+8} of type (5) from a triangulation of the graph on
//! 0..12s+5, x, y_0, y_1 where the numbered vertices form a clique, x sees
//! all of them, and y_0, y_1 see the even and odd ones.

use super::triples::rotation_order;
use super::{check_result, min_surface, run, Built};
use crate::error::{Error, Result};
use crate::label::Label;
use crate::surface::Embedding;
use crate::surgery::placement::Move;
use crate::surgery::script::{Recorder, Step};

fn n(k: i64) -> Label {
    Label::Num(k as u32)
}

/// Checks the adjacency structure of the input for parameter `s`.
pub fn check_structure(emb: &Embedding, s: u32) -> Result<()> {
    let m = 12 * s + 6;
    let sys = &emb.sys;
    let (x, y0, y1) = (Label::tag("x"), Label::tag("y_0"), Label::tag("y_1"));
    let pre = |m: String| Err(Error::Precondition(m));
    if sys.vertex_count() != m as usize + 3 {
        return pre(format!("expected {} vertices, found {}", m + 3, sys.vertex_count()));
    }
    for k in 0..m {
        let kl = Label::Num(k);
        sys.require(&kl)?;
        if !sys.has_edge_labels(&kl, &x) {
            return pre(format!("x is not adjacent to {k}"));
        }
        let (yes, no) = if k % 2 == 0 { (&y0, &y1) } else { (&y1, &y0) };
        if !sys.has_edge_labels(&kl, yes) || sys.has_edge_labels(&kl, no) {
            return pre(format!("{k} is not adjacent to exactly {yes} of the y vertices"));
        }
    }
    let expected = (m * (m - 1) / 2 + 2 * m) as usize;
    if sys.edge_count() != expected {
        return pre(format!("expected {expected} edges, found {}", sys.edge_count()));
    }
    Ok(())
}

/// The flips `-(6s-1,x) ±(6s,6s-2) ±(0,6s+4) +(y_0,12s+1)`, in the order
/// they are applied.
pub fn flip_sequence(s: u32) -> Vec<Step> {
    let s = s as i64;
    let (x, y0) = (Label::tag("x"), Label::tag("y_0"));
    vec![
        Step::Flip { a: n(0), b: n(6 * s + 4), c: y0, d: n(12 * s + 1) },
        Step::Flip { a: n(6 * s), b: n(6 * s - 2), c: n(0), d: n(6 * s + 4) },
        Step::Flip { a: n(6 * s - 1), b: x, c: n(6 * s), d: n(6 * s - 2) },
    ]
}

/// The 12-gon opened at 12s+1, in the order it is printed.
pub fn expected_12gon(s: u32) -> Vec<Label> {
    let s = s as i64;
    let (x, y0, y1) = (Label::tag("x"), Label::tag("y_0"), Label::tag("y_1"));
    let v = n(12 * s + 1);
    vec![
        y0,
        n(6 * s + 4),
        v.clone(),
        n(6 * s - 3),
        y1,
        n(6 * s - 1),
        v.clone(),
        n(12 * s + 2),
        x,
        n(12 * s),
        v,
        n(0),
    ]
}

/// Whether `face` is `want` read cyclically in either direction.
pub fn cyclic_match(face: &[Label], want: &[Label]) -> bool {
    let k = face.len();
    if k != want.len() {
        return false;
    }
    let mut rev = want.to_vec();
    rev.reverse();
    (0..k).any(|r| (0..k).all(|i| face[(i + r) % k] == want[i]) || (0..k).all(|i| face[(i + r) % k] == rev[i]))
}

/// Runs the construction up to the open 12-gon.
pub fn open_12gon(emb: &Embedding, s: u32) -> Result<Recorder> {
    check_structure(emb, s)?;
    let mut rec = Recorder::new(emb.clone());
    for f in flip_sequence(s) {
        rec.step(f)?;
    }
    let v = Label::Num(12 * s + 1);
    let (x, y0, y1) = (Label::tag("x"), Label::tag("y_0"), Label::tag("y_1"));
    let [a, b, c] = rotation_order(&rec.emb, &v, [&y0, &y1, &x])?;
    rec.step(Step::K3 { v, x: a, y: b, z: c })?;
    Ok(rec)
}

/// Type (5) K_{12s+8}, s >= 1. For s = 0 no such embedding exists.
pub fn case8(emb: &Embedding, s: u32) -> Result<Built> {
    if s == 0 {
        return Err(Error::Refusal(
            "K8 does not have a nearly triangular minimum genus embedding; all its minimum genus embeddings are of type (4,4)"
                .into(),
        ));
    }
    let mut rec = open_12gon(emb, s)?;
    let want = expected_12gon(s);
    if !rec.emb.faces.iter().any(|f| cyclic_match(&f.labels(&rec.emb.sys), &want)) {
        return Err(Error::Verification("the 12-gon at 12s+1 does not match".into()));
    }
    let (x, y0, y1, y) = (Label::tag("x"), Label::tag("y_0"), Label::tag("y_1"), Label::tag("y"));
    run(&mut rec, &[Move::Add(y0.clone(), y1.clone())], "(y_0, y_1)", |_| true)?;
    rec.step(Step::Contract { u: y0, v: y1, w: y.clone() })?;
    if rec.emb.embedding_type() != [8, 4] {
        return Err(Error::Verification("contraction should leave an 8-gon and a 4-gon".into()));
    }
    let v = Label::Num(12 * s + 1);
    let moves = [
        Move::Add(x.clone(), y.clone()),
        Move::Add(y, v.clone()),
        Move::Add(x.clone(), v),
        Move::Add(x, Label::Num(6 * s - 1)),
    ];
    run(&mut rec, &moves, "case 8 chords", |e| e.embedding_type() == [5])?;
    check_result(&rec.emb, &[5], min_surface(12 * s as usize + 8)?)?;
    Ok(Built::from_recorder(emb.clone(), rec))
}
