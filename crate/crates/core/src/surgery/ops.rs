//! Primitive surgeries. Every operation returns a freshly traced embedding
//! and checks its face-count postcondition.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::faces::{Corner, Face};
use crate::label::Label;
use crate::rotation::RotationSystem;
use crate::surface::Embedding;

/// A corner of a face: face hash plus index into its canonical corner cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CornerRef {
    pub face: String,
    pub index: usize,
}

/// Two corners of one face, used for chords.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Placement {
    pub face: String,
    pub i: usize,
    pub j: usize,
}

fn pre(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

fn post(emb: &Embedding, what: &str, faces: isize, edges: isize, next: &Embedding) -> Result<()> {
    let df = next.faces.len() as isize - emb.faces.len() as isize;
    let de = next.sys.edge_count() as isize - emb.sys.edge_count() as isize;
    if df != faces || de != edges {
        return Err(Error::Verification(format!(
            "{what}: expected face delta {faces} and edge delta {edges}, got {df} and {de}"
        )));
    }
    Ok(())
}

fn corner<'a>(emb: &'a Embedding, r: &CornerRef) -> Result<(&'a Face, Corner)> {
    let f = emb.face(&r.face)?;
    let c = *f.corners.get(r.index).ok_or_else(|| {
        Error::FaceNotFound(format!("{}@{} (face has {} corners)", r.face, r.index, f.len()))
    })?;
    Ok((f, c))
}

/// Inserts `new` into the rotation at `c.vertex` inside the angle `c`.
fn insert_in_corner(sys: &mut RotationSystem, c: Corner, new: usize) {
    let after = if c.orient > 0 { c.prev } else { c.next };
    sys.insert_after(c.vertex, Some(after), new);
}

fn join_corners(emb: &Embedding, a: Corner, b: Corner) -> Result<Embedding> {
    let mut sys = emb.sys.clone();
    insert_in_corner(&mut sys, a, b.vertex);
    insert_in_corner(&mut sys, b, a.vertex);
    sys.set_sign(a.vertex, b.vertex, a.orient * b.orient);
    Embedding::new(sys)
}

fn check_new_edge(emb: &Embedding, u: usize, v: usize) -> Result<()> {
    if u == v {
        return Err(pre(format!("edge ({0}, {0}) would be a loop", emb.sys.label(u))));
    }
    if emb.sys.has_edge(u, v) {
        return Err(Error::EdgePresent(emb.sys.label(u).clone(), emb.sys.label(v).clone()));
    }
    Ok(())
}

fn edge(emb: &Embedding, u: &Label, v: &Label) -> Result<(usize, usize)> {
    let (a, b) = (emb.sys.require(u)?, emb.sys.require(v)?);
    if !emb.sys.has_edge(a, b) {
        return Err(Error::EdgeAbsent(u.clone(), v.clone()));
    }
    Ok((a, b))
}

/// Adds the chord (u, v) across one face, at the corners named by `p`.
pub fn add_chord(emb: &Embedding, p: &Placement, u: &Label, v: &Label) -> Result<Embedding> {
    let (ui, vi) = (emb.sys.require(u)?, emb.sys.require(v)?);
    check_new_edge(emb, ui, vi)?;
    if p.i == p.j {
        return Err(pre("chord corners must be distinct"));
    }
    let (_, a) = corner(emb, &CornerRef { face: p.face.clone(), index: p.i })?;
    let (_, b) = corner(emb, &CornerRef { face: p.face.clone(), index: p.j })?;
    if a.vertex != ui || b.vertex != vi {
        return Err(pre(format!(
            "corners {}@{},{} are at {} and {}, not {u} and {v}",
            p.face,
            p.i,
            p.j,
            emb.sys.label(a.vertex),
            emb.sys.label(b.vertex)
        )));
    }
    let next = join_corners(emb, a, b)?;
    post(emb, "chord", 1, 1, &next)?;
    Ok(next)
}

/// Result of an edge deletion.
#[derive(Clone, Debug)]
pub struct Deletion {
    pub embedding: Embedding,
    /// Both sides of the edge lay on one face, which therefore split.
    pub split_face: bool,
}

pub fn delete_edge(emb: &Embedding, u: &Label, v: &Label) -> Result<Deletion> {
    let (a, b) = edge(emb, u, v)?;
    let on = emb.faces_with_edge(a, b);
    let split_face = on.len() == 1;
    let mut sys = emb.sys.clone();
    sys.remove_edge_raw(a, b);
    let next = Embedding::new(sys)?;
    if split_face {
        post(emb, "delete", 1, -1, &next)?;
    } else {
        post(emb, "delete", -1, -1, &next)?;
    }
    Ok(Deletion { embedding: next, split_face })
}

/// Moves edge (u, v) into the face of `p` as a chord.
pub fn chord_exchange(emb: &Embedding, u: &Label, v: &Label, p: &Placement) -> Result<Embedding> {
    let (a, b) = edge(emb, u, v)?;
    let on = emb.faces_with_edge(a, b);
    if on.len() != 2 {
        return Err(pre(format!("both sides of ({u}, {v}) lie on one face")));
    }
    if on.iter().any(|&f| emb.faces[f].hash == p.face) {
        return Err(pre(format!("({u}, {v}) lies on the target face {}", p.face)));
    }
    let d = delete_edge(emb, u, v)?;
    let next = add_chord(&d.embedding, p, u, v)?;
    post(emb, "exchange", 0, 0, &next)?;
    Ok(next)
}

/// Edge flip `-(a,b)+(c,d)`: the two faces on (a, b) must be triangles with
/// apexes c and d.
pub fn edge_flip(emb: &Embedding, a: &Label, b: &Label, c: &Label, d: &Label) -> Result<Embedding> {
    let (ai, bi) = edge(emb, a, b)?;
    let (ci, di) = (emb.sys.require(c)?, emb.sys.require(d)?);
    check_new_edge(emb, ci, di)?;
    let on = emb.faces_with_edge(ai, bi);
    let mut apexes = HashSet::new();
    for &f in &on {
        let face = &emb.faces[f];
        if face.len() != 3 {
            return Err(pre(format!("face {} on ({a}, {b}) is not a triangle", face.display(&emb.sys))));
        }
        apexes.extend(face.vertices().into_iter().filter(|&x| x != ai && x != bi));
    }
    if on.len() != 2 || apexes != HashSet::from([ci, di]) {
        return Err(pre(format!("({a}, {b}) is not the diagonal between {c} and {d}")));
    }
    let old: HashSet<&str> = emb.faces.iter().map(|f| f.hash.as_str()).collect();
    let mid = delete_edge(emb, a, b)?.embedding;
    let quad = mid
        .faces
        .iter()
        .find(|f| !old.contains(f.hash.as_str()))
        .expect("deletion creates a face");
    let p = Placement {
        face: quad.hash.clone(),
        i: quad.corners_at(ci)[0],
        j: quad.corners_at(di)[0],
    };
    let next = add_chord(&mid, &p, c, d)?;
    post(emb, "flip", 0, 0, &next)?;
    Ok(next)
}

/// Adds edge (x, y) between corners of two distinct faces, adding a handle
/// (or a crosscap, when the corner orientations disagree).
pub fn add_edge_via_handle(emb: &Embedding, x: &CornerRef, y: &CornerRef) -> Result<Embedding> {
    if x.face == y.face {
        return Err(pre("handle corners must lie on distinct faces"));
    }
    let (_, a) = corner(emb, x)?;
    let (_, b) = corner(emb, y)?;
    check_new_edge(emb, a.vertex, b.vertex)?;
    let next = join_corners(emb, a, b)?;
    post(emb, "handle", -1, 1, &next)?;
    Ok(next)
}

/// Joins three neighbors x, y, z of v with one handle: with the rotation at
/// v reading `x A y B z C`, the edges to x, y, z are deleted and the
/// rotation becomes `A C B`.
pub fn construction_k3(emb: &Embedding, v: &Label, x: &Label, y: &Label, z: &Label) -> Result<Embedding> {
    let vi = emb.sys.require(v)?;
    let ids = [emb.sys.require(x)?, emb.sys.require(y)?, emb.sys.require(z)?];
    for (i, l) in ids.iter().zip([x, y, z]) {
        if !emb.sys.has_edge(vi, *i) {
            return Err(Error::EdgeAbsent(v.clone(), l.clone()));
        }
        if emb.sys.sign(vi, *i) < 0 {
            return Err(pre(format!("edge ({v}, {l}) is negatively signed")));
        }
    }
    let mut row = emb.sys.row(vi).to_vec();
    let p = row.iter().position(|&w| w == ids[0]).expect("neighbor");
    row.rotate_left(p);
    let py = row.iter().position(|&w| w == ids[1]).expect("neighbor");
    let pz = row.iter().position(|&w| w == ids[2]).expect("neighbor");
    if py > pz {
        return Err(pre(format!("rotation at {v} meets {x}, {z}, {y} in that order")));
    }
    let seg_a = row[1..py].to_vec();
    let seg_b = row[py + 1..pz].to_vec();
    let seg_c = row[pz + 1..].to_vec();
    if seg_a.is_empty() || seg_b.is_empty() || seg_c.is_empty() {
        return Err(pre(format!("rotation at {v} has adjacent entries among {x}, {y}, {z}")));
    }
    let mut sys = emb.sys.clone();
    for &i in &ids {
        sys.remove_edge_raw(vi, i);
    }
    sys.set_row(vi, [seg_a, seg_c, seg_b].concat());
    let next = Embedding::new(sys)?;
    post(emb, "k3", -5, -3, &next)?;
    Ok(next)
}

/// Contracts edge (u, v) to a single vertex named `w`.
pub fn contract_edge(emb: &Embedding, u: &Label, v: &Label, w: &Label) -> Result<Embedding> {
    let (ui, vi) = edge(emb, u, v)?;
    let sys = &emb.sys;
    let nu: HashSet<usize> = sys.row(ui).iter().copied().collect();
    if let Some(&c) = sys.row(vi).iter().find(|c| nu.contains(c)) {
        return Err(pre(format!("{u} and {v} share neighbor {}; contraction makes parallel edges", sys.label(c))));
    }
    if w != u && w != v && sys.index_of(w).is_some() {
        return Err(Error::InvalidSystem(format!("vertex {w} already present")));
    }
    let flip_v = sys.sign(ui, vi) < 0;
    let after = |x: usize, y: usize, rev: bool| -> Vec<usize> {
        let mut r = sys.row(x).to_vec();
        if rev {
            r.reverse();
        }
        let p = r.iter().position(|&t| t == y).expect("neighbor");
        r.rotate_left(p + 1);
        r.pop();
        r
    };
    let merged: Vec<usize> = [after(ui, vi, false), after(vi, ui, flip_v)].concat();
    let name = |i: usize| -> Label {
        if i == ui || i == vi {
            w.clone()
        } else {
            sys.label(i).clone()
        }
    };
    let mut rows = Vec::new();
    for x in 0..sys.vertex_count() {
        if x == ui || x == vi {
            continue;
        }
        rows.push((sys.label(x).clone(), sys.row(x).iter().map(|&t| name(t)).collect()));
    }
    rows.push((w.clone(), merged.iter().map(|&t| sys.label(t).clone()).collect()));
    let mut neg = Vec::new();
    for (a, b) in sys.edges() {
        if (a, b) == (ui.min(vi), ui.max(vi)) {
            continue;
        }
        let mut s = sys.sign(a, b);
        if flip_v && (a == vi || b == vi) {
            s = -s;
        }
        if s < 0 {
            neg.push((name(a), name(b)));
        }
    }
    let next = Embedding::new(RotationSystem::from_rows(rows, neg)?)?;
    post(emb, "contract", 0, -1, &next)?;
    Ok(next)
}

/// Places a new vertex `w` inside a simple face, joined to every corner.
pub fn subdivide_face(emb: &Embedding, face: &str, w: &Label) -> Result<Embedding> {
    let f = emb.face(face)?;
    if !crate::distribution::is_simple_face(f) {
        return Err(pre(format!("face {} repeats a vertex", f.display(&emb.sys))));
    }
    let corners: Vec<(Label, Label, Label, i8)> = f
        .corners
        .iter()
        .map(|c| {
            (
                emb.sys.label(c.vertex).clone(),
                emb.sys.label(c.prev).clone(),
                emb.sys.label(c.next).clone(),
                c.orient,
            )
        })
        .collect();
    let mut sys = emb.sys.with_vertex(w.clone())?;
    let wi = sys.require(w)?;
    for (v, p, n, o) in &corners {
        let c = Corner { vertex: sys.require(v)?, prev: sys.require(p)?, next: sys.require(n)?, orient: *o };
        insert_in_corner(&mut sys, c, wi);
        sys.set_sign(c.vertex, wi, *o);
    }
    let mut row: Vec<usize> =
        corners.iter().map(|(v, _, _, _)| sys.require(v)).collect::<Result<_>>()?;
    row.reverse();
    sys.set_row(wi, row);
    let k = corners.len() as isize;
    let next = Embedding::new(sys)?;
    post(emb, "subdivide", k - 1, k, &next)?;
    Ok(next)
}

pub fn delete_vertex(emb: &Embedding, v: &Label) -> Result<Embedding> {
    let vi = emb.sys.require(v)?;
    let d = emb.sys.degree(vi) as isize;
    let next = Embedding::new(emb.sys.without_vertex(v)?)?;
    post(emb, "delvtx", 1 - d, -d, &next)?;
    Ok(next)
}

/// Toggles the signature of (u, v), merging its two faces through a crosscap.
pub fn add_crosscap_on_edge(emb: &Embedding, u: &Label, v: &Label) -> Result<Embedding> {
    let (a, b) = edge(emb, u, v)?;
    if emb.faces_with_edge(a, b).len() != 2 {
        return Err(pre(format!("both sides of ({u}, {v}) lie on one face")));
    }
    let mut sys = emb.sys.clone();
    sys.set_sign(a, b, -sys.sign(a, b));
    let next = Embedding::new(sys)?;
    post(emb, "crosscap", -1, 0, &next)?;
    Ok(next)
}

/// Passes a contiguous segment of the rotation at `v`, from neighbor `a`
/// through neighbor `b`, through a crosscap: the segment is reversed and the
/// signatures of its edges toggled.
pub fn twist_segment(emb: &Embedding, v: &Label, a: &Label, b: &Label) -> Result<Embedding> {
    let vi = emb.sys.require(v)?;
    let (ai, bi) = (edge(emb, v, a)?.1, edge(emb, v, b)?.1);
    let mut row = emb.sys.row(vi).to_vec();
    let p = row.iter().position(|&t| t == ai).expect("neighbor");
    row.rotate_left(p);
    let q = row.iter().position(|&t| t == bi).expect("neighbor");
    if q + 1 == row.len() {
        return Err(pre(format!("segment {a}..{b} covers the whole rotation at {v}")));
    }
    row[..=q].reverse();
    let mut sys = emb.sys.clone();
    for &t in &row[..=q] {
        sys.set_sign(vi, t, -sys.sign(vi, t));
    }
    sys.set_row(vi, row);
    Embedding::new(sys)
}
