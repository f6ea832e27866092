//! Maximum genus embeddings of K_n with one or two faces.
//!
//! The spanning tree is the star at vertex 1 with rotation `2 3 ... n`. The
//! remaining edges are split into pairs sharing a vertex; each pair goes in
//! as a chord of the single face followed by a handle edge joining the two
//! halves, which keeps one face and never touches the rotation at 1.

use std::collections::BTreeSet;

use super::{verr, Built};
use crate::error::{Error, Result};
use crate::label::Label;
use crate::rotation::RotationSystem;
use crate::surface::Embedding;
use crate::surgery::ops::CornerRef;
use crate::surgery::placement::chord_placements;
use crate::surgery::script::{Recorder, Step};

type Edge = (u32, u32);

/// Splits the edges of a connected graph with an even edge count into pairs
/// sharing a vertex: in DFS post-order, each vertex pairs its unpaired
/// edges, borrowing the edge to its parent when the count is odd.
pub fn adjacent_pairing(vertices: &[u32], edges: &[Edge]) -> Result<Vec<(Edge, Edge)>> {
    let norm = |(a, b): Edge| (a.min(b), a.max(b));
    let mut unpaired: BTreeSet<Edge> = edges.iter().map(|&e| norm(e)).collect();
    if unpaired.len() % 2 == 1 {
        return Err(Error::Precondition("odd number of edges".into()));
    }
    let Some(&root) = vertices.first() else { return Ok(Vec::new()) };
    let nbrs = |v: u32| -> Vec<u32> {
        let mut out: Vec<u32> = edges.iter().filter_map(|&(a, b)| (a == v).then_some(b).or((b == v).then_some(a))).collect();
        out.sort_unstable();
        out
    };
    let mut parent = std::collections::BTreeMap::from([(root, None)]);
    let mut order = Vec::new();
    let mut stack = vec![(root, nbrs(root), 0usize)];
    while let Some((v, ns, i)) = stack.last_mut() {
        if let Some(&u) = ns.get(*i) {
            *i += 1;
            if let std::collections::btree_map::Entry::Vacant(e) = parent.entry(u) {
                e.insert(Some(*v));
                let next = nbrs(u);
                stack.push((u, next, 0));
            }
        } else {
            order.push(*v);
            stack.pop();
        }
    }
    if order.len() != vertices.len() {
        return Err(Error::Precondition("graph is disconnected".into()));
    }
    let mut pairs = Vec::new();
    for v in order {
        let up = parent[&v].map(|p| norm((v, p)));
        let mut mine: Vec<Edge> = unpaired.iter().copied().filter(|&(a, b)| (a == v || b == v) && Some((a, b)) != up).collect();
        if mine.len() % 2 == 1 {
            mine.push(up.ok_or_else(|| verr("pairing left an edge at the root"))?);
        }
        for pair in mine.chunks(2) {
            unpaired.remove(&pair[0]);
            unpaired.remove(&pair[1]);
            pairs.push((pair[0], pair[1]));
        }
    }
    Ok(pairs)
}

fn corner_on(emb: &Embedding, v: usize, avoid: Option<&str>) -> Option<CornerRef> {
    emb.faces.iter().filter(|f| Some(f.hash.as_str()) != avoid).find_map(|f| {
        f.corners_at(v).first().map(|&index| CornerRef { face: f.hash.clone(), index })
    })
}

/// Adds two edges sharing a vertex to a one-face embedding: the first as a
/// chord, the second across the two faces that chord leaves.
fn add_pair(rec: &mut Recorder, (a, b): Edge, (c, d): Edge) -> Result<()> {
    let shared = [a, b].into_iter().find(|&v| v == c || v == d).ok_or_else(|| verr("pair shares no vertex"))?;
    let far = |(p, q): Edge| if p == shared { q } else { p };
    let (s, u, w) = (Label::Num(shared), Label::Num(far((a, b))), Label::Num(far((c, d))));
    let at = chord_placements(&rec.emb, &s, &u).into_iter().next().ok_or_else(|| verr("no chord placement"))?;
    rec.step(Step::Chord { u: s.clone(), v: u, at })?;
    let (si, wi) = (rec.emb.sys.require(&s)?, rec.emb.sys.require(&w)?);
    // the shared vertex ends the chord, so it lies on both faces
    let yc = corner_on(&rec.emb, wi, None).ok_or_else(|| verr("vertex has no corner"))?;
    let xc = corner_on(&rec.emb, si, Some(&yc.face)).ok_or_else(|| verr("both ends on one face"))?;
    rec.step(Step::Handle { x: s, xc, y: w, yc })?;
    if rec.emb.faces.len() != 1 {
        return Err(verr("pair insertion did not keep a single face"));
    }
    Ok(())
}

/// One face for n = 1, 2 (mod 4); otherwise two faces, one the triangle
/// [2, 1, 3].
pub fn xuong_max_genus(n: u32) -> Result<Built> {
    if n < 4 {
        return Err(Error::Domain(format!("n = {n}; need n >= 4")));
    }
    let two_faces = n.is_multiple_of(4) || n % 4 == 3;
    let mut rows = vec![(Label::Num(1), (2..=n).map(Label::Num).collect::<Vec<_>>())];
    rows.extend((2..=n).map(|v| (Label::Num(v), vec![Label::Num(1)])));
    let star = Embedding::new(RotationSystem::from_rows_orientable(rows)?)?;
    let mut cotree: Vec<Edge> = Vec::new();
    for a in 2..=n {
        for b in a + 1..=n {
            if !(two_faces && (a, b) == (2, 3)) {
                cotree.push((a, b));
            }
        }
    }
    let vertices: Vec<u32> = (2..=n).collect();
    let mut rec = Recorder::new(star.clone());
    for (e1, e2) in adjacent_pairing(&vertices, &cotree)? {
        add_pair(&mut rec, e1, e2)?;
    }
    if two_faces {
        let (two, three) = (Label::Num(2), Label::Num(3));
        let mut at = None;
        for p in chord_placements(&rec.emb, &two, &three) {
            let next = crate::surgery::ops::add_chord(&rec.emb, &p, &two, &three)?;
            let tri = |f: &crate::faces::Face| {
                let mut l = f.labels(&next.sys);
                l.sort();
                l == [Label::Num(1), Label::Num(2), Label::Num(3)]
            };
            if next.faces.iter().any(tri) {
                at = Some(p);
                break;
            }
        }
        let at = at.ok_or_else(|| verr("no placement of (2, 3) closes the triangle [2, 1, 3]"))?;
        rec.step(Step::Chord { u: two, v: three, at })?;
    }
    let want = if two_faces { 2 } else { 1 };
    if rec.emb.faces.len() != want || !rec.emb.sys.is_complete() {
        return Err(verr(format!("ended with {} faces", rec.emb.faces.len())));
    }
    Ok(Built::from_recorder(star, rec))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_share_a_vertex() {
        let edges = [(1, 2), (2, 3), (3, 1), (3, 4)];
        let pairs = adjacent_pairing(&[1, 2, 3, 4], &edges).unwrap();
        assert_eq!(pairs.len(), 2);
        for ((a, b), (c, d)) in pairs {
            assert!(a == c || a == d || b == c || b == d);
        }
    }
}
