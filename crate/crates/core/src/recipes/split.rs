//! Split-complete graphs: all vertices but two form a clique, and the other
//! two split the clique between their neighborhoods.

use std::collections::HashSet;

use super::{check_result, min_surface, verr, Built};
use crate::error::{Error, Result};
use crate::label::Label;
use crate::surface::Embedding;
use crate::surgery::ops::CornerRef;
use crate::surgery::script::{Recorder, Step};

/// The two special vertices of a split-complete graph, least pair first.
pub fn split_pair(emb: &Embedding) -> Result<(Label, Label)> {
    let sys = &emb.sys;
    let n = sys.vertex_count();
    for p in 0..n {
        for q in p + 1..n {
            if sys.has_edge(p, q) {
                continue;
            }
            let np: HashSet<usize> = sys.row(p).iter().copied().collect();
            let nq: HashSet<usize> = sys.row(q).iter().copied().collect();
            let rest: Vec<usize> = (0..n).filter(|&v| v != p && v != q).collect();
            let parts = np.is_disjoint(&nq) && np.len() + nq.len() == rest.len();
            let clique = rest.iter().all(|&u| rest.iter().all(|&v| u == v || sys.has_edge(u, v)));
            if parts && clique {
                return Ok((sys.label(p).clone(), sys.label(q).clone()));
            }
        }
    }
    Err(Error::Precondition("graph is not split-complete".into()))
}

fn triangles_at(emb: &Embedding, v: usize) -> Vec<CornerRef> {
    emb.faces
        .iter()
        .filter(|f| f.len() == 3)
        .filter_map(|f| f.corners_at(v).first().map(|&i| CornerRef { face: f.hash.clone(), index: i }))
        .collect()
}

/// Type (6) K_n from a triangular split-complete G_n: one handle carries the
/// edge between the two special vertices, and contracting it to `w` leaves
/// a 6-gon.
pub fn split_complete_type6(emb: &Embedding, w: &Label) -> Result<Built> {
    if !emb.is_triangular() || !emb.surface.orientable {
        return Err(Error::Precondition("input must be an orientable triangulation".into()));
    }
    let (p, q) = split_pair(emb)?;
    let n = emb.sys.vertex_count() - 1;
    let target = min_surface(n)?;
    let (pi, qi) = (emb.sys.require(&p)?, emb.sys.require(&q)?);
    for xc in triangles_at(emb, pi) {
        for yc in triangles_at(emb, qi) {
            let mut rec = Recorder::new(emb.clone());
            rec.step(Step::Handle { x: p.clone(), xc: xc.clone(), y: q.clone(), yc })?;
            rec.step(Step::Contract { u: p.clone(), v: q.clone(), w: w.clone() })?;
            if check_result(&rec.emb, &[6], target).is_ok() {
                return Ok(Built::from_recorder(emb.clone(), rec));
            }
        }
    }
    Err(verr("no handle placement leaves a 6-gon"))
}

/// K8 of type (4,4) from a triangular split-complete G9 whose special
/// vertices have degree 4: both are deleted.
pub fn k8_from_g9(emb: &Embedding) -> Result<Built> {
    let (p, q) = split_pair(emb)?;
    if emb.sys.vertex_count() != 10 {
        return Err(Error::Precondition("expected a split-complete graph on 10 vertices".into()));
    }
    let mut rec = Recorder::new(emb.clone());
    rec.step(Step::DelVertex { v: p })?;
    rec.step(Step::DelVertex { v: q })?;
    check_result(&rec.emb, &[4, 4], min_surface(8)?)?;
    Ok(Built::from_recorder(emb.clone(), rec))
}
