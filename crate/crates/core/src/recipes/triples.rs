//! Joining the three vertices of a missing triangle with one handle.

use super::{check_result, min_surface, run, verr, Built};
use crate::distribution::format_type;
use crate::error::{Error, Result};
use crate::label::Label;
use crate::surface::Embedding;
use crate::surgery::placement::Move;
use crate::surgery::script::{Recorder, Step};

/// `x, y, z` reordered as they appear in the rotation at `v`, starting at x.
pub fn rotation_order(emb: &Embedding, v: &Label, xyz: [&Label; 3]) -> Result<[Label; 3]> {
    let row = emb.sys.row_from(v, xyz[0])?;
    let mut found: Vec<Label> = row.into_iter().filter(|l| xyz.contains(&l)).collect();
    if found.len() != 3 {
        return Err(Error::Precondition(format!("{v} is not adjacent to all of {}, {}, {}", xyz[0], xyz[1], xyz[2])));
    }
    let z = found.pop().expect("three");
    let y = found.pop().expect("three");
    let x = found.pop().expect("three");
    Ok([x, y, z])
}

fn missing_triangle(emb: &Embedding) -> Result<[Label; 3]> {
    let miss = emb.sys.complement_edges();
    let mut vs: Vec<Label> = miss.iter().flat_map(|(u, v)| [u.clone(), v.clone()]).collect();
    vs.sort();
    vs.dedup();
    if miss.len() != 3 || vs.len() != 3 {
        return Err(Error::Precondition("missing edges do not form a triangle".into()));
    }
    Ok([vs[0].clone(), vs[1].clone(), vs[2].clone()])
}

/// Minimum genus K_n from a triangular K_n - K3: the construction at `v`
/// opens a 12-gon, the chords (x,y), (y,z), (x,z) leave three 5-gons and the
/// deleted edges at `v` go back so that the final type is `target`, one of
/// (5,4) and (4,4,4).
pub fn k3_min_genus(emb: &Embedding, v: &Label, target: &[usize]) -> Result<Built> {
    if target != [5, 4] && target != [4, 4, 4] {
        return Err(Error::Domain(format!("type {} is not reachable here", format_type(target))));
    }
    if !emb.is_triangular() || !emb.surface.orientable {
        return Err(Error::Precondition("input must be an orientable triangulation".into()));
    }
    let t = missing_triangle(emb)?;
    let [x, y, z] = rotation_order(emb, v, [&t[0], &t[1], &t[2]])?;
    let surface = min_surface(emb.sys.vertex_count())?;
    let mut rec = Recorder::new(emb.clone());
    rec.step(Step::K3 { v: v.clone(), x: x.clone(), y: y.clone(), z: z.clone() })?;
    let chords = [Move::Add(x.clone(), y.clone()), Move::Add(y.clone(), z.clone()), Move::Add(x.clone(), z.clone())];
    run(&mut rec, &chords, "k3 chords", |e| e.embedding_type() == [5, 5, 5])?;
    let back = [Move::Add(v.clone(), x), Move::Add(v.clone(), y), Move::Add(v.clone(), z)];
    run(&mut rec, &back, "k3 re-insertion", |e| e.embedding_type() == target)?;
    check_result(&rec.emb, target, surface)?;
    Ok(Built::from_recorder(emb.clone(), rec))
}

/// Whether the three 5-gons appear after the chords, before the deleted
/// edges go back. Used by tests and reports.
pub fn k3_five_gons(emb: &Embedding, v: &Label) -> Result<Vec<Vec<Label>>> {
    let t = missing_triangle(emb)?;
    let [x, y, z] = rotation_order(emb, v, [&t[0], &t[1], &t[2]])?;
    let mut rec = Recorder::new(emb.clone());
    rec.step(Step::K3 { v: v.clone(), x: x.clone(), y: y.clone(), z: z.clone() })?;
    let chords = [Move::Add(x.clone(), y.clone()), Move::Add(y.clone(), z.clone()), Move::Add(x, z)];
    run(&mut rec, &chords, "k3 chords", |e| e.embedding_type() == [5, 5, 5])?;
    let out: Vec<Vec<Label>> =
        rec.emb.faces.iter().filter(|f| f.len() == 5).map(|f| f.labels(&rec.emb.sys)).collect();
    if out.len() != 3 {
        return Err(verr("expected three 5-gons"));
    }
    Ok(out)
}
