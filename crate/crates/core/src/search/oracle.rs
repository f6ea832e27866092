//! A second face tracer, written against flags instead of walk states.
//!
//! A flag `(v, i, side)` is the end of the edge to the i-th neighbor of `v`
//! together with one of its two sides: side 0 is the angle towards the next
//! neighbor in the rotation, side 1 the angle towards the previous one.
//! `a1` stays at `v` and crosses the angle; `a0` crosses to the other end of
//! the edge, switching sides unless the edge is twisted. Faces are the
//! orbits of the group generated by `a0` and `a1`.

use std::collections::BTreeMap;

use crate::label::Label;
use crate::rotation::RotationSystem;

/// Faces as canonical label cycles, least over rotations and reversal,
/// with multiplicities.
pub type FaceSet = BTreeMap<Vec<Label>, usize>;

fn canonical(cycle: &[Label]) -> Vec<Label> {
    let k = cycle.len();
    let mut best: Option<Vec<Label>> = None;
    let mut rev = cycle.to_vec();
    rev.reverse();
    for seq in [cycle, &rev[..]] {
        for r in 0..k {
            let cand: Vec<Label> = (0..k).map(|i| seq[(r + i) % k].clone()).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// Canonical form of an arbitrary list of faces given as label cycles.
pub fn face_set<I: IntoIterator<Item = Vec<Label>>>(faces: I) -> FaceSet {
    let mut out = FaceSet::new();
    for f in faces {
        *out.entry(canonical(&f)).or_default() += 1;
    }
    out
}

/// Traces the faces of `rs` through flag orbits.
pub fn oracle_trace(rs: &RotationSystem) -> FaceSet {
    let n = rs.vertex_count();
    let rows: Vec<Vec<usize>> = (0..n).map(|v| rs.row(v).to_vec()).collect();
    let pos = |v: usize, u: usize| rows[v].iter().position(|&w| w == u).expect("edge end");
    // flag id: offset[v] + 2*i + side
    let mut offset = vec![0usize; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + 2 * rows[v].len();
    }
    let a1 = |v: usize, i: usize, side: usize| -> (usize, usize, usize) {
        let d = rows[v].len();
        if side == 0 {
            (v, (i + 1) % d, 1)
        } else {
            (v, (i + d - 1) % d, 0)
        }
    };
    let a0 = |v: usize, i: usize, side: usize| -> (usize, usize, usize) {
        let u = rows[v][i];
        let j = pos(u, v);
        let twisted = rs.sign(v, u) < 0;
        (u, j, if twisted { side } else { 1 - side })
    };
    let id = |(v, i, s): (usize, usize, usize)| offset[v] + 2 * i + s;
    let mut seen = vec![false; offset[n]];
    let mut cycles = Vec::new();
    for v in 0..n {
        for i in 0..rows[v].len() {
            for s in 0..2 {
                let start = (v, i, s);
                if seen[id(start)] {
                    continue;
                }
                let mut cycle = Vec::new();
                let mut f = start;
                loop {
                    seen[id(f)] = true;
                    cycle.push(rs.label(f.0).clone());
                    let g = a0(f.0, f.1, f.2);
                    seen[id(g)] = true;
                    f = a1(g.0, g.1, g.2);
                    if f == start {
                        break;
                    }
                }
                cycles.push(cycle);
            }
        }
    }
    face_set(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_two_triangles() {
        let l = |s: &str| -> Label { s.parse().unwrap() };
        let rs = RotationSystem::from_rows_orientable(vec![
            (l("1"), vec![l("2"), l("3")]),
            (l("2"), vec![l("3"), l("1")]),
            (l("3"), vec![l("1"), l("2")]),
        ])
        .unwrap();
        let f = oracle_trace(&rs);
        assert_eq!(f.values().sum::<usize>(), 2);
        assert!(f.keys().all(|c| c.len() == 3));
    }
}
