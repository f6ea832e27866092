//! Face tracing for signed rotation systems.
//!
//! A walk state `(v, u, o)` means the edge `v -> u` is being traversed with
//! local orientation `o`. On arrival the orientation becomes
//! `o' = o * sign(v, u)` and the walk leaves `u` towards `succ_u(v)` when
//! `o' = +1` and towards `pred_u(v)` otherwise. For all-positive systems this
//! is the usual rule that traces `[1,2,3]` and `[1,3,2]` for the planar K3.
//!
//! Start states are scanned with `o = +1` first, vertices in label order and
//! neighbors in label order, then the same with `o = -1`. A state and its
//! reverse `(u, v, -o * sign(v, u))` describe the same edge side, so both are
//! consumed by one traversal.

use std::collections::BTreeMap;
use std::collections::HashSet;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::label::Label;
use crate::rotation::RotationSystem;

/// One angle of a face: the walk arrives at `vertex` from `prev` and leaves
/// towards `next`. With `orient = +1`, `next` is the successor of `prev` in
/// the rotation at `vertex`; with `-1` it is the predecessor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Corner {
    pub vertex: usize,
    pub prev: usize,
    pub next: usize,
    pub orient: i8,
}

/// A traced face, stored with its corners rotated into canonical position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    pub corners: Vec<Corner>,
    pub hash: String,
}

impl Face {
    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    /// Vertex cycle as indices.
    pub fn vertices(&self) -> Vec<usize> {
        self.corners.iter().map(|c| c.vertex).collect()
    }

    pub fn labels(&self, sys: &RotationSystem) -> Vec<Label> {
        self.corners.iter().map(|c| sys.label(c.vertex).clone()).collect()
    }

    /// Number of boundary steps along the edge (u, v), in either direction.
    pub fn edge_multiplicity(&self, u: usize, v: usize) -> usize {
        self.corners
            .iter()
            .filter(|c| (c.vertex == u && c.next == v) || (c.vertex == v && c.next == u))
            .count()
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edge_multiplicity(u, v) > 0
    }

    pub fn vertex_multiplicity(&self, v: usize) -> usize {
        self.corners.iter().filter(|c| c.vertex == v).count()
    }

    /// Positions of corners at vertex `v`.
    pub fn corners_at(&self, v: usize) -> Vec<usize> {
        (0..self.corners.len()).filter(|&i| self.corners[i].vertex == v).collect()
    }

    /// Human readable `[a, b, c]` form.
    pub fn display(&self, sys: &RotationSystem) -> String {
        let parts: Vec<String> = self.labels(sys).iter().map(|l| l.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// Canonical rotation offset of a cyclic label sequence: the start giving
/// the lexicographically least sequence.
fn least_rotation(seq: &[Label]) -> usize {
    let n = seq.len();
    let mut best = 0;
    for s in 1..n {
        for k in 0..n {
            let a = &seq[(s + k) % n];
            let b = &seq[(best + k) % n];
            if a != b {
                if a < b {
                    best = s;
                }
                break;
            }
        }
    }
    best
}

/// Hash of a canonical label sequence: first 8 bytes of SHA-256, as hex.
pub fn face_hash(labels: &[Label]) -> String {
    let text: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
    let digest = Sha256::digest(text.join(" ").as_bytes());
    hex::encode(&digest[..8])
}

fn canonical_face(sys: &RotationSystem, mut corners: Vec<Corner>) -> Face {
    let labels: Vec<Label> = corners.iter().map(|c| sys.label(c.vertex).clone()).collect();
    let off = least_rotation(&labels);
    corners.rotate_left(off);
    let mut lab = labels;
    lab.rotate_left(off);
    Face { hash: face_hash(&lab), corners }
}

/// Traces every face of a connected signed rotation system.
pub fn trace_faces(sys: &RotationSystem) -> Result<Vec<Face>> {
    if !sys.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = sys.vertex_count();
    let mut used: HashSet<(usize, usize, i8)> = HashSet::with_capacity(4 * sys.edge_count());
    let mut faces = Vec::new();
    for o0 in [1i8, -1] {
        for v in 0..n {
            let mut nbrs = sys.row(v).to_vec();
            nbrs.sort_unstable();
            for u0 in nbrs {
                if used.contains(&(v, u0, o0)) {
                    continue;
                }
                let mut corners = Vec::new();
                let (mut a, mut b, mut o) = (v, u0, o0);
                loop {
                    used.insert((a, b, o));
                    used.insert((b, a, -o * sys.sign(a, b)));
                    let o2 = o * sys.sign(a, b);
                    let c = if o2 > 0 { sys.succ(b, a) } else { sys.pred(b, a) };
                    corners.push(Corner { vertex: b, prev: a, next: c, orient: o2 });
                    a = b;
                    b = c;
                    o = o2;
                    if (a, b, o) == (v, u0, o0) {
                        break;
                    }
                }
                // the corner at the start vertex was produced last
                corners.rotate_right(1);
                faces.push(canonical_face(sys, corners));
            }
        }
    }
    Ok(faces)
}

/// Face length counts `f_i`.
pub fn face_distribution(faces: &[Face]) -> BTreeMap<usize, usize> {
    let mut m = BTreeMap::new();
    for f in faces {
        *m.entry(f.len()).or_insert(0) += 1;
    }
    m
}

/// Nontriangular face lengths sorted nonincreasing.
pub fn embedding_type(faces: &[Face]) -> Vec<usize> {
    let mut t: Vec<usize> = faces.iter().map(Face::len).filter(|&l| l > 3).collect();
    t.sort_unstable_by(|a, b| b.cmp(a));
    t
}

/// Finds a face by hash.
pub fn find_face<'a>(faces: &'a [Face], hash: &str) -> Result<&'a Face> {
    faces
        .iter()
        .find(|f| f.hash == hash)
        .ok_or_else(|| Error::FaceNotFound(hash.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Label {
        Label::from(s)
    }

    #[test]
    fn k3_sphere() {
        let s = RotationSystem::from_rows_orientable(vec![
            (l("1"), vec![l("2"), l("3")]),
            (l("2"), vec![l("3"), l("1")]),
            (l("3"), vec![l("1"), l("2")]),
        ])
        .unwrap();
        let f = trace_faces(&s).unwrap();
        let seqs: Vec<Vec<Label>> = f.iter().map(|f| f.labels(&s)).collect();
        assert_eq!(seqs, vec![vec![l("1"), l("2"), l("3")], vec![l("1"), l("3"), l("2")]]);
        for face in &f {
            for c in &face.corners {
                assert_eq!(c.next, s.succ(c.vertex, c.prev));
            }
        }
    }

    #[test]
    fn disconnected_rejected() {
        let s = RotationSystem::from_rows_orientable(vec![
            (l("1"), vec![l("2")]),
            (l("2"), vec![l("1")]),
            (l("3"), vec![l("4")]),
            (l("4"), vec![l("3")]),
        ])
        .unwrap();
        assert_eq!(trace_faces(&s), Err(Error::Disconnected));
    }

    #[test]
    fn single_edge_one_face() {
        let s = RotationSystem::from_rows_orientable(vec![
            (l("1"), vec![l("2")]),
            (l("2"), vec![l("1")]),
        ])
        .unwrap();
        let f = trace_faces(&s).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].len(), 2);
    }

    #[test]
    fn least_rotation_picks_minimum() {
        let seq = vec![l("3"), l("1"), l("2"), l("1"), l("0")];
        assert_eq!(least_rotation(&seq), 4);
    }
}
