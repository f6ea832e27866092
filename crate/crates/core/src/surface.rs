//! Euler characteristic, orientability and genus.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::faces::{embedding_type, face_distribution, trace_faces, Face};
use crate::rotation::RotationSystem;

/// Surface class: orientable with `genus` handles, or nonorientable with
/// `genus` crosscaps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Surface {
    pub orientable: bool,
    pub genus: u64,
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orientable {
            write!(f, "S{}", self.genus)
        } else {
            write!(f, "N{}", self.genus)
        }
    }
}

impl Surface {
    pub fn euler_characteristic(&self) -> i64 {
        if self.orientable {
            2 - 2 * self.genus as i64
        } else {
            2 - self.genus as i64
        }
    }
}

/// Decides orientability by switching signatures over a BFS spanning tree
/// rooted at the least vertex: the embedding is orientable iff every
/// non-tree edge ends up positive.
pub fn is_orientable(sys: &RotationSystem) -> bool {
    if sys.is_all_positive() {
        return true;
    }
    let n = sys.vertex_count();
    let mut eps: Vec<i8> = vec![0; n];
    for root in 0..n {
        if eps[root] != 0 {
            continue;
        }
        eps[root] = 1;
        let mut q = VecDeque::from([root]);
        while let Some(v) = q.pop_front() {
            for &u in sys.row(v) {
                if eps[u] == 0 {
                    eps[u] = eps[v] * sys.sign(v, u);
                    q.push_back(u);
                }
            }
        }
    }
    sys.edges().into_iter().all(|(u, v)| eps[u] * sys.sign(u, v) * eps[v] == 1)
}

/// Surface from a system and its traced faces.
pub fn surface_of(sys: &RotationSystem, faces: &[Face]) -> Result<Surface> {
    let chi = sys.vertex_count() as i64 - sys.edge_count() as i64 + faces.len() as i64;
    if is_orientable(sys) {
        if (2 - chi) % 2 != 0 || chi > 2 {
            return Err(Error::HalfIntegerGenus { chi });
        }
        Ok(Surface { orientable: true, genus: ((2 - chi) / 2) as u64 })
    } else {
        if chi > 1 {
            return Err(Error::InvalidSystem(format!("nonorientable with characteristic {chi}")));
        }
        Ok(Surface { orientable: false, genus: (2 - chi) as u64 })
    }
}

/// Traces faces and classifies the surface.
pub fn euler_surface(sys: &RotationSystem) -> Result<Surface> {
    surface_of(sys, &trace_faces(sys)?)
}

/// A rotation system together with its traced faces and surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub sys: RotationSystem,
    pub faces: Vec<Face>,
    pub surface: Surface,
}

impl Embedding {
    pub fn new(sys: RotationSystem) -> Result<Self> {
        let faces = trace_faces(&sys)?;
        let surface = surface_of(&sys, &faces)?;
        Ok(Embedding { sys, faces, surface })
    }

    pub fn embedding_type(&self) -> Vec<usize> {
        embedding_type(&self.faces)
    }

    pub fn is_triangular(&self) -> bool {
        self.faces.iter().all(|f| f.len() == 3)
    }

    pub fn distribution(&self) -> std::collections::BTreeMap<usize, usize> {
        face_distribution(&self.faces)
    }

    pub fn face(&self, hash: &str) -> Result<&Face> {
        crate::faces::find_face(&self.faces, hash)
    }

    /// Faces having `(u, v)` on their boundary.
    pub fn faces_with_edge(&self, u: usize, v: usize) -> Vec<usize> {
        (0..self.faces.len()).filter(|&i| self.faces[i].contains_edge(u, v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::Label;

    fn l(s: &str) -> Label {
        Label::from(s)
    }

    #[test]
    fn k3_planar() {
        let s = RotationSystem::from_rows_orientable(vec![
            (l("1"), vec![l("2"), l("3")]),
            (l("2"), vec![l("3"), l("1")]),
            (l("3"), vec![l("1"), l("2")]),
        ])
        .unwrap();
        assert_eq!(euler_surface(&s).unwrap(), Surface { orientable: true, genus: 0 });
    }

    #[test]
    fn k3_with_one_twist_is_projective() {
        let s = RotationSystem::from_rows(
            vec![
                (l("1"), vec![l("2"), l("3")]),
                (l("2"), vec![l("3"), l("1")]),
                (l("3"), vec![l("1"), l("2")]),
            ],
            vec![(l("1"), l("2"))],
        )
        .unwrap();
        let e = Embedding::new(s).unwrap();
        assert_eq!(e.faces.len(), 1);
        assert_eq!(e.surface, Surface { orientable: false, genus: 1 });
    }

    #[test]
    fn switching_a_vertex_stays_orientable() {
        // flip both edges at vertex 1: equivalent to reversing its rotation
        let s = RotationSystem::from_rows(
            vec![
                (l("1"), vec![l("2"), l("3")]),
                (l("2"), vec![l("3"), l("1")]),
                (l("3"), vec![l("1"), l("2")]),
            ],
            vec![(l("1"), l("2")), (l("1"), l("3"))],
        )
        .unwrap();
        assert!(is_orientable(&s));
        assert_eq!(euler_surface(&s).unwrap().genus, 0);
    }
}
