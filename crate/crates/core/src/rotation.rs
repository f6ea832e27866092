//! Signed rotation systems: cyclic neighbor orders plus per-edge signatures.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::label::Label;

/// A rotation system of a simple graph with a signature on every edge.
///
/// Vertices are kept sorted by label. Rows keep the starting point they were
/// given with; equality and hashing compare rows as cyclic sequences.
/// Edges not listed in `negative` carry +1.
#[derive(Clone, Debug)]
pub struct RotationSystem {
    labels: Vec<Label>,
    index: BTreeMap<Label, usize>,
    rot: Vec<Vec<usize>>,
    negative: BTreeSet<(usize, usize)>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl RotationSystem {
    /// Builds a system from labeled rows and a list of negatively signed edges.
    pub fn from_rows<I, N>(rows: I, negative: N) -> Result<Self>
    where
        I: IntoIterator<Item = (Label, Vec<Label>)>,
        N: IntoIterator<Item = (Label, Label)>,
    {
        let rows: BTreeMap<Label, Vec<Label>> = {
            let mut m = BTreeMap::new();
            for (v, r) in rows {
                if m.insert(v.clone(), r).is_some() {
                    return Err(Error::InvalidSystem(format!("duplicate row {v}")));
                }
            }
            m
        };
        let labels: Vec<Label> = rows.keys().cloned().collect();
        let index: BTreeMap<Label, usize> =
            labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let mut rot = Vec::with_capacity(labels.len());
        for (v, row) in &rows {
            let mut seen = BTreeSet::new();
            let mut r = Vec::with_capacity(row.len());
            for u in row {
                let ui = *index
                    .get(u)
                    .ok_or_else(|| Error::InvalidSystem(format!("row {v} names unknown vertex {u}")))?;
                if u == v {
                    return Err(Error::InvalidSystem(format!("self-loop at {v}")));
                }
                if !seen.insert(ui) {
                    return Err(Error::InvalidSystem(format!("row {v} repeats neighbor {u}")));
                }
                r.push(ui);
            }
            rot.push(r);
        }
        let mut sys = RotationSystem { labels, index, rot, negative: BTreeSet::new() };
        for v in 0..sys.rot.len() {
            for &u in &sys.rot[v] {
                if !sys.rot[u].contains(&v) {
                    return Err(Error::InvalidSystem(format!(
                        "{} lists {} but not conversely",
                        sys.labels[v], sys.labels[u]
                    )));
                }
            }
        }
        for (a, b) in negative {
            let (ai, bi) = (sys.require(&a)?, sys.require(&b)?);
            if !sys.has_edge(ai, bi) {
                return Err(Error::EdgeAbsent(a, b));
            }
            sys.negative.insert(key(ai, bi));
        }
        Ok(sys)
    }

    /// Orientable system from rows only.
    pub fn from_rows_orientable<I>(rows: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Label, Vec<Label>)>,
    {
        Self::from_rows(rows, std::iter::empty())
    }

    /// Rows rotated to start at their least neighbor.
    pub fn canonical_rows(&self) -> Vec<Vec<usize>> {
        self.rot
            .iter()
            .map(|r| {
                let mut r = r.clone();
                if let Some((p, _)) = r.iter().enumerate().min_by_key(|(_, &u)| u) {
                    r.rotate_left(p);
                }
                r
            })
            .collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rot.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &Label {
        &self.labels[v]
    }

    pub fn index_of(&self, l: &Label) -> Option<usize> {
        self.index.get(l).copied()
    }

    pub fn require(&self, l: &Label) -> Result<usize> {
        self.index_of(l).ok_or_else(|| Error::UnknownVertex(l.clone()))
    }

    pub fn row(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    /// Row of `v` as labels.
    pub fn row_labels(&self, v: usize) -> Vec<Label> {
        self.rot[v].iter().map(|&u| self.labels[u].clone()).collect()
    }

    /// Row of `v` as labels, rotated to start at `start` when present.
    pub fn row_from(&self, v: &Label, start: &Label) -> Result<Vec<Label>> {
        let vi = self.require(v)?;
        let si = self.require(start)?;
        let mut r = self.rot[vi].clone();
        if let Some(p) = r.iter().position(|&u| u == si) {
            r.rotate_left(p);
        }
        Ok(r.into_iter().map(|u| self.labels[u].clone()).collect())
    }

    pub fn position(&self, v: usize, u: usize) -> Option<usize> {
        self.rot[v].iter().position(|&w| w == u)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if self.rot[u].len() <= self.rot[v].len() {
            self.rot[u].contains(&v)
        } else {
            self.rot[v].contains(&u)
        }
    }

    pub fn has_edge_labels(&self, u: &Label, v: &Label) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(a), Some(b)) => self.has_edge(a, b),
            _ => false,
        }
    }

    /// Successor of `u` in the rotation at `v`.
    pub fn succ(&self, v: usize, u: usize) -> usize {
        let r = &self.rot[v];
        let p = r.iter().position(|&w| w == u).expect("succ: not a neighbor");
        r[(p + 1) % r.len()]
    }

    /// Predecessor of `u` in the rotation at `v`.
    pub fn pred(&self, v: usize, u: usize) -> usize {
        let r = &self.rot[v];
        let p = r.iter().position(|&w| w == u).expect("pred: not a neighbor");
        r[(p + r.len() - 1) % r.len()]
    }

    /// Signature of edge (u, v): +1 or -1.
    pub fn sign(&self, u: usize, v: usize) -> i8 {
        if self.negative.contains(&key(u, v)) {
            -1
        } else {
            1
        }
    }

    pub fn is_all_positive(&self) -> bool {
        self.negative.is_empty()
    }

    /// Negatively signed edges as labels.
    pub fn negative_edges(&self) -> Vec<(Label, Label)> {
        self.negative
            .iter()
            .map(|&(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
            .collect()
    }

    /// All edges as index pairs `(u, v)` with `u < v`, in sorted order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (v, r) in self.rot.iter().enumerate() {
            for &u in r {
                if v < u {
                    out.push((v, u));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn edge_labels(&self) -> Vec<(Label, Label)> {
        self.edges()
            .into_iter()
            .map(|(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.labels.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut q = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = q.pop_front() {
            for &u in &self.rot[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    q.push_back(u);
                }
            }
        }
        count == n
    }

    /// Labeled rows in vertex order.
    pub fn rows(&self) -> Vec<(Label, Vec<Label>)> {
        (0..self.labels.len()).map(|v| (self.labels[v].clone(), self.row_labels(v))).collect()
    }

    /// Missing edges relative to the complete graph on the same vertices.
    pub fn complement_edges(&self) -> Vec<(Label, Label)> {
        let n = self.labels.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !self.has_edge(a, b) {
                    out.push((self.labels[a].clone(), self.labels[b].clone()));
                }
            }
        }
        out
    }

    /// True when every pair of vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        let n = self.labels.len();
        self.rot.iter().all(|r| r.len() + 1 == n)
    }

    /// Reverses every rotation, keeping signatures.
    pub fn reflect(&self) -> Self {
        let mut s = self.clone();
        for v in 0..s.rot.len() {
            s.rot[v].reverse();
        }
        s
    }

    /// Renames vertices; the map must be injective on the vertex set.
    pub fn relabel(&self, map: &HashMap<Label, Label>) -> Result<Self> {
        let f = |l: &Label| map.get(l).cloned().unwrap_or_else(|| l.clone());
        let rows = self.rows().into_iter().map(|(v, r)| (f(&v), r.iter().map(f).collect()));
        let neg: Vec<_> = self.negative_edges().into_iter().map(|(a, b)| (f(&a), f(&b))).collect();
        let out = Self::from_rows(rows, neg)?;
        if out.vertex_count() != self.vertex_count() {
            return Err(Error::InvalidSystem("relabeling is not injective".into()));
        }
        Ok(out)
    }

    // ---- mutation (index level) ----

    /// Inserts `new` into the rotation at `v` immediately after `after`.
    /// With `v` of degree zero, `after` is ignored.
    pub(crate) fn insert_after(&mut self, v: usize, after: Option<usize>, new: usize) {
        let r = &mut self.rot[v];
        match after.and_then(|a| r.iter().position(|&w| w == a)) {
            Some(p) => r.insert(p + 1, new),
            None => r.push(new),
        }
    }

    pub(crate) fn remove_neighbor(&mut self, v: usize, u: usize) {
        self.rot[v].retain(|&w| w != u);
    }

    pub(crate) fn set_sign(&mut self, u: usize, v: usize, s: i8) {
        if s < 0 {
            self.negative.insert(key(u, v));
        } else {
            self.negative.remove(&key(u, v));
        }
    }

    /// Removes edge (u, v) from both rotations and the signature table.
    pub(crate) fn remove_edge_raw(&mut self, u: usize, v: usize) {
        self.remove_neighbor(u, v);
        self.remove_neighbor(v, u);
        self.negative.remove(&key(u, v));
    }

    pub(crate) fn set_row(&mut self, v: usize, row: Vec<usize>) {
        self.rot[v] = row;
    }

    /// Adds an isolated vertex and returns the rebuilt system.
    pub fn with_vertex(&self, l: Label) -> Result<Self> {
        if self.index.contains_key(&l) {
            return Err(Error::InvalidSystem(format!("vertex {l} already present")));
        }
        let mut rows = self.rows();
        rows.push((l, Vec::new()));
        Self::from_rows(rows, self.negative_edges())
    }

    /// Deletes a vertex and all incident edges.
    pub fn without_vertex(&self, l: &Label) -> Result<Self> {
        self.require(l)?;
        let rows = self
            .rows()
            .into_iter()
            .filter(|(v, _)| v != l)
            .map(|(v, r)| (v, r.into_iter().filter(|u| u != l).collect()));
        let neg: Vec<_> =
            self.negative_edges().into_iter().filter(|(a, b)| a != l && b != l).collect();
        Self::from_rows(rows, neg)
    }
}

impl PartialEq for RotationSystem {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
            && self.negative == other.negative
            && self.canonical_rows() == other.canonical_rows()
    }
}

impl Eq for RotationSystem {}

impl std::hash::Hash for RotationSystem {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.labels.hash(state);
        self.negative.hash(state);
        self.canonical_rows().hash(state);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> Label {
        Label::from(s)
    }

    fn k3() -> RotationSystem {
        RotationSystem::from_rows_orientable(vec![
            (l("1"), vec![l("2"), l("3")]),
            (l("2"), vec![l("3"), l("1")]),
            (l("3"), vec![l("1"), l("2")]),
        ])
        .unwrap()
    }

    #[test]
    fn equality_is_cyclic() {
        let s = k3();
        assert_eq!(s.row_labels(1), vec![l("3"), l("1")]);
        let t = RotationSystem::from_rows_orientable(vec![
            (l("1"), vec![l("3"), l("2")]),
            (l("2"), vec![l("1"), l("3")]),
            (l("3"), vec![l("2"), l("1")]),
        ])
        .unwrap();
        assert_eq!(s, t);
        assert_eq!(s.edge_count(), 3);
    }

    #[test]
    fn asymmetric_rows_rejected() {
        let r = RotationSystem::from_rows_orientable(vec![
            (l("1"), vec![l("2")]),
            (l("2"), vec![]),
        ]);
        assert!(matches!(r, Err(Error::InvalidSystem(_))));
    }

    #[test]
    fn loops_and_repeats_rejected() {
        assert!(RotationSystem::from_rows_orientable(vec![(l("1"), vec![l("1")])]).is_err());
        assert!(RotationSystem::from_rows_orientable(vec![
            (l("1"), vec![l("2"), l("2")]),
            (l("2"), vec![l("1")]),
        ])
        .is_err());
    }

    #[test]
    fn succ_pred() {
        let s = RotationSystem::from_rows_orientable(vec![
            (l("0"), vec![l("1"), l("2"), l("3")]),
            (l("1"), vec![l("0")]),
            (l("2"), vec![l("0")]),
            (l("3"), vec![l("0")]),
        ])
        .unwrap();
        assert_eq!(s.succ(0, 3), 1);
        assert_eq!(s.pred(0, 1), 3);
    }
}
