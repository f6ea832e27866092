//! Exhaustive enumeration of the orientable embeddings of small complete
//! graphs.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::faces::{embedding_type, trace_faces};
use crate::label::Label;
use crate::rotation::RotationSystem;
use crate::surface::surface_of;

/// Counts of embedding types per genus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub n: usize,
    pub systems: u64,
    pub min_genus: u64,
    pub by_genus: BTreeMap<u64, BTreeMap<Vec<usize>, u64>>,
}

impl Classification {
    /// Types realized at minimum genus.
    pub fn min_types(&self) -> BTreeSet<Vec<usize>> {
        self.by_genus.get(&self.min_genus).map(|m| m.keys().cloned().collect()).unwrap_or_default()
    }
}

/// All cyclic orders of `items`, each starting at the first item.
fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    fn perms(rest: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == rest.len() {
            out.push(rest.clone());
            return;
        }
        for i in k..rest.len() {
            rest.swap(k, i);
            perms(rest, k + 1, out);
            rest.swap(k, i);
        }
    }
    let Some((&first, tail)) = items.split_first() else { return vec![vec![]] };
    let mut tails = Vec::new();
    perms(&mut tail.to_vec(), 0, &mut tails);
    tails.sort();
    tails
        .into_iter()
        .map(|t| std::iter::once(first).chain(t).collect())
        .collect()
}

/// The rotation systems of K_n in a fixed order: system `code` takes, at
/// vertex v, cyclic order number `(code / k^v) % k`.
struct Systems {
    n: usize,
    labels: Vec<Label>,
    per_vertex: Vec<Vec<Vec<usize>>>,
}

impl Systems {
    fn new(n: usize) -> Result<Self> {
        if n > 5 {
            return Err(Error::Refusal(format!(
                "K{n} has too many rotation systems for exhaustive enumeration; n must be at most 5"
            )));
        }
        if n < 3 {
            return Err(Error::Domain(format!("K{n} has no cycles to classify")));
        }
        let labels = (0..n as u32).map(Label::Num).collect();
        let per_vertex = (0..n).map(|v| cyclic_orders(&(0..n).filter(|&u| u != v).collect::<Vec<_>>())).collect();
        Ok(Systems { n, labels, per_vertex })
    }

    fn count(&self) -> usize {
        self.per_vertex[0].len().pow(self.n as u32)
    }

    fn get(&self, code: usize) -> RotationSystem {
        let k = self.per_vertex[0].len();
        let mut c = code;
        let mut rows = Vec::with_capacity(self.n);
        for (v, orders) in self.per_vertex.iter().enumerate() {
            let row = orders[c % k].iter().map(|&u| self.labels[u].clone()).collect::<Vec<_>>();
            c /= k;
            rows.push((self.labels[v].clone(), row));
        }
        RotationSystem::from_rows_orientable(rows).expect("valid rows")
    }
}

/// The first system of K_n, n <= 5, in enumeration order, on the orientable
/// surface of genus `genus` with nontriangular faces `ty`.
pub fn first_of_type(n: usize, genus: u64, ty: &[usize]) -> Result<Option<RotationSystem>> {
    let all = Systems::new(n)?;
    Ok((0..all.count()).map(|c| all.get(c)).find(|sys| {
        let faces = trace_faces(sys).expect("connected");
        embedding_type(&faces) == ty && surface_of(sys, &faces).expect("orientable").genus == genus
    }))
}

/// Enumerates every rotation system of K_n, n <= 5, and classifies it.
pub fn classify_complete(n: usize, exec: Exec) -> Result<Classification> {
    let all = Systems::new(n)?;
    let total = all.count();
    let results = exec.map_range(total, |code| {
        let sys = all.get(code);
        let faces = trace_faces(&sys).expect("connected");
        let surface = surface_of(&sys, &faces).expect("orientable");
        (surface.genus, embedding_type(&faces))
    });
    let mut by_genus: BTreeMap<u64, BTreeMap<Vec<usize>, u64>> = BTreeMap::new();
    for (g, t) in results {
        *by_genus.entry(g).or_default().entry(t).or_default() += 1;
    }
    let min_genus = *by_genus.keys().next().expect("at least one system");
    Ok(Classification { n, systems: total as u64, min_genus, by_genus })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_planar() {
        let c = classify_complete(4, Exec::Sequential).unwrap();
        assert_eq!(c.systems, 16);
        assert_eq!(c.min_genus, 0);
        assert_eq!(c.min_types(), BTreeSet::from([vec![]]));
    }
}
