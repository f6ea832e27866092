//! Bounded search over chord placements.
//!
//! Many constructions say "add the missing edges back into the large face"
//! and leave the exact corners to a picture. These helpers enumerate the
//! corners and keep the first choice, in a fixed order, whose result passes
//! a caller supplied test.

use super::ops::{self, Placement};
use super::script::Step;
use crate::error::{Error, Result};
use crate::label::Label;
use crate::surface::Embedding;

/// Every way to draw (u, v) as a chord of a single face, in face order then
/// corner order.
pub fn chord_placements(emb: &Embedding, u: &Label, v: &Label) -> Vec<Placement> {
    let (Some(ui), Some(vi)) = (emb.sys.index_of(u), emb.sys.index_of(v)) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for f in &emb.faces {
        for i in f.corners_at(ui) {
            for j in f.corners_at(vi) {
                if i != j {
                    out.push(Placement { face: f.hash.clone(), i, j });
                }
            }
        }
    }
    out
}

/// One unit of work for [`search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// Add a missing edge as a chord, anywhere.
    Add(Label, Label),
    /// Delete an edge and add it back as a chord, anywhere.
    Exchange(Label, Label),
    Delete(Label, Label),
    /// A fixed step, applied as is.
    Fixed(Step),
}

/// Result of a successful search.
#[derive(Clone, Debug)]
pub struct Found {
    pub embedding: Embedding,
    pub steps: Vec<Step>,
}

struct Ctx<'a, F> {
    moves: &'a [Move],
    accept: F,
    budget: u64,
    spent: u64,
}

impl<F: Fn(&Embedding) -> bool> Ctx<'_, F> {
    fn tick(&mut self) -> Result<()> {
        self.spent += 1;
        if self.spent > self.budget {
            return Err(Error::Budget(self.budget));
        }
        Ok(())
    }

    fn add(&mut self, emb: &Embedding, u: &Label, v: &Label, k: usize, steps: &mut Vec<Step>) -> Result<Option<Embedding>> {
        for p in chord_placements(emb, u, v) {
            self.tick()?;
            let Ok(next) = ops::add_chord(emb, &p, u, v) else { continue };
            steps.push(Step::Chord { u: u.clone(), v: v.clone(), at: p });
            if let Some(e) = self.go(&next, k + 1, steps)? {
                return Ok(Some(e));
            }
            steps.pop();
        }
        Ok(None)
    }

    fn go(&mut self, emb: &Embedding, k: usize, steps: &mut Vec<Step>) -> Result<Option<Embedding>> {
        let Some(m) = self.moves.get(k) else {
            return Ok((self.accept)(emb).then(|| emb.clone()));
        };
        match m {
            Move::Add(u, v) => self.add(emb, u, v, k, steps),
            Move::Exchange(u, v) => {
                self.tick()?;
                let Ok(d) = ops::delete_edge(emb, u, v) else { return Ok(None) };
                steps.push(Step::Delete { u: u.clone(), v: v.clone() });
                let r = self.add(&d.embedding, u, v, k, steps)?;
                if r.is_none() {
                    steps.pop();
                }
                Ok(r)
            }
            Move::Delete(u, v) => {
                self.tick()?;
                let Ok(d) = ops::delete_edge(emb, u, v) else { return Ok(None) };
                steps.push(Step::Delete { u: u.clone(), v: v.clone() });
                let r = self.go(&d.embedding, k + 1, steps)?;
                if r.is_none() {
                    steps.pop();
                }
                Ok(r)
            }
            Move::Fixed(s) => {
                self.tick()?;
                let Ok(next) = super::script::apply(emb, s) else { return Ok(None) };
                steps.push(s.clone());
                let r = self.go(&next, k + 1, steps)?;
                if r.is_none() {
                    steps.pop();
                }
                Ok(r)
            }
        }
    }
}

/// Depth-first search over the placements of `moves`, applied in order.
/// Returns the first outcome accepted by `accept`, `None` when every
/// placement was tried, or `Error::Budget` after `budget` surgeries.
pub fn search(
    emb: &Embedding,
    moves: &[Move],
    budget: u64,
    accept: impl Fn(&Embedding) -> bool,
) -> Result<Option<Found>> {
    let mut ctx = Ctx { moves, accept, budget, spent: 0 };
    let mut steps = Vec::new();
    Ok(ctx.go(emb, 0, &mut steps)?.map(|embedding| Found { embedding, steps }))
}

/// Default budget for recipe placement searches.
pub const PLACEMENT_BUDGET: u64 = 200_000;

/// Accepts embeddings of exactly the given type.
pub fn has_type(ty: &[usize]) -> impl Fn(&Embedding) -> bool + '_ {
    move |e| e.embedding_type() == ty
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RotationSystem;

    fn k4_minus() -> Embedding {
        // planar K4, then (1,3) removed
        let l = |s: &str| -> Label { s.parse().unwrap() };
        let rows = vec![
            (l("0"), vec![l("1"), l("2"), l("3")]),
            (l("1"), vec![l("0"), l("3"), l("2")]),
            (l("2"), vec![l("0"), l("1"), l("3")]),
            (l("3"), vec![l("0"), l("2"), l("1")]),
        ];
        let e = Embedding::new(RotationSystem::from_rows_orientable(rows).unwrap()).unwrap();
        assert_eq!((e.faces.len(), e.surface.genus), (4, 0));
        ops::delete_edge(&e, &l("1"), &l("3")).unwrap().embedding
    }

    #[test]
    fn add_back_missing_edge() {
        let e = k4_minus();
        let (a, b): (Label, Label) = ("1".parse().unwrap(), "3".parse().unwrap());
        assert!(!chord_placements(&e, &a, &b).is_empty());
        let f = search(&e, &[Move::Add(a, b)], 100, |x| x.is_triangular() && x.surface.genus == 0)
            .unwrap()
            .unwrap();
        assert_eq!(f.steps.len(), 1);
        assert_eq!(f.embedding.faces.len(), 4);
    }

    #[test]
    fn budget_is_reported() {
        let e = k4_minus();
        let (a, b): (Label, Label) = ("1".parse().unwrap(), "3".parse().unwrap());
        let r = search(&e, &[Move::Add(a, b)], 0, |_| false);
        assert!(matches!(r, Err(Error::Budget(0))));
    }
}
