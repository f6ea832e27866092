//! Backtracking search for triangular embeddings.
//!
//! Orientable targets: a partial successor map `succ[v][u]` per vertex.
//! Adding an oriented triangle `[a, b, c]` sets `succ_b(a) = c`,
//! `succ_c(b) = a` and `succ_a(c) = b`, which is Rule R* read row by row.
//! A map that never closes a cycle before it covers all neighbors and ends
//! up total describes a triangulation.
//!
//! Other targets: an undirected link per vertex. Adding a triangle
//! `{a, b, c}` joins b and c in the link of a, and so on. When every link
//! is a single cycle, reading the cycles as rows satisfies Rule R, and the
//! signatures follow.
//!
//! Branching: the unfinished slot with the fewest candidates, ties by
//! vertex then neighbor index; candidates in increasing index order. The
//! first level of the tree is split into independent jobs, each with the
//! full node budget, and the first success in branch order is returned.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::label::Label;
use crate::rotation::RotationSystem;
use crate::rules::rule_r_signatures;

use super::graph::GraphSpec;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub graph: GraphSpec,
    /// Search only orientable triangulations (Rule R*); otherwise Rule R.
    pub orientable: bool,
    /// Node budget per first-level branch.
    pub budget: u64,
}

impl SearchSpec {
    pub fn new(graph: GraphSpec, orientable: bool) -> Self {
        SearchSpec { graph, orientable, budget: DEFAULT_BUDGET }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Found(RotationSystem),
    /// Every branch was explored: no triangulation of this kind exists.
    Exhausted,
    /// Some branch ran out of budget before a solution was seen.
    Budget,
}

const NONE: u16 = u16::MAX;

#[derive(Clone)]
struct Oriented {
    n: usize,
    adj: Vec<bool>,
    deg: Vec<usize>,
    nbrs: Vec<Vec<usize>>,
    succ: Vec<u16>,
    pred: Vec<u16>,
    open: usize,
    trail: Vec<(usize, usize, usize)>,
}

impl Oriented {
    fn new(g: &GraphSpec) -> Self {
        let n = g.vertex_count();
        let nbrs = g.neighbors();
        let mut adj = vec![false; n * n];
        for &(u, v) in &g.edges {
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        let deg = nbrs.iter().map(|r| r.len()).collect();
        Oriented {
            n,
            adj,
            deg,
            nbrs,
            succ: vec![NONE; n * n],
            pred: vec![NONE; n * n],
            open: 2 * g.edges.len(),
            trail: Vec::new(),
        }
    }

    /// Whether linking p -> q at v would close a cycle that misses neighbors.
    fn closes_early(&self, v: usize, p: usize, q: usize) -> bool {
        let n = self.n;
        let mut cur = q;
        let mut len = 1;
        loop {
            let s = self.succ[v * n + cur];
            if s == NONE {
                return false;
            }
            len += 1;
            cur = s as usize;
            if cur == p {
                return len < self.deg[v];
            }
        }
    }

    fn can_link(&self, v: usize, p: usize, q: usize) -> bool {
        let n = self.n;
        self.succ[v * n + p] == NONE && self.pred[v * n + q] == NONE && !self.closes_early(v, p, q)
    }

    /// Candidates c for the triangle [a, b, c], given succ_b(a) is open.
    fn candidates(&self, b: usize, a: usize, out: &mut Vec<usize>) {
        out.clear();
        let n = self.n;
        for &c in &self.nbrs[b] {
            if c != a && self.adj[a * n + c] && self.can_link(b, a, c) && self.can_link(c, b, a) && self.can_link(a, c, b) {
                out.push(c);
            }
        }
    }

    fn link(&mut self, v: usize, p: usize, q: usize) {
        let n = self.n;
        self.succ[v * n + p] = q as u16;
        self.pred[v * n + q] = p as u16;
        self.open -= 1;
        self.trail.push((v, p, q));
    }

    fn place(&mut self, a: usize, b: usize, c: usize) {
        self.link(b, a, c);
        self.link(c, b, a);
        self.link(a, c, b);
    }

    fn undo(&mut self) {
        let n = self.n;
        for _ in 0..3 {
            let (v, p, q) = self.trail.pop().expect("trail");
            self.succ[v * n + p] = NONE;
            self.pred[v * n + q] = NONE;
            self.open += 1;
        }
    }

    /// Open slot (b, a) with the fewest candidates, and those candidates.
    fn choose(&self) -> Option<((usize, usize), Vec<usize>)> {
        let mut best: Option<((usize, usize), Vec<usize>)> = None;
        let mut buf = Vec::new();
        for b in 0..self.n {
            for &a in &self.nbrs[b] {
                if self.succ[b * self.n + a] != NONE {
                    continue;
                }
                self.candidates(b, a, &mut buf);
                if best.as_ref().is_none_or(|(_, c)| buf.len() < c.len()) {
                    best = Some(((b, a), buf.clone()));
                    if buf.len() <= 1 {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn dfs(&mut self, nodes: &mut u64, budget: u64) -> Result<bool> {
        if self.open == 0 {
            return Ok(true);
        }
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::Budget(budget));
        }
        let Some(((b, a), cands)) = self.choose() else { return Ok(true) };
        for c in cands {
            self.place(a, b, c);
            if self.dfs(nodes, budget)? {
                return Ok(true);
            }
            self.undo();
        }
        Ok(false)
    }

    fn rows(&self, labels: &[Label]) -> Vec<(Label, Vec<Label>)> {
        let n = self.n;
        (0..n)
            .map(|v| {
                let start = *self.nbrs[v].iter().min().expect("degree > 0");
                let mut row = vec![labels[start].clone()];
                let mut cur = self.succ[v * n + start] as usize;
                while cur != start {
                    row.push(labels[cur].clone());
                    cur = self.succ[v * n + cur] as usize;
                }
                (labels[v].clone(), row)
            })
            .collect()
    }
}

#[derive(Clone)]
struct Unoriented {
    n: usize,
    adj: Vec<bool>,
    deg: Vec<usize>,
    nbrs: Vec<Vec<usize>>,
    /// link[v][u] holds up to two link neighbors of u in the link of v
    link: Vec<[u16; 2]>,
    open: usize,
    trail: Vec<(usize, usize, usize)>,
}

impl Unoriented {
    fn new(g: &GraphSpec) -> Self {
        let n = g.vertex_count();
        let nbrs = g.neighbors();
        let mut adj = vec![false; n * n];
        for &(u, v) in &g.edges {
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        let deg = nbrs.iter().map(|r| r.len()).collect();
        Unoriented {
            n,
            adj,
            deg,
            nbrs,
            link: vec![[NONE, NONE]; n * n],
            open: 4 * g.edges.len(),
            trail: Vec::new(),
        }
    }

    fn ldeg(&self, v: usize, u: usize) -> usize {
        self.link[v * self.n + u].iter().filter(|&&x| x != NONE).count()
    }

    fn can_join(&self, v: usize, p: usize, q: usize) -> bool {
        let n = self.n;
        if self.ldeg(v, p) == 2 || self.ldeg(v, q) == 2 || self.link[v * n + p].contains(&(q as u16)) {
            return false;
        }
        // walk the path from p; reaching q means the edge closes a cycle
        let mut prev = NONE;
        let mut cur = p;
        let mut len = 1;
        loop {
            let next = self.link[v * n + cur].iter().copied().find(|&x| x != NONE && x != prev);
            let Some(next) = next else { return true };
            prev = cur as u16;
            cur = next as usize;
            len += 1;
            if cur == q {
                return len == self.deg[v];
            }
        }
    }

    fn candidates(&self, v: usize, u: usize, out: &mut Vec<usize>) {
        out.clear();
        let n = self.n;
        for &w in &self.nbrs[v] {
            if w != u && self.adj[u * n + w] && self.can_join(v, u, w) && self.can_join(u, v, w) && self.can_join(w, u, v) {
                out.push(w);
            }
        }
    }

    fn join(&mut self, v: usize, p: usize, q: usize) {
        let n = self.n;
        for (a, b) in [(p, q), (q, p)] {
            let slot = &mut self.link[v * n + a];
            let i = if slot[0] == NONE { 0 } else { 1 };
            slot[i] = b as u16;
        }
        self.open -= 2;
        self.trail.push((v, p, q));
    }

    fn place(&mut self, a: usize, b: usize, c: usize) {
        self.join(a, b, c);
        self.join(b, a, c);
        self.join(c, a, b);
    }

    fn undo(&mut self) {
        let n = self.n;
        for _ in 0..3 {
            let (v, p, q) = self.trail.pop().expect("trail");
            for (a, b) in [(p, q), (q, p)] {
                let slot = &mut self.link[v * n + a];
                if slot[1] == b as u16 {
                    slot[1] = NONE;
                } else {
                    slot[0] = slot[1];
                    slot[1] = NONE;
                }
            }
            self.open += 2;
        }
    }

    fn choose(&self) -> Option<((usize, usize), Vec<usize>)> {
        let mut best: Option<((usize, usize), Vec<usize>)> = None;
        let mut buf = Vec::new();
        for v in 0..self.n {
            for &u in &self.nbrs[v] {
                if self.ldeg(v, u) == 2 {
                    continue;
                }
                self.candidates(v, u, &mut buf);
                if best.as_ref().is_none_or(|(_, c)| buf.len() < c.len()) {
                    best = Some(((v, u), buf.clone()));
                    if buf.len() <= 1 {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn dfs(&mut self, nodes: &mut u64, budget: u64) -> Result<bool> {
        if self.open == 0 {
            return Ok(true);
        }
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::Budget(budget));
        }
        let Some(((v, u), cands)) = self.choose() else { return Ok(true) };
        for w in cands {
            self.place(v, u, w);
            if self.dfs(nodes, budget)? {
                return Ok(true);
            }
            self.undo();
        }
        Ok(false)
    }

    fn rows(&self, labels: &[Label]) -> Vec<(Label, Vec<Label>)> {
        let n = self.n;
        (0..n)
            .map(|v| {
                let start = *self.nbrs[v].iter().min().expect("degree > 0");
                let first = self.link[v * n + start].iter().copied().filter(|&x| x != NONE).min().expect("link");
                let mut row = vec![labels[start].clone()];
                let (mut prev, mut cur) = (start, first as usize);
                while cur != start {
                    row.push(labels[cur].clone());
                    let next = self.link[v * n + cur].iter().copied().find(|&x| x as usize != prev).expect("cycle");
                    prev = cur;
                    cur = next as usize;
                }
                (labels[v].clone(), row)
            })
            .collect()
    }
}

trait Solver: Clone + Send + Sync {
    fn choose(&self) -> Option<((usize, usize), Vec<usize>)>;
    fn place(&mut self, a: usize, b: usize, c: usize);
    fn dfs(&mut self, nodes: &mut u64, budget: u64) -> Result<bool>;
    fn finish(&self, labels: &[Label]) -> Result<RotationSystem>;
}

impl Solver for Oriented {
    fn choose(&self) -> Option<((usize, usize), Vec<usize>)> {
        Oriented::choose(self)
    }
    fn place(&mut self, b: usize, a: usize, c: usize) {
        Oriented::place(self, a, b, c)
    }
    fn dfs(&mut self, nodes: &mut u64, budget: u64) -> Result<bool> {
        Oriented::dfs(self, nodes, budget)
    }
    fn finish(&self, labels: &[Label]) -> Result<RotationSystem> {
        RotationSystem::from_rows_orientable(self.rows(labels))
    }
}

impl Solver for Unoriented {
    fn choose(&self) -> Option<((usize, usize), Vec<usize>)> {
        Unoriented::choose(self)
    }
    fn place(&mut self, v: usize, u: usize, w: usize) {
        Unoriented::place(self, v, u, w)
    }
    fn dfs(&mut self, nodes: &mut u64, budget: u64) -> Result<bool> {
        Unoriented::dfs(self, nodes, budget)
    }
    fn finish(&self, labels: &[Label]) -> Result<RotationSystem> {
        let plain = RotationSystem::from_rows_orientable(self.rows(labels))?;
        rule_r_signatures(&plain).ok_or_else(|| Error::Verification("link cycles do not satisfy Rule R".into()))
    }
}

enum Branch {
    Found(RotationSystem),
    Exhausted,
    Budget,
    Failed(Error),
}

fn run<S: Solver>(root: S, labels: &[Label], budget: u64, exec: Exec) -> Result<Outcome> {
    let Some(((p, q), cands)) = root.choose() else {
        return Ok(Outcome::Found(root.finish(labels)?));
    };
    let results = exec.map(cands, |c| {
        let mut s = root.clone();
        s.place(p, q, c);
        let mut nodes = 0;
        match s.dfs(&mut nodes, budget) {
            Ok(true) => match s.finish(labels) {
                Ok(sys) => Branch::Found(sys),
                Err(e) => Branch::Failed(e),
            },
            Ok(false) => Branch::Exhausted,
            Err(Error::Budget(_)) => Branch::Budget,
            Err(e) => Branch::Failed(e),
        }
    });
    for r in results {
        match r {
            Branch::Found(sys) => return Ok(Outcome::Found(sys)),
            Branch::Exhausted => {}
            Branch::Budget => return Ok(Outcome::Budget),
            Branch::Failed(e) => return Err(e),
        }
    }
    Ok(Outcome::Exhausted)
}

/// Searches for a triangular embedding of `spec.graph`.
pub fn find_triangular(spec: &SearchSpec, exec: Exec) -> Result<Outcome> {
    let g = &spec.graph;
    if g.triangulation_genus(spec.orientable).is_none() {
        return Err(Error::Domain(format!(
            "{} has {} vertices and {} edges; no triangulation can exist",
            g.name,
            g.vertex_count(),
            g.edges.len()
        )));
    }
    if spec.orientable {
        run(Oriented::new(g), &g.labels, spec.budget, exec)
    } else {
        run(Unoriented::new(g), &g.labels, spec.budget, exec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::check_rule_r_star;
    use crate::search::graph::parse_graph;
    use crate::surface::Embedding;

    #[test]
    fn k7_torus() {
        let spec = SearchSpec::new(parse_graph("K7").unwrap(), true);
        let Outcome::Found(sys) = find_triangular(&spec, Exec::Sequential).unwrap() else { panic!() };
        assert!(check_rule_r_star(&sys));
        let e = Embedding::new(sys).unwrap();
        assert_eq!((e.faces.len(), e.surface.genus), (14, 1));
    }

    #[test]
    fn k5_minus_k2_planar() {
        let spec = SearchSpec::new(parse_graph("K5-K2").unwrap(), true);
        let Outcome::Found(sys) = find_triangular(&spec, Exec::Sequential).unwrap() else { panic!() };
        let e = Embedding::new(sys).unwrap();
        assert!(e.is_triangular());
        assert_eq!(e.surface.genus, 0);
    }

    #[test]
    fn k6_projective() {
        let spec = SearchSpec::new(parse_graph("K6").unwrap(), false);
        let Outcome::Found(sys) = find_triangular(&spec, Exec::Sequential).unwrap() else { panic!() };
        let e = Embedding::new(sys).unwrap();
        assert!(e.is_triangular());
        assert!(!e.surface.orientable);
        assert_eq!(e.surface.genus, 1);
    }
}
