//! Randomized invariant checks on small rotation systems.
//!
//! Every case is driven by its own seed through ChaCha8, so a failure names
//! the seed that reproduces it. A case draws either a random connected graph
//! with random rotations (and, sometimes, random signatures) or a random
//! triangulation, then runs a short chain of surgery steps on it:
//!
//! - face lengths sum to twice the edge count;
//! - on orientable systems, Rule R* holds exactly when every face is a triangle;
//! - the flag-orbit tracer agrees with the walk-state tracer;
//! - each surgery step changes the Euler genus as its contract says;
//! - the recorded script survives a text round trip and replays to the same
//!   digest every time.

use std::collections::BTreeMap;
use std::ops::Range;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::distribution::is_simple_face;
use crate::error::Error;
use crate::exec::Exec;
use crate::label::Label;
use crate::rotation::RotationSystem;
use crate::rules::check_rule_r_star;
use crate::search::oracle::{face_set, oracle_trace};
use crate::surface::Embedding;
use crate::surgery::ops::{CornerRef, Placement};
use crate::surgery::script::{system_digest, Recorder, Script, Step};

/// Largest vertex count drawn.
pub const MAX_N: usize = 8;

const CHAIN: usize = 6;

fn lab(i: usize) -> Label {
    Label::Num(i as u32)
}

/// A connected graph on `n` vertices with shuffled rotations. Unless
/// `orientable`, a random subset of edges is twisted.
pub fn random_system<R: Rng>(rng: &mut R, n: usize, orientable: bool) -> RotationSystem {
    let mut adj = vec![Vec::new(); n];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        adj[u].push(v);
        adj[v].push(u);
    }
    let p: f64 = rng.gen_range(0.2..1.0);
    for u in 0..n {
        for v in u + 1..n {
            if !adj[u].contains(&v) && rng.gen_bool(p) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
    }
    for row in &mut adj {
        row.shuffle(rng);
    }
    let mut neg = Vec::new();
    if !orientable {
        let q: f64 = rng.gen_range(0.1..0.6);
        for (u, row) in adj.iter().enumerate() {
            for &v in row {
                if u < v && rng.gen_bool(q) {
                    neg.push((lab(u), lab(v)));
                }
            }
        }
    }
    let rows = adj.into_iter().enumerate().map(|(v, r)| (lab(v), r.into_iter().map(lab).collect()));
    RotationSystem::from_rows(rows, neg).expect("rows are symmetric")
}

fn k7_torus() -> Embedding {
    let log = [1u32, 3, 2, 6, 4, 5];
    let rows = (0..7u32).map(|k| (Label::Num(k), log.iter().map(|g| Label::Num((g + k) % 7)).collect()));
    Embedding::new(RotationSystem::from_rows_orientable(rows).expect("K7")).expect("K7")
}

/// A triangulation: K7 on the torus, or a stacked sphere triangulation on
/// `n` vertices, followed by random edge flips.
pub fn random_triangulation<R: Rng>(rng: &mut R, n: usize) -> Embedding {
    let mut e = if n == 7 && rng.gen_bool(0.5) {
        k7_torus()
    } else {
        let k3 = [(0, [1, 2]), (1, [2, 0]), (2, [0, 1])].map(|(v, r)| (lab(v), r.map(lab).to_vec()));
        let mut e = Embedding::new(RotationSystem::from_rows_orientable(k3).expect("K3")).expect("K3");
        for w in 3..n {
            let f = e.faces.choose(rng).expect("faces").hash.clone();
            e = crate::surgery::ops::subdivide_face(&e, &f, &lab(w)).expect("triangles are simple");
        }
        e
    };
    for _ in 0..2 * n {
        if let Some(step) = flip_step(rng, &e) {
            e = crate::surgery::script::apply(&e, &step).expect("flip");
        }
    }
    e
}

fn euler_genus(e: &Embedding) -> i64 {
    2 - e.surface.euler_characteristic()
}

fn flip_step<R: Rng>(rng: &mut R, e: &Embedding) -> Option<Step> {
    let &(a, b) = e.sys.edges().choose(rng)?;
    let on = e.faces_with_edge(a, b);
    if on.len() != 2 || on.iter().any(|&f| e.faces[f].len() != 3) {
        return None;
    }
    let apex = |f: usize| e.faces[f].vertices().into_iter().find(|&x| x != a && x != b);
    let (c, d) = (apex(on[0])?, apex(on[1])?);
    if c == d || e.sys.has_edge(c, d) {
        return None;
    }
    let l = |i: usize| e.sys.label(i).clone();
    Some(Step::Flip { a: l(a), b: l(b), c: l(c), d: l(d) })
}

/// A random step together with the Euler genus change it promises, as an
/// inclusive range.
fn random_step<R: Rng>(rng: &mut R, e: &Embedding, fresh: usize) -> Option<(&'static str, Step, (i64, i64))> {
    let l = |i: usize| e.sys.label(i).clone();
    let kind = rng.gen_range(0..9);
    let edges = e.sys.edges();
    match kind {
        0 => {
            let &(a, b) = edges.choose(rng)?;
            let on = e.faces_with_edge(a, b);
            if on.len() == 1 && !e.surface.orientable {
                return None;
            }
            let d = if on.len() == 1 { (-2, -2) } else { (0, 0) };
            Some(("delete", Step::Delete { u: l(a), v: l(b) }, d))
        }
        1 => {
            let f = e.faces.choose(rng)?;
            let i = rng.gen_range(0..f.len());
            let j = rng.gen_range(0..f.len());
            let (u, v) = (f.corners[i].vertex, f.corners[j].vertex);
            if u == v || e.sys.has_edge(u, v) {
                return None;
            }
            let at = Placement { face: f.hash.clone(), i, j };
            Some(("chord", Step::Chord { u: l(u), v: l(v), at }, (0, 0)))
        }
        2 => {
            let &(a, b) = edges.choose(rng)?;
            let on = e.faces_with_edge(a, b);
            if on.len() != 2 {
                return None;
            }
            let f = e.faces.iter().enumerate().filter(|(k, _)| !on.contains(k)).map(|(_, f)| f).collect::<Vec<_>>();
            let f = f.choose(rng)?;
            let (ia, ib) = (f.corners_at(a), f.corners_at(b));
            let (i, j) = (*ia.choose(rng)?, *ib.choose(rng)?);
            let into = Placement { face: f.hash.clone(), i, j };
            Some(("exchange", Step::Exchange { u: l(a), v: l(b), into }, (0, 0)))
        }
        3 => {
            let (f, g) = (e.faces.choose(rng)?, e.faces.choose(rng)?);
            if f.hash == g.hash {
                return None;
            }
            let (i, j) = (rng.gen_range(0..f.len()), rng.gen_range(0..g.len()));
            let (u, v) = (f.corners[i].vertex, g.corners[j].vertex);
            if u == v || e.sys.has_edge(u, v) {
                return None;
            }
            let xc = CornerRef { face: f.hash.clone(), index: i };
            let yc = CornerRef { face: g.hash.clone(), index: j };
            Some(("handle", Step::Handle { x: l(u), xc, y: l(v), yc }, (2, 2)))
        }
        4 => {
            let &(a, b) = edges.choose(rng)?;
            if e.faces_with_edge(a, b).len() != 2 {
                return None;
            }
            Some(("crosscap", Step::Crosscap { u: l(a), v: l(b) }, (1, 1)))
        }
        5 => {
            let v = rng.gen_range(0..e.sys.vertex_count());
            let row = e.sys.row(v);
            if row.len() < 2 {
                return None;
            }
            let s = rng.gen_range(0..row.len());
            let k = rng.gen_range(0..row.len() - 1);
            let (a, b) = (row[s], row[(s + k) % row.len()]);
            Some(("twist", Step::Twist { v: l(v), a: l(a), b: l(b) }, (-1, 1)))
        }
        6 => {
            let &(a, b) = edges.choose(rng)?;
            if e.sys.row(a).iter().any(|x| e.sys.row(b).contains(x)) {
                return None;
            }
            Some(("contract", Step::Contract { u: l(a), v: l(b), w: lab(fresh) }, (0, 0)))
        }
        7 => {
            let f = e.faces.choose(rng)?;
            if !is_simple_face(f) {
                return None;
            }
            Some(("subdivide", Step::Subdivide { face: f.hash.clone(), w: lab(fresh) }, (0, 0)))
        }
        _ => flip_step(rng, e).map(|s| ("flip", s, (0, 0))),
    }
}

/// Tally of one batch: how many systems were drawn, how many times each
/// check ran, and a description of every failure.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub systems: u64,
    pub checks: BTreeMap<String, u64>,
    pub failures: Vec<String>,
}

impl Report {
    fn tick(&mut self, what: &str) {
        *self.checks.entry(what.to_string()).or_default() += 1;
    }

    fn merge(&mut self, other: Report) {
        self.systems += other.systems;
        for (k, c) in other.checks {
            *self.checks.entry(k).or_default() += c;
        }
        self.failures.extend(other.failures);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn count(&self, what: &str) -> u64 {
        self.checks.get(what).copied().unwrap_or(0)
    }
}

fn static_checks(seed: u64, e: &Embedding, rep: &mut Report) {
    let total: usize = e.faces.iter().map(|f| f.len()).sum();
    rep.tick("face_sum");
    if total != 2 * e.sys.edge_count() {
        rep.failures.push(format!("seed {seed}: face lengths sum to {total}, E = {}", e.sys.edge_count()));
    }
    if e.sys.is_all_positive() {
        rep.tick("rule_r_star");
        if e.is_triangular() {
            rep.tick("rule_r_star_triangular");
        }
        if check_rule_r_star(&e.sys) != e.is_triangular() {
            rep.failures.push(format!("seed {seed}: Rule R* and triangularity disagree"));
        }
    }
    rep.tick("oracle");
    if oracle_trace(&e.sys) != face_set(e.faces.iter().map(|f| f.labels(&e.sys))) {
        rep.failures.push(format!("seed {seed}: tracers disagree"));
    }
}

/// Runs every check for one seed.
pub fn check_seed(seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report { systems: 1, ..Default::default() };
    let n = rng.gen_range(3..=MAX_N);
    let base = if rng.gen_bool(0.3) {
        let mut t = random_triangulation(&mut rng, n);
        if rng.gen_bool(0.5) {
            // swap two neighbors somewhere; usually breaks a triangle
            let v = rng.gen_range(0..t.sys.vertex_count());
            let mut rows = t.sys.rows();
            let row = &mut rows[v].1;
            let (i, j) = (rng.gen_range(0..row.len()), rng.gen_range(0..row.len()));
            row.swap(i, j);
            t = Embedding::new(RotationSystem::from_rows_orientable(rows).expect("rows")).expect("connected");
        }
        t
    } else {
        let orientable = rng.gen_bool(0.6);
        match Embedding::new(random_system(&mut rng, n, orientable)) {
            Ok(e) => e,
            Err(err) => {
                rep.failures.push(format!("seed {seed}: random system rejected: {err}"));
                return rep;
            }
        }
    };
    static_checks(seed, &base, &mut rep);

    let mut rec = Recorder::new(base.clone());
    let mut fresh = 100;
    for _ in 0..CHAIN {
        let Some((what, step, (lo, hi))) = random_step(&mut rng, &rec.emb, fresh) else {
            continue;
        };
        let before = rec.emb.clone();
        let text = step.to_string();
        match rec.step(step) {
            Ok(after) => {
                fresh += 1;
                rep.tick(what);
                let d = euler_genus(after) - euler_genus(&before);
                if d < lo || d > hi {
                    rep.failures.push(format!("seed {seed}: `{text}` changed the Euler genus by {d}"));
                }
                if what == "crosscap" && after.surface.orientable {
                    rep.failures.push(format!("seed {seed}: `{text}` left the surface orientable"));
                }
                let keeps = matches!(what, "delete" | "chord" | "exchange" | "flip" | "subdivide" | "contract");
                if keeps && after.surface.orientable != before.surface.orientable {
                    rep.failures.push(format!("seed {seed}: `{text}` changed orientability"));
                }
                let after = after.clone();
                static_checks(seed, &after, &mut rep);
            }
            Err(Error::Verification(m)) => rep.failures.push(format!("seed {seed}: `{text}`: {m}")),
            Err(_) => {}
        }
    }

    rep.tick("replay");
    let text = rec.script.to_text();
    let replayed = Script::parse(&text).and_then(|s| {
        if s.to_text() != text {
            return Err(Error::Verification("script text does not round trip".into()));
        }
        let a = s.replay(&base)?;
        let b = s.replay(&base)?;
        Ok((system_digest(&a), system_digest(&b)))
    });
    let want = system_digest(&rec.emb);
    match replayed {
        Ok((a, b)) if a == want && b == want => {}
        Ok((a, b)) => rep.failures.push(format!("seed {seed}: replay digests {a}, {b}; recorded {want}")),
        Err(err) => rep.failures.push(format!("seed {seed}: replay failed: {err}")),
    }
    rep
}

/// Checks every seed in `seeds`; the merged report is the same in either
/// execution mode.
pub fn run(seeds: Range<u64>, exec: Exec) -> Report {
    let mut out = Report::default();
    for r in exec.map(seeds.collect(), check_seed) {
        out.merge(r);
    }
    out
}
