//! Current graphs: arcs with currents in Z_m, vertex rotations and vortices.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::derive::{VortexInfo, VortexType};
use super::log::Token;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Orient {
    /// Solid vertex: rotation read clockwise.
    Cw,
    /// Hollow vertex: rotation read counterclockwise.
    Ccw,
}

/// An arc end: `head` ends sit at `arc.to`, tail ends at `arc.from`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct End {
    pub arc: usize,
    pub head: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub name: String,
    pub from: usize,
    pub to: usize,
    pub current: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CVertex {
    pub name: String,
    pub orient: Orient,
    pub rotation: Vec<End>,
}

/// A lettered corner. For degree-3 vertices, `after` names the end that
/// precedes the corner in the effective rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vortex {
    pub letter: String,
    pub kind: VortexType,
    pub vertex: usize,
    pub after: Option<End>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurrentGraph {
    pub modulus: u32,
    pub vertices: Vec<CVertex>,
    pub arcs: Vec<Arc>,
    pub vortices: Vec<Vortex>,
}

/// Outcome of checking one construction principle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipleCheck {
    pub name: &'static str,
    pub ok: bool,
    pub problems: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub checks: Vec<PrincipleCheck>,
    /// Number of faces of the current graph's own embedding.
    pub index: usize,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn check(&self, name: &str) -> Option<&PrincipleCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Additive order of `g` in `Z_m`.
pub fn order(g: u32, m: u32) -> u32 {
    m / gcd(g % m, m)
}

/// A directed traversal of an arc.
type Dart = (usize, bool);

impl CurrentGraph {
    fn vertex_at(&self, e: End) -> usize {
        let a = &self.arcs[e.arc];
        if e.head {
            a.to
        } else {
            a.from
        }
    }

    fn effective(&self, v: usize) -> Vec<End> {
        let mut r = self.vertices[v].rotation.clone();
        if self.vertices[v].orient == Orient::Ccw {
            r.reverse();
        }
        r
    }

    fn succ_end(&self, e: End) -> End {
        let r = self.effective(self.vertex_at(e));
        let p = r.iter().position(|&x| x == e).expect("end listed in its rotation");
        r[(p + 1) % r.len()]
    }

    /// Current entering the vertex at end `e`.
    fn inflow(&self, e: End) -> u32 {
        let c = self.arcs[e.arc].current % self.modulus;
        if e.head {
            c
        } else {
            (self.modulus - c) % self.modulus
        }
    }

    pub fn excess(&self, v: usize) -> u32 {
        self.vertices[v].rotation.iter().fold(0, |s, &e| (s + self.inflow(e)) % self.modulus)
    }

    fn is_condensed_pendant(&self, v: usize) -> bool {
        let r = &self.vertices[v].rotation;
        r.len() == 1
            && !self.vortices.iter().any(|x| x.vertex == v)
            && (2 * self.arcs[r[0].arc].current).is_multiple_of(self.modulus)
    }

    fn letter_at(&self, v: usize, arriving: End) -> Option<&Vortex> {
        self.vortices.iter().find(|x| {
            x.vertex == v
                && match x.after {
                    None => true,
                    Some(e) => e == arriving,
                }
        })
    }

    /// Traces the faces of the current graph's embedding as dart cycles.
    fn faces(&self) -> Vec<Vec<Dart>> {
        let mut used = std::collections::HashSet::new();
        let mut out = Vec::new();
        for a in 0..self.arcs.len() {
            for fwd in [true, false] {
                if used.contains(&(a, fwd)) {
                    continue;
                }
                let mut face = Vec::new();
                let mut d: Dart = (a, fwd);
                loop {
                    used.insert(d);
                    face.push(d);
                    let arriving = End { arc: d.0, head: d.1 };
                    let e = self.succ_end(arriving);
                    d = (e.arc, !e.head);
                    if d == (a, fwd) {
                        break;
                    }
                }
                out.push(face);
            }
        }
        out
    }

    /// Reads the log of the single face, starting with the forward traversal
    /// of arc 0. The order-2 element on a pendant arc is recorded once.
    pub fn trace_log(&self) -> Result<Vec<Token>> {
        self.check_structure()?;
        let faces = self.faces();
        if faces.len() != 1 {
            return Err(Error::Current(format!(
                "current graph has index {}, expected a one-face embedding",
                faces.len()
            )));
        }
        let m = self.modulus;
        let mut log = Vec::new();
        for &(a, fwd) in &faces[0] {
            let arc = &self.arcs[a];
            let (tail, head) = if fwd { (arc.from, arc.to) } else { (arc.to, arc.from) };
            if !self.is_condensed_pendant(tail) {
                let c = arc.current % m;
                log.push(Token::Elem(if fwd { c } else { (m - c) % m }));
            }
            if let Some(x) = self.letter_at(head, End { arc: a, head: fwd }) {
                log.push(Token::Letter(x.letter.clone()));
            }
        }
        Ok(log)
    }

    /// Checks rotations and arc ends for internal consistency.
    pub fn check_structure(&self) -> Result<()> {
        let mut seen: HashMap<End, usize> = HashMap::new();
        for (v, cv) in self.vertices.iter().enumerate() {
            for &e in &cv.rotation {
                if e.arc >= self.arcs.len() || self.vertex_at(e) != v {
                    return Err(Error::Current(format!("vertex {} lists a foreign arc end", cv.name)));
                }
                if seen.insert(e, v).is_some() {
                    return Err(Error::Current(format!("arc end listed twice at {}", cv.name)));
                }
            }
        }
        if seen.len() != 2 * self.arcs.len() {
            return Err(Error::Current("some arc end is missing from every rotation".into()));
        }
        for x in &self.vortices {
            if let Some(e) = x.after {
                if self.vertex_at(e) != x.vertex {
                    return Err(Error::Current(format!("vortex {} names a corner elsewhere", x.letter)));
                }
            }
        }
        Ok(())
    }

    /// Checks construction principles C1 to C6.
    pub fn validate(&self) -> Result<ValidityReport> {
        self.check_structure()?;
        let m = self.modulus;
        let deg = |v: usize| self.vertices[v].rotation.len();
        let vortex_vertices: std::collections::BTreeSet<usize> =
            self.vortices.iter().map(|x| x.vertex).collect();

        let mut c1 = Vec::new();
        for (v, cv) in self.vertices.iter().enumerate() {
            if deg(v) != 1 && deg(v) != 3 {
                c1.push(format!("vertex {} has degree {}", cv.name, deg(v)));
            }
        }

        let index = self.faces().len();
        let c2 = if index == 1 { vec![] } else { vec![format!("embedding has {index} faces")] };

        let mut c3 = Vec::new();
        let mut hits: BTreeMap<u32, Vec<&str>> = BTreeMap::new();
        for a in &self.arcs {
            let c = a.current % m;
            if c == 0 {
                c3.push(format!("arc {} carries the zero current", a.name));
                continue;
            }
            hits.entry(c.min(m - c)).or_default().push(&a.name);
        }
        for g in 1..=m / 2 {
            match hits.get(&g).map(Vec::len).unwrap_or(0) {
                1 => {}
                0 => c3.push(format!("neither {g} nor {} is a current", m - g)),
                _ => c3.push(format!("{g} or its inverse labels arcs {:?}", hits[&g])),
            }
        }

        let mut c4 = Vec::new();
        for v in 0..self.vertices.len() {
            if deg(v) == 3 && !vortex_vertices.contains(&v) && self.excess(v) != 0 {
                c4.push(format!("vertex {} has excess {}", self.vertices[v].name, self.excess(v)));
            }
        }

        let mut c5 = Vec::new();
        if m.is_multiple_of(2) {
            let ok = self.arcs.iter().any(|a| {
                a.current % m == m / 2 && (deg(a.from) == 1 || deg(a.to) == 1)
            });
            if !ok {
                c5.push(format!("element {} is not on an arc at a degree-1 vertex", m / 2));
            }
        }

        let mut c6 = Vec::new();
        for v in 0..self.vertices.len() {
            let name = &self.vertices[v].name;
            let letters: Vec<&Vortex> = self.vortices.iter().filter(|x| x.vertex == v).collect();
            if letters.is_empty() {
                if deg(v) == 1 && !self.is_condensed_pendant(v) {
                    c6.push(format!("degree-1 vertex {name} is unlettered"));
                }
                continue;
            }
            let kind = letters[0].kind;
            if letters.iter().any(|x| x.kind != kind) {
                c6.push(format!("vortex {name} mixes types"));
                continue;
            }
            let ex = self.excess(v);
            let ord = order(ex, m);
            match kind {
                VortexType::T1 => {
                    if deg(v) != 1 || ord != m {
                        c6.push(format!("T1 vortex {name}: degree {}, excess order {ord}", deg(v)));
                    }
                }
                VortexType::T2 => {
                    if deg(v) != 1 || !m.is_multiple_of(2) || 2 * ord != m {
                        c6.push(format!("T2 vortex {name}: degree {}, excess order {ord}", deg(v)));
                    }
                }
                VortexType::T3 => {
                    let res: Vec<u32> =
                        self.vertices[v].rotation.iter().map(|&e| self.inflow(e) % 3).collect();
                    let same = res.iter().all(|&r| r == res[0]) && res[0] != 0;
                    if deg(v) != 3 || !m.is_multiple_of(3) || 3 * ord != m || !same || letters.len() != 3 {
                        c6.push(format!(
                            "T3 vortex {name}: degree {}, excess order {ord}, inflow residues {res:?}",
                            deg(v)
                        ));
                    }
                }
            }
        }

        let mk = |name, problems: Vec<String>| PrincipleCheck { name, ok: problems.is_empty(), problems };
        Ok(ValidityReport {
            checks: vec![
                mk("C1", c1),
                mk("C2", c2),
                mk("C3", c3),
                mk("C4", c4),
                mk("C5", c5),
                mk("C6", c6),
            ],
            index,
        })
    }

    /// Vortex metadata for the additive rule; T3 letters are grouped by vertex.
    pub fn vortex_info(&self) -> Vec<VortexInfo> {
        self.vortices
            .iter()
            .map(|x| VortexInfo {
                letter: x.letter.clone(),
                kind: x.kind,
                group: self.vertices[x.vertex].name.clone(),
            })
            .collect()
    }

    /// Reverses arc `a` and negates its current; the log is unchanged.
    pub fn reverse_arc(&mut self, a: usize) {
        let m = self.modulus;
        let arc = &mut self.arcs[a];
        std::mem::swap(&mut arc.from, &mut arc.to);
        arc.current = (m - arc.current % m) % m;
        for v in &mut self.vertices {
            for e in &mut v.rotation {
                if e.arc == a {
                    e.head = !e.head;
                }
            }
        }
        for x in &mut self.vortices {
            if let Some(e) = &mut x.after {
                if e.arc == a {
                    e.head = !e.head;
                }
            }
        }
    }

    /// Rebuilds a one-face current graph from its log. Every vertex is
    /// solid; a vertex's rotation is a cycle of `face . reverse` on the
    /// darts leaving it. Arc `i` is oriented along the first traversal in
    /// the log, so tracing reproduces the log from its first token.
    pub fn from_log(log: &[Token], m: u32, kinds: &BTreeMap<String, VortexType>) -> Result<Self> {
        let n = log.len();
        let elems: Vec<(usize, u32)> =
            log.iter().enumerate().filter_map(|(p, t)| t.elem().map(|g| (p, g))).collect();
        let mut pos: HashMap<u32, usize> = HashMap::new();
        for (i, &(_, g)) in elems.iter().enumerate() {
            if g == 0 {
                return Err(Error::Current("log contains the zero element".into()));
            }
            if pos.insert(g, i).is_some() {
                return Err(Error::Current(format!("log repeats element {g}")));
            }
        }
        if pos.len() as u32 != m - 1 {
            return Err(Error::Current(format!("log has {} distinct elements, expected {}", pos.len(), m - 1)));
        }
        let d = elems.len();
        let face = |i: usize| (i + 1) % d;
        let theta = |i: usize| pos[&((m - elems[i].1) % m)];
        // letters following dart i
        let mut after: Vec<Vec<String>> = vec![Vec::new(); d];
        for (i, &(p, _)) in elems.iter().enumerate() {
            let mut q = (p + 1) % n;
            while let Token::Letter(l) = &log[q] {
                after[i].push(l.clone());
                q = (q + 1) % n;
            }
        }
        // arcs: one per {g, -g}, oriented by first appearance
        let mut arc_of: Vec<(usize, bool)> = vec![(usize::MAX, true); d];
        let mut arcs_darts: Vec<usize> = Vec::new();
        for i in 0..d {
            if arc_of[i].0 == usize::MAX {
                let a = arcs_darts.len();
                arcs_darts.push(i);
                arc_of[i] = (a, true);
                let j = theta(i);
                if j != i {
                    arc_of[j] = (a, false);
                }
            }
        }
        // vertices: cycles of sigma = face . theta on darts, as tails
        let mut tail = vec![usize::MAX; d];
        let mut vertices: Vec<CVertex> = Vec::new();
        for i in 0..d {
            if tail[i] != usize::MAX {
                continue;
            }
            let v = vertices.len();
            let mut rot = Vec::new();
            let mut j = i;
            loop {
                tail[j] = v;
                let (a, fwd) = arc_of[j];
                rot.push(End { arc: a, head: !fwd });
                j = face(theta(j));
                if j == i {
                    break;
                }
            }
            vertices.push(CVertex { name: format!("v{v}"), orient: Orient::Cw, rotation: rot });
        }
        let mut arcs: Vec<Arc> = Vec::new();
        for (a, &i) in arcs_darts.iter().enumerate() {
            let g = elems[i].1;
            let j = theta(i);
            let to = if j == i {
                let p = vertices.len();
                vertices.push(CVertex {
                    name: format!("p{p}"),
                    orient: Orient::Cw,
                    rotation: vec![End { arc: a, head: true }],
                });
                p
            } else {
                tail[j]
            };
            arcs.push(Arc { name: format!("e{g}"), from: tail[i], to, current: g });
        }
        let mut vortices = Vec::new();
        for i in 0..d {
            let j = theta(i);
            for l in &after[i] {
                if j == i {
                    return Err(Error::Current(format!("letter {l} follows the condensed element")));
                }
                let kind = *kinds
                    .get(l)
                    .ok_or_else(|| Error::Current(format!("letter {l} has no vortex type")))?;
                let v = tail[j];
                let (a, fwd) = arc_of[i];
                let after = (vertices[v].rotation.len() > 1).then_some(End { arc: a, head: fwd });
                vortices.push(Vortex { letter: l.clone(), kind, vertex: v, after });
            }
        }
        let cg = CurrentGraph { modulus: m, vertices, arcs, vortices };
        cg.check_structure()?;
        Ok(cg)
    }
}
