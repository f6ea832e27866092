//! The `.cur` text format.
//!
//! ```text
//! group 18
//! vtx v0 3 cw rotation: e11 e7 e8
//! vtx v1 1 cw rotation: e11
//! arc e11 v0 v1 current 11
//! vortex x at v1 type T1
//! vortex a at v2 type T3 after e7
//! ```
//!
//! Rotation entries name arcs; at a loop the two ends are told apart by the
//! suffixes `+` (head) and `-` (tail). `after E` places a letter in the
//! corner that follows end `E` in the vertex's effective rotation.

use std::collections::HashMap;
use std::fmt::Write;

use super::derive::VortexType;
use super::graph::{Arc, CVertex, CurrentGraph, End, Orient, Vortex};
use crate::error::{Error, Result};

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

struct RawVertex {
    line: usize,
    name: String,
    degree: usize,
    orient: Orient,
    ends: Vec<String>,
}

struct RawVortex {
    line: usize,
    letter: String,
    at: String,
    kind: VortexType,
    after: Option<String>,
}

pub fn parse_cur(text: &str) -> Result<CurrentGraph> {
    let mut modulus = None;
    let mut raw_v = Vec::new();
    let mut arcs: Vec<(usize, String, String, String, i64)> = Vec::new();
    let mut raw_x = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let t: Vec<&str> = line.split_whitespace().collect();
        match t[0] {
            "group" => {
                let m: u32 = t
                    .get(1)
                    .and_then(|s| s.parse().ok())
                    .filter(|&m| m >= 2)
                    .ok_or_else(|| perr(ln, "group needs an order >= 2"))?;
                modulus = Some(m);
            }
            "vtx" => {
                if t.len() < 5 || t[4] != "rotation:" {
                    return Err(perr(ln, "expected `vtx NAME DEG cw|ccw rotation: ...`"));
                }
                let degree = t[2].parse().map_err(|_| perr(ln, "bad degree"))?;
                let orient = match t[3] {
                    "cw" => Orient::Cw,
                    "ccw" => Orient::Ccw,
                    o => return Err(perr(ln, format!("bad orientation {o:?}"))),
                };
                raw_v.push(RawVertex {
                    line: ln,
                    name: t[1].to_string(),
                    degree,
                    orient,
                    ends: t[5..].iter().map(|s| s.to_string()).collect(),
                });
            }
            "arc" => {
                if t.len() != 6 || t[4] != "current" {
                    return Err(perr(ln, "expected `arc NAME FROM TO current C`"));
                }
                let c: i64 = t[5].parse().map_err(|_| perr(ln, "bad current"))?;
                arcs.push((ln, t[1].into(), t[2].into(), t[3].into(), c));
            }
            "vortex" => {
                let ok = (t.len() == 6 || (t.len() == 8 && t[6] == "after")) && t[2] == "at" && t[4] == "type";
                if !ok {
                    return Err(perr(ln, "expected `vortex L at NAME type T [after E]`"));
                }
                raw_x.push(RawVortex {
                    line: ln,
                    letter: t[1].into(),
                    at: t[3].into(),
                    kind: t[5].parse().map_err(|_| perr(ln, format!("bad vortex type {:?}", t[5])))?,
                    after: t.get(7).map(|s| s.to_string()),
                });
            }
            w => return Err(perr(ln, format!("unknown directive {w:?}"))),
        }
    }
    let m = modulus.ok_or_else(|| perr(0, "missing `group` line"))?;
    let vidx: HashMap<&str, usize> =
        raw_v.iter().enumerate().map(|(i, v)| (v.name.as_str(), i)).collect();
    let mut aidx: HashMap<&str, usize> = HashMap::new();
    let mut out_arcs = Vec::new();
    for (k, (ln, name, from, to, c)) in arcs.iter().enumerate() {
        let f = *vidx.get(from.as_str()).ok_or_else(|| perr(*ln, format!("unknown vertex {from}")))?;
        let g = *vidx.get(to.as_str()).ok_or_else(|| perr(*ln, format!("unknown vertex {to}")))?;
        if aidx.insert(name, k).is_some() {
            return Err(perr(*ln, format!("duplicate arc {name}")));
        }
        out_arcs.push(Arc {
            name: name.clone(),
            from: f,
            to: g,
            current: c.rem_euclid(m as i64) as u32,
        });
    }
    let end_of = |tok: &str, v: usize, ln: usize| -> Result<End> {
        let (name, suffix) = match tok.strip_suffix('+') {
            Some(n) => (n, Some(true)),
            None => match tok.strip_suffix('-') {
                Some(n) => (n, Some(false)),
                None => (tok, None),
            },
        };
        let a = *aidx.get(name).ok_or_else(|| perr(ln, format!("unknown arc {name}")))?;
        let arc = &out_arcs[a];
        let head = match suffix {
            Some(h) => h,
            None if arc.from == arc.to => {
                return Err(perr(ln, format!("loop {name} needs an end suffix")))
            }
            None if arc.to == v => true,
            None if arc.from == v => false,
            None => return Err(perr(ln, format!("arc {name} does not meet this vertex"))),
        };
        Ok(End { arc: a, head })
    };
    let mut vertices = Vec::new();
    for (v, rv) in raw_v.iter().enumerate() {
        if rv.ends.len() != rv.degree {
            return Err(perr(rv.line, format!("vertex {} declares degree {} but lists {}", rv.name, rv.degree, rv.ends.len())));
        }
        let rotation = rv.ends.iter().map(|e| end_of(e, v, rv.line)).collect::<Result<Vec<_>>>()?;
        vertices.push(CVertex { name: rv.name.clone(), orient: rv.orient, rotation });
    }
    let mut vortices = Vec::new();
    for x in &raw_x {
        let v = *vidx.get(x.at.as_str()).ok_or_else(|| perr(x.line, format!("unknown vertex {}", x.at)))?;
        let after = match &x.after {
            Some(e) => Some(end_of(e, v, x.line)?),
            None if vertices[v].rotation.len() == 1 => None,
            None => return Err(perr(x.line, "a vortex at a vertex of degree above 1 needs `after`")),
        };
        vortices.push(Vortex { letter: x.letter.clone(), kind: x.kind, vertex: v, after });
    }
    let cg = CurrentGraph { modulus: m, vertices, arcs: out_arcs, vortices };
    cg.check_structure()?;
    Ok(cg)
}

pub fn write_cur(cg: &CurrentGraph) -> String {
    let mut s = String::new();
    writeln!(s, "group {}", cg.modulus).unwrap();
    let end_name = |e: End| {
        let a = &cg.arcs[e.arc];
        if a.from == a.to {
            format!("{}{}", a.name, if e.head { '+' } else { '-' })
        } else {
            a.name.clone()
        }
    };
    for v in &cg.vertices {
        let o = if v.orient == Orient::Cw { "cw" } else { "ccw" };
        let ends: Vec<String> = v.rotation.iter().map(|&e| end_name(e)).collect();
        writeln!(s, "vtx {} {} {o} rotation: {}", v.name, v.rotation.len(), ends.join(" ")).unwrap();
    }
    for a in &cg.arcs {
        writeln!(s, "arc {} {} {} current {}", a.name, cg.vertices[a.from].name, cg.vertices[a.to].name, a.current).unwrap();
    }
    for x in &cg.vortices {
        write!(s, "vortex {} at {} type {}", x.letter, cg.vertices[x.vertex].name, x.kind).unwrap();
        if let Some(e) = x.after {
            write!(s, " after {}", end_name(e)).unwrap();
        }
        s.push('\n');
    }
    s
}
