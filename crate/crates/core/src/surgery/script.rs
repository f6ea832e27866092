//! Replayable surgery scripts, one step per line:
//!
//! ```text
//! chord u v in FACE@i,j
//! delete u v
//! exchange u v into FACE@i,j
//! flip - a b + c d
//! handle x@FACE:i y@FACE:j
//! k3 v x y z
//! contract u v as w
//! crosscap u v
//! twist v a b
//! subdivide FACE w
//! delvtx v
//! expect DIGEST
//! ```
//!
//! `FACE` is a face hash; corner indices refer to its canonical corner
//! cycle. `expect` checks the digest of the current system.

use std::fmt;

use sha2::{Digest, Sha256};

use super::ops::{self, CornerRef, Placement};
use crate::error::{Error, Result};
use crate::label::Label;
use crate::rotfmt::write_rot;
use crate::surface::Embedding;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Chord { u: Label, v: Label, at: Placement },
    Delete { u: Label, v: Label },
    Exchange { u: Label, v: Label, into: Placement },
    Flip { a: Label, b: Label, c: Label, d: Label },
    Handle { x: Label, xc: CornerRef, y: Label, yc: CornerRef },
    K3 { v: Label, x: Label, y: Label, z: Label },
    Contract { u: Label, v: Label, w: Label },
    Crosscap { u: Label, v: Label },
    Twist { v: Label, a: Label, b: Label },
    Subdivide { face: String, w: Label },
    DelVertex { v: Label },
    Expect { digest: String },
}

/// Stable digest of a rotation system: SHA-256 of its `.rot` text, 16 hex.
pub fn system_digest(emb: &Embedding) -> String {
    hex::encode(&Sha256::digest(write_rot(&emb.sys).as_bytes())[..8])
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Chord { u, v, at } => write!(f, "chord {u} {v} in {}@{},{}", at.face, at.i, at.j),
            Step::Delete { u, v } => write!(f, "delete {u} {v}"),
            Step::Exchange { u, v, into } => {
                write!(f, "exchange {u} {v} into {}@{},{}", into.face, into.i, into.j)
            }
            Step::Flip { a, b, c, d } => write!(f, "flip - {a} {b} + {c} {d}"),
            Step::Handle { x, xc, y, yc } => {
                write!(f, "handle {x}@{}:{} {y}@{}:{}", xc.face, xc.index, yc.face, yc.index)
            }
            Step::K3 { v, x, y, z } => write!(f, "k3 {v} {x} {y} {z}"),
            Step::Contract { u, v, w } => write!(f, "contract {u} {v} as {w}"),
            Step::Crosscap { u, v } => write!(f, "crosscap {u} {v}"),
            Step::Twist { v, a, b } => write!(f, "twist {v} {a} {b}"),
            Step::Subdivide { face, w } => write!(f, "subdivide {face} {w}"),
            Step::DelVertex { v } => write!(f, "delvtx {v}"),
            Step::Expect { digest } => write!(f, "expect {digest}"),
        }
    }
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn label(s: &str, ln: usize) -> Result<Label> {
    s.parse().map_err(|e: Error| perr(ln, e.to_string()))
}

fn placement(s: &str, ln: usize) -> Result<Placement> {
    let (face, idx) = s.split_once('@').ok_or_else(|| perr(ln, format!("expected FACE@i,j, got {s:?}")))?;
    let (i, j) = idx.split_once(',').ok_or_else(|| perr(ln, format!("expected FACE@i,j, got {s:?}")))?;
    Ok(Placement {
        face: face.to_string(),
        i: i.parse().map_err(|_| perr(ln, "bad corner index"))?,
        j: j.parse().map_err(|_| perr(ln, "bad corner index"))?,
    })
}

fn corner_ref(s: &str, ln: usize) -> Result<(Label, CornerRef)> {
    let (v, rest) = s.split_once('@').ok_or_else(|| perr(ln, format!("expected v@FACE:i, got {s:?}")))?;
    let (face, i) = rest.split_once(':').ok_or_else(|| perr(ln, format!("expected v@FACE:i, got {s:?}")))?;
    Ok((
        label(v, ln)?,
        CornerRef { face: face.to_string(), index: i.parse().map_err(|_| perr(ln, "bad corner index"))? },
    ))
}

pub fn parse_step(line: &str, ln: usize) -> Result<Step> {
    let t: Vec<&str> = line.split_whitespace().collect();
    let want = |n: usize| -> Result<()> {
        if t.len() == n {
            Ok(())
        } else {
            Err(perr(ln, format!("`{}` takes {} fields", t[0], n - 1)))
        }
    };
    let step = match t.first().copied().unwrap_or("") {
        "chord" => {
            want(5)?;
            if t[3] != "in" {
                return Err(perr(ln, "expected `chord u v in FACE@i,j`"));
            }
            Step::Chord { u: label(t[1], ln)?, v: label(t[2], ln)?, at: placement(t[4], ln)? }
        }
        "delete" => {
            want(3)?;
            Step::Delete { u: label(t[1], ln)?, v: label(t[2], ln)? }
        }
        "exchange" => {
            want(5)?;
            if t[3] != "into" {
                return Err(perr(ln, "expected `exchange u v into FACE@i,j`"));
            }
            Step::Exchange { u: label(t[1], ln)?, v: label(t[2], ln)?, into: placement(t[4], ln)? }
        }
        "flip" => {
            want(7)?;
            if t[1] != "-" || t[4] != "+" {
                return Err(perr(ln, "expected `flip - a b + c d`"));
            }
            Step::Flip { a: label(t[2], ln)?, b: label(t[3], ln)?, c: label(t[5], ln)?, d: label(t[6], ln)? }
        }
        "handle" => {
            want(3)?;
            let (x, xc) = corner_ref(t[1], ln)?;
            let (y, yc) = corner_ref(t[2], ln)?;
            Step::Handle { x, xc, y, yc }
        }
        "k3" => {
            want(5)?;
            Step::K3 { v: label(t[1], ln)?, x: label(t[2], ln)?, y: label(t[3], ln)?, z: label(t[4], ln)? }
        }
        "contract" => {
            if t.len() == 3 {
                let u = label(t[1], ln)?;
                Step::Contract { w: u.clone(), u, v: label(t[2], ln)? }
            } else {
                want(5)?;
                if t[3] != "as" {
                    return Err(perr(ln, "expected `contract u v [as w]`"));
                }
                Step::Contract { u: label(t[1], ln)?, v: label(t[2], ln)?, w: label(t[4], ln)? }
            }
        }
        "crosscap" => {
            want(3)?;
            Step::Crosscap { u: label(t[1], ln)?, v: label(t[2], ln)? }
        }
        "twist" => {
            want(4)?;
            Step::Twist { v: label(t[1], ln)?, a: label(t[2], ln)?, b: label(t[3], ln)? }
        }
        "subdivide" => {
            want(3)?;
            Step::Subdivide { face: t[1].to_string(), w: label(t[2], ln)? }
        }
        "delvtx" => {
            want(2)?;
            Step::DelVertex { v: label(t[1], ln)? }
        }
        "expect" => {
            want(2)?;
            Step::Expect { digest: t[1].to_string() }
        }
        w => return Err(perr(ln, format!("unknown step {w:?}"))),
    };
    Ok(step)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Script {
    pub steps: Vec<Step>,
}

impl Script {
    pub fn parse(text: &str) -> Result<Self> {
        let mut steps = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if !line.is_empty() {
                steps.push(parse_step(line, i + 1)?);
            }
        }
        Ok(Script { steps })
    }

    pub fn to_text(&self) -> String {
        self.steps.iter().map(|s| format!("{s}\n")).collect()
    }

    /// Applies every step in order.
    pub fn replay(&self, emb: &Embedding) -> Result<Embedding> {
        let mut cur = emb.clone();
        for (i, s) in self.steps.iter().enumerate() {
            cur = apply(&cur, s).map_err(|e| match e {
                Error::Verification(m) => Error::Verification(format!("step {} ({s}): {m}", i + 1)),
                Error::Precondition(m) => Error::Precondition(format!("step {} ({s}): {m}", i + 1)),
                other => other,
            })?;
        }
        Ok(cur)
    }
}

pub fn apply(emb: &Embedding, step: &Step) -> Result<Embedding> {
    match step {
        Step::Chord { u, v, at } => ops::add_chord(emb, at, u, v),
        Step::Delete { u, v } => Ok(ops::delete_edge(emb, u, v)?.embedding),
        Step::Exchange { u, v, into } => ops::chord_exchange(emb, u, v, into),
        Step::Flip { a, b, c, d } => ops::edge_flip(emb, a, b, c, d),
        Step::Handle { x, xc, y, yc } => {
            for (l, c) in [(x, xc), (y, yc)] {
                let f = emb.face(&c.face)?;
                match f.corners.get(c.index) {
                    Some(k) if emb.sys.label(k.vertex) == l => {}
                    _ => return Err(Error::Precondition(format!("corner {}:{} is not at {l}", c.face, c.index))),
                }
            }
            ops::add_edge_via_handle(emb, xc, yc)
        }
        Step::K3 { v, x, y, z } => ops::construction_k3(emb, v, x, y, z),
        Step::Contract { u, v, w } => ops::contract_edge(emb, u, v, w),
        Step::Crosscap { u, v } => ops::add_crosscap_on_edge(emb, u, v),
        Step::Twist { v, a, b } => ops::twist_segment(emb, v, a, b),
        Step::Subdivide { face, w } => ops::subdivide_face(emb, face, w),
        Step::DelVertex { v } => ops::delete_vertex(emb, v),
        Step::Expect { digest } => {
            let d = system_digest(emb);
            if &d == digest {
                Ok(emb.clone())
            } else {
                Err(Error::Verification(format!("digest {d} differs from expected {digest}")))
            }
        }
    }
}

/// Applies steps while recording them.
#[derive(Clone, Debug)]
pub struct Recorder {
    pub emb: Embedding,
    pub script: Script,
}

impl Recorder {
    pub fn new(emb: Embedding) -> Self {
        Recorder { emb, script: Script::default() }
    }

    pub fn step(&mut self, s: Step) -> Result<&Embedding> {
        self.emb = apply(&self.emb, &s)?;
        self.script.steps.push(s);
        Ok(&self.emb)
    }

    /// Takes over the outcome of a placement search.
    pub fn absorb(&mut self, found: super::placement::Found) {
        self.emb = found.embedding;
        self.script.steps.extend(found.steps);
    }

    /// Appends an `expect` step pinning the current digest.
    pub fn pin(&mut self) {
        self.script.steps.push(Step::Expect { digest: system_digest(&self.emb) });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn step_round_trip() {
        let lines = [
            "chord a y in 0123456789abcdef@1,7",
            "delete 0 10",
            "exchange v w into 0123456789abcdef@0,3",
            "flip - 0 10 + x y",
            "handle x@aaaa:0 y@bbbb:2",
            "k3 13 y_0 y_1 x",
            "contract y_0 y_1 as y",
            "crosscap a b",
            "twist 0 3 5",
            "subdivide 0123456789abcdef p",
            "delvtx p",
            "expect 0011223344556677",
        ];
        for l in lines {
            assert_eq!(parse_step(l, 1).unwrap().to_string(), l);
        }
        assert!(parse_step("flip 0 10 x y", 1).is_err());
        assert!(parse_step("bogus", 1).is_err());
    }
}
