//! Certificates: a constructed embedding together with the input it came
//! from, the steps that produced it and a digest of its face structure.
//!
//! ```text
//! certificate
//! n 10
//! type (6)
//! surface S4
//! digest V=10 E=45 F=27 surface=S4 faces=3:26,6:1 system=…
//! == input
//! <.rot>
//! == script
//! <steps>
//! == output
//! <.rot>
//! ```
//!
//! [`check`] retraces the output, recomputes the digest and replays the
//! script from the input; nothing in the file is trusted.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::distribution::{format_type, parse_type};
use crate::error::{Error, Result};
use crate::recipes::Built;
use crate::rotfmt::{parse_rot, write_rot};
use crate::surface::{Embedding, Surface};
use crate::surgery::script::{system_digest, Script};

/// Counts that pin down what was built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Digest {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub surface: Surface,
    pub distribution: BTreeMap<usize, usize>,
    pub system: String,
}

impl Digest {
    pub fn of(emb: &Embedding) -> Self {
        Digest {
            vertices: emb.sys.vertex_count(),
            edges: emb.sys.edge_count(),
            faces: emb.faces.len(),
            surface: emb.surface,
            distribution: emb.distribution(),
            system: system_digest(emb),
        }
    }
}

impl fmt::Display for Digest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dist: Vec<String> = self.distribution.iter().map(|(k, c)| format!("{k}:{c}")).collect();
        write!(
            f,
            "V={} E={} F={} surface={} faces={} system={}",
            self.vertices,
            self.edges,
            self.faces,
            self.surface,
            dist.join(","),
            self.system
        )
    }
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub n: usize,
    pub target: Vec<usize>,
    pub surface: Surface,
    pub digest: Digest,
    pub input: Embedding,
    pub script: Script,
    pub output: Embedding,
}

impl Certificate {
    pub fn new(n: usize, target: &[usize], built: &Built) -> Self {
        Certificate {
            n,
            target: target.to_vec(),
            surface: built.output.surface,
            digest: Digest::of(&built.output),
            input: built.input.clone(),
            script: built.script.clone(),
            output: built.output.clone(),
        }
    }

    pub fn to_text(&self) -> String {
        format!(
            "certificate\nn {}\ntype {}\nsurface {}\ndigest {}\n== input\n{}== script\n{}== output\n{}",
            self.n,
            format_type(&self.target),
            self.surface,
            self.digest,
            write_rot(&self.input.sys),
            self.script.to_text(),
            write_rot(&self.output.sys)
        )
    }

    /// Parses a certificate without checking it.
    pub fn parse(text: &str) -> Result<(Header, Self)> {
        let perr = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
        let mut sections: BTreeMap<&str, (usize, String)> = BTreeMap::new();
        let mut current = "header";
        let mut start = 1;
        let mut buf = String::new();
        for (i, line) in text.lines().enumerate() {
            if let Some(name) = line.strip_prefix("== ") {
                sections.insert(current, (start, std::mem::take(&mut buf)));
                current = match name.trim() {
                    "input" => "input",
                    "script" => "script",
                    "output" => "output",
                    _ => return Err(perr(i + 1, "unknown section")),
                };
                start = i + 2;
            } else {
                buf.push_str(line);
                buf.push('\n');
            }
        }
        sections.insert(current, (start, buf));
        let get = |k: &str| sections.get(k).ok_or_else(|| perr(0, &format!("missing section {k}")));
        let header = Header::parse(&get("header")?.1)?;
        let shift = |(at, e): (usize, Error)| match e {
            Error::Parse { line, msg } => Error::Parse { line: line + at - 1, msg },
            other => other,
        };
        let (ia, it) = get("input")?;
        let input = Embedding::new(parse_rot(it).map_err(|e| shift((*ia, e)))?)?;
        let (sa, st) = get("script")?;
        let script = Script::parse(st).map_err(|e| shift((*sa, e)))?;
        let (oa, ot) = get("output")?;
        let output = Embedding::new(parse_rot(ot).map_err(|e| shift((*oa, e)))?)?;
        let cert = Certificate {
            n: header.n,
            target: header.target.clone(),
            surface: output.surface,
            digest: Digest::of(&output),
            input,
            script,
            output,
        };
        Ok((header, cert))
    }
}

/// The claims a certificate makes about itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Header {
    pub n: usize,
    pub target: Vec<usize>,
    pub surface: String,
    pub digest: String,
}

impl Header {
    fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let perr = |line: usize, msg: String| Error::Parse { line, msg };
        match lines.next() {
            Some((_, "certificate")) => {}
            _ => return Err(perr(1, "expected `certificate`".into())),
        }
        let mut field = |key: &str| -> Result<String> {
            let (i, l) = lines.next().ok_or_else(|| perr(0, format!("missing `{key}`")))?;
            l.strip_prefix(key)
                .and_then(|r| r.strip_prefix(' '))
                .map(str::to_string)
                .ok_or_else(|| perr(i + 1, format!("expected `{key}`")))
        };
        let n = field("n")?.trim().parse().map_err(|_| perr(2, "bad n".into()))?;
        let target = parse_type(&field("type")?)?;
        let surface = field("surface")?;
        let digest = field("digest")?;
        Ok(Header { n, target, surface, digest })
    }
}

/// Verifies a certificate text: the output is K_n with the claimed type and
/// surface, the digest matches a fresh trace, and replaying the script from
/// the input reproduces the output.
pub fn check(text: &str) -> Result<Certificate> {
    let (h, cert) = Certificate::parse(text)?;
    let verr = |m: String| Err(Error::Verification(m));
    let out = &cert.output;
    if out.sys.vertex_count() != h.n || !out.sys.is_complete() {
        return verr(format!("output is not K{}", h.n));
    }
    if out.embedding_type() != h.target {
        return verr(format!("output has type {}, header says {}", format_type(&out.embedding_type()), format_type(&h.target)));
    }
    if out.surface.to_string() != h.surface {
        return verr(format!("output lies on {}, header says {}", out.surface, h.surface));
    }
    if cert.digest.to_string() != h.digest {
        return verr(format!("digest is {}, header says {}", cert.digest, h.digest));
    }
    let replayed = cert.script.replay(&cert.input)?;
    if system_digest(&replayed) != system_digest(out) {
        return verr("replaying the script does not reproduce the output".into());
    }
    Ok(cert)
}
