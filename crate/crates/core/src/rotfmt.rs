//! The `.rot` text format.
//!
//! ```text
//! orientable: true
//! 0. 1 2 3
//! 1. 0 3 2
//! sig 0 1 -1
//! ```
//!
//! Rows list the clockwise rotation of each vertex; `sig` lines name the
//! negatively signed edges; `#` starts a comment. The header must agree with
//! the orientability computed from the signatures. Written files list rows
//! in vertex order and `sig` lines in edge order, so parsing and writing a
//! written file reproduces it byte for byte.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::label::Label;
use crate::rotation::RotationSystem;
use crate::surface::is_orientable;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_label(tok: &str, line: usize) -> Result<Label> {
    tok.parse::<Label>().map_err(|e| perr(line, e.to_string()))
}

pub fn parse_rot(text: &str) -> Result<RotationSystem> {
    let mut header: Option<bool> = None;
    let mut rows = Vec::new();
    let mut neg = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("orientable:") {
            if header.is_some() {
                return Err(perr(ln, "duplicate header"));
            }
            header = Some(match rest.trim() {
                "true" => true,
                "false" => false,
                other => return Err(perr(ln, format!("bad orientable flag {other:?}"))),
            });
            continue;
        }
        let mut toks = line.split_whitespace();
        let first = toks.next().expect("nonempty line");
        if first == "sig" {
            let t: Vec<&str> = toks.collect();
            if t.len() != 3 {
                return Err(perr(ln, "sig line needs two labels and a sign"));
            }
            match t[2] {
                "-1" => neg.push((parse_label(t[0], ln)?, parse_label(t[1], ln)?)),
                "+1" | "1" => {}
                s => return Err(perr(ln, format!("bad signature {s:?}"))),
            }
            continue;
        }
        let Some(v) = first.strip_suffix('.') else {
            return Err(perr(ln, format!("expected `LABEL.` but found {first:?}")));
        };
        let v = parse_label(v, ln)?;
        let row = toks.map(|t| parse_label(t, ln)).collect::<Result<Vec<_>>>()?;
        rows.push((v, row));
    }
    let header = header.ok_or_else(|| perr(0, "missing `orientable:` header"))?;
    let sys = RotationSystem::from_rows(rows, neg)?;
    if header != is_orientable(&sys) {
        return Err(perr(0, format!("header says orientable: {header} but signatures disagree")));
    }
    Ok(sys)
}

pub fn write_rot(sys: &RotationSystem) -> String {
    let mut s = String::new();
    writeln!(s, "orientable: {}", is_orientable(sys)).unwrap();
    for v in 0..sys.vertex_count() {
        write!(s, "{}.", sys.label(v)).unwrap();
        for u in sys.row_labels(v) {
            write!(s, " {u}").unwrap();
        }
        s.push('\n');
    }
    for (a, b) in sys.negative_edges() {
        writeln!(s, "sig {a} {b} -1").unwrap();
    }
    s
}

pub fn read_rot_file(path: &std::path::Path) -> Result<RotationSystem> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_rot(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    const K4: &str = "orientable: true\n0. 1 2 3\n1. 0 3 2\n2. 0 1 3\n3. 0 2 1\n";

    #[test]
    fn round_trip() {
        let s = parse_rot(K4).unwrap();
        assert_eq!(write_rot(&s), K4);
    }

    #[test]
    fn signed_round_trip() {
        let text = "orientable: false\n1. 2 3\n2. 3 1\n3. 1 2\nsig 1 2 -1\n";
        assert_eq!(write_rot(&parse_rot(text).unwrap()), text);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# tetrahedron\norientable: true\n\n0. 1 2 3 # row zero\n1. 0 3 2\n2. 0 1 3\n3. 0 2 1\n";
        assert_eq!(write_rot(&parse_rot(text).unwrap()), K4);
    }

    #[test]
    fn malformed() {
        assert!(matches!(parse_rot("0. 1\n1. 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_rot("orientable: maybe\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_rot("orientable: true\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(
            parse_rot("orientable: false\n0. 1\n1. 0\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_rot("orientable: true\n0. 1\n"), Err(Error::InvalidSystem(_))));
    }
}
