//! Rotation systems from three seed rows: row `k` is row `k mod 3` with
//! `k - (k mod 3)` added to every numbered entry.
//!
//! Seed files:
//!
//! ```text
//! group 18
//! vortex x T1
//! vortex y T2
//! row 0: 1 5 3 ... y 8 9 17 x
//! row 1: ...
//! row 2: ...
//! ```

use std::collections::BTreeMap;

use super::derive::{manufacture_rows, t2_label, VortexType};
use super::log::{parse_token, Token};
use crate::error::{Error, Result};
use crate::label::Label;
use crate::rotation::RotationSystem;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Index3Seed {
    pub modulus: u32,
    pub vortices: BTreeMap<String, VortexType>,
    pub rows: [Vec<Token>; 3],
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

pub fn parse_seed(text: &str) -> Result<Index3Seed> {
    let mut m = None;
    let mut vortices = BTreeMap::new();
    let mut rows: [Option<Vec<Token>>; 3] = [None, None, None];
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let t: Vec<&str> = line.split_whitespace().collect();
        match t[0] {
            "group" => {
                m = Some(
                    t.get(1)
                        .and_then(|s| s.parse::<u32>().ok())
                        .filter(|&m| m >= 3)
                        .ok_or_else(|| perr(ln, "group needs an order >= 3"))?,
                )
            }
            "vortex" => {
                if t.len() != 3 {
                    return Err(perr(ln, "expected `vortex LETTER TYPE`"));
                }
                let kind: VortexType = t[2].parse().map_err(|_| perr(ln, "bad vortex type"))?;
                if kind == VortexType::T3 {
                    return Err(perr(ln, "T3 letters are not supported in index-3 seeds"));
                }
                vortices.insert(t[1].to_string(), kind);
            }
            "row" => {
                let k: usize = t
                    .get(1)
                    .and_then(|s| s.strip_suffix(':'))
                    .and_then(|s| s.parse().ok())
                    .filter(|&k| k < 3)
                    .ok_or_else(|| perr(ln, "expected `row 0:`, `row 1:` or `row 2:`"))?;
                let mm = m.ok_or_else(|| perr(ln, "`group` must precede rows"))?;
                let toks = t[2..].iter().map(|s| parse_token(s, mm)).collect::<Result<Vec<_>>>()?;
                if rows[k].replace(toks).is_some() {
                    return Err(perr(ln, format!("row {k} given twice")));
                }
            }
            w => return Err(perr(ln, format!("unknown directive {w:?}"))),
        }
    }
    let modulus = m.ok_or_else(|| perr(0, "missing `group` line"))?;
    let [a, b, c] = rows;
    let rows = [
        a.ok_or_else(|| perr(0, "row 0 missing"))?,
        b.ok_or_else(|| perr(0, "row 1 missing"))?,
        c.ok_or_else(|| perr(0, "row 2 missing"))?,
    ];
    Ok(Index3Seed { modulus, vortices, rows })
}

pub fn write_seed(seed: &Index3Seed) -> String {
    let mut s = format!("group {}\n", seed.modulus);
    for (l, k) in &seed.vortices {
        s.push_str(&format!("vortex {l} {k}\n"));
    }
    for (k, row) in seed.rows.iter().enumerate() {
        let parts: Vec<String> = row.iter().map(Token::to_string).collect();
        s.push_str(&format!("row {k}: {}\n", parts.join(" ")));
    }
    s
}

/// Numbered rows of an index-3 seed.
pub fn index3_rows(seed: &Index3Seed) -> Result<Vec<(Label, Vec<Label>)>> {
    let m = seed.modulus;
    if !m.is_multiple_of(3) {
        return Err(Error::Current(format!("index-3 derivation needs 3 | m, got m = {m}")));
    }
    let mut out = Vec::with_capacity(m as usize);
    for k in 0..m {
        let shift = k - k % 3;
        let row = seed.rows[(k % 3) as usize]
            .iter()
            .map(|t| match t {
                Token::Elem(g) => Ok(Label::Num((g + shift) % m)),
                Token::Letter(l) => match seed.vortices.get(l) {
                    Some(VortexType::T1) => Ok(Label::tag(l)),
                    Some(VortexType::T2) => Ok(t2_label(l, k)),
                    _ => Err(Error::Current(format!("letter {l} has no usable vortex type"))),
                },
            })
            .collect::<Result<Vec<_>>>()?;
        out.push((Label::Num(k), row));
    }
    Ok(out)
}

/// Derives the full system, manufacturing the letter rows.
pub fn derive_index3(seed: &Index3Seed) -> Result<RotationSystem> {
    manufacture_rows(index3_rows(seed)?)
}
