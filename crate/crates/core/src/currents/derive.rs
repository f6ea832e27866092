//! Rows from a log by the additive rule, and manufactured vortex rows.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::log::Token;
use crate::error::{Error, Result};
use crate::label::Label;
use crate::rotation::RotationSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VortexType {
    T1,
    T2,
    T3,
}

impl fmt::Display for VortexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VortexType::T1 => "T1",
            VortexType::T2 => "T2",
            VortexType::T3 => "T3",
        })
    }
}

impl FromStr for VortexType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "T1" => Ok(VortexType::T1),
            "T2" => Ok(VortexType::T2),
            "T3" => Ok(VortexType::T3),
            _ => Err(Error::Parse { line: 0, msg: format!("unknown vortex type {s:?}") }),
        }
    }
}

/// Vortex metadata as used by the additive rule. Letters of a T3 vortex
/// share the same `group` name (their current graph vertex).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VortexInfo {
    pub letter: String,
    pub kind: VortexType,
    pub group: String,
}

/// Label of a T2 letter in row `k`.
pub fn t2_label(letter: &str, k: u32) -> Label {
    Label::tag(&format!("{letter}_{}", k % 2))
}

/// Applies the additive rule: row `k` is the log with every element shifted
/// by `k`, T1 letters fixed, T2 letters `y -> y_{k mod 2}`, and the letters
/// of each T3 vortex cycled according to the residue of their incoming
/// currents. Rows are returned for `k = 0..m`.
pub fn derive_rows(log: &[Token], m: u32, vortices: &[VortexInfo]) -> Result<Vec<(Label, Vec<Label>)>> {
    let info: HashMap<&str, &VortexInfo> = vortices.iter().map(|v| (v.letter.as_str(), v)).collect();
    let n = log.len();
    // T3 slots: for every group, the log positions of its letters and the residue
    let mut t3: BTreeMap<&str, (Vec<usize>, Option<u32>)> = BTreeMap::new();
    for (p, t) in log.iter().enumerate() {
        let Token::Letter(l) = t else { continue };
        let v = info
            .get(l.as_str())
            .ok_or_else(|| Error::Current(format!("letter {l} has no vortex metadata")))?;
        match v.kind {
            VortexType::T1 => {}
            VortexType::T2 => {
                if !m.is_multiple_of(2) {
                    return Err(Error::Current(format!("T2 letter {l} needs an even group order")));
                }
            }
            VortexType::T3 => {
                if !m.is_multiple_of(3) {
                    return Err(Error::Current(format!("T3 letter {l} needs 3 | m")));
                }
                let incoming = log[(p + n - 1) % n]
                    .elem()
                    .ok_or_else(|| Error::Current(format!("letter {l} is not preceded by a current")))?;
                let r = incoming % 3;
                let e = t3.entry(v.group.as_str()).or_insert((Vec::new(), None));
                if r == 0 || e.1.is_some_and(|r0| r0 != r) {
                    return Err(Error::Current(format!(
                        "T3 vortex {} has incoming currents in mixed residue classes",
                        v.group
                    )));
                }
                e.1 = Some(r);
                e.0.push(p);
            }
        }
    }
    for (g, (slots, _)) in &t3 {
        if slots.len() != 3 {
            return Err(Error::Current(format!("T3 vortex {g} shows {} letters, not 3", slots.len())));
        }
    }
    let mut rows = Vec::with_capacity(m as usize);
    for k in 0..m {
        let mut row: Vec<Label> = Vec::with_capacity(n);
        for t in log {
            row.push(match t {
                Token::Elem(g) => Label::Num((g + k) % m),
                Token::Letter(l) => match info[l.as_str()].kind {
                    VortexType::T1 | VortexType::T3 => Label::tag(l),
                    VortexType::T2 => t2_label(l, k),
                },
            });
        }
        for (slots, r) in t3.values() {
            let r = r.expect("residue recorded with each slot");
            let letters: Vec<Label> = slots.iter().map(|&p| row[p].clone()).collect();
            for (i, &p) in slots.iter().enumerate() {
                row[p] = letters[(i + (k * r) as usize) % 3].clone();
            }
        }
        rows.push((Label::Num(k), row));
    }
    Ok(rows)
}

/// Completes a partial system: every vertex that is named in some row but
/// has no row of its own receives the unique rotation forced by Rule R*,
/// namely `succ_L(k) = pred_k(L)`.
pub fn manufacture_rows(rows: Vec<(Label, Vec<Label>)>) -> Result<RotationSystem> {
    let have: std::collections::BTreeSet<Label> = rows.iter().map(|(v, _)| v.clone()).collect();
    let mut succ: BTreeMap<Label, BTreeMap<Label, Label>> = BTreeMap::new();
    for (k, row) in &rows {
        let n = row.len();
        for (p, l) in row.iter().enumerate() {
            if have.contains(l) {
                continue;
            }
            let before = row[(p + n - 1) % n].clone();
            if !have.contains(&before) {
                return Err(Error::Current(format!(
                    "row {k} has missing-row vertices {before} and {l} adjacent"
                )));
            }
            if succ.entry(l.clone()).or_default().insert(k.clone(), before).is_some() {
                return Err(Error::Current(format!("row {k} lists {l} twice")));
            }
        }
    }
    let mut all = rows;
    for (l, map) in succ {
        let start = map.keys().next().expect("nonempty").clone();
        let mut row = vec![start.clone()];
        let mut cur = start.clone();
        loop {
            let nx = map
                .get(&cur)
                .ok_or_else(|| Error::Current(format!("row {l} cannot be closed at {cur}")))?
                .clone();
            if nx == start {
                break;
            }
            if row.len() > map.len() {
                return Err(Error::Current(format!("row {l} does not close")));
            }
            row.push(nx.clone());
            cur = nx;
        }
        if row.len() != map.len() {
            return Err(Error::Current(format!(
                "row {l} splits into several cycles ({} of {} neighbors in the first)",
                row.len(),
                map.len()
            )));
        }
        all.push((l, row));
    }
    RotationSystem::from_rows_orientable(all)
}

/// Additive rule followed by manufacturing of the vortex rows.
pub fn derive_system(log: &[Token], m: u32, vortices: &[VortexInfo]) -> Result<RotationSystem> {
    manufacture_rows(derive_rows(log, m, vortices)?)
}
