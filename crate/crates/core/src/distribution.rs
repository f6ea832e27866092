//! Embedding types, the minimality test and repeated-vertex structure of faces.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::faces::Face;
use crate::rotation::RotationSystem;

/// Excess `sum(a_i - 3)` of an embedding type.
pub fn excess(ty: &[usize]) -> usize {
    ty.iter().map(|a| a.saturating_sub(3)).sum()
}

/// Sufficient test for minimum genus: at most five edges beyond a
/// triangulation. A false result is inconclusive.
pub fn is_minimum_by_type(ty: &[usize]) -> bool {
    excess(ty) <= 5
}

/// All embedding types with excess `t`, i.e. partitions of `t` shifted by 3.
pub fn types_for_excess(t: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.iter().map(|b| b + 3).collect());
            return;
        }
        for b in (1..=rem.min(max)).rev() {
            cur.push(b);
            go(rem - b, b, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(t, t, &mut Vec::new(), &mut out);
    out
}

/// Parses a type written as `(5,4)`, `5,4` or `()`.
pub fn parse_type(s: &str) -> Result<Vec<usize>> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    let mut ty = Vec::new();
    for part in inner.split(',') {
        let a: usize = part
            .trim()
            .parse()
            .map_err(|_| Error::Parse { line: 0, msg: format!("bad embedding type {s:?}") })?;
        if a <= 3 {
            return Err(Error::Parse { line: 0, msg: format!("type entries must exceed 3: {s:?}") });
        }
        ty.push(a);
    }
    ty.sort_unstable_by(|a, b| b.cmp(a));
    Ok(ty)
}

pub fn format_type(ty: &[usize]) -> String {
    let parts: Vec<String> = ty.iter().map(|a| a.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Repeated-vertex structure of a face boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum FaceShape {
    /// No vertex occurs twice.
    Simple,
    /// A 6-gon `[a, b, x, c, d, x]`: one vertex at opposite positions.
    OppositeRepeat { vertex: usize, positions: (usize, usize) },
    /// Any other pattern of repeated vertices.
    Repeated { vertices: Vec<usize> },
}

pub fn is_simple_cycle(cycle: &[usize]) -> bool {
    let mut seen = std::collections::HashSet::new();
    cycle.iter().all(|v| seen.insert(*v))
}

/// Classifies a vertex cycle by its repeated vertices.
pub fn classify_cycle(cycle: &[usize]) -> FaceShape {
    let mut pos: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, &v) in cycle.iter().enumerate() {
        pos.entry(v).or_default().push(i);
    }
    let mut rep: Vec<(usize, Vec<usize>)> = pos.into_iter().filter(|(_, p)| p.len() > 1).collect();
    if rep.is_empty() {
        return FaceShape::Simple;
    }
    rep.sort();
    if cycle.len() == 6 && rep.len() == 1 && rep[0].1.len() == 2 && rep[0].1[1] - rep[0].1[0] == 3 {
        return FaceShape::OppositeRepeat { vertex: rep[0].0, positions: (rep[0].1[0], rep[0].1[1]) };
    }
    FaceShape::Repeated { vertices: rep.into_iter().map(|(v, _)| v).collect() }
}

/// Classifies a face, enforcing the minimum degree 2 hypothesis.
pub fn repeated_vertex_structure(sys: &RotationSystem, face: &Face) -> Result<FaceShape> {
    if let Some(v) = (0..sys.vertex_count()).find(|&v| sys.degree(v) < 2) {
        return Err(Error::Domain(format!(
            "vertex {} has degree {}; classification needs minimum degree 2",
            sys.label(v),
            sys.degree(v)
        )));
    }
    Ok(classify_cycle(&face.vertices()))
}

pub fn is_simple_face(face: &Face) -> bool {
    is_simple_cycle(&face.vertices())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimality() {
        assert!(is_minimum_by_type(&[5]));
        assert!(is_minimum_by_type(&[]));
        assert!(!is_minimum_by_type(&[10]));
    }

    #[test]
    fn partitions() {
        assert_eq!(
            types_for_excess(5),
            vec![
                vec![8],
                vec![7, 4],
                vec![6, 5],
                vec![6, 4, 4],
                vec![5, 5, 4],
                vec![5, 4, 4, 4],
                vec![4, 4, 4, 4, 4]
            ]
        );
        assert_eq!(types_for_excess(3), vec![vec![6], vec![5, 4], vec![4, 4, 4]]);
        assert_eq!(types_for_excess(0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_type("(4,5)").unwrap(), vec![5, 4]);
        assert_eq!(parse_type("()").unwrap(), Vec::<usize>::new());
        assert!(parse_type("(3)").is_err());
        assert!(parse_type("(a)").is_err());
        assert_eq!(format_type(&[5, 4]), "(5,4)");
    }

    #[test]
    fn shapes() {
        assert_eq!(classify_cycle(&[1, 2, 3, 4, 5]), FaceShape::Simple);
        assert_eq!(
            classify_cycle(&[10, 11, 9, 12, 13, 9]),
            FaceShape::OppositeRepeat { vertex: 9, positions: (2, 5) }
        );
        assert_eq!(classify_cycle(&[1, 2, 1, 3, 4, 5]), FaceShape::Repeated { vertices: vec![1] });
    }
}
