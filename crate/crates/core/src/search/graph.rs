//! Small target graphs named by short specs.
//!
//! - `Kn`: complete graph on 0..n-1
//! - `Kn-K2`: 0..n-3 plus x and y, without (x, y)
//! - `Kn-K3`: 0..n-4 plus x, y, z, without the triangle xyz
//! - `Kn-P3`: 0..n-1 without the path 0-1-2-3
//! - `Kn+p:k`: complete graph on 0..n-1 plus p joined to 0..k-1
//! - `split:N:D`: 1..N-1 complete, x0 joined to 1..D and x1 to D+1..N-1

use crate::error::{Error, Result};
use crate::label::Label;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    pub name: String,
    pub labels: Vec<Label>,
    /// Index pairs, u < v.
    pub edges: Vec<(usize, usize)>,
}

impl GraphSpec {
    fn from_labels(name: &str, labels: Vec<Label>, keep: impl Fn(&Label, &Label) -> bool) -> Self {
        let mut edges = Vec::new();
        for i in 0..labels.len() {
            for j in i + 1..labels.len() {
                if keep(&labels[i], &labels[j]) {
                    edges.push((i, j));
                }
            }
        }
        GraphSpec { name: name.to_string(), labels, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.labels.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Genus a triangulation would need, when the edge count allows one:
    /// `E = 3V - 6 + 6g` orientably and `E = 3V - 6 + 3k` otherwise.
    pub fn triangulation_genus(&self, orientable: bool) -> Option<u64> {
        let (v, e) = (self.labels.len() as i64, self.edges.len() as i64);
        let extra = e - 3 * v + 6;
        let step = if orientable { 6 } else { 3 };
        (extra >= 0 && extra % step == 0).then_some((extra / step) as u64)
    }
}

fn nums(k: usize) -> Vec<Label> {
    (0..k as u32).map(Label::Num).collect()
}

fn tags(names: &[&str]) -> Vec<Label> {
    names.iter().map(|s| Label::tag(s)).collect()
}

pub fn parse_graph(spec: &str) -> Result<GraphSpec> {
    let bad = || Error::Domain(format!("unknown graph spec {spec:?}"));
    if let Some(rest) = spec.strip_prefix("split:") {
        let (n, d) = rest.split_once(':').ok_or_else(bad)?;
        let n: u32 = n.parse().map_err(|_| bad())?;
        let d: u32 = d.parse().map_err(|_| bad())?;
        if n < 3 || d == 0 || d >= n - 1 {
            return Err(bad());
        }
        let mut labels: Vec<Label> = (1..n).map(Label::Num).collect();
        labels.extend(tags(&["x0", "x1"]));
        let side = |l: &Label| -> Option<bool> { l.num().map(|k| k <= d) };
        return Ok(GraphSpec::from_labels(spec, labels, |a, b| match (a, b) {
            (Label::Num(_), Label::Num(_)) => true,
            (Label::Tag(t), other) | (other, Label::Tag(t)) if other.num().is_some() => {
                side(other) == Some(t == "x0")
            }
            _ => false,
        }));
    }
    let body = spec.strip_prefix('K').ok_or_else(bad)?;
    if let Some((n, k)) = body.split_once("+p:") {
        let n: u32 = n.parse().map_err(|_| bad())?;
        let k: u32 = k.parse().map_err(|_| bad())?;
        if n < 3 || k < 3 || k > n {
            return Err(bad());
        }
        let mut labels: Vec<Label> = (0..n).map(Label::Num).collect();
        labels.push(Label::tag("p"));
        return Ok(GraphSpec::from_labels(spec, labels, |a, b| match (a, b) {
            (Label::Num(_), Label::Num(_)) => true,
            (Label::Num(i), _) | (_, Label::Num(i)) => *i < k,
            _ => false,
        }));
    }
    let (n, minus) = match body.split_once('-') {
        Some((n, m)) => (n, Some(m)),
        None => (body, None),
    };
    let n: usize = n.parse().map_err(|_| bad())?;
    if n < 3 {
        return Err(bad());
    }
    match minus {
        None => Ok(GraphSpec::from_labels(spec, nums(n), |_, _| true)),
        Some("K2") if n >= 4 => {
            let mut l = nums(n - 2);
            l.extend(tags(&["x", "y"]));
            Ok(GraphSpec::from_labels(spec, l, |a, b| !(a.is_tag() && b.is_tag())))
        }
        Some("K3") if n >= 5 => {
            let mut l = nums(n - 3);
            l.extend(tags(&["x", "y", "z"]));
            Ok(GraphSpec::from_labels(spec, l, |a, b| !(a.is_tag() && b.is_tag())))
        }
        Some("P3") if n >= 5 => Ok(GraphSpec::from_labels(spec, nums(n), |a, b| {
            let (p, q) = (a.num().unwrap_or(99), b.num().unwrap_or(99));
            !(p.max(q) <= 3 && p.abs_diff(q) == 1)
        })),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(parse_graph("K7").unwrap().edges.len(), 21);
        assert_eq!(parse_graph("K14-K2").unwrap().edges.len(), 90);
        assert_eq!(parse_graph("K10-P3").unwrap().edges.len(), 42);
        let g9 = parse_graph("split:9:4").unwrap();
        assert_eq!(g9.edges.len(), 36);
        assert_eq!(g9.triangulation_genus(true), Some(2));
        assert_eq!(parse_graph("K7").unwrap().triangulation_genus(true), Some(1));
        assert_eq!(parse_graph("K5-K2").unwrap().triangulation_genus(true), Some(0));
        assert_eq!(parse_graph("K8").unwrap().triangulation_genus(true), None);
        assert!(parse_graph("Q3").is_err());
        let k11p = parse_graph("K11+p:5").unwrap();
        assert_eq!(k11p.edges.len(), 60);
        assert_eq!(k11p.triangulation_genus(true), Some(5));
    }
}
