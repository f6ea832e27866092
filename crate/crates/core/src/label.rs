//! Vertex labels: nonnegative integers or letter tags (`x`, `y_0`, `a`, ...).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A vertex label. Integers sort before tags; tags sort lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    Num(u32),
    Tag(String),
}

impl Label {
    pub fn tag(s: &str) -> Label {
        Label::Tag(s.to_string())
    }

    pub fn num(&self) -> Option<u32> {
        match self {
            Label::Num(n) => Some(*n),
            Label::Tag(_) => None,
        }
    }

    pub fn is_tag(&self) -> bool {
        matches!(self, Label::Tag(_))
    }

    /// Parses a label, reducing integers (including negative ones) modulo `m`.
    pub fn parse_mod(s: &str, m: u32) -> Result<Label, Error> {
        if let Ok(v) = s.parse::<i64>() {
            let m = m as i64;
            return Ok(Label::Num(v.rem_euclid(m) as u32));
        }
        s.parse()
    }
}

impl From<u32> for Label {
    fn from(n: u32) -> Self {
        Label::Num(n)
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        s.parse().unwrap_or_else(|_| Label::Tag(s.to_string()))
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Label::Num(a), Label::Num(b)) => a.cmp(b),
            (Label::Num(_), Label::Tag(_)) => Ordering::Less,
            (Label::Tag(_), Label::Num(_)) => Ordering::Greater,
            (Label::Tag(a), Label::Tag(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Num(n) => write!(f, "{n}"),
            Label::Tag(s) => f.write_str(s),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(Error::Parse { line: 0, msg: "empty label".into() });
        }
        if s.bytes().all(|b| b.is_ascii_digit()) {
            return s
                .parse::<u32>()
                .map(Label::Num)
                .map_err(|e| Error::Parse { line: 0, msg: e.to_string() });
        }
        if s.starts_with('-') {
            return Err(Error::Parse {
                line: 0,
                msg: format!("negative label {s} needs a group modulus"),
            });
        }
        let first = s.chars().next().unwrap();
        if !first.is_ascii_alphabetic() || !s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::Parse { line: 0, msg: format!("bad label {s:?}") });
        }
        Ok(Label::Tag(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_puts_numbers_first() {
        let mut v: Vec<Label> = ["x", "10", "2", "a", "y_0"].iter().map(|s| Label::from(*s)).collect();
        v.sort();
        let s: Vec<String> = v.iter().map(|l| l.to_string()).collect();
        assert_eq!(s, ["2", "10", "a", "x", "y_0"]);
    }

    #[test]
    fn negative_labels_need_modulus() {
        assert!("-1".parse::<Label>().is_err());
        assert_eq!(Label::parse_mod("-1", 18).unwrap(), Label::Num(17));
        assert_eq!(Label::parse_mod("x", 18).unwrap(), Label::tag("x"));
    }
}
