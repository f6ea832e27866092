//! Logs: cyclic sequences of group elements and vortex letters.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Token {
    Elem(u32),
    Letter(String),
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Elem(g) => write!(f, "{g}"),
            Token::Letter(s) => f.write_str(s),
        }
    }
}

impl Token {
    pub fn elem(&self) -> Option<u32> {
        match self {
            Token::Elem(g) => Some(*g),
            Token::Letter(_) => None,
        }
    }
}

/// Parses one token; integers are reduced modulo `m`, negatives included.
pub fn parse_token(s: &str, m: u32) -> Result<Token> {
    if let Ok(v) = s.parse::<i64>() {
        return Ok(Token::Elem(v.rem_euclid(m as i64) as u32));
    }
    let ok = s.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if ok {
        Ok(Token::Letter(s.to_string()))
    } else {
        Err(Error::Parse { line: 1, msg: format!("bad log token {s:?}") })
    }
}

/// Parses a whitespace separated log.
pub fn parse_log(text: &str, m: u32) -> Result<Vec<Token>> {
    if m < 2 {
        return Err(Error::Current(format!("group order {m} is too small")));
    }
    let toks: Vec<Token> =
        text.split_whitespace().map(|t| parse_token(t, m)).collect::<Result<_>>()?;
    if toks.is_empty() {
        return Err(Error::Parse { line: 1, msg: "empty log".into() });
    }
    Ok(toks)
}

pub fn format_log(log: &[Token]) -> String {
    let parts: Vec<String> = log.iter().map(Token::to_string).collect();
    parts.join(" ")
}

/// Equality of cyclic sequences.
pub fn cyclic_eq<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|s| (0..a.len()).all(|i| a[(s + i) % a.len()] == b[i]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let log = parse_log("11 x -1 y_0", 18).unwrap();
        assert_eq!(
            log,
            vec![
                Token::Elem(11),
                Token::Letter("x".into()),
                Token::Elem(17),
                Token::Letter("y_0".into())
            ]
        );
        assert_eq!(format_log(&log), "11 x 17 y_0");
        assert!(parse_log("1 $", 5).is_err());
    }

    #[test]
    fn cyclic() {
        assert!(cyclic_eq(&[1, 2, 3], &[3, 1, 2]));
        assert!(!cyclic_eq(&[1, 2, 3], &[1, 3, 2]));
    }
}
