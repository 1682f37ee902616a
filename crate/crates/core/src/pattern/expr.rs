//! Textual pattern syntax:
//!
//! ```text
//! P<r> | C<r> | K<r> | K1,<r> | K<a>,<b> | <k>K1 | g6:<record>
//! ```

use super::{Pattern, PatternError};
use crate::graph::Graph;
use std::fmt;
use std::str::FromStr;

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Path(r) => write!(f, "P{r}"),
            Pattern::Cycle(r) => write!(f, "C{r}"),
            Pattern::Clique(r) => write!(f, "K{r}"),
            Pattern::Star(r) => write!(f, "K1,{r}"),
            Pattern::Biclique(a, b) => write!(f, "K{a},{b}"),
            Pattern::Empty(k) => write!(f, "{k}K1"),
            Pattern::Custom(g) => write!(f, "g6:{}", g.to_graph6()),
        }
    }
}

impl FromStr for Pattern {
    type Err = PatternError;

    fn from_str(text: &str) -> Result<Pattern, PatternError> {
        parse_pattern(text)
    }
}

fn syntax(pos: usize, msg: impl Into<String>) -> PatternError {
    PatternError::Syntax {
        pos,
        msg: msg.into(),
    }
}

/// Reads a positive decimal starting at `pos`; returns the value and the
/// position after it.
fn number(bytes: &[u8], pos: usize) -> Result<(usize, usize), PatternError> {
    let end = bytes[pos..]
        .iter()
        .position(|b| !b.is_ascii_digit())
        .map_or(bytes.len(), |k| pos + k);
    if end == pos {
        return Err(syntax(pos, "expected a number"));
    }
    let text = std::str::from_utf8(&bytes[pos..end]).expect("ASCII digits");
    let value: usize = text
        .parse()
        .map_err(|_| syntax(pos, "number out of range"))?;
    if value == 0 {
        return Err(syntax(pos, "parameter must be positive"));
    }
    Ok((value, end))
}

fn finish(bytes: &[u8], pos: usize) -> Result<(), PatternError> {
    if pos == bytes.len() {
        Ok(())
    } else {
        Err(syntax(pos, format!("unexpected '{}'", bytes[pos] as char)))
    }
}

pub fn parse_pattern(text: &str) -> Result<Pattern, PatternError> {
    if let Some(record) = text.strip_prefix("g6:") {
        let g = Graph::from_graph6(record).map_err(|e| syntax(3, e.to_string()))?;
        return Ok(Pattern::Custom(g));
    }
    let bytes = text.as_bytes();
    let Some(&head) = bytes.first() else {
        return Err(syntax(0, "empty pattern"));
    };
    let pattern = match head {
        b'P' | b'C' => {
            let (r, end) = number(bytes, 1)?;
            finish(bytes, end)?;
            if head == b'P' {
                Pattern::Path(r)
            } else {
                if r < 3 {
                    return Err(syntax(1, "cycles need at least 3 vertices"));
                }
                Pattern::Cycle(r)
            }
        }
        b'K' => {
            let (a, end) = number(bytes, 1)?;
            if end < bytes.len() && bytes[end] == b',' {
                let (b, end2) = number(bytes, end + 1)?;
                finish(bytes, end2)?;
                Pattern::biclique(a, b)?
            } else {
                finish(bytes, end)?;
                Pattern::Clique(a)
            }
        }
        b'0'..=b'9' => {
            let (k, end) = number(bytes, 0)?;
            if &bytes[end..] != b"K1" {
                return Err(syntax(end, "expected 'K1' after multiplicity"));
            }
            Pattern::Empty(k)
        }
        other => return Err(syntax(0, format!("unexpected '{}'", other as char))),
    };
    Ok(pattern)
}
