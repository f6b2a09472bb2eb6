//! Comma-separated orbifold notation.
//!
//! Grammar (commas and whitespace are separators and otherwise ignored):
//!
//! ```text
//! signature := handle* cone* mirror* cross*
//! handle    := "o"
//! cone      := integer
//! mirror    := "*" integer*
//! cross     := "×" | "x"
//! ```
//!
//! Integers after a `*` are corner orders of that mirror boundary until the
//! next `*`, crosscap, or end of input, so `"2,*2,2"` is one cone point of
//! order 2 plus a boundary with two corners of order 2. An optional `O(...)`
//! wrapper is stripped, and a few prose names (`torus`, `klein`, `sphere`,
//! `*torus`, `*klein`) are accepted.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::OrbifoldSignature;

/// One lexical unit of the notation, with its character offset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NotationToken {
    pub kind: TokenKind,
    pub position: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TokenKind {
    Handle,
    /// A bare integer. Whether it is a cone or corner order depends on
    /// whether a `*` precedes it.
    Order(u32),
    MirrorStart,
    Crosscap,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ParseErrorKind {
    OrderTooSmall,
    OrderTooLarge,
    OutOfOrderToken,
    UnknownCharacter,
    UnbalancedWrapper,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ParseErrorKind::OrderTooSmall => "order must be at least 2",
            ParseErrorKind::OrderTooLarge => "order does not fit in 32 bits",
            ParseErrorKind::OutOfOrderToken => "token out of order",
            ParseErrorKind::UnknownCharacter => "unknown character",
            ParseErrorKind::UnbalancedWrapper => "unbalanced O(...) wrapper",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
}

const CROSS: char = '\u{00D7}';

fn resolve_alias(text: &str) -> Option<&'static str> {
    let key = text.trim().to_ascii_lowercase();
    let key = key.strip_suffix(" bottle").unwrap_or(&key);
    Some(match key {
        "sphere" => "",
        "torus" => "o",
        "klein" => "××",
        "*torus" => "*,*",
        "*klein" => "*×",
        _ => return None,
    })
}

/// Splits `text` into tokens. Offsets count characters, not bytes, and
/// refer to the text after alias resolution and wrapper stripping.
pub fn tokenize(text: &str) -> Result<Vec<NotationToken>, ParseError> {
    let body = strip_wrapper(text)?;
    let body = resolve_alias(body).unwrap_or(body);
    let chars: Vec<char> = body.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let kind = match c {
            ',' => None,
            c if c.is_whitespace() => None,
            'o' => Some(TokenKind::Handle),
            '*' => Some(TokenKind::MirrorStart),
            'x' | CROSS => Some(TokenKind::Crosscap),
            '0'..='9' => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                let err = |kind| ParseError {
                    kind,
                    position: start,
                };
                let order: u32 = digits
                    .parse()
                    .map_err(|_| err(ParseErrorKind::OrderTooLarge))?;
                if order < 2 {
                    return Err(err(ParseErrorKind::OrderTooSmall));
                }
                tokens.push(NotationToken {
                    kind: TokenKind::Order(order),
                    position: start,
                });
                None
            }
            _ => {
                return Err(ParseError {
                    kind: ParseErrorKind::UnknownCharacter,
                    position: i,
                })
            }
        };
        if let Some(kind) = kind {
            tokens.push(NotationToken { kind, position: i });
        }
        i += 1;
    }
    Ok(tokens)
}

fn strip_wrapper(text: &str) -> Result<&str, ParseError> {
    let t = text.trim();
    match t.strip_prefix("O(") {
        Some(rest) => rest.strip_suffix(')').ok_or(ParseError {
            kind: ParseErrorKind::UnbalancedWrapper,
            position: t.chars().count(),
        }),
        None => Ok(t),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Section {
    Handles,
    Cones,
    Mirrors,
    Crosscaps,
}

/// Parses the notation into a canonical signature. The empty string is the
/// smooth sphere.
pub fn parse(text: &str) -> Result<OrbifoldSignature, ParseError> {
    let mut section = Section::Handles;
    let (mut handles, mut crosscaps) = (0u32, 0u32);
    let mut cones = Vec::new();
    let mut mirrors: Vec<Vec<u32>> = Vec::new();
    for tok in tokenize(text)? {
        let out_of_order = ParseError {
            kind: ParseErrorKind::OutOfOrderToken,
            position: tok.position,
        };
        match tok.kind {
            TokenKind::Handle => {
                if section != Section::Handles {
                    return Err(out_of_order);
                }
                handles += 1;
            }
            TokenKind::Order(m) => match section {
                Section::Handles | Section::Cones => {
                    section = Section::Cones;
                    cones.push(m);
                }
                Section::Mirrors => mirrors.last_mut().expect("inside a boundary").push(m),
                Section::Crosscaps => return Err(out_of_order),
            },
            TokenKind::MirrorStart => {
                if section == Section::Crosscaps {
                    return Err(out_of_order);
                }
                section = Section::Mirrors;
                mirrors.push(Vec::new());
            }
            TokenKind::Crosscap => {
                section = Section::Crosscaps;
                crosscaps += 1;
            }
        }
    }
    Ok(OrbifoldSignature::new(handles, crosscaps, cones, mirrors)
        .expect("tokenizer rejects orders below 2"))
}

/// Canonical text form; `parse(&render(s)) == s` for every signature.
pub fn render(sig: &OrbifoldSignature) -> String {
    let mut out = String::new();
    // Whether the previous item ended in an order (so a bare `*` may follow
    // without a comma, as in "2,2*").
    let mut after_order_or_handle = false;
    let push = |out: &mut String, item: &str, glue: bool| {
        if !out.is_empty() && !glue {
            out.push(',');
        }
        out.push_str(item);
    };
    if sig.handles() > 0 {
        push(&mut out, &"o".repeat(sig.handles() as usize), false);
        after_order_or_handle = true;
    }
    for m in sig.cone_points() {
        push(&mut out, &m.to_string(), false);
        after_order_or_handle = true;
    }
    for boundary in sig.mirror_boundaries() {
        let corners: Vec<String> = boundary.iter().map(u32::to_string).collect();
        let item = format!("*{}", corners.join(","));
        push(&mut out, &item, boundary.is_empty() && after_order_or_handle);
        after_order_or_handle = false;
    }
    for _ in 0..sig.crosscaps() {
        out.push(CROSS);
    }
    out
}

impl fmt::Display for OrbifoldSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O({})", render(self))
    }
}

impl std::str::FromStr for OrbifoldSignature {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse(s)
    }
}
