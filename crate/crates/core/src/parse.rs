//! Text formats for connection sets and inline graph specs.
//!
//! A connection set is written in one of three ways:
//!
//! * generator products: `f0, f1*f4, f0*f2*f3`, where `fi` is the unit
//!   vector at coordinate `i` (0-based) and `*` is the group operation;
//! * digit strings: `10101`, one digit per coordinate, leftmost digit is
//!   coordinate 0 (bitstrings for `Z_2^d`);
//! * a JSON array of coordinate lists: `[[1,0],[0,1]]`.
//!
//! Tokens of the first two kinds may be mixed and are separated by commas
//! or whitespace, optionally inside one pair of square brackets.

use crate::error::{Error, Result};
use crate::graph::{CayleyGraph, ConnectionSet};
use crate::group::{FiniteAbelianGroup, GroupElement};

pub fn parse_connection_set(group: &FiniteAbelianGroup, text: &str) -> Result<ConnectionSet> {
    ConnectionSet::new(group, parse_elements(group, text)?)
}

/// Parses `GROUP:CONNSET`, e.g. `Z2^3:100,010,001`.
pub fn parse_graph_spec(spec: &str) -> Result<CayleyGraph> {
    let colon = spec
        .find(':')
        .ok_or_else(|| Error::parse(0, "expected GROUP:CONNSET"))?;
    let group: FiniteAbelianGroup = spec[..colon].parse()?;
    let elements = parse_elements(&group, &spec[colon + 1..]).map_err(|e| match e {
        Error::Parse { position, message } => Error::Parse {
            position: position + colon + 1,
            message,
        },
        other => other,
    })?;
    CayleyGraph::from_elements(group, elements)
}

fn parse_elements(group: &FiniteAbelianGroup, text: &str) -> Result<Vec<GroupElement>> {
    let start = text.len() - text.trim_start().len();
    let body = text.trim();
    if body.starts_with("[[") || body == "[]" {
        return parse_json_lists(group, body, start);
    }
    let (body, offset) = match body.strip_prefix('[') {
        Some(inner) => {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::parse(start + body.len(), "unclosed '['"))?;
            (inner, start + 1)
        }
        None => (body, start),
    };
    tokens(body)
        .map(|(pos, tok)| parse_token(group, tok, offset + pos))
        .collect()
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut begin = None;
    for (i, ch) in text.char_indices() {
        let sep = ch == ',' || ch.is_whitespace();
        match (sep, begin) {
            (true, Some(b)) => {
                out.push((b, &text[b..i]));
                begin = None;
            }
            (false, None) => begin = Some(i),
            _ => {}
        }
    }
    if let Some(b) = begin {
        out.push((b, &text[b..]));
    }
    out.into_iter()
}

pub(crate) fn parse_token(
    group: &FiniteAbelianGroup,
    tok: &str,
    pos: usize,
) -> Result<GroupElement> {
    if tok.starts_with(['f', 'F']) {
        parse_product(group, tok, pos)
    } else if tok.bytes().all(|b| b.is_ascii_digit()) {
        parse_digits(group, tok, pos)
    } else {
        Err(Error::parse(pos, format!("unrecognized token {tok:?}")))
    }
}

fn parse_product(group: &FiniteAbelianGroup, tok: &str, pos: usize) -> Result<GroupElement> {
    let mut acc = group.zero();
    let mut at = pos;
    for factor in tok.split('*') {
        let index = factor
            .strip_prefix(['f', 'F'])
            .filter(|s| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()))
            .and_then(|s| s.parse::<usize>().ok())
            .ok_or_else(|| Error::parse(at, format!("expected a generator fN, got {factor:?}")))?;
        if index >= group.rank() {
            return Err(Error::parse(
                at,
                format!("generator f{index} out of range for {group}"),
            ));
        }
        acc = group.add(&acc, &group.basis(index));
        at += factor.len() + 1;
    }
    Ok(acc)
}

fn parse_digits(group: &FiniteAbelianGroup, tok: &str, pos: usize) -> Result<GroupElement> {
    if tok.len() != group.rank() {
        return Err(Error::parse(
            pos,
            format!(
                "{tok:?} has {} digits, {group} needs {}",
                tok.len(),
                group.rank()
            ),
        ));
    }
    let coords: Vec<u64> = tok.bytes().map(|b| u64::from(b - b'0')).collect();
    for (i, (&c, &m)) in coords.iter().zip(group.orders()).enumerate() {
        if c >= m {
            return Err(Error::parse(
                pos + i,
                format!("digit {c} out of range for Z{m}"),
            ));
        }
    }
    group.element(coords)
}

fn parse_json_lists(
    group: &FiniteAbelianGroup,
    body: &str,
    pos: usize,
) -> Result<Vec<GroupElement>> {
    let lists: Vec<Vec<u64>> = serde_json::from_str(body)
        .map_err(|e| Error::parse(pos + e.column().saturating_sub(1), e.to_string()))?;
    lists.into_iter().map(|c| group.element(c)).collect()
}
