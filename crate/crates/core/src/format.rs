//! Text formats for maps and rings, and DOT export.
//!
//! Map documents are a constructor trace, innermost first:
//!
//! ```text
//! hmap 1
//! i 1
//! i 2
//! l 0 1 2   # dimension, source, target
//! ```
//!
//! Ring documents hold one `<dart> <t|f>` item per line, in break order.

use std::fmt::Write as _;

use thiserror::Error;

use crate::fmap::{FreeMap, Op};
use crate::index::HypermapIndex;
use crate::rings::{RingItem, RingList};
use crate::{Dart, Dim};

pub const MAP_HEADER: &str = "hmap 1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Significant lines with comments stripped, numbered from 1.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_dart(line: usize, tok: Option<&str>) -> Result<Dart, ParseError> {
    let tok = tok.ok_or_else(|| err(line, "missing dart"))?;
    tok.parse::<u32>()
        .map(Dart)
        .map_err(|_| err(line, format!("invalid dart `{tok}`")))
}

pub fn parse_map(text: &str) -> Result<FreeMap, ParseError> {
    let mut lines = significant_lines(text);
    match lines.next() {
        Some((_, MAP_HEADER)) => {}
        Some((n, other)) => return Err(err(n, format!("expected header `{MAP_HEADER}`, found `{other}`"))),
        None => return Err(err(1, format!("missing header `{MAP_HEADER}`"))),
    }
    let mut ops = Vec::new();
    for (n, line) in lines {
        let mut toks = line.split_whitespace();
        let op = match toks.next() {
            Some("i") => Op::Insert(parse_dart(n, toks.next())?),
            Some("l") => {
                let k = match toks.next() {
                    Some("0") => Dim::Zero,
                    Some("1") => Dim::One,
                    Some(t) => return Err(err(n, format!("invalid dimension `{t}`"))),
                    None => return Err(err(n, "missing dimension")),
                };
                let x = parse_dart(n, toks.next())?;
                let y = parse_dart(n, toks.next())?;
                Op::Link(k, x, y)
            }
            Some(t) => return Err(err(n, format!("unknown constructor `{t}`"))),
            None => unreachable!("significant lines are non-empty"),
        };
        if let Some(extra) = toks.next() {
            return Err(err(n, format!("unexpected trailing token `{extra}`")));
        }
        ops.push(op);
    }
    Ok(FreeMap::from_ops(ops))
}

pub fn serialize_map(m: &FreeMap) -> String {
    let mut out = String::with_capacity(8 + 10 * m.len());
    out.push_str(MAP_HEADER);
    out.push('\n');
    for op in m.ops() {
        match op {
            Op::Insert(x) => writeln!(out, "i {x}"),
            Op::Link(k, x, y) => writeln!(out, "l {k} {x} {y}"),
        }
        .expect("writing to a String");
    }
    out
}

pub fn parse_ring(text: &str) -> Result<RingList, ParseError> {
    significant_lines(text)
        .map(|(n, line)| {
            let mut toks = line.split_whitespace();
            let dart = parse_dart(n, toks.next())?;
            let flag = match toks.next() {
                Some("t") => true,
                Some("f") => false,
                Some(t) => return Err(err(n, format!("invalid flag `{t}` (expected t or f)"))),
                None => return Err(err(n, "missing flag")),
            };
            if let Some(extra) = toks.next() {
                return Err(err(n, format!("unexpected trailing token `{extra}`")));
            }
            Ok(RingItem { dart, flag })
        })
        .collect()
}

pub fn serialize_ring(l: &RingList) -> String {
    let mut out = String::new();
    for it in l {
        writeln!(out, "{} {}", it.dart, if it.flag { 't' } else { 'f' }).expect("writing to a String");
    }
    out
}

/// Graphviz digraph: one cluster per component, solid arrows for 0-links,
/// dashed arrows for 1-links.
pub fn to_dot(idx: &HypermapIndex, m: &FreeMap) -> String {
    let mut out = String::from("digraph hypermap {\n  node [shape=circle];\n");
    for c in 0..idx.component_count() as u32 {
        writeln!(out, "  subgraph cluster_{c} {{\n    label=\"component {c}\";").unwrap();
        for &d in idx.darts().iter().filter(|&&d| idx.component_id(d) == Some(c)) {
            writeln!(out, "    d{d} [label=\"{d}\"];").unwrap();
        }
        out.push_str("  }\n");
    }
    for (k, x, y) in m.links() {
        let style = match k {
            Dim::Zero => "solid",
            Dim::One => "dashed",
        };
        writeln!(out, "  d{x} -> d{y} [style={style}];").unwrap();
    }
    out.push_str("}\n");
    out
}
