use std::collections::HashSet;

use super::Digraph;
use crate::error::{Error, Result};

/// Line separating digraphs in a concatenated dump.
pub const DUMP_SEPARATOR: &str = "---";

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_pair(line: usize, text: &str, what: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| parse_err(line, format!("expected {what}")))?;
        tok.parse::<usize>().map_err(|_| parse_err(line, format!("`{tok}` is not a nonnegative integer")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(parse_err(line, format!("trailing tokens after {what}")));
    }
    Ok((a, b))
}

/// Parses the digraph text format.
///
/// First meaningful line is `n m`, followed by exactly `m` lines `u v`.
/// Blank lines and lines starting with `#` are skipped. Line numbers in
/// errors are 1-based and count every physical line.
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    parse_block(text.lines().enumerate().map(|(i, l)| (i + 1, l)), 1)
}

fn parse_block<'a>(lines: impl Iterator<Item = (usize, &'a str)>, first_line: usize) -> Result<Digraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut seen = HashSet::new();
    let mut arcs = Vec::new();
    let mut last_line = first_line;
    for (no, raw) in lines {
        last_line = no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match header {
            None => header = Some(parse_pair(no, line, "header `n m`")?),
            Some((n, m)) => {
                let (u, v) = parse_pair(no, line, "arc `u v`")?;
                if arcs.len() == m {
                    return Err(parse_err(no, format!("more than the declared {m} arcs")));
                }
                if u >= n || v >= n {
                    return Err(parse_err(no, format!("arc ({u}, {v}) outside 0..{n}")));
                }
                if u == v {
                    return Err(parse_err(no, format!("loop at vertex {u}")));
                }
                if !seen.insert((u, v)) {
                    return Err(parse_err(no, format!("duplicate arc ({u}, {v})")));
                }
                arcs.push((u, v));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(last_line, "missing header `n m`"))?;
    if arcs.len() != m {
        return Err(parse_err(last_line, format!("declared {m} arcs but found {}", arcs.len())));
    }
    Ok(Digraph::from_valid_arcs(n, arcs))
}

/// Parses several digraphs separated by `---` lines.
pub fn parse_digraphs(text: &str) -> Result<Vec<Digraph>> {
    let mut out = Vec::new();
    let mut block: Vec<(usize, &str)> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim() == DUMP_SEPARATOR {
            let first = block.first().map_or(i + 1, |b| b.0);
            out.push(parse_block(block.drain(..), first)?);
        } else {
            block.push((i + 1, line));
        }
    }
    let has_content = block.iter().any(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('#')
    });
    if has_content {
        let first = block[0].0;
        out.push(parse_block(block.into_iter(), first)?);
    }
    Ok(out)
}
