//! Textual braid syntaxes.
//!
//! Artin words are whitespace-separated `s<k>` / `S<k>` tokens (`S` is the
//! inverse). Row syntax lists rows of simultaneous crossings:
//!
//! ```text
//! TEXT  := ROW ("," WS* ROW)*
//! ROW   := TOKEN ("-" TOKEN)*
//! TOKEN := ["-"] "a_" INT
//! ```
//!
//! A leading `-` on a token marks an inverse crossing, so `a_2--a_4` is
//! `σ2 σ4^{-1}` in one row. Text wrapped as `braid={ ... }` is also accepted.

use std::fmt;

use crate::braid::BraidWord;
use crate::error::{BraidError, Result};

fn commute(a: i32, b: i32) -> bool {
    (a.abs() - b.abs()).abs() >= 2
}

/// Pairwise commuting crossings drawn at the same height, sorted by index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorRow(Vec<i32>);

impl GeneratorRow {
    pub fn new(mut entries: Vec<i32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(BraidError::Parse("empty row".into()));
        }
        entries.sort_by_key(|g| g.abs());
        for (i, &a) in entries.iter().enumerate() {
            for &b in &entries[i + 1..] {
                if !commute(a, b) {
                    return Err(BraidError::NonCommutingRow { a, b });
                }
            }
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }
}

impl fmt::Display for GeneratorRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self
            .0
            .iter()
            .map(|&g| if g > 0 { format!("a_{g}") } else { format!("-a_{}", -g) })
            .collect();
        f.write_str(&tokens.join("-"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RowBraid {
    strands: usize,
    rows: Vec<GeneratorRow>,
}

impl RowBraid {
    pub fn new(strands: usize, rows: Vec<GeneratorRow>) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::ZeroStrands);
        }
        for row in &rows {
            for &g in row.entries() {
                if g.unsigned_abs() as usize >= strands {
                    return Err(BraidError::GeneratorOutOfRange { generator: g, strands });
                }
            }
        }
        Ok(Self { strands, rows })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn rows(&self) -> &[GeneratorRow] {
        &self.rows
    }

    pub fn crossings(&self) -> usize {
        self.rows.iter().map(|r| r.0.len()).sum()
    }
}

/// Row text without the `braid={ }` wrapper, e.g. `a_2-a_4, a_3`.
impl fmt::Display for RowBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        f.write_str(&rows.join(", "))
    }
}

pub fn parse_artin(text: &str, strands: usize) -> Result<BraidWord> {
    let mut word = Vec::new();
    for token in text.split_whitespace() {
        let mut chars = token.chars();
        let sign = match chars.next() {
            Some('s') => 1,
            Some('S') => -1,
            _ => return Err(BraidError::Parse(format!("malformed token {token:?}"))),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return Err(BraidError::Parse(format!("malformed token {token:?}")));
        }
        let index: i32 = digits
            .parse()
            .map_err(|_| BraidError::Parse(format!("index too large in {token:?}")))?;
        word.push(sign * index);
    }
    BraidWord::new(strands, word)
}

fn strip_wrapper(text: &str) -> &str {
    let trimmed = text.trim();
    match trimmed.strip_prefix("braid={").and_then(|t| t.strip_suffix('}')) {
        Some(inner) => inner.trim(),
        None => trimmed,
    }
}

fn parse_row(row: &str) -> Result<GeneratorRow> {
    let bytes = row.as_bytes();
    let mut pos = 0;
    let mut entries = Vec::new();
    loop {
        let mut sign = 1;
        if bytes.get(pos) == Some(&b'-') {
            sign = -1;
            pos += 1;
        }
        if !row[pos..].starts_with("a_") {
            return Err(BraidError::Parse(format!("expected a_<k> in row {row:?}")));
        }
        pos += 2;
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if start == pos {
            return Err(BraidError::Parse(format!("missing index in row {row:?}")));
        }
        let index: i32 = row[start..pos]
            .parse()
            .map_err(|_| BraidError::Parse(format!("index too large in row {row:?}")))?;
        if index == 0 {
            return Err(BraidError::Parse(format!("index 0 in row {row:?}")));
        }
        entries.push(sign * index);
        match bytes.get(pos) {
            None => break,
            Some(b'-') => pos += 1,
            Some(_) => return Err(BraidError::Parse(format!("unexpected character in row {row:?}"))),
        }
    }
    GeneratorRow::new(entries)
}

pub fn parse_rows(text: &str, strands: usize) -> Result<RowBraid> {
    let body = strip_wrapper(text);
    if body.is_empty() {
        return RowBraid::new(strands, Vec::new());
    }
    let rows = body
        .split(',')
        .map(|r| parse_row(r.trim()))
        .collect::<Result<Vec<_>>>()?;
    RowBraid::new(strands, rows)
}

/// Rows in order, each row's entries by ascending index.
pub fn flatten(r: &RowBraid) -> BraidWord {
    let word = r.rows.iter().flat_map(|row| row.0.iter().copied()).collect();
    BraidWord::from_parts_unchecked(r.strands, word)
}

/// Greedy packing: each crossing rises to the row just below the last row
/// holding a crossing it does not commute with.
pub fn pack_rows(b: &BraidWord) -> RowBraid {
    let mut rows: Vec<Vec<i32>> = Vec::new();
    for &g in b.word() {
        let blocked = rows
            .iter()
            .rposition(|row| row.iter().any(|&h| !commute(g, h)));
        let target = blocked.map_or(0, |r| r + 1);
        if target == rows.len() {
            rows.push(vec![g]);
        } else {
            rows[target].push(g);
        }
    }
    let rows = rows
        .into_iter()
        .map(|row| GeneratorRow::new(row).expect("packed rows commute"))
        .collect();
    RowBraid {
        strands: b.strands(),
        rows,
    }
}
