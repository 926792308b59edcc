//! Plain-text matrix and vector files.
//!
//! A matrix file starts with `rows cols`, a vector file with `n`; the entries
//! follow as whitespace-separated decimals in row-major order. Lines whose
//! first non-blank character is `#` are ignored.

use std::fmt::Write as _;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::dense::Matrix;
use crate::error::{Error, Result};

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokens(src: &str) -> (Vec<Token<'_>>, (usize, usize)) {
    let mut out = Vec::new();
    let mut end = (1, 1);
    for (li, line) in src.lines().enumerate() {
        end = (li + 1, line.len() + 1);
        if line.trim_start().starts_with('#') {
            continue;
        }
        let mut rest = line;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            out.push(Token {
                text: &tail[..len],
                line: li + 1,
                column: offset + start + 1,
            });
            offset += start + len;
            rest = &tail[len..];
        }
    }
    (out, end)
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn header_dims(toks: &[Token<'_>], want: usize, what: &str) -> Result<Vec<usize>> {
    let first_line = toks.first().map(|t| t.line).ok_or_else(|| parse_err(1, 1, "empty input"))?;
    let head: Vec<&Token<'_>> = toks.iter().take_while(|t| t.line == first_line).collect();
    if head.len() != want {
        return Err(parse_err(
            first_line,
            1,
            format!("{what} header must hold {want} integer(s), found {}", head.len()),
        ));
    }
    head.iter()
        .map(|t| match t.text.parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(parse_err(t.line, t.column, format!("invalid dimension {:?}", t.text))),
        })
        .collect()
}

fn entries(toks: &[Token<'_>], count: usize, end: (usize, usize)) -> Result<Vec<f64>> {
    if toks.len() < count {
        return Err(parse_err(
            end.0,
            end.1,
            format!("expected {count} entries, found {}", toks.len()),
        ));
    }
    if let Some(extra) = toks.get(count) {
        return Err(parse_err(extra.line, extra.column, format!("unexpected extra entry {:?}", extra.text)));
    }
    toks.iter()
        .map(|t| match t.text.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(parse_err(t.line, t.column, format!("invalid number {:?}", t.text))),
        })
        .collect()
}

pub fn parse_matrix_str(src: &str) -> Result<Matrix> {
    let (toks, end) = tokens(src);
    let dims = header_dims(&toks, 2, "matrix")?;
    let data = entries(&toks[2..], dims[0] * dims[1], end)?;
    Matrix::new(dims[0], dims[1], data)
}

pub fn parse_vector_str(src: &str) -> Result<Vec<f64>> {
    let (toks, end) = tokens(src);
    let dims = header_dims(&toks, 1, "vector")?;
    entries(&toks[1..], dims[0], end)
}

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn parse_matrix(path: &Path) -> Result<Matrix> {
    parse_matrix_str(&read_file(path)?)
}

pub fn parse_vector(path: &Path) -> Result<Vec<f64>> {
    parse_vector_str(&read_file(path)?)
}

/// Shortest decimal form that reads back to the same bits.
pub fn write_matrix(m: &Matrix) -> String {
    let mut s = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|v| format!("{v:?}")).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

pub fn write_vector(v: &[f64]) -> String {
    let body: Vec<String> = v.iter().map(|x| format!("{x:?}")).collect();
    format!("{}\n{}\n", v.len(), body.join(" "))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut s = String::with_capacity(64);
    for b in digest {
        let _ = write!(s, "{b:02x}");
    }
    s
}
