//! Plain-text state files.
//!
//! ```text
//! GHZSTATE 1
//! 8
//! 5.0000000000000000e-1 0.0000000000000000e0
//! ...                      (dim² lines, row-major, "re im")
//! ```
//!
//! Blank lines and everything after `#` are ignored. Entries are written
//! with 17 significant digits so a write/parse cycle is bit-exact.

use num_complex::Complex64;
use thiserror::Error;

use crate::error::Error;
use crate::hermitian::{ComplexMatrix, DensityMatrix};

pub const MAGIC: &str = "GHZSTATE";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StateFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid state: {0}")]
    Invalid(#[from] Error),
}

fn syntax(line: usize, message: impl Into<String>) -> StateFileError {
    StateFileError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn write_state(rho: &DensityMatrix) -> String {
    let m = rho.matrix();
    let mut out = format!("{MAGIC} {FORMAT_VERSION}\n{}\n", m.dim());
    for z in m.entries() {
        out.push_str(&format!("{:.16e} {:.16e}\n", z.re, z.im));
    }
    out
}

pub fn parse_state(text: &str) -> Result<DensityMatrix, StateFileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, content)| !content.is_empty());
    let eof_line = text.lines().count() + 1;

    let (line, header) = lines
        .next()
        .ok_or_else(|| syntax(eof_line, "empty file, expected header"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some(MAGIC) {
        return Err(syntax(line, format!("expected header `{MAGIC} {FORMAT_VERSION}`")));
    }
    match tokens.next().map(str::parse::<u32>) {
        Some(Ok(FORMAT_VERSION)) => {}
        Some(Ok(v)) => return Err(syntax(line, format!("unsupported format version {v}"))),
        _ => return Err(syntax(line, "missing or malformed format version")),
    }
    if tokens.next().is_some() {
        return Err(syntax(line, "unexpected text after header"));
    }

    let (line, dim_text) = lines.next().ok_or_else(|| syntax(eof_line, "missing dimension line"))?;
    let dim: usize = dim_text
        .parse()
        .map_err(|_| syntax(line, format!("malformed dimension `{dim_text}`")))?;
    if !matches!(dim, 2 | 4 | 8) {
        return Err(syntax(
            line,
            format!("unsupported dimension {dim} (expected 2, 4 or 8)"),
        ));
    }

    let expected = dim * dim;
    let mut entries = Vec::with_capacity(expected);
    for (line, content) in lines.by_ref().take(expected) {
        let parts: Vec<&str> = content.split_whitespace().collect();
        let [re, im] = parts[..] else {
            return Err(syntax(line, "expected two numbers `re im`"));
        };
        let parse = |s: &str| {
            s.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| syntax(line, format!("malformed number `{s}`")))
        };
        entries.push(Complex64::new(parse(re)?, parse(im)?));
    }
    if entries.len() < expected {
        return Err(syntax(
            eof_line,
            format!("truncated file: expected {expected} entries, found {}", entries.len()),
        ));
    }
    if let Some((line, _)) = lines.next() {
        return Err(syntax(line, "unexpected content after the last entry"));
    }

    Ok(DensityMatrix::new(ComplexMatrix::from_entries(dim, entries)?)?)
}
