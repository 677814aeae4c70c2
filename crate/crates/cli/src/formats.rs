//! Text formats: dense code files, logical-vector files and an alist importer.
//!
//! A code file is `R C` on the first line followed by `R` lines of `C`
//! space-separated 0/1 tokens. A logical file is `N` followed by one line of
//! `N` tokens. A code directory holds `px.txt` and `pz.txt`.

use std::fs;
use std::path::Path;

use surgeon_core::{BitMatrix, BitVec, CssCode};

use crate::error::CliError;

pub const PX_FILE: &str = "px.txt";
pub const PZ_FILE: &str = "pz.txt";

fn parse_error(what: &str, line: usize, message: impl std::fmt::Display) -> CliError {
    CliError::Parse(format!("{what}, line {line}: {message}"))
}

fn parse_count(token: Option<&str>, what: &str, line: usize) -> Result<usize, CliError> {
    let token = token.ok_or_else(|| parse_error(what, line, "missing count"))?;
    token.parse().map_err(|_| parse_error(what, line, format!("`{token}` is not a count")))
}

fn parse_bits(text: &str, len: usize, what: &str, line: usize) -> Result<Vec<bool>, CliError> {
    let bits = text
        .split_whitespace()
        .map(|t| match t {
            "0" => Ok(false),
            "1" => Ok(true),
            other => Err(parse_error(what, line, format!("`{other}` is not 0 or 1"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if bits.len() != len {
        return Err(parse_error(what, line, format!("expected {len} entries, found {}", bits.len())));
    }
    Ok(bits)
}

/// Parses a dense code file.
pub fn parse_matrix(text: &str) -> Result<BitMatrix, CliError> {
    let what = "code file";
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| parse_error(what, 1, "empty file"))?;
    let mut tokens = header.split_whitespace();
    let rows = parse_count(tokens.next(), what, 1)?;
    let cols = parse_count(tokens.next(), what, 1)?;
    if tokens.next().is_some() {
        return Err(parse_error(what, 1, "header must be `rows cols`"));
    }
    let mut m = BitMatrix::zeros(rows, cols);
    for i in 0..rows {
        let line = lines.next().ok_or_else(|| parse_error(what, i + 2, format!("expected {rows} rows, found {i}")))?;
        for (j, bit) in parse_bits(line, cols, what, i + 2)?.into_iter().enumerate() {
            if bit {
                m.set(i, j, true);
            }
        }
    }
    if let Some((offset, _)) = lines.enumerate().find(|(_, l)| !l.trim().is_empty()) {
        return Err(parse_error(what, rows + 2 + offset, "trailing content after the last row"));
    }
    Ok(m)
}

pub fn emit_matrix(m: &BitMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<&str> = (0..m.cols()).map(|j| if m.get(i, j) { "1" } else { "0" }).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_logical(text: &str) -> Result<BitVec, CliError> {
    let what = "logical file";
    let mut lines = text.lines();
    let n = parse_count(lines.next().map(str::trim), what, 1)?;
    let bits = parse_bits(lines.next().unwrap_or(""), n, what, 2)?;
    if lines.any(|l| !l.trim().is_empty()) {
        return Err(parse_error(what, 3, "trailing content"));
    }
    Ok(BitVec::from_bits(bits))
}

pub fn emit_logical(v: &BitVec) -> String {
    let bits: Vec<&str> = v.iter().map(|b| if b { "1" } else { "0" }).collect();
    format!("{}\n{}\n", v.len(), bits.join(" "))
}

/// Parses an alist file: `N M`, the two maximum weights, the column and row
/// weights, then 1-based row indices per column and column indices per row.
/// Zero entries are padding. The two adjacency lists must agree.
pub fn parse_alist(text: &str) -> Result<BitMatrix, CliError> {
    let what = "alist file";
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let mut numbers = |expected: Option<usize>| -> Result<(usize, Vec<usize>), CliError> {
        let (i, line) = lines.next().ok_or_else(|| parse_error(what, 0, "unexpected end of file"))?;
        let values = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| parse_error(what, i + 1, format!("`{t}` is not a number"))))
            .collect::<Result<Vec<usize>, _>>()?;
        if let Some(e) = expected.filter(|&e| values.len() != e) {
            return Err(parse_error(what, i + 1, format!("expected {e} numbers, found {}", values.len())));
        }
        Ok((i + 1, values))
    };
    let (_, header) = numbers(Some(2))?;
    let (cols, rows) = (header[0], header[1]);
    numbers(Some(2))?;
    let (_, col_weights) = numbers(Some(cols))?;
    let (_, row_weights) = numbers(Some(rows))?;
    let mut by_columns = BitMatrix::zeros(rows, cols);
    for (j, &weight) in col_weights.iter().enumerate() {
        let (line, entries) = numbers(None)?;
        let nonzero: Vec<usize> = entries.into_iter().filter(|&e| e != 0).collect();
        if nonzero.len() != weight || nonzero.iter().any(|&e| e > rows) {
            return Err(parse_error(what, line, format!("column {} does not match its weight {weight}", j + 1)));
        }
        for e in nonzero {
            by_columns.set(e - 1, j, true);
        }
    }
    let mut by_rows = BitMatrix::zeros(rows, cols);
    for (i, &weight) in row_weights.iter().enumerate() {
        let (line, entries) = numbers(None)?;
        let nonzero: Vec<usize> = entries.into_iter().filter(|&e| e != 0).collect();
        if nonzero.len() != weight || nonzero.iter().any(|&e| e > cols) {
            return Err(parse_error(what, line, format!("row {} does not match its weight {weight}", i + 1)));
        }
        for e in nonzero {
            by_rows.set(i, e - 1, true);
        }
    }
    if by_rows != by_columns {
        return Err(CliError::Parse(format!("{what}: row and column lists disagree")));
    }
    Ok(by_rows)
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Reads a matrix, as alist when the extension is `.alist`.
pub fn read_matrix(path: &Path) -> Result<BitMatrix, CliError> {
    let text = read(path)?;
    let parsed = if path.extension().is_some_and(|e| e == "alist") { parse_alist(&text) } else { parse_matrix(&text) };
    parsed.map_err(|e| e.context(&path.display().to_string()))
}

pub fn read_logical(path: &Path) -> Result<BitVec, CliError> {
    parse_logical(&read(path)?).map_err(|e| e.context(&path.display().to_string()))
}

pub fn write_logical(path: &Path, v: &BitVec) -> Result<(), CliError> {
    write(path, &emit_logical(v))
}

pub fn read_code(dir: &Path) -> Result<CssCode, CliError> {
    let px = read_matrix(&dir.join(PX_FILE))?;
    let pz = read_matrix(&dir.join(PZ_FILE))?;
    CssCode::new(px, pz).map_err(|e| CliError::Parse(format!("{}: {e}", dir.display())))
}

pub fn write_code(dir: &Path, code: &CssCode) -> Result<(), CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    write(&dir.join(PX_FILE), &emit_matrix(code.px()))?;
    write(&dir.join(PZ_FILE), &emit_matrix(code.pz()))
}
