//! OEIS b-files: ASCII lines `index value`, `#` comments, blank lines.

use std::io::{self, BufRead, Write};

use num_bigint::BigUint;
use thiserror::Error;
use vincular_core::sequence::SequenceTable;

#[derive(Debug, Error)]
pub enum BfileError {
    #[error("line {line}: malformed entry {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: negative value {text:?}")]
    NegativeValue { line: usize, text: String },
    #[error("line {line}: index {found} does not follow {expected}")]
    NotConsecutive {
        line: usize,
        expected: i64,
        found: i64,
    },
    #[error("b-file has no data lines")]
    Empty,
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub fn parse_bfile<R: BufRead>(reader: R) -> Result<SequenceTable, BfileError> {
    let mut offset = None;
    let mut terms = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let malformed = || BfileError::Malformed {
            line: line_no,
            text: text.to_string(),
        };
        let mut fields = text.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed());
        };
        let index: i64 = index.parse().map_err(|_| malformed())?;
        if let Some(digits) = value.strip_prefix('-') {
            if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(BfileError::NegativeValue {
                    line: line_no,
                    text: value.to_string(),
                });
            }
            return Err(malformed());
        }
        if !value.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let value: BigUint = value.parse().map_err(|_| malformed())?;
        match offset {
            None => offset = Some(index),
            Some(first) => {
                let expected = first + terms.len() as i64;
                if index != expected {
                    return Err(BfileError::NotConsecutive {
                        line: line_no,
                        expected,
                        found: index,
                    });
                }
            }
        }
        terms.push(value);
    }
    let offset = offset.ok_or(BfileError::Empty)?;
    Ok(SequenceTable::new(offset, terms).expect("at least one term"))
}

pub fn parse_bfile_str(text: &str) -> Result<SequenceTable, BfileError> {
    parse_bfile(text.as_bytes())
}

pub fn write_bfile<W: Write>(table: &SequenceTable, mut out: W) -> io::Result<()> {
    for (index, value) in table.iter() {
        writeln!(out, "{index} {value}")?;
    }
    Ok(())
}
