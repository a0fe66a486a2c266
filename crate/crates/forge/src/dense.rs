// SPDX-License-Identifier: Apache-2.0
//! Dense text format: a `rows cols` header, then one line of space-separated
//! 0/1 entries per row.

use qforge_core::BinaryMatrix;

use crate::FormatError;

pub fn write_dense(m: &BinaryMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<&str> = (0..m.cols())
            .map(|c| if m.get(r, c) { "1" } else { "0" })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_dense(text: &str) -> Result<BinaryMatrix, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, head) = lines
        .next()
        .ok_or_else(|| FormatError::Truncated("header".into()))?;
    let dims: Vec<usize> = head
        .split_whitespace()
        .filter_map(|t| t.parse().ok())
        .collect();
    let [rows, cols] = dims[..] else {
        return Err(FormatError::parse(1, "expected \"rows cols\""));
    };
    let mut m = BinaryMatrix::zeros(rows, cols);
    for r in 0..rows {
        let (i, line) = lines
            .next()
            .ok_or_else(|| FormatError::Truncated(format!("row {}", r + 1)))?;
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != cols {
            return Err(FormatError::parse(
                i + 1,
                format!("expected {cols} entries, found {}", entries.len()),
            ));
        }
        for (c, e) in entries.into_iter().enumerate() {
            match e {
                "0" => {}
                "1" => m.set(r, c, true),
                other => {
                    return Err(FormatError::parse(
                        i + 1,
                        format!("entry {other:?} is not 0 or 1"),
                    ))
                }
            }
        }
    }
    if let Some((i, _)) = lines.next() {
        return Err(FormatError::parse(i + 1, "trailing rows"));
    }
    Ok(m)
}
