// SPDX-License-Identifier: Apache-2.0
//! MacKay alist format.
//!
//! ```text
//! N M                 columns, rows
//! cmax rmax           largest column and row degree
//! c_1 ... c_N         column degrees
//! r_1 ... r_M         row degrees
//! N lines             1-based row indices of each column, zero-padded to cmax
//! M lines             1-based column indices of each row, zero-padded to rmax
//! ```
//!
//! Padding zeros are optional on input. The parser checks that the column
//! and row lists describe the same matrix.

use std::fmt::Write as _;

use qforge_core::BinaryMatrix;

use crate::FormatError;

pub fn write_alist(m: &BinaryMatrix) -> String {
    let (rows, cols) = m.shape();
    let col_sets: Vec<Vec<usize>> = (0..cols).map(|c| m.column(c).support()).collect();
    let row_sets: Vec<Vec<usize>> = (0..rows).map(|r| m.row(r).support()).collect();
    let cmax = col_sets.iter().map(Vec::len).max().unwrap_or(0);
    let rmax = row_sets.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    let _ = writeln!(out, "{cols} {rows}");
    let _ = writeln!(out, "{cmax} {rmax}");
    out.push_str(&join(col_sets.iter().map(Vec::len)));
    out.push('\n');
    out.push_str(&join(row_sets.iter().map(Vec::len)));
    out.push('\n');
    for (sets, width) in [(&col_sets, cmax), (&row_sets, rmax)] {
        for s in sets {
            let padded = s
                .iter()
                .map(|i| i + 1)
                .chain(std::iter::repeat(0))
                .take(width);
            out.push_str(&join(padded));
            out.push('\n');
        }
    }
    out
}

fn join(xs: impl Iterator<Item = usize>) -> String {
    xs.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn parse_alist(text: &str) -> Result<BinaryMatrix, FormatError> {
    let mut lines = text.lines().enumerate();
    let mut next = |what: &str| -> Result<(usize, Vec<usize>), FormatError> {
        let (i, line) = lines
            .next()
            .ok_or_else(|| FormatError::Truncated(what.to_owned()))?;
        let nums = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| FormatError::parse(i + 1, format!("bad integer {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok((i + 1, nums))
    };
    let (l, head) = next("dimensions")?;
    let [cols, rows] = head[..] else {
        return Err(FormatError::parse(l, "expected \"N M\""));
    };
    let (l, maxes) = next("maximum degrees")?;
    let [cmax, rmax] = maxes[..] else {
        return Err(FormatError::parse(
            l,
            "expected maximum column and row degrees",
        ));
    };
    let (l, col_deg) = next("column degrees")?;
    check_len(l, &col_deg, cols, "column degrees")?;
    let (l, row_deg) = next("row degrees")?;
    check_len(l, &row_deg, rows, "row degrees")?;
    let mut m = BinaryMatrix::zeros(rows, cols);
    for (c, &deg) in col_deg.iter().enumerate() {
        let (l, idx) = next("column lists")?;
        let idx = nonzero(idx, cmax, deg, l)?;
        for r in idx {
            if r > rows {
                return Err(FormatError::parse(
                    l,
                    format!("row index {r} exceeds {rows}"),
                ));
            }
            m.set(r - 1, c, true);
        }
    }
    for (r, &deg) in row_deg.iter().enumerate() {
        let (l, idx) = next("row lists")?;
        let idx = nonzero(idx, rmax, deg, l)?;
        let mut from_rows = vec![false; cols];
        for c in idx {
            if c > cols {
                return Err(FormatError::parse(
                    l,
                    format!("column index {c} exceeds {cols}"),
                ));
            }
            from_rows[c - 1] = true;
        }
        if (0..cols).any(|c| m.get(r, c) != from_rows[c]) {
            return Err(FormatError::parse(
                l,
                format!("row {} disagrees with the column lists", r + 1),
            ));
        }
    }
    Ok(m)
}

fn check_len(line: usize, v: &[usize], want: usize, what: &str) -> Result<(), FormatError> {
    if v.len() == want {
        Ok(())
    } else {
        Err(FormatError::parse(
            line,
            format!("expected {want} {what}, found {}", v.len()),
        ))
    }
}

fn nonzero(
    idx: Vec<usize>,
    max: usize,
    degree: usize,
    line: usize,
) -> Result<Vec<usize>, FormatError> {
    if idx.len() > max.max(degree) {
        return Err(FormatError::parse(line, format!("more than {max} entries")));
    }
    let idx: Vec<usize> = idx.into_iter().filter(|&i| i != 0).collect();
    if idx.len() != degree {
        return Err(FormatError::parse(
            line,
            format!("degree {degree} but {} indices", idx.len()),
        ));
    }
    Ok(idx)
}
