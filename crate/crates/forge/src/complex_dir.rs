// SPDX-License-Identifier: Apache-2.0
//! A chain complex as a directory: `boundary_<k>.alist` for each degree and
//! a `complex.txt` listing the length and the dimensions.

use std::fs;
use std::path::Path;

use qforge_core::ChainComplex;

use crate::alist::{parse_alist, write_alist};
use crate::FormatError;

pub const COMPLEX_MANIFEST: &str = "complex.txt";

pub fn write_complex(dir: &Path, c: &ChainComplex) -> Result<(), FormatError> {
    fs::create_dir_all(dir)?;
    let dims: Vec<String> = c.dims().iter().map(usize::to_string).collect();
    fs::write(
        dir.join(COMPLEX_MANIFEST),
        format!("length {}\ndims {}\n", c.length(), dims.join(" ")),
    )?;
    for k in 1..=c.length() {
        fs::write(
            dir.join(format!("boundary_{k}.alist")),
            write_alist(c.boundary(k)),
        )?;
    }
    Ok(())
}

pub fn read_complex(dir: &Path) -> Result<ChainComplex, FormatError> {
    let text = fs::read_to_string(dir.join(COMPLEX_MANIFEST))?;
    let mut length = None;
    let mut dims = None;
    for (i, line) in text.lines().enumerate() {
        let mut parts = line.split_whitespace();
        let bad = || FormatError::parse(i + 1, format!("cannot read {line:?}"));
        match parts.next() {
            Some("length") => {
                length = Some(
                    parts
                        .next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(bad)?,
                )
            }
            Some("dims") => {
                dims = Some(
                    parts
                        .map(str::parse)
                        .collect::<Result<Vec<usize>, _>>()
                        .map_err(|_| bad())?,
                )
            }
            None => {}
            Some(_) => return Err(bad()),
        }
    }
    let length = length.ok_or_else(|| FormatError::Truncated("length".into()))?;
    let dims = dims.ok_or_else(|| FormatError::Truncated("dims".into()))?;
    let boundaries = (1..=length)
        .map(|k| {
            parse_alist(&fs::read_to_string(
                dir.join(format!("boundary_{k}.alist")),
            )?)
        })
        .collect::<Result<Vec<_>, _>>()?;
    ChainComplex::new(dims, boundaries).map_err(|e| FormatError::Invalid(e.to_string()))
}
