// SPDX-License-Identifier: Apache-2.0
//! Base-code specifications accepted by `--base`.

use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use qforge_core::classical::{hamming_7_4, repetition_closed_loop, repetition_open};
use qforge_core::ClassicalCode;

use crate::alist::parse_alist;

/// `rep:N` (closed-loop repetition), `open:N` (open chain), `hamming`, or `alist:PATH`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseSpec {
    Rep(usize),
    Open(usize),
    Hamming,
    Alist(PathBuf),
}

impl std::str::FromStr for BaseSpec {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
        let size = || {
            arg.parse::<usize>()
                .with_context(|| format!("base {s:?}: expected a length after ':'"))
        };
        Ok(match kind {
            "rep" => Self::Rep(size()?),
            "open" => Self::Open(size()?),
            "hamming" if arg.is_empty() => Self::Hamming,
            "alist" if !arg.is_empty() => Self::Alist(arg.into()),
            _ => bail!("unknown base {s:?}; expected rep:N, open:N, hamming or alist:PATH"),
        })
    }
}

impl std::fmt::Display for BaseSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Rep(n) => write!(f, "rep:{n}"),
            Self::Open(n) => write!(f, "open:{n}"),
            Self::Hamming => f.write_str("hamming"),
            Self::Alist(p) => write!(f, "alist:{}", p.display()),
        }
    }
}

impl BaseSpec {
    pub fn load(&self) -> Result<ClassicalCode> {
        Ok(match self {
            Self::Rep(n) => repetition_closed_loop(*n)?,
            Self::Open(n) => repetition_open(*n)?,
            Self::Hamming => hamming_7_4(),
            Self::Alist(p) => {
                let text =
                    fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
                ClassicalCode::new(parse_alist(&text).map_err(|e| e.in_file(p))?)
            }
        })
    }

    pub fn path(&self) -> Option<&PathBuf> {
        match self {
            Self::Alist(p) => Some(p),
            _ => None,
        }
    }
}
