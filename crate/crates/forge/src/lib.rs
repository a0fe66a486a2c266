// SPDX-License-Identifier: Apache-2.0
//! File formats, run manifests and the `forge` command line on top of
//! [`qforge_core`].

pub mod alist;
pub mod base;
pub mod bundle;
pub mod cli;
pub mod complex_dir;
pub mod config;
pub mod dense;
pub mod run;

use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unexpected end of input while reading {0}")]
    Truncated(String),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Io(String),
    #[error("manifest: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Code(#[from] qforge_core::css::CodeError),
}

impl FormatError {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Self::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// Prefixes parse errors with the file they came from.
    pub fn in_file(self, path: &Path) -> Self {
        match self {
            Self::Parse { line, msg } => Self::Invalid(format!("{}:{line}: {msg}", path.display())),
            other => other,
        }
    }
}

impl From<std::io::Error> for FormatError {
    fn from(e: std::io::Error) -> Self {
        Self::Io(e.to_string())
    }
}
