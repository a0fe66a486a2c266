// SPDX-License-Identifier: Apache-2.0
//! Code bundles: `hx`, `hz`, `hsx`, `hsz` as alist files plus `manifest.json`
//! carrying parameters and the block map.
//!
//! Absent syndrome checks are written as zero-row matrices and flagged in
//! the manifest, so a bundle always has the same five files.

use std::fs;
use std::path::{Path, PathBuf};

use qforge_core::constructions::{Band, BlockLabel, BlockTaggedCss, CodeParams, Family};
use qforge_core::css::{params_string, DistanceKind};
use qforge_core::{BinaryMatrix, BinaryVector, CssCode, Distance};
use serde::{Deserialize, Serialize};

use crate::alist::{parse_alist, write_alist};
use crate::FormatError;

pub const MATRIX_FILES: [&str; 4] = ["hx.alist", "hz.alist", "hsx.alist", "hsz.alist"];
pub const MANIFEST_FILE: &str = "manifest.json";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceRecord {
    pub exact: bool,
    pub lower: usize,
    pub upper: Option<usize>,
}

impl From<Distance> for DistanceRecord {
    fn from(d: Distance) -> Self {
        Self {
            exact: d.exact().is_some(),
            lower: d.lower_bound(),
            upper: d.upper_bound(),
        }
    }
}

impl From<DistanceRecord> for Distance {
    fn from(r: DistanceRecord) -> Self {
        if r.exact {
            Distance::Exact(r.lower)
        } else {
            Distance::Bounded {
                at_least: r.lower,
                at_most: r.upper,
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandRecord {
    pub name: String,
    pub len: usize,
}

/// One nonzero block, 1-based as in diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRecord {
    pub row: usize,
    pub col: usize,
    pub x: Option<String>,
    pub z: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub kind: String,
    pub support: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeManifest {
    pub family: String,
    pub bases: Vec<String>,
    pub params: String,
    pub n: usize,
    pub k: usize,
    pub checks: usize,
    pub d_x: DistanceRecord,
    pub d_z: DistanceRecord,
    pub d_s: Option<DistanceRecord>,
    pub max_weight: usize,
    pub premise_holds: Option<bool>,
    pub hsx: bool,
    pub hsz: bool,
    pub row_bands: Vec<BandRecord>,
    pub col_bands: Vec<BandRecord>,
    pub blocks: Vec<BlockRecord>,
    pub witnesses: Vec<WitnessRecord>,
}

impl CodeManifest {
    pub fn new(
        code: &BlockTaggedCss,
        bases: Vec<String>,
        params: &CodeParams,
        max_weight: usize,
    ) -> Self {
        let bands = |bs: &[Band]| {
            bs.iter()
                .map(|b| BandRecord {
                    name: b.name.clone(),
                    len: b.len,
                })
                .collect()
        };
        let mut blocks = Vec::new();
        for (r, row) in code.labels.iter().enumerate() {
            for (c, l) in row.iter().enumerate() {
                if !l.is_empty() {
                    blocks.push(BlockRecord {
                        row: r + 1,
                        col: c + 1,
                        x: l.x.clone(),
                        z: l.z.clone(),
                    });
                }
            }
        }
        Self {
            family: code.family.name().to_owned(),
            bases,
            params: params_string(params.n, params.k, &params.d()),
            n: params.n,
            k: params.k,
            checks: params.checks,
            d_x: params.d_x.into(),
            d_z: params.d_z.into(),
            d_s: params.d_s.map(Into::into),
            max_weight,
            premise_holds: code.premise_holds,
            hsx: code.code.hsx().is_some(),
            hsz: code.code.hsz().is_some(),
            row_bands: bands(&code.row_bands),
            col_bands: bands(&code.col_bands),
            blocks,
            witnesses: code
                .witnesses
                .iter()
                .map(|(k, v)| WitnessRecord {
                    kind: kind_name(*k).into(),
                    support: v.support(),
                })
                .collect(),
        }
    }

    pub fn distance(&self) -> Distance {
        Distance::from(self.d_x).min(self.d_z.into())
    }
}

fn kind_name(k: DistanceKind) -> &'static str {
    match k {
        DistanceKind::X => "X",
        DistanceKind::Z => "Z",
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bundle {
    pub code: BlockTaggedCss,
    pub manifest: CodeManifest,
}

impl Bundle {
    /// Paths of the five bundle files under `dir`.
    pub fn files(dir: &Path) -> Vec<PathBuf> {
        MATRIX_FILES
            .iter()
            .chain([&MANIFEST_FILE])
            .map(|f| dir.join(f))
            .collect()
    }

    pub fn write(&self, dir: &Path) -> Result<Vec<PathBuf>, FormatError> {
        fs::create_dir_all(dir)?;
        let c = &self.code.code;
        let empty = BinaryMatrix::zeros(0, c.num_checks());
        let mats = [
            c.hx(),
            c.hz(),
            c.hsx().unwrap_or(&empty),
            c.hsz().unwrap_or(&empty),
        ];
        for (name, m) in MATRIX_FILES.iter().zip(mats) {
            fs::write(dir.join(name), write_alist(m))?;
        }
        let mut json = serde_json::to_string_pretty(&self.manifest)?;
        json.push('\n');
        fs::write(dir.join(MANIFEST_FILE), json)?;
        Ok(Self::files(dir))
    }

    pub fn read(dir: &Path) -> Result<Self, FormatError> {
        let read = |name: &str| -> Result<BinaryMatrix, FormatError> {
            let path = dir.join(name);
            let text = fs::read_to_string(&path)
                .map_err(|e| FormatError::Io(format!("{}: {e}", path.display())))?;
            parse_alist(&text).map_err(|e| e.in_file(&path))
        };
        let manifest: CodeManifest =
            serde_json::from_str(&fs::read_to_string(dir.join(MANIFEST_FILE))?)?;
        let [hx, hz, hsx, hsz] = MATRIX_FILES.map(read);
        let code = CssCode::new(hx?, hz?)?;
        let code =
            code.with_syndrome_checks(manifest.hsx.then_some(hsx?), manifest.hsz.then_some(hsz?))?;
        let family: Family = manifest.family.parse().map_err(
            |e: qforge_core::constructions::ConstructionError| FormatError::Invalid(e.to_string()),
        )?;
        let bands = |bs: &[BandRecord]| {
            bs.iter()
                .map(|b| Band::new(b.name.clone(), b.len))
                .collect::<Vec<_>>()
        };
        let row_bands = bands(&manifest.row_bands);
        let col_bands = bands(&manifest.col_bands);
        let rows: usize = row_bands.iter().map(|b| b.len).sum();
        let cols: usize = col_bands.iter().map(|b| b.len).sum();
        if (rows, cols) != (code.num_checks(), code.n()) {
            return Err(FormatError::Invalid(format!(
                "bands cover {rows}×{cols} but the matrices are {}×{}",
                code.num_checks(),
                code.n()
            )));
        }
        let mut labels = vec![vec![BlockLabel::default(); col_bands.len()]; row_bands.len()];
        for b in &manifest.blocks {
            let slot = labels
                .get_mut(b.row.wrapping_sub(1))
                .and_then(|r| r.get_mut(b.col.wrapping_sub(1)))
                .ok_or_else(|| {
                    FormatError::Invalid(format!(
                        "block ({}, {}) outside the band grid",
                        b.row, b.col
                    ))
                })?;
            *slot = BlockLabel {
                x: b.x.clone(),
                z: b.z.clone(),
            };
        }
        let witnesses = manifest
            .witnesses
            .iter()
            .map(|w| {
                let kind = match w.kind.as_str() {
                    "X" => DistanceKind::X,
                    "Z" => DistanceKind::Z,
                    other => return Err(FormatError::Invalid(format!("witness kind {other:?}"))),
                };
                if w.support.iter().any(|&q| q >= code.n()) {
                    return Err(FormatError::Invalid("witness support out of range".into()));
                }
                Ok((kind, BinaryVector::from_support(code.n(), &w.support)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let code = BlockTaggedCss {
            family,
            code,
            row_bands,
            col_bands,
            labels,
            premise_holds: manifest.premise_holds,
            witnesses,
        };
        Ok(Self { code, manifest })
    }
}
