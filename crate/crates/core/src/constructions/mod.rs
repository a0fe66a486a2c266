// SPDX-License-Identifier: Apache-2.0
//! Code families built from products of chain complexes.
//!
//! Every builder returns a [`BlockTaggedCss`]: the stabilizer matrices plus
//! the row and column bands they were assembled from and a symbolic label
//! for each nonzero block. Bands are 0-based in the API; diagnostics print
//! them 1-based.

mod hgp;
mod rsh;
mod sehgp;
mod ssh;

pub use hgp::{hgp, hgp_from_complexes};
pub use rsh::{brsh, rsh, RshVariant};
pub use sehgp::{bsh, bsh_swaps, sehgp, SehgpBundle};
pub use ssh::{bssh, ssh, xzzx3d, SshBundle};

use alloc::borrow::ToOwned;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::classical::{ClassicalCode, ClassicalError};
use crate::complex::ComplexError;
use crate::css::{CodeError, CssCode, DistanceKind};
use crate::f2::{BinaryMatrix, BinaryVector, F2Error};
use crate::search::Distance;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("commutation broken at {}", fmt_blocks(.blocks))]
    CommutationBroken { blocks: Vec<(usize, usize)> },
    #[error("band {band} out of range ({count} bands)")]
    BandOutOfRange { band: usize, count: usize },
    #[error("block ({}, {}) is empty; nothing to swap", .row_band + 1, .col_band + 1)]
    EmptyBlock { row_band: usize, col_band: usize },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Classical(#[from] ClassicalError),
    #[error(transparent)]
    F2(#[from] F2Error),
}

fn fmt_blocks(blocks: &[(usize, usize)]) -> String {
    let parts: Vec<String> = blocks
        .iter()
        .map(|(a, b)| format!("block ({}, {})", a + 1, b + 1))
        .collect();
    parts.join(", ")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Hgp,
    Sehgp,
    Bsh,
    Ssh,
    Bssh,
    Rsh1,
    Rsh2,
    Brsh1,
    Brsh2,
    Xzzx3d,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Hgp,
        Family::Sehgp,
        Family::Bsh,
        Family::Ssh,
        Family::Bssh,
        Family::Rsh1,
        Family::Rsh2,
        Family::Brsh1,
        Family::Brsh2,
        Family::Xzzx3d,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Hgp => "hgp",
            Family::Sehgp => "sehgp",
            Family::Bsh => "bsh",
            Family::Ssh => "ssh",
            Family::Bssh => "bssh",
            Family::Rsh1 => "rsh1",
            Family::Rsh2 => "rsh2",
            Family::Brsh1 => "brsh1",
            Family::Brsh2 => "brsh2",
            Family::Xzzx3d => "xzzx3d",
        }
    }

    /// Number of classical base codes the builder consumes.
    pub fn base_count(self) -> usize {
        match self {
            Family::Hgp => 2,
            Family::Sehgp
            | Family::Bsh
            | Family::Rsh1
            | Family::Rsh2
            | Family::Brsh1
            | Family::Brsh2 => 4,
            Family::Ssh | Family::Bssh | Family::Xzzx3d => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = ConstructionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| ConstructionError::UnknownFamily(s.to_owned()))
    }
}

/// A contiguous range of rows or columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Band {
    pub name: String,
    pub len: usize,
}

impl Band {
    pub fn new(name: impl Into<String>, len: usize) -> Self {
        Self {
            name: name.into(),
            len,
        }
    }
}

/// Symbolic content of one block: its X part and its Z part.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BlockLabel {
    pub x: Option<String>,
    pub z: Option<String>,
}

impl BlockLabel {
    pub fn x(s: &str) -> Self {
        Self {
            x: Some(s.into()),
            z: None,
        }
    }

    pub fn z(s: &str) -> Self {
        Self {
            x: None,
            z: Some(s.into()),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_none() && self.z.is_none()
    }
}

/// A stabilizer code with its block structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTaggedCss {
    pub family: Family,
    pub code: CssCode,
    pub row_bands: Vec<Band>,
    pub col_bands: Vec<Band>,
    /// `labels[r][c]` describes block `(r, c)`.
    pub labels: Vec<Vec<BlockLabel>>,
    /// Whether every base code satisfies `ker H = ker Hᵀ`, when the family assumes it.
    pub premise_holds: Option<bool>,
    /// Known logical representatives in CSS-frame coordinates, used as distance upper bounds.
    pub witnesses: Vec<(DistanceKind, BinaryVector)>,
}

/// Parameters of a constructed code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub checks: usize,
    pub d_x: Distance,
    pub d_z: Distance,
    pub d_s: Option<Distance>,
}

impl CodeParams {
    pub fn d(&self) -> Distance {
        self.d_x.min(self.d_z)
    }
}

impl BlockTaggedCss {
    pub fn row_offset(&self, band: usize) -> usize {
        self.row_bands[..band].iter().map(|b| b.len).sum()
    }

    pub fn col_offset(&self, band: usize) -> usize {
        self.col_bands[..band].iter().map(|b| b.len).sum()
    }

    pub fn row_band_of(&self, row: usize) -> usize {
        band_of(&self.row_bands, row)
    }

    pub fn col_band_of(&self, col: usize) -> usize {
        band_of(&self.col_bands, col)
    }

    /// X part of block `(r, c)`.
    pub fn block_x(&self, r: usize, c: usize) -> BinaryMatrix {
        self.block(self.code.hx(), r, c)
    }

    /// Z part of block `(r, c)`.
    pub fn block_z(&self, r: usize, c: usize) -> BinaryMatrix {
        self.block(self.code.hz(), r, c)
    }

    fn block(&self, m: &BinaryMatrix, r: usize, c: usize) -> BinaryMatrix {
        m.submatrix(
            self.row_offset(r),
            self.row_bands[r].len,
            self.col_offset(c),
            self.col_bands[c].len,
        )
    }

    /// Pairs of row bands `(a, b)`, `a <= b`, containing anticommuting stabilizers.
    pub fn broken_blocks(&self) -> Vec<(usize, usize)> {
        let p = self.code.commutation_matrix();
        let mut out = Vec::new();
        for a in 0..self.row_bands.len() {
            for b in a..self.row_bands.len() {
                let sub = p.submatrix(
                    self.row_offset(a),
                    self.row_bands[a].len,
                    self.row_offset(b),
                    self.row_bands[b].len,
                );
                if !sub.is_zero() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Commutation with a block-level diagnostic, then syndrome-check annihilation.
    pub fn validate(&self) -> Result<(), ConstructionError> {
        let blocks = self.broken_blocks();
        if !blocks.is_empty() {
            return Err(ConstructionError::CommutationBroken { blocks });
        }
        self.code.validate()?;
        Ok(())
    }

    /// Distances of both kinds searched up to `max_weight`, plus `d_s`.
    pub fn params(&self, max_weight: usize) -> Result<CodeParams, ConstructionError> {
        let witnesses = |kind| -> Vec<BinaryVector> {
            self.witnesses
                .iter()
                .filter(|(k, _)| *k == kind)
                .map(|(_, v)| v.clone())
                .collect()
        };
        let d_x = self.code.distance_with_witnesses(
            DistanceKind::X,
            max_weight,
            &witnesses(DistanceKind::X),
        )?;
        let d_z = self.code.distance_with_witnesses(
            DistanceKind::Z,
            max_weight,
            &witnesses(DistanceKind::Z),
        )?;
        Ok(CodeParams {
            n: self.code.n(),
            k: self.code.logical_count(),
            checks: self.code.num_checks(),
            d_x: d_x.value,
            d_z: d_z.value,
            d_s: self.single_shot_distance(max_weight),
        })
    }

    /// `min(d(hsx), d(hsz))` over the attached syndrome checks.
    ///
    /// Each matrix is scored on the syndrome bits it touches; bits it never
    /// checks belong to the other matrix.
    pub fn single_shot_distance(&self, max_weight: usize) -> Option<Distance> {
        let ds: Vec<Distance> = [self.code.hsx(), self.code.hsz()]
            .into_iter()
            .flatten()
            .filter_map(|m| {
                let covered: Vec<usize> =
                    (0..m.cols()).filter(|&c| !m.column(c).is_zero()).collect();
                ClassicalCode::new(m.select_cols(&covered))
                    .distance(max_weight)
                    .map(|r| r.value)
            })
            .collect();
        ds.into_iter().reduce(Distance::min)
    }
}

fn band_of(bands: &[Band], idx: usize) -> usize {
    let mut off = 0;
    for (i, b) in bands.iter().enumerate() {
        off += b.len;
        if idx < off {
            return i;
        }
    }
    panic!("index {idx} beyond all bands")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CphrKind {
    T1,
    T2,
}

/// Exchange of the X and Z parts of two row bands inside one column band.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CphrSwap {
    pub kind: CphrKind,
    pub row_bands: [usize; 2],
    pub col_band: usize,
}

/// Applies a single swap and rejects it if any stabilizers stop commuting.
pub fn cphr(code: &BlockTaggedCss, swap: CphrSwap) -> Result<BlockTaggedCss, ConstructionError> {
    apply_swaps(code, &[swap])
}

/// Applies several swaps, validating commutation only once all are done.
///
/// Attached syndrome checks are dropped; builders re-attach their own.
pub fn apply_swaps(
    code: &BlockTaggedCss,
    swaps: &[CphrSwap],
) -> Result<BlockTaggedCss, ConstructionError> {
    let out = apply_swaps_unchecked(code, swaps)?;
    let blocks = out.broken_blocks();
    if !blocks.is_empty() {
        return Err(ConstructionError::CommutationBroken { blocks });
    }
    Ok(out)
}

/// [`apply_swaps`] without the final check, for inspecting broken intermediates.
pub fn apply_swaps_unchecked(
    code: &BlockTaggedCss,
    swaps: &[CphrSwap],
) -> Result<BlockTaggedCss, ConstructionError> {
    let mut hx = code.code.hx().clone();
    let mut hz = code.code.hz().clone();
    let mut labels = code.labels.clone();
    for s in swaps {
        let c = s.col_band;
        if c >= code.col_bands.len() {
            return Err(ConstructionError::BandOutOfRange {
                band: c,
                count: code.col_bands.len(),
            });
        }
        let mut rows = vec![s.row_bands[0]];
        if s.row_bands[1] != s.row_bands[0] {
            rows.push(s.row_bands[1]);
        }
        for &r in &rows {
            if r >= code.row_bands.len() {
                return Err(ConstructionError::BandOutOfRange {
                    band: r,
                    count: code.row_bands.len(),
                });
            }
            if labels[r][c].is_empty() {
                return Err(ConstructionError::EmptyBlock {
                    row_band: r,
                    col_band: c,
                });
            }
            let (r0, h) = (code.row_offset(r), code.row_bands[r].len);
            let (c0, w) = (code.col_offset(c), code.col_bands[c].len);
            let bx = hx.submatrix(r0, h, c0, w);
            let bz = hz.submatrix(r0, h, c0, w);
            hx.write_block(r0, c0, &bz);
            hz.write_block(r0, c0, &bx);
            let l = &mut labels[r][c];
            core::mem::swap(&mut l.x, &mut l.z);
        }
    }
    Ok(BlockTaggedCss {
        family: code.family,
        code: CssCode::new(hx, hz)?,
        row_bands: code.row_bands.clone(),
        col_bands: code.col_bands.clone(),
        labels,
        premise_holds: code.premise_holds,
        witnesses: code.witnesses.clone(),
    })
}

/// Hadamard on every qubit of a column band, as a swap over all row bands.
pub fn hadamard_column_band(
    code: &BlockTaggedCss,
    kind: CphrKind,
    col_band: usize,
) -> Result<BlockTaggedCss, ConstructionError> {
    let swaps: Vec<CphrSwap> = (0..code.row_bands.len())
        .filter(|&r| !code.labels[r][col_band].is_empty())
        .map(|r| CphrSwap {
            kind,
            row_bands: [r, r],
            col_band,
        })
        .collect();
    apply_swaps(code, &swaps)
}

/// Block-diagonal syndrome checks: the left null space of each row band of
/// `h`, skipping bands where `h` vanishes.
pub fn bandwise_left_null(h: &BinaryMatrix, bands: &[Band]) -> BinaryMatrix {
    let mut pieces: Vec<(usize, BinaryMatrix)> = Vec::new();
    let mut off = 0;
    for b in bands {
        let slice = h.submatrix(off, b.len, 0, h.cols());
        if !slice.is_zero() {
            pieces.push((off, slice.left_null_space()));
        }
        off += b.len;
    }
    let rows: usize = pieces.iter().map(|(_, m)| m.rows()).sum();
    let mut out = BinaryMatrix::zeros(rows, h.rows());
    let mut r0 = 0;
    for (c0, m) in pieces {
        out.write_block(r0, c0, &m);
        r0 += m.rows();
    }
    out
}

/// `I_a ⊗ m`.
pub(crate) fn id_kron(a: usize, m: &BinaryMatrix) -> Result<BinaryMatrix, F2Error> {
    BinaryMatrix::identity(a).kron(m)
}

/// `m ⊗ I_b`.
pub(crate) fn kron_id(m: &BinaryMatrix, b: usize) -> Result<BinaryMatrix, F2Error> {
    m.kron(&BinaryMatrix::identity(b))
}

/// Assembles a block-tagged code from a grid of `(x, z)` blocks.
pub(crate) fn assemble(
    family: Family,
    row_bands: Vec<Band>,
    col_bands: Vec<Band>,
    grid: Vec<Vec<Cell>>,
) -> Result<BlockTaggedCss, ConstructionError> {
    let heights: Vec<usize> = row_bands.iter().map(|b| b.len).collect();
    let widths: Vec<usize> = col_bands.iter().map(|b| b.len).collect();
    let pick = |x: bool| -> Vec<Vec<Option<&BinaryMatrix>>> {
        grid.iter()
            .map(|row| {
                row.iter()
                    .map(|cell| match (cell, x) {
                        (Cell::X(m, _), true) | (Cell::Z(m, _), false) => Some(m),
                        _ => None,
                    })
                    .collect()
            })
            .collect()
    };
    let hx = BinaryMatrix::block_compose_sized(&heights, &widths, &pick(true))?;
    let hz = BinaryMatrix::block_compose_sized(&heights, &widths, &pick(false))?;
    let labels = grid
        .iter()
        .map(|row| {
            row.iter()
                .map(|cell| match cell {
                    Cell::X(_, l) => BlockLabel::x(l),
                    Cell::Z(_, l) => BlockLabel::z(l),
                    Cell::Empty => BlockLabel::default(),
                })
                .collect()
        })
        .collect();
    Ok(BlockTaggedCss {
        family,
        code: CssCode::new(hx, hz)?,
        row_bands,
        col_bands,
        labels,
        premise_holds: None,
        witnesses: Vec::new(),
    })
}

pub(crate) enum Cell {
    X(BinaryMatrix, &'static str),
    Z(BinaryMatrix, &'static str),
    Empty,
}
