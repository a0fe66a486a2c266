// SPDX-License-Identifier: Apache-2.0
//! Chain complexes over GF(2) and their tensor products.
//!
//! A complex of length `L` has spaces `C_0..=C_L` and boundaries
//! `∂_k : C_k -> C_{k-1}` stored as `dim C_{k-1} x dim C_k` matrices.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::f2::{BinaryMatrix, F2Error};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("boundary composition is nonzero at degree {degree}")]
    NotAComplex { degree: usize },
    #[error("boundary of degree {degree} has shape {found:?}, expected {expected:?}")]
    Shape {
        degree: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("degree {degree} out of range for a complex of length {length}")]
    Degree { degree: usize, length: usize },
    #[error(transparent)]
    F2(#[from] F2Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainComplex {
    dims: Vec<usize>,
    boundaries: Vec<BinaryMatrix>,
}

impl ChainComplex {
    /// Checks only that consecutive shapes chain; see [`ChainComplex::validate`].
    pub fn new(dims: Vec<usize>, boundaries: Vec<BinaryMatrix>) -> Result<Self, ComplexError> {
        if dims.len() != boundaries.len() + 1 {
            return Err(ComplexError::Degree {
                degree: boundaries.len(),
                length: dims.len().saturating_sub(1),
            });
        }
        for (i, b) in boundaries.iter().enumerate() {
            let expected = (dims[i], dims[i + 1]);
            if b.shape() != expected {
                return Err(ComplexError::Shape {
                    degree: i + 1,
                    expected,
                    found: b.shape(),
                });
            }
        }
        Ok(Self { dims, boundaries })
    }

    /// Builds from `[∂_1, ∂_2, ..., ∂_L]`, inferring dimensions.
    pub fn from_boundaries(boundaries: Vec<BinaryMatrix>) -> Result<Self, ComplexError> {
        let Some(first) = boundaries.first() else {
            return Err(ComplexError::Degree {
                degree: 1,
                length: 0,
            });
        };
        let mut dims = vec![first.rows()];
        dims.extend(boundaries.iter().map(BinaryMatrix::cols));
        Self::new(dims, boundaries)
    }

    /// The length-1 complex `C_1 = F^n -> C_0 = F^m` of a parity-check matrix.
    pub fn from_parity_check(h: &BinaryMatrix) -> Self {
        Self {
            dims: vec![h.rows(), h.cols()],
            boundaries: vec![h.clone()],
        }
    }

    /// A single space with no boundaries.
    pub fn point(dim: usize) -> Self {
        Self {
            dims: vec![dim],
            boundaries: Vec::new(),
        }
    }

    pub fn length(&self) -> usize {
        self.boundaries.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `dim C_k`, zero outside `0..=L`.
    pub fn dim(&self, k: usize) -> usize {
        self.dims.get(k).copied().unwrap_or(0)
    }

    /// `∂_k` for `k` in `1..=L`.
    ///
    /// # Panics
    /// If `k` is out of range.
    pub fn boundary(&self, k: usize) -> &BinaryMatrix {
        assert!(k >= 1 && k <= self.length(), "no boundary of degree {k}");
        &self.boundaries[k - 1]
    }

    pub fn boundaries(&self) -> &[BinaryMatrix] {
        &self.boundaries
    }

    /// Checks `∂_k ∂_{k+1} = 0`, reporting the lowest failing `k`.
    pub fn validate(&self) -> Result<(), ComplexError> {
        for k in 1..self.length() {
            if !self.boundary(k).mul(self.boundary(k + 1))?.is_zero() {
                return Err(ComplexError::NotAComplex { degree: k });
            }
        }
        Ok(())
    }

    /// `dim ker ∂_k - rank ∂_{k+1}` with the boundaries outside the complex taken as zero.
    pub fn betti(&self, k: usize) -> usize {
        if k > self.length() {
            return 0;
        }
        let ker = if k == 0 {
            self.dims[0]
        } else {
            self.dims[k] - self.boundary(k).rank()
        };
        let im = if k < self.length() {
            self.boundary(k + 1).rank()
        } else {
            0
        };
        ker - im
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        (0..=self.length()).map(|k| self.betti(k)).collect()
    }

    /// Reversed complex with transposed boundaries (the cochain complex).
    pub fn dual(&self) -> Self {
        let mut dims = self.dims.clone();
        dims.reverse();
        let boundaries = self
            .boundaries
            .iter()
            .rev()
            .map(BinaryMatrix::transpose)
            .collect();
        Self { dims, boundaries }
    }
}

/// Order of the summands `X_i ⊗ Y_j` inside each degree of a tensor product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SummandOrder {
    /// Increasing `i`.
    #[default]
    Ascending,
    /// Decreasing `i`, the usual hypergraph-product qubit order.
    Descending,
}

/// Summands `(i, j)` of degree `k` in a product of complexes of lengths `lx` and `ly`.
pub fn summands(lx: usize, ly: usize, k: usize, order: SummandOrder) -> Vec<(usize, usize)> {
    let mut s: Vec<(usize, usize)> = (0..=lx)
        .filter(|&i| i <= k && k - i <= ly)
        .map(|i| (i, k - i))
        .collect();
    if order == SummandOrder::Descending {
        s.reverse();
    }
    s
}

/// Human-readable summand name such as `J1⊗K0`.
pub fn summand_name(x: &str, y: &str, (i, j): (usize, usize)) -> String {
    format!("{x}{i}⊗{y}{j}")
}

/// Tensor product with the graded boundary
/// `∂(a ⊗ b) = ∂a ⊗ b + a ⊗ ∂b`, summands ordered per `order`.
pub fn tensor_with_order(
    x: &ChainComplex,
    y: &ChainComplex,
    order: SummandOrder,
) -> Result<ChainComplex, ComplexError> {
    x.validate()?;
    y.validate()?;
    let (lx, ly) = (x.length(), y.length());
    let len = lx + ly;
    let layout: Vec<Vec<(usize, usize)>> = (0..=len).map(|k| summands(lx, ly, k, order)).collect();
    let dims: Vec<usize> = layout
        .iter()
        .map(|s| s.iter().map(|&(i, j)| x.dim(i) * y.dim(j)).sum())
        .collect();
    let mut boundaries = Vec::with_capacity(len);
    for k in 1..=len {
        let rows = &layout[k - 1];
        let cols = &layout[k];
        let heights: Vec<usize> = rows.iter().map(|&(i, j)| x.dim(i) * y.dim(j)).collect();
        let widths: Vec<usize> = cols.iter().map(|&(i, j)| x.dim(i) * y.dim(j)).collect();
        let mut blocks: Vec<Vec<Option<BinaryMatrix>>> = vec![vec![None; cols.len()]; rows.len()];
        for (c, &(i, j)) in cols.iter().enumerate() {
            if i >= 1 {
                let r = rows
                    .iter()
                    .position(|&s| s == (i - 1, j))
                    .expect("summand present");
                blocks[r][c] = Some(x.boundary(i).kron(&BinaryMatrix::identity(y.dim(j)))?);
            }
            if j >= 1 {
                let r = rows
                    .iter()
                    .position(|&s| s == (i, j - 1))
                    .expect("summand present");
                blocks[r][c] = Some(BinaryMatrix::identity(x.dim(i)).kron(y.boundary(j))?);
            }
        }
        let grid: Vec<Vec<Option<&BinaryMatrix>>> = blocks
            .iter()
            .map(|row| row.iter().map(Option::as_ref).collect())
            .collect();
        boundaries.push(BinaryMatrix::block_compose_sized(&heights, &widths, &grid)?);
    }
    ChainComplex::new(dims, boundaries)
}

/// Tensor product in the layout used throughout the constructions: the
/// explicit length-2 formulas of [`tensor_length2`] when both factors have
/// length 2, ascending summand order otherwise.
pub fn tensor(x: &ChainComplex, y: &ChainComplex) -> Result<ChainComplex, ComplexError> {
    if x.length() == 2 && y.length() == 2 {
        tensor_length2(x, y)
    } else {
        tensor_with_order(x, y, SummandOrder::Ascending)
    }
}

/// Summand order of [`tensor_length2`], lowest degree first.
pub const LENGTH2_LAYOUT: [&[(usize, usize)]; 5] = [
    &[(0, 0)],
    &[(0, 1), (1, 0)],
    &[(0, 2), (1, 1), (2, 0)],
    &[(2, 1), (1, 2)],
    &[(2, 2)],
];

/// Length-4 product `Q = J ⊗ K` of two length-2 complexes, block by block.
///
/// `Q_3` lists `J_2 ⊗ K_1` before `J_1 ⊗ K_2`; every other degree is ascending.
pub fn tensor_length2(j: &ChainComplex, k: &ChainComplex) -> Result<ChainComplex, ComplexError> {
    for c in [j, k] {
        if c.length() != 2 {
            return Err(ComplexError::Degree {
                degree: 2,
                length: c.length(),
            });
        }
        c.validate()?;
    }
    let id = BinaryMatrix::identity;
    let (j1, j2) = (j.boundary(1), j.boundary(2));
    let (k1, k2) = (k.boundary(1), k.boundary(2));
    let (dj, dk) = (|i| j.dim(i), |i| k.dim(i));

    let d4 = BinaryMatrix::vstack(&[&id(dj(2)).kron(k2)?, &j2.kron(&id(dk(2)))?])?;

    let d3 = {
        let a = j1.kron(&id(dk(2)))?;
        let b = j2.kron(&id(dk(1)))?;
        let c = id(dj(1)).kron(k2)?;
        let d = id(dj(2)).kron(k1)?;
        let h = [dj(0) * dk(2), dj(1) * dk(1), dj(2) * dk(0)];
        let w = [dj(2) * dk(1), dj(1) * dk(2)];
        BinaryMatrix::block_compose_sized(
            &h,
            &w,
            &[
                vec![None, Some(&a)],
                vec![Some(&b), Some(&c)],
                vec![Some(&d), None],
            ],
        )?
    };

    let d2 = {
        let a = id(dj(0)).kron(k2)?;
        let b = j1.kron(&id(dk(1)))?;
        let c = id(dj(1)).kron(k1)?;
        let d = j2.kron(&id(dk(0)))?;
        let h = [dj(0) * dk(1), dj(1) * dk(0)];
        let w = [dj(0) * dk(2), dj(1) * dk(1), dj(2) * dk(0)];
        BinaryMatrix::block_compose_sized(
            &h,
            &w,
            &[
                vec![Some(&a), Some(&b), None],
                vec![None, Some(&c), Some(&d)],
            ],
        )?
    };

    let d1 = BinaryMatrix::hstack(&[&id(dj(0)).kron(k1)?, &j1.kron(&id(dk(0)))?])?;

    let dims = LENGTH2_LAYOUT
        .iter()
        .map(|s| s.iter().map(|&(a, b)| dj(a) * dk(b)).sum())
        .collect();
    ChainComplex::new(dims, vec![d1, d2, d3, d4])
}

/// Betti numbers of `X ⊗ Y` predicted by the Künneth formula.
pub fn kunneth_betti(x: &ChainComplex, y: &ChainComplex) -> Vec<usize> {
    let bx = x.betti_numbers();
    let by = y.betti_numbers();
    let mut out = vec![0; bx.len() + by.len() - 1];
    for (i, a) in bx.iter().enumerate() {
        for (j, b) in by.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}
