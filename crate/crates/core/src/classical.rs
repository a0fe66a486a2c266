// SPDX-License-Identifier: Apache-2.0
//! Classical binary linear codes given by parity-check matrices.

use alloc::vec::Vec;

use crate::f2::{BinaryMatrix, BinaryVector, F2Error};
use crate::search::{for_each_span_vector, ColumnSearch, Distance, DistanceReport};

/// Largest code dimension for which distances are found by enumerating every codeword.
pub const ENUMERATION_MAX_K: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassicalError {
    #[error("repetition code needs n >= 2, got {0}")]
    TooShort(usize),
    #[error("syndrome check matrix has {found} columns, expected {expected}")]
    CheckShape { expected: usize, found: usize },
    #[error("syndrome checks do not annihilate the parity checks (row {row})")]
    NotAnnihilating { row: usize },
    #[error(transparent)]
    F2(#[from] F2Error),
}

/// Code `ker h` with redundant checks allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassicalCode {
    h: BinaryMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicalParams {
    pub n: usize,
    pub k: usize,
    /// `None` when `k = 0`.
    pub d: Option<Distance>,
}

impl ClassicalCode {
    pub fn new(h: BinaryMatrix) -> Self {
        Self { h }
    }

    pub fn h(&self) -> &BinaryMatrix {
        &self.h
    }

    pub fn n(&self) -> usize {
        self.h.cols()
    }

    pub fn checks(&self) -> usize {
        self.h.rows()
    }

    pub fn k(&self) -> usize {
        self.n() - self.h.rank()
    }

    pub fn transpose_code(&self) -> Self {
        Self::new(self.h.transpose())
    }

    pub fn is_codeword(&self, v: &BinaryVector) -> bool {
        self.h.mul_vec(v).map(|s| s.is_zero()).unwrap_or(false)
    }

    /// Holds when the code and its transpose code coincide.
    pub fn is_self_transpose(&self) -> bool {
        if self.h.rows() != self.h.cols() {
            return false;
        }
        let a = self.h.row_space_complement();
        let b = self.h.transpose().row_space_complement();
        a == b
    }

    /// Minimum weight of a nonzero codeword, `None` when `k = 0`.
    ///
    /// Small codes are enumerated completely; otherwise supports up to
    /// `max_weight` are searched and an upper bound comes from the kernel basis.
    pub fn distance(&self, max_weight: usize) -> Option<DistanceReport> {
        let basis = self.h.kernel_basis();
        if basis.is_empty() {
            return None;
        }
        if basis.len() <= ENUMERATION_MAX_K {
            let mut best: Option<BinaryVector> = None;
            for_each_span_vector(&basis, self.n(), |v| {
                if best.as_ref().is_none_or(|b| v.weight() < b.weight()) {
                    best = Some(v.clone());
                }
            });
            let w = best.as_ref().map_or(0, BinaryVector::weight);
            return Some(DistanceReport {
                value: Distance::Exact(w),
                witness: best,
                searched_up_to: self.n(),
            });
        }
        let search = ColumnSearch::new(self.h.rows(), self.h.column_vectors());
        let zero = BinaryVector::zeros(self.h.rows());
        if let Some(s) = search.min_subset(&zero, 1, max_weight, |_| true) {
            return Some(DistanceReport {
                value: Distance::Exact(s.len()),
                witness: Some(BinaryVector::from_support(self.n(), &s)),
                searched_up_to: s.len(),
            });
        }
        let witness = basis.into_iter().min_by_key(BinaryVector::weight);
        Some(DistanceReport {
            value: Distance::Bounded {
                at_least: max_weight + 1,
                at_most: witness.as_ref().map(BinaryVector::weight),
            },
            witness,
            searched_up_to: max_weight,
        })
    }

    pub fn params(&self, max_weight: usize) -> ClassicalParams {
        ClassicalParams {
            n: self.n(),
            k: self.k(),
            d: self.distance(max_weight).map(|r| r.value),
        }
    }
}

/// Cyclic repetition code: `n` checks `x_i + x_{i+1 mod n}`.
pub fn repetition_closed_loop(n: usize) -> Result<ClassicalCode, ClassicalError> {
    if n < 2 {
        return Err(ClassicalError::TooShort(n));
    }
    let mut h = BinaryMatrix::zeros(n, n);
    for i in 0..n {
        h.set(i, i, true);
        let j = (i + 1) % n;
        h.set(i, j, !h.get(i, j));
    }
    Ok(ClassicalCode::new(h))
}

/// Open repetition code with `n - 1` adjacent-pair checks.
pub fn repetition_open(n: usize) -> Result<ClassicalCode, ClassicalError> {
    if n < 2 {
        return Err(ClassicalError::TooShort(n));
    }
    let mut h = BinaryMatrix::zeros(n - 1, n);
    for i in 0..n - 1 {
        h.set(i, i, true);
        h.set(i, i + 1, true);
    }
    Ok(ClassicalCode::new(h))
}

/// The `[7, 4, 3]` Hamming code; column `j` is `j + 1` in binary, most
/// significant bit in the first row.
pub fn hamming_7_4() -> ClassicalCode {
    let h = BinaryMatrix::from_bit_rows(
        7,
        &[
            [0u8, 0, 0, 1, 1, 1, 1],
            [0, 1, 1, 0, 0, 1, 1],
            [1, 0, 1, 0, 1, 0, 1],
        ],
    )
    .expect("literal shape");
    ClassicalCode::new(h)
}

/// Direct product `C1 ⊗ C2` with checks `[H1 ⊗ I_{n2}; I_{n1} ⊗ H2]`.
///
/// Reshaped row-major to `n1 x n2`, every column of a codeword lies in `C1`
/// and every row in `C2`.
pub fn direct_product(
    c1: &ClassicalCode,
    c2: &ClassicalCode,
) -> Result<ClassicalCode, ClassicalError> {
    let upper = c1.h.kron(&BinaryMatrix::identity(c2.n()))?;
    let lower = BinaryMatrix::identity(c1.n()).kron(&c2.h)?;
    Ok(ClassicalCode::new(BinaryMatrix::vstack(&[&upper, &lower])?))
}

/// Row-major `n1 x n2` view of a direct-product codeword.
pub fn reshape_codeword(
    v: &BinaryVector,
    n1: usize,
    n2: usize,
) -> Result<BinaryMatrix, ClassicalError> {
    Ok(BinaryMatrix::reshape_row_major(v, n1, n2)?)
}

/// A classical code carrying syndrome checks `hs` with `hs · h = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyndromeEncodedCode {
    code: ClassicalCode,
    hs: BinaryMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SyndromeEncodedParams {
    pub n: usize,
    pub k: usize,
    pub d: Option<Distance>,
    /// Distance of the code `ker hs` on syndrome bits.
    pub d_s: Option<Distance>,
}

impl SyndromeEncodedCode {
    pub fn new(h: BinaryMatrix, hs: BinaryMatrix) -> Result<Self, ClassicalError> {
        if hs.cols() != h.rows() {
            return Err(ClassicalError::CheckShape {
                expected: h.rows(),
                found: hs.cols(),
            });
        }
        let prod = hs.mul(&h)?;
        if let Some(row) = (0..prod.rows()).find(|&r| prod.row_weight(r) > 0) {
            return Err(ClassicalError::NotAnnihilating { row });
        }
        Ok(Self {
            code: ClassicalCode::new(h),
            hs,
        })
    }

    pub fn code(&self) -> &ClassicalCode {
        &self.code
    }

    pub fn hs(&self) -> &BinaryMatrix {
        &self.hs
    }

    pub fn params(&self, max_weight: usize) -> SyndromeEncodedParams {
        let base = self.code.params(max_weight);
        SyndromeEncodedParams {
            n: base.n,
            k: base.k,
            d: base.d,
            d_s: ClassicalCode::new(self.hs.clone())
                .distance(max_weight)
                .map(|r| r.value),
        }
    }
}

/// Rows of `m` as support lists, for compact assertions.
pub fn supports(m: &BinaryMatrix) -> Vec<Vec<usize>> {
    (0..m.rows()).map(|r| m.row(r).support()).collect()
}
