// SPDX-License-Identifier: Apache-2.0
//! Chain-complex constructions of single-shot quantum LDPC codes.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, manifests and
//! the command line live in the `qforge` companion crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classical;
pub mod complex;
pub mod constructions;
pub mod css;
pub mod f2;
pub mod noise;
pub mod search;
pub mod soundness;

pub use classical::ClassicalCode;
pub use complex::ChainComplex;
pub use css::{CssCode, PauliError, Syndrome};
pub use f2::{BinaryMatrix, BinaryVector, F2Error, RowReducer};
pub use search::{Distance, DistanceReport};
