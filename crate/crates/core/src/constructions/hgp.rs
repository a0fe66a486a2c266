// SPDX-License-Identifier: Apache-2.0
//! Hypergraph product.

use alloc::vec;

use super::{assemble, id_kron, kron_id, Band, BlockTaggedCss, Cell, ConstructionError, Family};
use crate::complex::{tensor_with_order, ChainComplex, SummandOrder};
use crate::css::CssCode;
use crate::f2::BinaryMatrix;

/// `hx = [H1 ⊗ I | I ⊗ H2ᵀ]`, `hz = [I ⊗ H2 | H1ᵀ ⊗ I]`.
///
/// Row bands: Z checks (`n1 m2`), then X checks (`m1 n2`).
/// Column bands: `n1 n2` bit-bit qubits, then `m1 m2` check-check qubits.
pub fn hgp(h1: &BinaryMatrix, h2: &BinaryMatrix) -> Result<BlockTaggedCss, ConstructionError> {
    let (m1, n1) = h1.shape();
    let (m2, n2) = h2.shape();
    let grid = vec![
        vec![
            Cell::Z(id_kron(n1, h2)?, "1⊗H2"),
            Cell::Z(kron_id(&h1.transpose(), m2)?, "H1ᵀ⊗1"),
        ],
        vec![
            Cell::X(kron_id(h1, n2)?, "H1⊗1"),
            Cell::X(id_kron(m1, &h2.transpose())?, "1⊗H2ᵀ"),
        ],
    ];
    assemble(
        Family::Hgp,
        vec![Band::new("n1⊗m2", n1 * m2), Band::new("m1⊗n2", m1 * n2)],
        vec![Band::new("n1⊗n2", n1 * n2), Band::new("m1⊗m2", m1 * m2)],
        grid,
    )
}

/// Hypergraph product read off the length-1 complexes of `h1` and `h2ᵀ`.
///
/// With [`SummandOrder::Descending`] this reproduces [`hgp`] exactly; the
/// ascending order lists the two qubit bands the other way round.
pub fn hgp_from_complexes(
    h1: &BinaryMatrix,
    h2: &BinaryMatrix,
    order: SummandOrder,
) -> Result<CssCode, ConstructionError> {
    let x = ChainComplex::from_parity_check(h1);
    let y = ChainComplex::from_parity_check(&h2.transpose());
    let j = tensor_with_order(&x, &y, order)?;
    Ok(CssCode::from_css(
        j.boundary(1),
        &j.boundary(2).transpose(),
    )?)
}
