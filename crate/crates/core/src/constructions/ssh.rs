// SPDX-License-Identifier: Apache-2.0
//! Single-sector hypergraph products and the three-dimensional XZZX code.

use alloc::vec;

use super::{
    assemble, bandwise_left_null, hadamard_column_band, id_kron, kron_id, Band, BlockTaggedCss,
    Cell, ConstructionError, CphrKind, Family,
};
use crate::classical::{repetition_closed_loop, ClassicalCode};
use crate::complex::{tensor, ChainComplex};

#[derive(Debug, Clone)]
pub struct SshBundle {
    /// `J = X ⊗ X`.
    pub j: ChainComplex,
    /// `P = F ⊗ G` with `F = (J2 -> J1, ∂2[J])` and `G = (J1 -> J0, ∂1[J])`.
    pub p: ChainComplex,
    pub code: BlockTaggedCss,
}

/// Hypergraph product of the two boundaries of `J = X ⊗ X`.
///
/// Qubits on `P_1 = F0⊗G1 ⊕ F1⊗G0`, Z checks `∂2[P]ᵀ`, X checks `∂1[P]`:
/// `hz = [∂2ᵀ[J]⊗1, 1⊗∂1ᵀ[J]]`, `hx = [1⊗∂1[J], ∂2[J]⊗1]`. Syndrome checks
/// are the left null spaces of the check bands.
pub fn ssh(base: &ClassicalCode) -> Result<SshBundle, ConstructionError> {
    let x = ChainComplex::from_parity_check(base.h());
    let j = tensor(&x, &x)?;
    let f = ChainComplex::from_parity_check(j.boundary(2));
    let g = ChainComplex::from_parity_check(j.boundary(1));
    let p = tensor(&f, &g)?;
    let (df, dg) = (j.boundary(2), j.boundary(1));
    let (f0, f1, g0, g1) = (f.dim(0), f.dim(1), g.dim(0), g.dim(1));
    let grid = vec![
        vec![
            Cell::Z(kron_id(&df.transpose(), g1)?, "∂2ᵀ[J]⊗1"),
            Cell::Z(id_kron(f1, &dg.transpose())?, "1⊗∂1ᵀ[J]"),
        ],
        vec![
            Cell::X(id_kron(f0, dg)?, "1⊗∂1[J]"),
            Cell::X(kron_id(df, g0)?, "∂2[J]⊗1"),
        ],
    ];
    let mut code = assemble(
        Family::Ssh,
        vec![Band::new("F1⊗G1", f1 * g1), Band::new("F0⊗G0", f0 * g0)],
        vec![Band::new("F0⊗G1", f0 * g1), Band::new("F1⊗G0", f1 * g0)],
        grid,
    )?;
    attach_bandwise_checks(&mut code)?;
    code.premise_holds = Some(base.is_self_transpose());
    code.validate()?;
    Ok(SshBundle { j, p, code })
}

/// SSH with a Hadamard on the `F1⊗G0` column band. Both check matrices
/// become block (anti-)diagonal.
pub fn bssh(base: &ClassicalCode) -> Result<BlockTaggedCss, ConstructionError> {
    let s = ssh(base)?;
    let mut out = hadamard_column_band(&s.code, CphrKind::T2, 1)?;
    out.family = Family::Bssh;
    attach_bandwise_checks(&mut out)?;
    out.validate()?;
    Ok(out)
}

/// Three-dimensional XZZX code: BSSH of the closed-loop repetition code.
pub fn xzzx3d(n: usize) -> Result<BlockTaggedCss, ConstructionError> {
    let mut out = bssh(&repetition_closed_loop(n)?)?;
    out.family = Family::Xzzx3d;
    Ok(out)
}

pub(super) fn attach_bandwise_checks(code: &mut BlockTaggedCss) -> Result<(), ConstructionError> {
    let hsx = bandwise_left_null(code.code.hx(), &code.row_bands);
    let hsz = bandwise_left_null(code.code.hz(), &code.row_bands);
    code.code = code
        .code
        .clone()
        .with_syndrome_checks(Some(hsx), Some(hsz))?;
    Ok(())
}
