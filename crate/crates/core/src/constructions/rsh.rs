// SPDX-License-Identifier: Apache-2.0
//! Reduced single-sector products: one X band and one Z band of SEHGP,
//! truncated to the two column bands they share.

use alloc::vec;

use super::ssh::attach_bandwise_checks;
use super::{
    assemble, hadamard_column_band, id_kron, kron_id, Band, BlockTaggedCss, Cell,
    ConstructionError, CphrKind, Family, SehgpBundle,
};
use crate::complex::summand_name;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RshVariant {
    /// X band `J0⊗K1`, Z band `J1⊗K2`, columns `J0⊗K2, J1⊗K1`.
    One,
    /// X band `J1⊗K0`, Z band `J2⊗K1`, columns `J1⊗K1, J2⊗K0`.
    Two,
}

pub fn rsh(bundle: &SehgpBundle, variant: RshVariant) -> Result<BlockTaggedCss, ConstructionError> {
    let (j, k) = (&bundle.j, &bundle.k);
    let (jd, kd) = (|i| j.dim(i), |i| k.dim(i));
    let (j1, j2, k1, k2) = (j.boundary(1), j.boundary(2), k.boundary(1), k.boundary(2));
    let band = |s: (usize, usize)| Band::new(summand_name("J", "K", s), jd(s.0) * kd(s.1));
    let (family, rows, cols, grid) = match variant {
        RshVariant::One => (
            Family::Rsh1,
            vec![band((1, 2)), band((0, 1))],
            vec![band((0, 2)), band((1, 1))],
            vec![
                vec![
                    Cell::Z(kron_id(&j1.transpose(), kd(2))?, "∂1ᵀ[J]⊗1"),
                    Cell::Z(id_kron(jd(1), &k2.transpose())?, "1⊗∂2ᵀ[K]"),
                ],
                vec![
                    Cell::X(id_kron(jd(0), k2)?, "1⊗∂2[K]"),
                    Cell::X(kron_id(j1, kd(1))?, "∂1[J]⊗1"),
                ],
            ],
        ),
        RshVariant::Two => (
            Family::Rsh2,
            vec![band((2, 1)), band((1, 0))],
            vec![band((1, 1)), band((2, 0))],
            vec![
                vec![
                    Cell::Z(kron_id(&j2.transpose(), kd(1))?, "∂2ᵀ[J]⊗1"),
                    Cell::Z(id_kron(jd(2), &k1.transpose())?, "1⊗∂1ᵀ[K]"),
                ],
                vec![
                    Cell::X(id_kron(jd(1), k1)?, "1⊗∂1[K]"),
                    Cell::X(kron_id(j2, kd(0))?, "∂2[J]⊗1"),
                ],
            ],
        ),
    };
    let mut code = assemble(family, rows, cols, grid)?;
    attach_bandwise_checks(&mut code)?;
    code.premise_holds = bundle.code.premise_holds;
    code.validate()?;
    Ok(code)
}

/// RSH with a Hadamard on its second column band.
pub fn brsh(
    bundle: &SehgpBundle,
    variant: RshVariant,
) -> Result<BlockTaggedCss, ConstructionError> {
    let base = rsh(bundle, variant)?;
    let mut out = hadamard_column_band(&base, CphrKind::T2, 1)?;
    out.family = match variant {
        RshVariant::One => Family::Brsh1,
        RshVariant::Two => Family::Brsh2,
    };
    attach_bandwise_checks(&mut out)?;
    out.validate()?;
    Ok(out)
}
