// SPDX-License-Identifier: Apache-2.0
//! Syndrome-encoded hypergraph product and its bias-tailored variant.

use alloc::vec;
use alloc::vec::Vec;

use super::{
    apply_swaps, assemble, id_kron, kron_id, Band, BlockTaggedCss, Cell, ConstructionError,
    CphrKind, CphrSwap, Family,
};
use crate::classical::ClassicalCode;
use crate::complex::{summand_name, tensor, tensor_length2, ChainComplex, LENGTH2_LAYOUT};
use crate::css::{CssCode, DistanceKind};
use crate::f2::{BinaryMatrix, BinaryVector};

/// Largest weight searched when looking for short logicals of the factors.
const FACTOR_SEARCH_WEIGHT: usize = 6;

/// The complexes behind an SEHGP code, kept for the derived families.
#[derive(Debug, Clone)]
pub struct SehgpBundle {
    pub j: ChainComplex,
    pub k: ChainComplex,
    pub q: ChainComplex,
    pub code: BlockTaggedCss,
}

/// `J = X ⊗ Y`, `K = Z ⊗ W`, `Q = J ⊗ K`; qubits on `Q_2`, Z checks `∂_3ᵀ`,
/// X checks `∂_2`, syndrome checks `hsx = ∂_1` and `hsz = ∂_4ᵀ`.
///
/// Row bands `J2⊗K1, J1⊗K2` (Z) then `J0⊗K1, J1⊗K0` (X); column bands
/// `J0⊗K2, J1⊗K1, J2⊗K0`.
pub fn sehgp(
    x: &ClassicalCode,
    y: &ClassicalCode,
    z: &ClassicalCode,
    w: &ClassicalCode,
) -> Result<SehgpBundle, ConstructionError> {
    let cx = |c: &ClassicalCode| ChainComplex::from_parity_check(c.h());
    let j = tensor(&cx(x), &cx(y))?;
    let k = tensor(&cx(z), &cx(w))?;
    let q = tensor_length2(&j, &k)?;
    let (jd, kd) = (|i| j.dim(i), |i| k.dim(i));
    let (j1, j2, k1, k2) = (j.boundary(1), j.boundary(2), k.boundary(1), k.boundary(2));

    let grid = vec![
        vec![
            Cell::Empty,
            Cell::Z(kron_id(&j2.transpose(), kd(1))?, "∂2ᵀ[J]⊗1"),
            Cell::Z(id_kron(jd(2), &k1.transpose())?, "1⊗∂1ᵀ[K]"),
        ],
        vec![
            Cell::Z(kron_id(&j1.transpose(), kd(2))?, "∂1ᵀ[J]⊗1"),
            Cell::Z(id_kron(jd(1), &k2.transpose())?, "1⊗∂2ᵀ[K]"),
            Cell::Empty,
        ],
        vec![
            Cell::X(id_kron(jd(0), k2)?, "1⊗∂2[K]"),
            Cell::X(kron_id(j1, kd(1))?, "∂1[J]⊗1"),
            Cell::Empty,
        ],
        vec![
            Cell::Empty,
            Cell::X(id_kron(jd(1), k1)?, "1⊗∂1[K]"),
            Cell::X(kron_id(j2, kd(0))?, "∂2[J]⊗1"),
        ],
    ];
    let band = |(a, b): (usize, usize)| Band::new(summand_name("J", "K", (a, b)), jd(a) * kd(b));
    let row_bands: Vec<Band> = LENGTH2_LAYOUT[3]
        .iter()
        .chain(LENGTH2_LAYOUT[1])
        .map(|&s| band(s))
        .collect();
    let col_bands: Vec<Band> = LENGTH2_LAYOUT[2].iter().map(|&s| band(s)).collect();
    let mut code = assemble(Family::Sehgp, row_bands, col_bands, grid)?;

    let (m_z, m_x) = (q.dim(3), q.dim(1));
    let hsx = BinaryMatrix::hstack(&[&BinaryMatrix::zeros(q.dim(0), m_z), q.boundary(1)])?;
    let hsz = BinaryMatrix::hstack(&[
        &q.boundary(4).transpose(),
        &BinaryMatrix::zeros(q.dim(4), m_x),
    ])?;
    code.code = code.code.with_syndrome_checks(Some(hsx), Some(hsz))?;
    code.premise_holds = Some([x, y, z, w].iter().all(|c| c.is_self_transpose()));
    code.witnesses = product_witnesses(&j, &k, &code)?;
    Ok(SehgpBundle { j, k, q, code })
}

/// Künneth-style logicals `a ⊗ b` on the `J1⊗K1` band, from short logicals of
/// the factor codes. Only verified logicals are kept.
fn product_witnesses(
    j: &ChainComplex,
    k: &ChainComplex,
    code: &BlockTaggedCss,
) -> Result<Vec<(DistanceKind, BinaryVector)>, ConstructionError> {
    let factor = |c: &ChainComplex| CssCode::from_css(c.boundary(1), &c.boundary(2).transpose());
    let (fj, fk) = (factor(j)?, factor(k)?);
    let offset = code.col_offset(1);
    let n = code.code.n();
    let mut out = Vec::new();
    for kind in [DistanceKind::X, DistanceKind::Z] {
        if fj.logical_count() == 0 || fk.logical_count() == 0 {
            continue;
        }
        let a = fj.distance(kind, FACTOR_SEARCH_WEIGHT)?.witness;
        let b = fk.distance(kind, FACTOR_SEARCH_WEIGHT)?.witness;
        if let (Some(a), Some(b)) = (a, b) {
            let mut v = BinaryVector::zeros(n);
            for i in a.kron(&b).support() {
                v.flip(offset + i);
            }
            out.push((kind, v));
        }
    }
    Ok(out)
}

/// Bias-tailored SEHGP: two block swaps in the `J1⊗K1` column band, rows
/// `(2, 3)` then `(4, 1)`, validated together. Alone, either breaks
/// commutation; together they are a Hadamard on that column band.
///
/// Syndrome checks split into three disjoint pieces each:
/// `hsx = [∂4ᵀ on rows 1-2; 1⊗∂1[K] on row 3; ∂1[J]⊗1 on row 4]` and
/// `hsz = [∂1 on rows 3-4; 1⊗∂2ᵀ[K] on row 1; ∂2ᵀ[J]⊗1 on row 2]`.
pub fn bsh(bundle: &SehgpBundle) -> Result<BlockTaggedCss, ConstructionError> {
    let swaps = bsh_swaps();
    let mut out = apply_swaps(&bundle.code, &swaps)?;
    out.family = Family::Bsh;
    let (j, k, q) = (&bundle.j, &bundle.k, &bundle.q);
    let (jd, kd) = (|i| j.dim(i), |i| k.dim(i));
    let rows: Vec<usize> = out.row_bands.iter().map(|b| b.len).collect();

    let k1 = k.boundary(1);
    let j1 = j.boundary(1);
    let hsx = {
        let a = q.boundary(4).transpose();
        let b = id_kron(jd(0), k1)?;
        let c = kron_id(j1, kd(0))?;
        let mut m = BinaryMatrix::zeros(a.rows() + b.rows() + c.rows(), out.code.num_checks());
        m.write_block(0, 0, &a);
        m.write_block(a.rows(), rows[0] + rows[1], &b);
        m.write_block(a.rows() + b.rows(), rows[0] + rows[1] + rows[2], &c);
        m
    };
    let hsz = {
        let a = q.boundary(1).clone();
        let b = id_kron(jd(2), &k.boundary(2).transpose())?;
        let c = kron_id(&j.boundary(2).transpose(), kd(2))?;
        let mut m = BinaryMatrix::zeros(a.rows() + b.rows() + c.rows(), out.code.num_checks());
        m.write_block(0, rows[0] + rows[1], &a);
        m.write_block(a.rows(), 0, &b);
        m.write_block(a.rows() + b.rows(), rows[0], &c);
        m
    };
    out.code = out.code.with_syndrome_checks(Some(hsx), Some(hsz))?;
    out.validate()?;
    Ok(out)
}

/// The two swaps producing BSH, 0-based.
pub fn bsh_swaps() -> [CphrSwap; 2] {
    [
        CphrSwap {
            kind: CphrKind::T2,
            row_bands: [1, 2],
            col_band: 1,
        },
        CphrSwap {
            kind: CphrKind::T1,
            row_bands: [3, 0],
            col_band: 1,
        },
    ]
}
