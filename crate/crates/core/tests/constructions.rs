// SPDX-License-Identifier: Apache-2.0
mod common;

use common::*;
use qforge_core::classical::{repetition_closed_loop, repetition_open};
use qforge_core::complex::SummandOrder;
use qforge_core::constructions::{
    apply_swaps, apply_swaps_unchecked, brsh, bsh, bsh_swaps, bssh, cphr, hadamard_column_band,
    hgp, hgp_from_complexes, rsh, sehgp, ssh, xzzx3d, BlockTaggedCss, ConstructionError, CphrKind,
    CphrSwap, Family, RshVariant, SehgpBundle,
};
use qforge_core::css::{tanner_components, DistanceKind};
use qforge_core::{BinaryMatrix, ClassicalCode, CssCode, Distance};

fn rep(n: usize) -> ClassicalCode {
    repetition_closed_loop(n).unwrap()
}

fn bundle(n: usize) -> SehgpBundle {
    let r = rep(n);
    sehgp(&r, &r, &r, &r).unwrap()
}

/// `n - rank [hx | hz]` by naive elimination.
fn naive_k(c: &CssCode) -> usize {
    c.n() - naive_rank(&dense(&c.stabilizer_matrix()))
}

/// Künneth count `b1(A ⊗ B) = b1(A) b0(B) + b0(A) b1(B)` for length-1 complexes
/// `A = (∂a)` and `B = (∂b)`.
fn kunneth_b1(a: &BinaryMatrix, b: &BinaryMatrix) -> usize {
    let b1 = |m: &BinaryMatrix| m.cols() - naive_rank(&dense(m));
    let b0 = |m: &BinaryMatrix| m.rows() - naive_rank(&dense(m));
    b1(a) * b0(b) + b0(a) * b1(b)
}

#[test]
fn hgp_examples() {
    let r3 = rep(3);
    let c = hgp(r3.h(), r3.h()).unwrap();
    let p = c.params(3).unwrap();
    assert_eq!((p.n, p.k), (18, 2));
    assert_eq!(p.d(), Distance::Exact(3));
    assert!(c.code.validate().is_ok());

    let r2 = rep(2);
    let c2 = hgp(r2.h(), r2.h()).unwrap();
    let p2 = c2.params(8).unwrap();
    assert_eq!((p2.n, p2.k, p2.d()), (8, 2, Distance::Exact(2)));
    let f = c2.code.css_frame().unwrap();
    assert_eq!(
        brute_css_distance(&dense(&f.x_checks), &dense(&f.z_checks), 8),
        Some(2)
    );
    assert_eq!(
        brute_css_distance(&dense(&f.z_checks), &dense(&f.x_checks), 8),
        Some(2)
    );
}

#[test]
fn hgp_matches_the_parameter_formulas() {
    for (a, b) in [
        (repetition_open(3).unwrap(), rep(2)),
        (rep(3), repetition_open(4).unwrap()),
    ] {
        let c = hgp(a.h(), b.h()).unwrap();
        let (m1, n1) = a.h().shape();
        let (m2, n2) = b.h().shape();
        assert_eq!(c.code.n(), n1 * n2 + m1 * m2);
        let kt = |h: &ClassicalCode| h.transpose_code().k();
        assert_eq!(c.code.logical_count(), a.k() * b.k() + kt(&a) * kt(&b));
    }
}

#[test]
fn hgp_with_empty_second_factor() {
    let r3 = rep(3);
    let c = hgp(r3.h(), &BinaryMatrix::zeros(0, 1)).unwrap();
    assert_eq!(c.code.n(), 3);
    assert!(c.code.validate().is_ok());
    assert_eq!(c.code.logical_count(), r3.k());
}

#[test]
fn hgp_is_the_descending_complex_product() {
    let (a, b) = (repetition_open(3).unwrap(), rep(2));
    let blocks = hgp(a.h(), b.h()).unwrap();
    let from_complex = hgp_from_complexes(a.h(), b.h(), SummandOrder::Descending).unwrap();
    assert_eq!(blocks.code, from_complex);
    let ascending = hgp_from_complexes(a.h(), b.h(), SummandOrder::Ascending).unwrap();
    assert_ne!(blocks.code, ascending);
    assert_eq!(ascending.logical_count(), from_complex.logical_count());
}

#[test]
fn sehgp_counts() {
    for n in [2usize, 3] {
        let b = bundle(n);
        let n4 = n.pow(4);
        assert_eq!(b.code.code.n(), 6 * n4);
        assert_eq!(b.code.code.num_checks(), 8 * n4);
        assert_eq!(b.code.code.logical_count(), 6);
        assert_eq!(naive_k(&b.code.code), 6);
        assert_eq!(b.q.betti(2), 6);
        assert!(b.code.validate().is_ok());
        assert_eq!(b.code.premise_holds, Some(true));
    }
}

#[test]
fn sehgp_rep2_distance_is_four() {
    // Plain CSS, so 𝒳 and 𝒵 are the nonzero rows of hx and hz.
    let code = bundle(2).code.code;
    let x = nonzero_rows(&dense(code.hx()));
    let z = nonzero_rows(&dense(code.hz()));
    assert!(!naive_has_logical_up_to(&x, &z, 96, 3));
    assert!(!naive_has_logical_up_to(&z, &x, 96, 3));
    let b = bundle(2).code;
    let p = b.params(4).unwrap();
    assert_eq!(p.d_x, Distance::Exact(4));
    assert_eq!(p.d_z, Distance::Exact(4));
    let w = code.distance(DistanceKind::X, 4).unwrap().witness.unwrap();
    assert!(naive_is_logical(
        &x,
        &z,
        &w.to_bools().iter().map(|&b| b as u8).collect::<Vec<_>>()
    ));
}

#[test]
fn sehgp_rep3_distance_bracket() {
    let b = bundle(3).code;
    let p = b.params(3).unwrap();
    assert_eq!((p.n, p.k, p.checks), (486, 6, 648));
    // Nothing up to weight 3; the product witnesses have weight 9.
    assert_eq!(
        p.d_x,
        Distance::Bounded {
            at_least: 4,
            at_most: Some(9)
        }
    );
    assert_eq!(
        p.d_z,
        Distance::Bounded {
            at_least: 4,
            at_most: Some(9)
        }
    );
    let code = &b.code;
    let x = nonzero_rows(&dense(code.hx()));
    let z = nonzero_rows(&dense(code.hz()));
    for (kind, w) in &b.witnesses {
        let bits: Vec<u8> = w.to_bools().iter().map(|&b| b as u8).collect();
        match kind {
            DistanceKind::X => assert!(naive_is_logical(&x, &z, &bits)),
            DistanceKind::Z => assert!(naive_is_logical(&z, &x, &bits)),
        }
    }
}

#[test]
fn sehgp_mixed_bases_obey_the_dimension_rule() {
    let (a, b) = (rep(2), rep(3));
    let bun = sehgp(&a, &b, &b, &a).unwrap();
    let x = [a.h().rows(), a.n()];
    let y = [b.h().rows(), b.n()];
    // J = X⊗Y, K = Z⊗W with Z = Y and W = X here.
    let j = [x[0] * y[0], x[0] * y[1] + x[1] * y[0], x[1] * y[1]];
    let k = [y[0] * x[0], y[0] * x[1] + y[1] * x[0], y[1] * x[1]];
    for deg in 0..=4 {
        let expected: usize = (0..=2)
            .filter(|&i| deg >= i && deg - i <= 2)
            .map(|i| j[i] * k[deg - i])
            .sum();
        assert_eq!(bun.q.dim(deg), expected, "degree {deg}");
    }
    assert_eq!(bun.code.code.n(), bun.q.dim(2));
    assert!(bun.code.validate().is_ok());
}

#[test]
fn sehgp_syndrome_checks_annihilate() {
    let b = bundle(2);
    let c = &b.code.code;
    assert!(c.hsx().unwrap().mul(c.hx()).unwrap().is_zero());
    assert!(c.hsz().unwrap().mul(c.hz()).unwrap().is_zero());
}

#[test]
fn hgp_t2_makes_x_blocks_anti_diagonal() {
    let r3 = rep(3);
    let c = hgp(r3.h(), r3.h()).unwrap();
    let t = cphr(
        &c,
        CphrSwap {
            kind: CphrKind::T2,
            row_bands: [0, 1],
            col_band: 1,
        },
    )
    .unwrap();
    assert!(t.block_x(0, 0).is_zero() && t.block_x(1, 1).is_zero());
    assert!(!t.block_x(0, 1).is_zero() && !t.block_x(1, 0).is_zero());
    assert!(t.block_z(0, 1).is_zero() && t.block_z(1, 0).is_zero());
    assert_eq!(t.block_x(0, 1), c.block_z(0, 1));
    assert_eq!(t.params(3).unwrap().d(), Distance::Exact(3));
}

#[test]
fn bsh_swaps_fail_alone_and_work_together() {
    let b = bundle(2);
    let [t2, t1] = bsh_swaps();
    match cphr(&b.code, t2) {
        Err(ConstructionError::CommutationBroken { blocks }) => {
            assert_eq!(blocks, vec![(0, 1), (2, 3)])
        }
        other => panic!("expected broken commutation, got {other:?}"),
    }
    assert!(cphr(&b.code, t1).is_err());
    let both = apply_swaps(&b.code, &[t2, t1]).unwrap();
    assert!(both.validate().is_ok());
    let h = hadamard_column_band(&b.code, CphrKind::T2, 1).unwrap();
    assert_eq!(both.code.hx(), h.code.hx());
    assert_eq!(both.code.hz(), h.code.hz());
}

#[test]
fn broken_block_diagnostic_is_one_based() {
    let b = bundle(2);
    let err = cphr(&b.code, bsh_swaps()[0]).unwrap_err();
    assert!(err.to_string().contains("block (1, 2)"), "{err}");
}

#[test]
fn swaps_are_involutions_and_preserve_parameters() {
    let b = bundle(2);
    let swaps = bsh_swaps();
    let once = apply_swaps(&b.code, &swaps).unwrap();
    let twice = apply_swaps(&once, &swaps).unwrap();
    assert_eq!(twice.code.hx(), b.code.code.hx());
    assert_eq!(twice.code.hz(), b.code.code.hz());
    assert_eq!(twice.labels, b.code.labels);
    for s in swaps {
        let u =
            apply_swaps_unchecked(&apply_swaps_unchecked(&b.code, &[s]).unwrap(), &[s]).unwrap();
        assert_eq!(u.code.hx(), b.code.code.hx());
        assert_eq!(u.code.hz(), b.code.code.hz());
    }
    let before = b.code.params(4).unwrap();
    let after = once.params(4).unwrap();
    assert_eq!(
        (before.n, before.k, before.d()),
        (after.n, after.k, after.d())
    );
}

#[test]
fn swaps_reject_empty_and_missing_blocks() {
    let b = bundle(2);
    let empty = CphrSwap {
        kind: CphrKind::T1,
        row_bands: [0, 0],
        col_band: 0,
    };
    assert!(matches!(
        cphr(&b.code, empty),
        Err(ConstructionError::EmptyBlock { .. })
    ));
    let far = CphrSwap {
        kind: CphrKind::T1,
        row_bands: [0, 1],
        col_band: 7,
    };
    assert!(matches!(
        cphr(&b.code, far),
        Err(ConstructionError::BandOutOfRange { .. })
    ));
}

fn check_bsh_structure(n: usize) -> BlockTaggedCss {
    let bun = bundle(n);
    let b = bsh(&bun).unwrap();
    assert!(b.validate().is_ok());
    let c = &b.code;
    let hsx = c.hsx().unwrap();
    let hsz = c.hsz().unwrap();
    assert!(hsx.mul(c.hx()).unwrap().is_zero());
    assert!(hsz.mul(c.hz()).unwrap().is_zero());
    let (j, k) = (&bun.j, &bun.k);
    // Second piece of hsx is 1 ⊗ ∂1[K] on the third row band.
    let a_rows = bun.q.dim(4);
    let piece = BinaryMatrix::identity(j.dim(0))
        .kron(k.boundary(1))
        .unwrap();
    let got = hsx.submatrix(a_rows, piece.rows(), b.row_offset(2), b.row_bands[2].len);
    assert_eq!(got, piece);
    assert!(tanner_components(hsx).len() >= 3);
    assert!(tanner_components(hsz).len() >= 3);
    assert!(c.tanner_components(DistanceKind::X).len() >= 3);
    b
}

#[test]
fn bsh_rep2_structure_and_parameters() {
    let b = check_bsh_structure(2);
    let p = b.params(4).unwrap();
    assert_eq!((p.n, p.k, p.checks), (96, 6, 128));
    assert_eq!(p.d(), Distance::Exact(4));
    assert_eq!(p.d_s, Some(Distance::Exact(2)));
}

#[test]
fn bsh_rep3_single_shot_distance() {
    let b = check_bsh_structure(3);
    assert_eq!(b.single_shot_distance(3), Some(Distance::Exact(3)));
    assert_eq!(b.family, Family::Bsh);
}

#[test]
fn ssh_rep2_counts_and_logicals() {
    let r2 = rep(2);
    let s = ssh(&r2).unwrap();
    let c = &s.code.code;
    assert_eq!((c.n(), c.num_checks()), (80, 64));
    // Künneth on P = F ⊗ G: b1(F) b0(G) + b0(F) b1(G) = 1·1 + 5·5.
    assert_eq!(kunneth_b1(s.j.boundary(2), s.j.boundary(1)), 26);
    assert_eq!(c.logical_count(), 26);
    assert_eq!(naive_k(c), 26);
    assert_eq!(s.p.betti(1), 26);
    assert!(s.code.validate().is_ok());
}

#[test]
fn ssh_rep2_distance_is_two() {
    let s = ssh(&rep(2)).unwrap();
    let x = nonzero_rows(&dense(s.code.code.hx()));
    let z = nonzero_rows(&dense(s.code.code.hz()));
    assert!(!naive_has_logical_up_to(&x, &z, 80, 1));
    assert!(naive_has_logical_up_to(&x, &z, 80, 2));
    assert_eq!(s.code.params(4).unwrap().d(), Distance::Exact(2));
}

#[test]
fn ssh_rep3_counts() {
    let s = ssh(&rep(3)).unwrap();
    let c = &s.code.code;
    assert_eq!((c.n(), c.num_checks()), (405, 324));
    assert_eq!(
        c.logical_count(),
        kunneth_b1(s.j.boundary(2), s.j.boundary(1))
    );
    assert_eq!(c.logical_count(), naive_k(c));
}

#[test]
fn bssh_structure() {
    for n in [2usize, 3] {
        let r = rep(n);
        let plain = ssh(&r).unwrap().code;
        let b = bssh(&r).unwrap();
        assert!(b.validate().is_ok());
        assert_eq!(b.code.logical_count(), plain.code.logical_count());
        let hsz = b.code.hsz().unwrap();
        assert!(tanner_components(hsz).len() > tanner_components(plain.code.hsz().unwrap()).len());
        assert!(
            b.code.tanner_components(DistanceKind::X).len()
                > plain.code.tanner_components(DistanceKind::X).len()
        );
        // Covered columns are nonzero, so d_s = 2 exactly when two covered columns coincide.
        let repeated = [b.code.hsx().unwrap(), hsz].iter().any(|h| {
            let cols: Vec<Vec<u8>> = nonzero_rows(&dense(&h.transpose()));
            let set: std::collections::BTreeSet<&Vec<u8>> = cols.iter().collect();
            set.len() < cols.len()
        });
        assert!(repeated);
        assert_eq!(b.single_shot_distance(4), Some(Distance::Exact(2)));
    }
}

#[test]
fn ssh_premise_is_recorded() {
    let open = repetition_open(3).unwrap();
    let s = ssh(&open).unwrap();
    assert_eq!(s.code.premise_holds, Some(false));
    assert!(s.code.validate().is_ok());
}

#[test]
fn rsh_counts_and_checks() {
    let bun = bundle(2);
    for v in [RshVariant::One, RshVariant::Two] {
        let r = rsh(&bun, v).unwrap();
        let c = &r.code;
        assert_eq!((c.n(), c.num_checks()), (80, 64));
        let (a, b) = match v {
            RshVariant::One => (bun.j.boundary(1), bun.k.boundary(2)),
            RshVariant::Two => (bun.j.boundary(2), bun.k.boundary(1)),
        };
        assert_eq!(c.logical_count(), kunneth_b1(a, b));
        assert_eq!(c.logical_count(), 26);
        assert_eq!(naive_k(c), 26);
        let hsx = c.hsx().unwrap();
        let hsz = c.hsz().unwrap();
        assert!(hsx.mul(c.hx()).unwrap().is_zero());
        assert!(hsz.mul(c.hz()).unwrap().is_zero());
        // Each band's checks span exactly the left null space of that band.
        for (hs, h) in [(hsx, c.hx()), (hsz, c.hz())] {
            let live: usize = r
                .row_bands
                .iter()
                .enumerate()
                .map(|(i, band)| {
                    let slice = h.submatrix(r.row_offset(i), band.len, 0, h.cols());
                    if slice.is_zero() {
                        0
                    } else {
                        band.len - slice.rank()
                    }
                })
                .sum();
            assert_eq!(hs.rank(), live);
            assert_eq!(hs.rows(), hs.rank());
        }
        assert_eq!(r.params(4).unwrap().d(), Distance::Exact(2));
        let br = brsh(&bun, v).unwrap();
        assert!(br.validate().is_ok());
        assert_eq!(br.code.logical_count(), 26);
        assert!(
            br.code.tanner_components(DistanceKind::X).len()
                > c.tanner_components(DistanceKind::X).len()
        );
    }
}

#[test]
fn xzzx3d_is_bssh_of_the_ring() {
    for n in [2usize, 3] {
        let x = xzzx3d(n).unwrap();
        let b = bssh(&rep(n)).unwrap();
        assert_eq!(x.code, b.code);
        assert_eq!(x.family, Family::Xzzx3d);
        assert_eq!(x.code.n(), 5 * n.pow(4));
    }
    assert!(xzzx3d(1).is_err());
}

#[test]
fn every_family_validates() {
    let bun = bundle(2);
    let r2 = rep(2);
    let all: Vec<BlockTaggedCss> = vec![
        hgp(r2.h(), r2.h()).unwrap(),
        bun.code.clone(),
        bsh(&bun).unwrap(),
        ssh(&r2).unwrap().code,
        bssh(&r2).unwrap(),
        rsh(&bun, RshVariant::One).unwrap(),
        rsh(&bun, RshVariant::Two).unwrap(),
        brsh(&bun, RshVariant::One).unwrap(),
        brsh(&bun, RshVariant::Two).unwrap(),
        xzzx3d(2).unwrap(),
    ];
    let families: Vec<Family> = all.iter().map(|c| c.family).collect();
    assert_eq!(families, Family::ALL.to_vec());
    for c in &all {
        assert!(c.validate().is_ok(), "{:?}", c.family);
        // Bands tile the matrices.
        assert_eq!(
            c.row_bands.iter().map(|b| b.len).sum::<usize>(),
            c.code.num_checks()
        );
        assert_eq!(c.col_bands.iter().map(|b| b.len).sum::<usize>(), c.code.n());
        assert_eq!(c.labels.len(), c.row_bands.len());
    }
}
