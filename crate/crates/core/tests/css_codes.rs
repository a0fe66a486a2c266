// SPDX-License-Identifier: Apache-2.0
mod common;

use common::*;
use proptest::prelude::*;
use qforge_core::classical::{repetition_closed_loop, repetition_open};
use qforge_core::complex::{tensor, SummandOrder};
use qforge_core::constructions::{bssh, hgp, hgp_from_complexes, sehgp};
use qforge_core::css::{tanner_components, CodeError, DistanceKind, Pauli};
use qforge_core::{BinaryMatrix, BinaryVector, ChainComplex, CssCode, Distance, PauliError};

fn toric3() -> CssCode {
    let h = repetition_closed_loop(3).unwrap();
    hgp(h.h(), h.h()).unwrap().code
}

/// CSS distance of kind X by enumerating every vector, for `n <= 20`.
fn oracle_distance(x_checks: &BinaryMatrix, z_checks: &BinaryMatrix) -> Option<usize> {
    brute_css_distance(&dense(x_checks), &dense(z_checks), x_checks.cols())
}

#[test]
fn validation_examples() {
    assert!(toric3().validate().is_ok());
    let i = BinaryMatrix::identity(2);
    let err = CssCode::from_css(&i, &i).unwrap().validate().unwrap_err();
    assert!(matches!(err, CodeError::Anticommuting { .. }));
}

#[test]
fn commutation_matches_naive_product() {
    let c = toric3();
    let (hx, hz) = (dense(c.hx()), dense(c.hz()));
    let n = c.n();
    for a in 0..c.num_checks() {
        for b in 0..c.num_checks() {
            let sym = (0..n).fold(0u8, |acc, q| {
                acc ^ (hx[a][q] & hz[b][q]) ^ (hz[a][q] & hx[b][q])
            });
            assert_eq!(sym, 0, "rows {a} and {b}");
        }
    }
}

#[test]
fn logical_count_examples() {
    assert_eq!(toric3().logical_count(), 2);
    let r2 = repetition_closed_loop(2).unwrap();
    assert_eq!(
        sehgp(&r2, &r2, &r2, &r2).unwrap().code.code.logical_count(),
        6
    );
    let empty = CssCode::from_css(&BinaryMatrix::zeros(0, 5), &BinaryMatrix::zeros(0, 5)).unwrap();
    assert_eq!(empty.logical_count(), 5);
}

#[test]
fn toric_distance_matches_enumeration() {
    let c = toric3();
    for kind in [DistanceKind::X, DistanceKind::Z] {
        assert_eq!(c.distance(kind, 3).unwrap().value, Distance::Exact(3));
    }
    let frame = c.css_frame().unwrap();
    assert_eq!(oracle_distance(&frame.x_checks, &frame.z_checks), Some(3));
    assert_eq!(oracle_distance(&frame.z_checks, &frame.x_checks), Some(3));
}

#[test]
fn distance_requires_logicals() {
    let h = repetition_open(3).unwrap();
    let c = hgp(h.h(), &BinaryMatrix::identity(1)).unwrap().code;
    assert_eq!(c.logical_count(), 0);
    assert_eq!(c.distance(DistanceKind::X, 2), Err(CodeError::NoLogicals));
}

#[test]
fn bounded_search_reports_a_bracket() {
    let c = toric3();
    match c.distance(DistanceKind::X, 2).unwrap().value {
        Distance::Bounded { at_least, at_most } => {
            assert_eq!(at_least, 3);
            assert!(at_most.is_some_and(|u| u >= 3));
        }
        Distance::Exact(d) => assert_eq!(d, 3),
    }
}

#[test]
fn syndrome_examples() {
    let c = toric3();
    let n = c.n();
    let s = c.syndrome(&PauliError::identity(n)).unwrap();
    assert!(s.sx.is_zero() && s.sz.is_zero());
    for r in 0..c.num_checks() {
        assert!(c.syndrome(&c.stabilizer(r)).unwrap().combined().is_zero());
    }
    let z0 = PauliError::single(n, 0, Pauli::Z);
    let s = c.syndrome(&z0).unwrap();
    assert_eq!(s.sx, c.hx().column(0));
    assert!(s.sz.is_zero());
    assert_eq!(
        c.syndrome(&PauliError::identity(n + 1)),
        Err(CodeError::ErrorLength {
            expected: n,
            found: n + 1
        })
    );
}

#[test]
fn tanner_examples() {
    let a = m("110;011");
    let blocks =
        BinaryMatrix::block_compose(&[vec![Some(&a), None], vec![None, Some(&a)]]).unwrap();
    assert_eq!(tanner_components(&blocks).len(), 2);
    assert_eq!(toric3().tanner_components(DistanceKind::X).len(), 1);
    let b = bssh(&repetition_closed_loop(2).unwrap()).unwrap();
    assert!(b.code.tanner_components(DistanceKind::X).len() >= 2);
}

#[test]
fn tanner_components_match_flood_fill() {
    let c = toric3();
    let h = dense(c.hx());
    let (m, n) = (h.len(), h[0].len());
    // Flood fill over check and qubit nodes.
    let mut seen = vec![false; m + n];
    let mut count = 0;
    for start in 0..m {
        if seen[start] || h[start].iter().all(|&b| b == 0) {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            let next: Vec<usize> = if u < m {
                (0..n).filter(|&q| h[u][q] == 1).map(|q| m + q).collect()
            } else {
                (0..m).filter(|&r| h[r][u - m] == 1).collect()
            };
            for w in next {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    assert_eq!(c.tanner_components(DistanceKind::X).len(), count);
}

#[test]
fn logical_count_is_first_betti_number() {
    for (a, b) in [(2, 2), (2, 3), (3, 3)] {
        let ha = repetition_closed_loop(a).unwrap();
        let hb = repetition_closed_loop(b).unwrap();
        let x = ChainComplex::from_parity_check(ha.h());
        let y = ChainComplex::from_parity_check(&hb.h().transpose());
        let j = tensor(&x, &y).unwrap();
        let code = hgp_from_complexes(ha.h(), hb.h(), SummandOrder::Ascending).unwrap();
        assert_eq!(code.logical_count(), j.betti(1));
    }
}

#[test]
fn css_frame_recovers_plain_blocks() {
    let c = toric3();
    let f = c.css_frame().unwrap();
    assert!(f.rotated.is_zero());
    assert_eq!(f.x_rows.len() + f.z_rows.len(), c.num_checks());
}

#[test]
fn y_entries_are_rejected_by_the_frame() {
    let c = CssCode::new(m("11"), m("10")).unwrap();
    assert!(matches!(
        c.css_frame(),
        Err(CodeError::NotCssEquivalent { .. })
    ));
}

fn arb_error(n: usize) -> impl Strategy<Value = PauliError> {
    (
        proptest::collection::vec(any::<bool>(), n),
        proptest::collection::vec(any::<bool>(), n),
    )
        .prop_map(|(x, z)| {
            PauliError::new(BinaryVector::from_bools(x), BinaryVector::from_bools(z))
        })
}

/// Random CSS code with `𝒳 = A` and `𝒵` a basis of vectors orthogonal to `A`'s rows.
fn arb_css() -> impl Strategy<Value = CssCode> {
    (arb_matrix(4, 10), 0usize..4).prop_map(|(x, drop)| {
        let z = x.row_space_complement();
        let keep: Vec<usize> = (0..z.rows()).skip(drop.min(z.rows())).collect();
        CssCode::from_css(&x, &z.select_rows(&keep)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn syndrome_is_a_homomorphism((e1, e2) in (arb_error(18), arb_error(18))) {
        let c = toric3();
        let s1 = c.syndrome(&e1).unwrap();
        let s2 = c.syndrome(&e2).unwrap();
        let s12 = c.syndrome(&e1.compose(&e2)).unwrap();
        let mut sx = s1.sx.clone();
        sx.xor_assign(&s2.sx);
        let mut sz = s1.sz.clone();
        sz.xor_assign(&s2.sz);
        prop_assert_eq!(s12.sx, sx);
        prop_assert_eq!(s12.sz, sz);
    }

    #[test]
    fn logical_x_and_z_counts_agree(c in arb_css()) {
        let f = c.css_frame().unwrap();
        let n = c.n();
        let kx = n - f.x_checks.rank() - f.z_checks.rank();
        let ker_x = f.x_checks.kernel_basis().len() - f.z_checks.rank();
        let ker_z = f.z_checks.kernel_basis().len() - f.x_checks.rank();
        prop_assert_eq!(ker_x, ker_z);
        prop_assert_eq!(kx, c.logical_count());
    }

    #[test]
    fn exact_distance_matches_full_enumeration(c in arb_css()) {
        prop_assume!(c.logical_count() > 0);
        let f = c.css_frame().unwrap();
        for (kind, a, b) in [(DistanceKind::X, &f.x_checks, &f.z_checks), (DistanceKind::Z, &f.z_checks, &f.x_checks)] {
            let got = c.distance(kind, c.n()).unwrap().value;
            prop_assert_eq!(got.exact(), oracle_distance(a, b));
        }
    }
}
