// SPDX-License-Identifier: Apache-2.0
//! Naive reference implementations used as oracles across the test suites.
//! Everything here works on `Vec<Vec<u8>>` so it shares no code with the
//! library's packed arithmetic.

#![allow(dead_code)]

use proptest::prelude::*;
use qforge_core::{BinaryMatrix, BinaryVector};

pub type Dense = Vec<Vec<u8>>;

pub fn dense(m: &BinaryMatrix) -> Dense {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c) as u8).collect())
        .collect()
}

pub fn from_dense(cols: usize, d: &Dense) -> BinaryMatrix {
    BinaryMatrix::from_bit_rows(cols, d).unwrap()
}

pub fn m(s: &str) -> BinaryMatrix {
    s.parse().unwrap()
}

pub fn v(s: &str) -> BinaryVector {
    s.parse().unwrap()
}

pub fn naive_mul(a: &Dense, b: &Dense, inner: usize, cols: usize) -> Dense {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(0u8, |acc, k| acc ^ (row[k] & b[k][j])))
                .collect()
        })
        .collect()
}

pub fn naive_kron(a: &Dense, b: &Dense, a_cols: usize, b_cols: usize) -> Dense {
    let mut out = Vec::new();
    for ar in a {
        for br in b {
            let mut row = Vec::with_capacity(a_cols * b_cols);
            for &x in ar.iter().take(a_cols) {
                for &y in br.iter().take(b_cols) {
                    row.push(x & y);
                }
            }
            out.push(row);
        }
    }
    out
}

/// All vectors of length `n` as bitmasks, `n <= 20`.
pub fn all_vectors(n: usize) -> impl Iterator<Item = u32> {
    0..(1u32 << n)
}

pub fn mask_to_vec(n: usize, mask: u32) -> BinaryVector {
    BinaryVector::from_bools((0..n).map(|i| mask >> i & 1 == 1))
}

fn row_mask(row: &[u8]) -> u32 {
    row.iter()
        .enumerate()
        .fold(0, |acc, (i, &b)| acc | ((b as u32) << i))
}

/// Size of the row span, by closure under addition.
pub fn span_size(rows: &Dense) -> usize {
    let mut span = std::collections::BTreeSet::from([0u32]);
    for r in rows {
        let x = row_mask(r);
        let add: Vec<u32> = span.iter().map(|s| s ^ x).collect();
        span.extend(add);
    }
    span.len()
}

pub fn brute_rank(rows: &Dense) -> usize {
    span_size(rows).trailing_zeros() as usize
}

/// Every `x` with `H x = 0`, by enumeration.
pub fn brute_kernel(h: &Dense, n: usize) -> Vec<u32> {
    let masks: Vec<u32> = h.iter().map(|r| row_mask(r)).collect();
    all_vectors(n)
        .filter(|&x| masks.iter().all(|r| (r & x).count_ones() % 2 == 0))
        .collect()
}

/// Minimum weight of a nonzero kernel vector, by enumeration.
pub fn brute_distance(h: &Dense, n: usize) -> Option<usize> {
    brute_kernel(h, n)
        .into_iter()
        .filter(|&x| x != 0)
        .map(|x| x.count_ones() as usize)
        .min()
}

/// Row span of `rows` as a set of masks.
pub fn span(rows: &Dense) -> std::collections::BTreeSet<u32> {
    let mut span = std::collections::BTreeSet::from([0u32]);
    for r in rows {
        let x = row_mask(r);
        let add: Vec<u32> = span.iter().map(|s| s ^ x).collect();
        span.extend(add);
    }
    span
}

/// CSS distance of kind X by enumeration: min weight of `v` with `hx v = 0`
/// outside the row span of `hz`.
pub fn brute_css_distance(hx: &Dense, hz: &Dense, n: usize) -> Option<usize> {
    let stab = span(hz);
    brute_kernel(hx, n)
        .into_iter()
        .filter(|x| !stab.contains(x))
        .map(|x| x.count_ones() as usize)
        .min()
}

pub fn arb_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BinaryMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(0u8..2, c), r)
            .prop_map(move |rows| from_dense(c, &rows))
    })
}

pub fn arb_matrix_shape(rows: usize, cols: usize) -> impl Strategy<Value = BinaryMatrix> {
    proptest::collection::vec(proptest::collection::vec(0u8..2, cols), rows)
        .prop_map(move |d| from_dense(cols, &d))
}

/// Rank by textbook elimination on byte rows.
pub fn naive_rank(rows: &Dense) -> usize {
    let mut a: Dense = rows.clone();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| a[r][c] == 1) else {
            continue;
        };
        a.swap(rank, p);
        for r in 0..a.len() {
            if r != rank && a[r][c] == 1 {
                let pivot = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Nonzero rows only.
pub fn nonzero_rows(d: &Dense) -> Dense {
    d.iter().filter(|r| r.contains(&1)).cloned().collect()
}

/// Whether `v` (as a 0/1 row) is a logical of kind X for plain CSS blocks:
/// annihilated by every `x_rows` row and outside the span of `z_rows`.
pub fn naive_is_logical(x_rows: &Dense, z_rows: &Dense, v: &[u8]) -> bool {
    let annihilated = x_rows
        .iter()
        .all(|r| r.iter().zip(v).fold(0u8, |acc, (a, b)| acc ^ (a & b)) == 0);
    if !annihilated {
        return false;
    }
    let mut with = z_rows.clone();
    with.push(v.to_vec());
    naive_rank(&with) > naive_rank(z_rows)
}

/// Calls `f` on every support of size `1..=max_w` drawn from `0..n`.
pub fn for_each_support(n: usize, max_w: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(
        start: usize,
        n: usize,
        max_w: usize,
        cur: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) {
        if !cur.is_empty() {
            f(cur);
        }
        if cur.len() == max_w {
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, max_w, cur, f);
            cur.pop();
        }
    }
    rec(0, n, max_w, &mut Vec::new(), f);
}

/// Whether some logical of kind X has weight at most `max_w`, by naive search.
/// Kernel membership is tested incrementally via column sums.
pub fn naive_has_logical_up_to(x_rows: &Dense, z_rows: &Dense, n: usize, max_w: usize) -> bool {
    let cols: Vec<Vec<u8>> = (0..n)
        .map(|q| x_rows.iter().map(|r| r[q]).collect())
        .collect();
    let base = naive_rank(z_rows);
    let mut found = false;
    for_each_support(n, max_w, &mut |s| {
        if found {
            return;
        }
        let mut acc = vec![0u8; x_rows.len()];
        for &q in s {
            for (a, b) in acc.iter_mut().zip(&cols[q]) {
                *a ^= b;
            }
        }
        if acc.iter().all(|&b| b == 0) {
            let mut v = vec![0u8; n];
            for &q in s {
                v[q] = 1;
            }
            let mut with = z_rows.clone();
            with.push(v);
            if naive_rank(&with) > base {
                found = true;
            }
        }
    });
    found
}
