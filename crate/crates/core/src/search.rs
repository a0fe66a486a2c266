// SPDX-License-Identifier: Apache-2.0
//! Low-weight subset search over a fixed list of binary columns.
//!
//! Almost every hard question in this crate reduces to "which `w` columns
//! XOR to this target": distances, coset leaders, reduced weights, image
//! enumeration in soundness scans. [`ColumnSearch`] answers it by walking
//! the `(w - 1)`-subsets depth first and finishing each one with a hash
//! lookup for the last column.

use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use hashbrown::HashMap;

use crate::f2::{xor_words, BinaryVector};

/// Exact or bracketed minimum weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Distance {
    Exact(usize),
    /// Every weight below `at_least` was excluded exhaustively; `at_most` is
    /// the weight of the best witness found, if any.
    Bounded {
        at_least: usize,
        at_most: Option<usize>,
    },
}

impl Distance {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            Distance::Exact(d) => Some(d),
            Distance::Bounded { .. } => None,
        }
    }

    /// Largest certified lower bound.
    pub fn lower_bound(&self) -> usize {
        match *self {
            Distance::Exact(d) => d,
            Distance::Bounded { at_least, .. } => at_least,
        }
    }

    pub fn upper_bound(&self) -> Option<usize> {
        match *self {
            Distance::Exact(d) => Some(d),
            Distance::Bounded { at_most, .. } => at_most,
        }
    }

    pub fn min(self, other: Self) -> Self {
        let lo = self.lower_bound().min(other.lower_bound());
        let hi = match (self.upper_bound(), other.upper_bound()) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        match hi {
            Some(h) if h == lo => Distance::Exact(h),
            _ => Distance::Bounded {
                at_least: lo,
                at_most: hi,
            },
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Distance::Exact(d) => write!(f, "{d}"),
            Distance::Bounded {
                at_least,
                at_most: None,
            } => write!(f, ">={at_least}"),
            Distance::Bounded {
                at_least,
                at_most: Some(u),
            } => write!(f, "{at_least}..={u}"),
        }
    }
}

/// A distance together with a minimum-weight (or best known) witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceReport {
    pub value: Distance,
    pub witness: Option<BinaryVector>,
    /// Largest weight excluded exhaustively.
    pub searched_up_to: usize,
}

/// Subset-sum search over GF(2) columns.
#[derive(Clone, Debug)]
pub struct ColumnSearch {
    width: usize,
    columns: Vec<BinaryVector>,
    index: HashMap<BinaryVector, Vec<usize>>,
}

impl ColumnSearch {
    /// # Panics
    /// If the columns do not share one length.
    pub fn new(width: usize, columns: Vec<BinaryVector>) -> Self {
        let mut index: HashMap<BinaryVector, Vec<usize>> = HashMap::new();
        for (i, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), width, "column {i} has the wrong length");
            index.entry(c.clone()).or_default().push(i);
        }
        Self {
            width,
            columns,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn column(&self, i: usize) -> &BinaryVector {
        &self.columns[i]
    }

    /// XOR of the chosen columns.
    pub fn combine(&self, subset: &[usize]) -> BinaryVector {
        let mut acc = BinaryVector::zeros(self.width);
        for &i in subset {
            acc.xor_assign(&self.columns[i]);
        }
        acc
    }

    /// Visits every ascending `w`-subset whose columns XOR to `target`.
    pub fn for_each_subset<B>(
        &self,
        target: &BinaryVector,
        w: usize,
        mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        assert_eq!(target.len(), self.width, "target has the wrong length");
        if w == 0 {
            return if target.is_zero() {
                visit(&[])
            } else {
                ControlFlow::Continue(())
            };
        }
        if w > self.columns.len() {
            return ControlFlow::Continue(());
        }
        let mut walk = Walk {
            search: self,
            target,
            w,
            acc: BinaryVector::zeros(self.width),
            key: BinaryVector::zeros(self.width),
            chosen: Vec::with_capacity(w),
        };
        walk.descend(0, &mut visit)
    }

    /// Smallest accepted subset with size in `min_w..=max_w` that XORs to `target`.
    pub fn min_subset(
        &self,
        target: &BinaryVector,
        min_w: usize,
        max_w: usize,
        mut accept: impl FnMut(&[usize]) -> bool,
    ) -> Option<Vec<usize>> {
        for w in min_w..=max_w {
            let found = self.for_each_subset(target, w, |s| {
                if accept(s) {
                    ControlFlow::Break(s.to_vec())
                } else {
                    ControlFlow::Continue(())
                }
            });
            if let ControlFlow::Break(s) = found {
                return Some(s);
            }
        }
        None
    }
}

struct Walk<'a> {
    search: &'a ColumnSearch,
    target: &'a BinaryVector,
    w: usize,
    acc: BinaryVector,
    key: BinaryVector,
    chosen: Vec<usize>,
}

impl Walk<'_> {
    fn descend<B>(
        &mut self,
        start: usize,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let n = self.search.columns.len();
        if self.chosen.len() + 1 == self.w {
            let key = self.key.words_mut();
            key.copy_from_slice(self.acc.words());
            xor_words(key, self.target.words());
            let Some(list) = self.search.index.get(&self.key) else {
                return ControlFlow::Continue(());
            };
            let from = list.partition_point(|&j| j < start);
            for &j in &list[from..] {
                self.chosen.push(j);
                let r = visit(&self.chosen);
                self.chosen.pop();
                r?;
            }
            return ControlFlow::Continue(());
        }
        let remaining = self.w - self.chosen.len();
        for i in start..=n.saturating_sub(remaining) {
            let col = &self.search.columns[i];
            xor_inplace(&mut self.acc, col);
            self.chosen.push(i);
            let r = self.descend(i + 1, visit);
            self.chosen.pop();
            xor_inplace(&mut self.acc, col);
            r?;
        }
        ControlFlow::Continue(())
    }
}

#[inline]
fn xor_inplace(acc: &mut BinaryVector, col: &BinaryVector) {
    xor_words(acc.words_mut(), col.words());
}

/// Calls `visit` with every nonzero vector in the span of `basis`, in Gray-code order.
pub fn for_each_span_vector(
    basis: &[BinaryVector],
    width: usize,
    mut visit: impl FnMut(&BinaryVector),
) {
    let k = basis.len();
    assert!(k < usize::BITS as usize, "span too large to enumerate");
    let mut acc = BinaryVector::zeros(width);
    for step in 1usize..(1 << k) {
        let flip = step.trailing_zeros() as usize;
        acc.xor_assign(&basis[flip]);
        visit(&acc);
    }
}
