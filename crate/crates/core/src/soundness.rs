// SPDX-License-Identifier: Apache-2.0
//! Reduced weights, coset weights and `(t, f)`-soundness scans.
//!
//! A map `∂` is `(t, f)`-sound when every syndrome `s ∈ im ∂` with
//! `|s| <= t` has a preimage of weight at most `f(|s|)`. Scans enumerate the
//! image syndromes directly: with `N` a basis of the left null space,
//! `s ∈ im ∂` iff the columns of `N` indexed by `supp s` sum to zero.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::ControlFlow;
use core::str::FromStr;

use crate::css::{CodeError, CssCode, PauliError};
use crate::f2::{BinaryMatrix, BinaryVector, F2Error, RowReducer};
use crate::search::ColumnSearch;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SoundnessError {
    #[error("base map is not ({t}, {f})-sound; inheritance has nothing to inherit")]
    PreconditionFailed { t: usize, f: SoundnessFn },
    #[error(
        "lemma contradiction: {side} violates ({t}, {f})-soundness at syndrome weight {weight}"
    )]
    LemmaContradiction {
        side: &'static str,
        t: usize,
        f: SoundnessFn,
        weight: usize,
    },
    #[error("unknown soundness function {0:?}")]
    UnknownFunction(String),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    F2(#[from] F2Error),
}

/// A nonnegative rational `num / den`.
#[derive(Debug, Clone, Copy, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den > 0, "zero denominator");
        let g = gcd(num, den);
        Self {
            num: num / g,
            den: den / g,
        }
    }

    pub fn floor(&self) -> u64 {
        self.num / self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

impl PartialEq for Ratio {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Soundness bound functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SoundnessFn {
    /// `x² / 4`.
    QuarterSquare,
    /// `x³ / 4`.
    QuarterCube,
}

impl SoundnessFn {
    pub fn eval(self, x: usize) -> Ratio {
        let x = x as u64;
        match self {
            SoundnessFn::QuarterSquare => Ratio::new(x * x, 4),
            SoundnessFn::QuarterCube => Ratio::new(x * x * x, 4),
        }
    }

    /// `floor(f(x))`, the largest admissible preimage weight.
    pub fn bound(self, x: usize) -> usize {
        self.eval(x).floor() as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            SoundnessFn::QuarterSquare => "x2over4",
            SoundnessFn::QuarterCube => "x3over4",
        }
    }
}

impl fmt::Display for SoundnessFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SoundnessFn {
    type Err = SoundnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "x2over4" | "quarter_square" => Ok(SoundnessFn::QuarterSquare),
            "x3over4" | "quarter_cube" => Ok(SoundnessFn::QuarterCube),
            other => Err(SoundnessError::UnknownFunction(other.into())),
        }
    }
}

/// Exact weight or a lower bound when a search budget ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightBound {
    Exact(usize),
    AtLeast(usize),
}

impl WeightBound {
    pub fn value(self) -> usize {
        match self {
            WeightBound::Exact(w) | WeightBound::AtLeast(w) => w,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, WeightBound::Exact(_))
    }
}

impl fmt::Display for WeightBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightBound::Exact(w) => write!(f, "{w}"),
            WeightBound::AtLeast(w) => write!(f, ">={w}"),
        }
    }
}

/// Pauli-level searches on a fixed stabilizer code.
///
/// Single-qubit Paulis are indexed `3q` (X), `3q + 1` (Z), `3q + 2` (Y). A
/// minimum subset never uses two Paulis on the same qubit, so subset size and
/// Pauli weight agree at the optimum.
#[derive(Debug, Clone)]
pub struct PauliSearch {
    n: usize,
    hx: BinaryMatrix,
    hz: BinaryMatrix,
    syndromes: ColumnSearch,
    stabilizers: RowReducer,
    cosets: ColumnSearch,
}

impl PauliSearch {
    pub fn new(code: &CssCode) -> Self {
        let n = code.n();
        let m = code.num_checks();
        let xs = code.hz().column_vectors();
        let zs = code.hx().column_vectors();
        let stabilizers = RowReducer::new(&code.stabilizer_matrix());
        let mut syn = Vec::with_capacity(3 * n);
        let mut cos = Vec::with_capacity(3 * n);
        for q in 0..n {
            let mut y = xs[q].clone();
            y.xor_assign(&zs[q]);
            syn.extend([xs[q].clone(), zs[q].clone(), y]);
            let rx = stabilizers.reduce(&BinaryVector::from_support(2 * n, &[q]));
            let rz = stabilizers.reduce(&BinaryVector::from_support(2 * n, &[n + q]));
            let mut ry = rx.clone();
            ry.xor_assign(&rz);
            cos.extend([rx, rz, ry]);
        }
        Self {
            n,
            hx: code.hx().clone(),
            hz: code.hz().clone(),
            syndromes: ColumnSearch::new(m, syn),
            stabilizers,
            cosets: ColumnSearch::new(2 * n, cos),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Measured syndrome `hx e_z + hz e_x`.
    pub fn syndrome(&self, e: &PauliError) -> BinaryVector {
        let mut s = self
            .hx
            .mul_vec(&e.z)
            .expect("error length matches the code");
        s.xor_assign(
            &self
                .hz
                .mul_vec(&e.x)
                .expect("error length matches the code"),
        );
        s
    }

    fn pauli_of(&self, subset: &[usize]) -> PauliError {
        let mut e = PauliError::identity(self.n);
        for &i in subset {
            let q = i / 3;
            match i % 3 {
                0 => e.x.flip(q),
                1 => e.z.flip(q),
                _ => {
                    e.x.flip(q);
                    e.z.flip(q);
                }
            }
        }
        e
    }

    /// A minimum-weight Pauli with measured syndrome `s`, if one of weight
    /// at most `max_weight` exists.
    pub fn min_weight_with_syndrome(
        &self,
        s: &BinaryVector,
        max_weight: usize,
    ) -> Option<PauliError> {
        self.syndromes
            .min_subset(s, 0, max_weight, |_| true)
            .map(|sub| self.pauli_of(&sub))
    }

    /// `min { |F| : σ(F) = σ(E) }`, searched below `|E|` up to `budget`.
    pub fn reduced_weight(&self, e: &PauliError, budget: usize) -> WeightBound {
        let w = e.weight();
        if w == 0 {
            return WeightBound::Exact(0);
        }
        let s = self.syndrome(e);
        let top = (w - 1).min(budget);
        match self.syndromes.min_subset(&s, 0, top, |_| true) {
            Some(sub) => WeightBound::Exact(sub.len()),
            None if top == w - 1 => WeightBound::Exact(w),
            None => WeightBound::AtLeast(top + 1),
        }
    }

    pub fn is_stabilizer(&self, p: &PauliError) -> bool {
        self.stabilizers.contains(&p.symplectic())
    }

    /// Nontrivial logical: zero syndrome but not a stabilizer.
    pub fn is_logical(&self, p: &PauliError) -> bool {
        self.syndrome(p).is_zero() && !self.is_stabilizer(p)
    }

    /// `min |R S|` over stabilizers `S`, searched up to `max_weight`.
    pub fn coset_weight(&self, r: &PauliError, max_weight: usize) -> WeightBound {
        let target = self.stabilizers.reduce(&r.symplectic());
        let top = max_weight.min(r.weight());
        match self.cosets.min_subset(&target, 0, top, |_| true) {
            Some(sub) => WeightBound::Exact(sub.len()),
            None if top == r.weight() => WeightBound::Exact(top),
            None => WeightBound::AtLeast(top + 1),
        }
    }
}

/// `[a 0; 0 b]`.
pub fn direct_sum(a: &BinaryMatrix, b: &BinaryMatrix) -> BinaryMatrix {
    let mut out = BinaryMatrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
    out.write_block(0, 0, a);
    out.write_block(a.rows(), a.cols(), b);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanOptions {
    /// Stop after this many image syndromes; the report is then partial.
    pub ceiling: u64,
    /// Extra weight searched past `floor(f)` to size each violation.
    pub slack: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            ceiling: 50_000_000,
            slack: 1,
        }
    }
}

/// Summary for one syndrome weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightRow {
    pub syndrome_weight: usize,
    pub syndromes: u64,
    /// Largest minimum-preimage weight seen.
    pub max_reduced_weight: Option<WeightBound>,
    pub bound: usize,
    pub violated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub syndrome: BinaryVector,
    /// A minimum-weight preimage when one was found within the slack.
    pub error: Option<BinaryVector>,
    pub syndrome_weight: usize,
    pub reduced_weight: WeightBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoundnessReport {
    pub t_scanned: usize,
    pub f: SoundnessFn,
    pub rows: Vec<WeightRow>,
    pub violations: Vec<Violation>,
    /// Largest `reduced / f(|s|)` over scanned syndromes (lower bound for violations).
    pub max_ratio: Option<Ratio>,
    pub syndromes_checked: u64,
    pub complete: bool,
}

impl SoundnessReport {
    pub fn is_sound(&self) -> bool {
        self.complete && self.violations.is_empty()
    }
}

/// Scans every image syndrome of weight `1..=t` of `map`.
pub fn soundness_scan(
    map: &BinaryMatrix,
    t: usize,
    f: SoundnessFn,
    opts: ScanOptions,
) -> SoundnessReport {
    let preimages = ColumnSearch::new(map.rows(), map.column_vectors());
    let null = map.left_null_space();
    let image = ColumnSearch::new(null.rows(), null.column_vectors());
    scan(&preimages, &image, t, f, opts)
}

/// Scan of a stabilizer code through its CSS frame: the direct sum of the
/// X-check map (acting on Z errors) and the Z-check map (acting on X errors).
pub fn soundness_scan_code(
    code: &CssCode,
    t: usize,
    f: SoundnessFn,
    opts: ScanOptions,
) -> Result<SoundnessReport, SoundnessError> {
    let frame = code.css_frame()?;
    Ok(soundness_scan(
        &direct_sum(&frame.x_checks, &frame.z_checks),
        t,
        f,
        opts,
    ))
}

fn scan(
    preimages: &ColumnSearch,
    image: &ColumnSearch,
    t: usize,
    f: SoundnessFn,
    opts: ScanOptions,
) -> SoundnessReport {
    let m = preimages.width();
    let zero = BinaryVector::zeros(image.width());
    let mut report = SoundnessReport {
        t_scanned: t,
        f,
        rows: Vec::new(),
        violations: Vec::new(),
        max_ratio: None,
        syndromes_checked: 0,
        complete: true,
    };
    for w in 1..=t.min(m) {
        let bound = f.bound(w);
        let mut row = WeightRow {
            syndrome_weight: w,
            syndromes: 0,
            max_reduced_weight: None,
            bound,
            violated: false,
        };
        let flow = image.for_each_subset(&zero, w, |supp| {
            if report.syndromes_checked >= opts.ceiling {
                return ControlFlow::Break(());
            }
            report.syndromes_checked += 1;
            row.syndromes += 1;
            let s = BinaryVector::from_support(m, supp);
            let cap = bound + opts.slack;
            let found = preimages.min_subset(&s, 1, cap, |_| true);
            let reduced = match &found {
                Some(sub) => WeightBound::Exact(sub.len()),
                None => WeightBound::AtLeast(cap + 1),
            };
            let ratio = Ratio::new(reduced.value() as u64 * f.eval(w).den, f.eval(w).num.max(1));
            if f.eval(w).num > 0 && report.max_ratio.is_none_or(|r| ratio > r) {
                report.max_ratio = Some(ratio);
            }
            if row
                .max_reduced_weight
                .is_none_or(|b| reduced.value() > b.value())
            {
                row.max_reduced_weight = Some(reduced);
            }
            if reduced.value() > bound {
                row.violated = true;
                report.violations.push(Violation {
                    syndrome: s,
                    error: found.map(|sub| BinaryVector::from_support(preimages.len(), &sub)),
                    syndrome_weight: w,
                    reduced_weight: reduced,
                });
            }
            ControlFlow::Continue(())
        });
        report.rows.push(row);
        if flow.is_break() {
            report.complete = false;
            break;
        }
    }
    report
}

/// Scans `∂ ⊗ I_n` and `I_n ⊗ ∂` after confirming `∂` itself is sound.
pub fn inheritance_check(
    d: &BinaryMatrix,
    n: usize,
    t: usize,
    f: SoundnessFn,
    opts: ScanOptions,
) -> Result<[SoundnessReport; 2], SoundnessError> {
    let base = soundness_scan(d, t, f, opts);
    if !base.is_sound() {
        return Err(SoundnessError::PreconditionFailed { t, f });
    }
    let id = BinaryMatrix::identity(n);
    let left = soundness_scan(&d.kron(&id)?, t, f, opts);
    let right = soundness_scan(&id.kron(d)?, t, f, opts);
    for (side, r) in [("∂⊗I", &left), ("I⊗∂", &right)] {
        if let Some(v) = r.violations.first() {
            return Err(SoundnessError::LemmaContradiction {
                side,
                t,
                f,
                weight: v.syndrome_weight,
            });
        }
    }
    Ok([left, right])
}
