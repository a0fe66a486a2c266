// SPDX-License-Identifier: Apache-2.0
//! Stabilizer codes in symplectic form.
//!
//! A code is stored as `m` stabilizer rows `[hx | hz]`: row `i` acts as `X`
//! on the support of `hx[i]` and as `Z` on the support of `hz[i]`. A plain CSS
//! code with Z-type checks `𝒵` and X-type checks `𝒳` is the stack
//! `hx = [0; 𝒳]`, `hz = [𝒵; 0]`, Z-type rows first. Codes obtained from CSS
//! codes by Hadamards on some qubits keep this form; [`CssCode::css_frame`]
//! recovers the CSS picture when it exists.
//!
//! Syndromes follow the matrices: a Pauli `E = X^{e_x} Z^{e_z}` has
//! `sx = hx · e_z` and `sz = hz · e_x`; the measured syndrome is `sx + sz`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::f2::{BinaryMatrix, BinaryVector, F2Error, RowReducer};
use crate::search::{ColumnSearch, Distance, DistanceReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodeError {
    #[error("hx is {hx:?} but hz is {hz:?}")]
    Shape {
        hx: (usize, usize),
        hz: (usize, usize),
    },
    #[error("stabilizers {row_a} and {row_b} anticommute")]
    Anticommuting { row_a: usize, row_b: usize },
    #[error("{which} has {found} columns, expected one per check ({expected})")]
    SyndromeCheckShape {
        which: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{which} row {row} does not annihilate the stabilizer image")]
    SyndromeCheck { which: &'static str, row: usize },
    #[error("stabilizer {row} has a Y on qubit {qubit}; no Hadamard frame makes the code CSS")]
    NotCssEquivalent { row: usize, qubit: usize },
    #[error("the code encodes no logical qubits")]
    NoLogicals,
    #[error("error acts on {found} qubits, code has {expected}")]
    ErrorLength { expected: usize, found: usize },
    #[error(transparent)]
    F2(#[from] F2Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

/// An `n`-qubit Pauli operator up to phase.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliError {
    pub x: BinaryVector,
    pub z: BinaryVector,
}

impl PauliError {
    pub fn identity(n: usize) -> Self {
        Self {
            x: BinaryVector::zeros(n),
            z: BinaryVector::zeros(n),
        }
    }

    /// # Panics
    /// If the parts differ in length.
    pub fn new(x: BinaryVector, z: BinaryVector) -> Self {
        assert_eq!(x.len(), z.len(), "x and z parts differ in length");
        Self { x, z }
    }

    pub fn single(n: usize, qubit: usize, p: Pauli) -> Self {
        let mut e = Self::identity(n);
        e.set(qubit, p);
        e
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn get(&self, q: usize) -> Pauli {
        match (self.x.get(q), self.z.get(q)) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn set(&mut self, q: usize, p: Pauli) {
        let (x, z) = match p {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        };
        self.x.set(q, x);
        self.z.set(q, z);
    }

    /// Number of qubits acted on nontrivially.
    pub fn weight(&self) -> usize {
        self.x.union_weight(&self.z)
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Product up to phase.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.x.xor_assign(&other.x);
        out.z.xor_assign(&other.z);
        out
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.x.dot(&other.z) == self.z.dot(&other.x)
    }

    /// `[x | z]` as one vector of length `2n`.
    pub fn symplectic(&self) -> BinaryVector {
        BinaryVector::concat(&[&self.x, &self.z])
    }

    pub fn from_symplectic(v: &BinaryVector) -> Self {
        let n = v.len() / 2;
        Self {
            x: v.slice(0, n),
            z: v.slice(n, n),
        }
    }

    /// Conjugation by Hadamards on the qubits in `mask`.
    pub fn hadamard(&self, mask: &BinaryVector) -> Self {
        let mut out = self.clone();
        for q in mask.support() {
            let (x, z) = (self.x.get(q), self.z.get(q));
            out.x.set(q, z);
            out.z.set(q, x);
        }
        out
    }
}

impl fmt::Display for PauliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..self.n() {
            let c = match self.get(q) {
                Pauli::I => "I",
                Pauli::X => "X",
                Pauli::Y => "Y",
                Pauli::Z => "Z",
            };
            f.write_str(c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliError({self})")
    }
}

impl FromStr for PauliError {
    type Err = F2Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut e = Self::identity(chars.len());
        for (q, c) in chars.into_iter().enumerate() {
            let p = match c {
                'I' | '_' => Pauli::I,
                'X' => Pauli::X,
                'Y' => Pauli::Y,
                'Z' => Pauli::Z,
                c => return Err(F2Error::Parse(format!("unexpected Pauli {c:?}"))),
            };
            e.set(q, p);
        }
        Ok(e)
    }
}

/// Syndrome split by the part of the check that detected it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Syndrome {
    /// `hx · e_z`.
    pub sx: BinaryVector,
    /// `hz · e_x`.
    pub sz: BinaryVector,
}

impl Syndrome {
    /// The bits actually measured, `sx + sz`.
    pub fn combined(&self) -> BinaryVector {
        let mut s = self.sx.clone();
        s.xor_assign(&self.sz);
        s
    }

    pub fn weight(&self) -> usize {
        self.combined().weight()
    }
}

/// Which logical sector a distance refers to, in the code's CSS frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DistanceKind {
    /// `min |v|` over `v ∈ ker 𝒳 \ rowspace 𝒵`.
    X,
    /// `min |v|` over `v ∈ ker 𝒵 \ rowspace 𝒳`.
    Z,
}

/// A connected component of a Tanner graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TannerComponent {
    pub checks: Vec<usize>,
    pub qubits: Vec<usize>,
}

/// CSS picture of a Hadamard-rotated CSS code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CssFrame {
    /// Qubits carrying a Hadamard relative to the CSS form.
    pub rotated: BinaryVector,
    pub x_rows: Vec<usize>,
    pub z_rows: Vec<usize>,
    /// `𝒳` restricted to `x_rows`, in frame coordinates.
    pub x_checks: BinaryMatrix,
    /// `𝒵` restricted to `z_rows`, in frame coordinates.
    pub z_checks: BinaryMatrix,
}

impl CssFrame {
    /// Maps an error into frame coordinates (and back; the map is an involution).
    pub fn to_frame(&self, e: &PauliError) -> PauliError {
        e.hadamard(&self.rotated)
    }

    pub fn x_distance_search(&self) -> (ColumnSearch, RowReducer) {
        (
            ColumnSearch::new(self.x_checks.rows(), self.x_checks.column_vectors()),
            RowReducer::new(&self.z_checks),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CssCode {
    hx: BinaryMatrix,
    hz: BinaryMatrix,
    hsx: Option<BinaryMatrix>,
    hsz: Option<BinaryMatrix>,
}

impl CssCode {
    /// Symplectic constructor; checks shapes only.
    pub fn new(hx: BinaryMatrix, hz: BinaryMatrix) -> Result<Self, CodeError> {
        if hx.shape() != hz.shape() {
            return Err(CodeError::Shape {
                hx: hx.shape(),
                hz: hz.shape(),
            });
        }
        Ok(Self {
            hx,
            hz,
            hsx: None,
            hsz: None,
        })
    }

    /// Plain CSS code from X-type checks `𝒳` and Z-type checks `𝒵`, Z rows
    /// first. Shapes only; commutation is left to [`CssCode::validate`].
    pub fn from_css(x_checks: &BinaryMatrix, z_checks: &BinaryMatrix) -> Result<Self, CodeError> {
        if x_checks.cols() != z_checks.cols() {
            return Err(CodeError::Shape {
                hx: x_checks.shape(),
                hz: z_checks.shape(),
            });
        }
        let n = x_checks.cols();
        let hx = BinaryMatrix::vstack(&[&BinaryMatrix::zeros(z_checks.rows(), n), x_checks])?;
        let hz = BinaryMatrix::vstack(&[z_checks, &BinaryMatrix::zeros(x_checks.rows(), n)])?;
        Self::new(hx, hz)
    }

    /// Attaches syndrome checks; `hsx · hx = 0` and `hsz · hz = 0` are
    /// enforced by [`CssCode::validate`].
    pub fn with_syndrome_checks(
        mut self,
        hsx: Option<BinaryMatrix>,
        hsz: Option<BinaryMatrix>,
    ) -> Result<Self, CodeError> {
        for (which, m) in [("hsx", &hsx), ("hsz", &hsz)] {
            if let Some(m) = m {
                if m.cols() != self.num_checks() {
                    return Err(CodeError::SyndromeCheckShape {
                        which,
                        expected: self.num_checks(),
                        found: m.cols(),
                    });
                }
            }
        }
        self.hsx = hsx;
        self.hsz = hsz;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.hx.cols()
    }

    pub fn num_checks(&self) -> usize {
        self.hx.rows()
    }

    pub fn hx(&self) -> &BinaryMatrix {
        &self.hx
    }

    pub fn hz(&self) -> &BinaryMatrix {
        &self.hz
    }

    pub fn hsx(&self) -> Option<&BinaryMatrix> {
        self.hsx.as_ref()
    }

    pub fn hsz(&self) -> Option<&BinaryMatrix> {
        self.hsz.as_ref()
    }

    pub fn has_syndrome_checks(&self) -> bool {
        self.hsx.is_some() || self.hsz.is_some()
    }

    /// `[hx | hz]`.
    pub fn stabilizer_matrix(&self) -> BinaryMatrix {
        BinaryMatrix::hstack(&[&self.hx, &self.hz]).expect("hx and hz share a shape")
    }

    pub fn stabilizer(&self, row: usize) -> PauliError {
        PauliError::new(self.hx.row(row), self.hz.row(row))
    }

    /// Symplectic Gram matrix `hx hzᵀ + hz hxᵀ`; zero iff all stabilizers commute.
    pub fn commutation_matrix(&self) -> BinaryMatrix {
        let a = self.hx.mul(&self.hz.transpose()).expect("shapes agree");
        let b = self.hz.mul(&self.hx.transpose()).expect("shapes agree");
        a.add(&b).expect("shapes agree")
    }

    /// Commutation of all stabilizers and annihilation by the attached syndrome checks.
    pub fn validate(&self) -> Result<(), CodeError> {
        let p = self.commutation_matrix();
        for i in 0..p.rows() {
            if let Some(j) = p.row(i).support().first() {
                return Err(CodeError::Anticommuting {
                    row_a: i,
                    row_b: *j,
                });
            }
        }
        for (which, hs, h) in [("hsx", &self.hsx, &self.hx), ("hsz", &self.hsz, &self.hz)] {
            if let Some(hs) = hs {
                let prod = hs.mul(h)?;
                if let Some(row) = (0..prod.rows()).find(|&r| prod.row_weight(r) > 0) {
                    return Err(CodeError::SyndromeCheck { which, row });
                }
            }
        }
        Ok(())
    }

    /// `n - rank [hx | hz]`.
    pub fn logical_count(&self) -> usize {
        self.n() - self.stabilizer_matrix().rank()
    }

    pub fn syndrome(&self, e: &PauliError) -> Result<Syndrome, CodeError> {
        if e.n() != self.n() {
            return Err(CodeError::ErrorLength {
                expected: self.n(),
                found: e.n(),
            });
        }
        Ok(Syndrome {
            sx: self.hx.mul_vec(&e.z)?,
            sz: self.hz.mul_vec(&e.x)?,
        })
    }

    /// Finds Hadamards turning every row into a pure X or pure Z check.
    ///
    /// Rows and qubits are two-coloured under the constraint that an `X`
    /// entry forces "X-type row xor rotated qubit" and a `Z` entry forces
    /// agreement. In every connected component the lowest-index qubit stays
    /// unrotated; rows touching no qubit are typed Z.
    pub fn css_frame(&self) -> Result<CssFrame, CodeError> {
        let (m, n) = (self.num_checks(), self.n());
        let mut uf = ParityUnionFind::new(m + n);
        for r in 0..m {
            let (x, z) = (self.hx.row(r), self.hz.row(r));
            for q in x.support() {
                if z.get(q) {
                    return Err(CodeError::NotCssEquivalent { row: r, qubit: q });
                }
                // row is X-type xor qubit rotated
                if !uf.union(r, m + q, true) {
                    return Err(CodeError::NotCssEquivalent { row: r, qubit: q });
                }
            }
            for q in z.support() {
                if !uf.union(r, m + q, false) {
                    return Err(CodeError::NotCssEquivalent { row: r, qubit: q });
                }
            }
        }
        // Anchor each component at its lowest node: the first qubit when there is one.
        let mut anchor_value: Vec<Option<bool>> = vec![None; m + n];
        for q in 0..n {
            let (root, par) = uf.find(m + q);
            if anchor_value[root].is_none() {
                // qubit unrotated => parity(root) = par
                anchor_value[root] = Some(par);
            }
        }
        let value = |uf: &mut ParityUnionFind, node: usize| -> bool {
            let (root, par) = uf.find(node);
            match anchor_value[root] {
                Some(root_val) => root_val ^ par,
                None => false,
            }
        };
        let mut rotated = BinaryVector::zeros(n);
        for q in 0..n {
            if value(&mut uf, m + q) {
                rotated.flip(q);
            }
        }
        let mut x_rows = Vec::new();
        let mut z_rows = Vec::new();
        for r in 0..m {
            // For an isolated row the anchor is absent, value false => Z-type.
            if value(&mut uf, r) {
                x_rows.push(r);
            } else {
                z_rows.push(r);
            }
        }
        let frame_rows = |rows: &[usize], want_x: bool| -> BinaryMatrix {
            let mut out = BinaryMatrix::zeros(rows.len(), n);
            for (i, &r) in rows.iter().enumerate() {
                let e = self.stabilizer(r).hadamard(&rotated);
                let part = if want_x { &e.x } else { &e.z };
                for q in part.support() {
                    out.set(i, q, true);
                }
            }
            out
        };
        let x_checks = frame_rows(&x_rows, true);
        let z_checks = frame_rows(&z_rows, false);
        Ok(CssFrame {
            rotated,
            x_rows,
            z_rows,
            x_checks,
            z_checks,
        })
    }

    /// Minimum weight of a logical operator of the given kind.
    ///
    /// Supports are enumerated by increasing weight up to `max_weight`; when
    /// nothing is found the result is bracketed using `witnesses` (frame
    /// coordinates) and the kernel basis.
    pub fn distance_with_witnesses(
        &self,
        kind: DistanceKind,
        max_weight: usize,
        witnesses: &[BinaryVector],
    ) -> Result<DistanceReport, CodeError> {
        let frame = self.css_frame()?;
        let (checks, other) = match kind {
            DistanceKind::X => (&frame.x_checks, &frame.z_checks),
            DistanceKind::Z => (&frame.z_checks, &frame.x_checks),
        };
        if self.logical_count() == 0 {
            return Err(CodeError::NoLogicals);
        }
        let stabilizers = RowReducer::new(other);
        let search = ColumnSearch::new(checks.rows(), checks.column_vectors());
        let zero = BinaryVector::zeros(checks.rows());
        let n = self.n();
        if let Some(s) = search.min_subset(&zero, 1, max_weight, |s| {
            !stabilizers.contains(&BinaryVector::from_support(n, s))
        }) {
            return Ok(DistanceReport {
                value: Distance::Exact(s.len()),
                witness: Some(BinaryVector::from_support(n, &s)),
                searched_up_to: s.len(),
            });
        }
        let is_logical = |v: &BinaryVector| {
            v.len() == n
                && checks.mul_vec(v).map(|s| s.is_zero()).unwrap_or(false)
                && !stabilizers.contains(v)
        };
        let witness = witnesses
            .iter()
            .cloned()
            .chain(checks.kernel_basis())
            .filter(|v| is_logical(v))
            .min_by_key(BinaryVector::weight);
        let at_least = max_weight + 1;
        let at_most = witness.as_ref().map(BinaryVector::weight);
        let value = match at_most {
            Some(u) if u == at_least => Distance::Exact(u),
            _ => Distance::Bounded { at_least, at_most },
        };
        Ok(DistanceReport {
            value,
            witness,
            searched_up_to: max_weight,
        })
    }

    pub fn distance(
        &self,
        kind: DistanceKind,
        max_weight: usize,
    ) -> Result<DistanceReport, CodeError> {
        self.distance_with_witnesses(kind, max_weight, &[])
    }

    /// Connected components of the Tanner graph of `hx` (kind X) or `hz`
    /// (kind Z). Checks and qubits without edges are left out.
    pub fn tanner_components(&self, kind: DistanceKind) -> Vec<TannerComponent> {
        let h = match kind {
            DistanceKind::X => &self.hx,
            DistanceKind::Z => &self.hz,
        };
        tanner_components(h)
    }
}

/// Connected components of the bipartite graph of `h`, ignoring isolated nodes.
pub fn tanner_components(h: &BinaryMatrix) -> Vec<TannerComponent> {
    let (m, n) = h.shape();
    let mut uf = ParityUnionFind::new(m + n);
    let mut touched = vec![false; m + n];
    for r in 0..m {
        for q in h.row(r).support() {
            uf.union(r, m + q, false);
            touched[r] = true;
            touched[m + q] = true;
        }
    }
    let mut by_root: Vec<Option<usize>> = vec![None; m + n];
    let mut comps: Vec<TannerComponent> = Vec::new();
    // Qubits first so components come out ordered by their lowest qubit.
    for node in (m..m + n).chain(0..m) {
        if !touched[node] {
            continue;
        }
        let root = uf.find(node).0;
        let idx = *by_root[root].get_or_insert_with(|| {
            comps.push(TannerComponent {
                checks: Vec::new(),
                qubits: Vec::new(),
            });
            comps.len() - 1
        });
        if node >= m {
            comps[idx].qubits.push(node - m);
        } else {
            comps[idx].checks.push(node);
        }
    }
    comps
}

/// Union-find tracking the parity of each node relative to its root.
struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<bool>,
    rank: Vec<u8>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            parity: vec![false; n],
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut v: usize) -> (usize, bool) {
        let mut path = Vec::new();
        while self.parent[v] != v {
            path.push(v);
            v = self.parent[v];
        }
        let root = v;
        // Compress from the node nearest the root outwards.
        for &u in path.iter().rev() {
            let p = self.parent[u];
            if p != root {
                self.parity[u] ^= self.parity[p];
            }
            self.parent[u] = root;
        }
        let first = path.first().copied();
        (root, first.is_some_and(|u| self.parity[u]))
    }

    /// Records `value(a) xor value(b) = rel`; false on contradiction.
    fn union(&mut self, a: usize, b: usize, rel: bool) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == rel;
        }
        let (big, small) = if self.rank[ra] >= self.rank[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.parity[small] = pa ^ pb ^ rel;
        if self.rank[big] == self.rank[small] {
            self.rank[big] += 1;
        }
        true
    }
}

/// Human-readable summary line such as `[[18,2,3]]`.
pub fn params_string(n: usize, k: usize, d: &Distance) -> String {
    format!("[[{n},{k},{d}]]")
}
