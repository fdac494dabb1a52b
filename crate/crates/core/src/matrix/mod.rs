//! Matrices over `Q(t)[D; δ]` and the constructive Hermite elimination.

mod elim;
mod random;

pub use elim::{
    hermite_elimination, inverse_unimodular, is_hermite, off_diagonal_reduce, unimodular_2x2,
};
pub use random::{random_full_rank, random_matrix, random_unimodular, random_unimodular_with};

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Degree, Derivation, RatFun};
use crate::ore::OrePoly;

/// Dense `rows × cols` matrix of differential polynomials over one derivation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OreMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<OrePoly>,
    derivation: Derivation,
}

impl OreMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<OrePoly>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape("matrix dimensions must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let derivation = entries[0].derivation();
        if let Some(e) = entries.iter().find(|e| e.derivation() != derivation) {
            return Err(Error::DerivationMismatch(derivation, e.derivation()));
        }
        Ok(OreMatrix {
            rows,
            cols,
            entries,
            derivation,
        })
    }

    pub fn from_rows(rows: Vec<Vec<OrePoly>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::Shape("ragged rows".into()));
        }
        OreMatrix::new(n, m, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize, derivation: Derivation) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        OreMatrix {
            rows,
            cols,
            entries: vec![OrePoly::zero(derivation); rows * cols],
            derivation,
        }
    }

    pub fn identity(n: usize, derivation: Derivation) -> Self {
        let mut m = OreMatrix::zeros(n, n, derivation);
        for i in 0..n {
            m.set(i, i, OrePoly::one(derivation));
        }
        m
    }

    /// Diagonal matrix; panics on an empty list.
    pub fn diagonal(diag: Vec<OrePoly>) -> Self {
        let n = diag.len();
        let mut m = OreMatrix::zeros(n, n, diag[0].derivation());
        for (i, e) in diag.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn derivation(&self) -> Derivation {
        self.derivation
    }

    pub fn get(&self, i: usize, j: usize) -> &OrePoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: OrePoly) {
        value.assert_same_derivation(&self.entries[0]);
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[OrePoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[OrePoly] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn is_polynomial(&self) -> bool {
        self.entries.iter().all(OrePoly::is_polynomial)
    }

    /// Largest `deg_D` over all entries.
    pub fn deg_d(&self) -> Degree {
        self.entries.iter().map(OrePoly::deg_d).max().unwrap_or(Degree::NegInf)
    }

    /// Largest `deg_t` over all entries.
    pub fn deg_t(&self) -> Degree {
        self.entries.iter().map(OrePoly::deg_t).max().unwrap_or(Degree::NegInf)
    }

    /// Non-commutative product `self · rhs`.
    pub fn mul(&self, rhs: &OreMatrix) -> Result<OreMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        if self.derivation != rhs.derivation {
            return Err(Error::DerivationMismatch(self.derivation, rhs.derivation));
        }
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = OrePoly::zero(self.derivation);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = rhs.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &a.mul(b);
                    }
                }
                entries.push(acc);
            }
        }
        OreMatrix::new(self.rows, rhs.cols, entries)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `row_i ← c·row_i`
    pub fn scale_row(&mut self, i: usize, c: &RatFun) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.entries[idx] = self.entries[idx].scale_left(c);
        }
    }

    /// `row_target ← row_target + f·row_source`
    pub fn add_row_multiple(&mut self, target: usize, source: usize, f: &OrePoly) {
        assert_ne!(target, source);
        if f.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = self.get(source, j);
            if s.is_zero() {
                continue;
            }
            let update = f.mul(s);
            let idx = target * self.cols + j;
            self.entries[idx] = &self.entries[idx] + &update;
        }
    }

    /// Replaces rows `(a, b)` by `W·(row_a, row_b)ᵀ` for a 2×2 matrix `W`.
    pub fn combine_rows(&mut self, a: usize, b: usize, w: &OreMatrix) {
        assert!(w.rows == 2 && w.cols == 2);
        let lin = |x: &OrePoly, y: &OrePoly, p: &OrePoly, q: &OrePoly| {
            let mut acc = OrePoly::zero(x.derivation());
            if !x.is_zero() && !p.is_zero() {
                acc = &acc + &x.mul(p);
            }
            if !y.is_zero() && !q.is_zero() {
                acc = &acc + &y.mul(q);
            }
            acc
        };
        for j in 0..self.cols {
            let ra = self.get(a, j).clone();
            let rb = self.get(b, j).clone();
            let na = lin(w.get(0, 0), w.get(0, 1), &ra, &rb);
            let nb = lin(w.get(1, 0), w.get(1, 1), &ra, &rb);
            self.entries[a * self.cols + j] = na;
            self.entries[b * self.cols + j] = nb;
        }
    }
}

impl fmt::Debug for OreMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "OreMatrix {}x{} ({:?}) [", self.rows, self.cols, self.derivation)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(crate::text::print_entry).collect();
            writeln!(f, "  {}", row.join("; "))?;
        }
        write!(f, "]")
    }
}

/// Candidate (or discovered) `D`-degrees of the diagonal of a triangular form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeProfile(pub Vec<usize>);

impl DegreeProfile {
    pub fn uniform(n: usize, k: usize) -> Self {
        DegreeProfile(vec![k; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Every entry lies within the cap `n·d`.
    pub fn within_cap(&self, d: usize) -> bool {
        let cap = self.0.len() * d;
        self.0.iter().all(|&k| k <= cap)
    }

    pub fn dominates(&self, other: &DegreeProfile) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

/// Output of both Hermite algorithms: `u·a = h` with `h` in Hermite form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteResult {
    pub u: OreMatrix,
    pub h: OreMatrix,
    pub diag_degrees: DegreeProfile,
}

impl HermiteResult {
    pub(crate) fn from_parts(u: OreMatrix, h: OreMatrix) -> Self {
        let diag_degrees = DegreeProfile(
            (0..h.rows())
                .map(|i| h.get(i, i).deg_d().or_zero())
                .collect(),
        );
        HermiteResult { u, h, diag_degrees }
    }
}
