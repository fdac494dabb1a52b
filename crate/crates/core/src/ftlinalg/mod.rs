//! Exact dense linear algebra over `Q(t)`.
//!
//! Systems are scaled row by row into `Z[t]` and eliminated fraction-free
//! (Bareiss): after `k` pivot steps every active entry is a `(k+1)`-minor
//! of the scaled input, so all divisions are exact and no polynomial gcd is
//! needed until the final solution is reduced.

mod intpoly;

use intpoly::IntPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{Degree, RatFun, TPoly};

#[derive(Clone, PartialEq, Eq)]
pub struct FtMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RatFun>,
}

impl FtMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<RatFun>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape("matrix dimensions must be positive".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(FtMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        FtMatrix {
            rows,
            cols,
            entries: vec![RatFun::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = FtMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, RatFun::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFun>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::Shape("ragged rows".into()));
        }
        FtMatrix::new(n, m, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFun {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFun) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RatFun] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> FtMatrix {
        let mut t = FtMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Largest `deg_t` over the entries.
    pub fn deg_t(&self) -> Degree {
        self.entries.iter().map(RatFun::deg_t).max().unwrap_or(Degree::NegInf)
    }

    pub fn mul_vec(&self, x: &[RatFun]) -> Result<Vec<RatFun>> {
        if x.len() != self.cols {
            return Err(Error::Shape(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(RatFun::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    pub fn mul(&self, rhs: &FtMatrix) -> Result<FtMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape("inner dimensions differ".into()));
        }
        let mut out = FtMatrix::zeros(self.rows, rhs.cols);
        for j in 0..rhs.cols {
            let col: Vec<RatFun> = (0..rhs.rows).map(|k| rhs.get(k, j).clone()).collect();
            for (i, v) in self.mul_vec(&col)?.into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        Ok(out)
    }
}

impl std::fmt::Debug for FtMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FtMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Result of [`solve`]: a particular solution with free variables set to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub consistent: bool,
    pub solution: Option<Vec<RatFun>>,
    pub pivot_columns: Vec<usize>,
}

/// Scales a row of rational functions into `Z[t]` without changing its
/// solution set.
fn integer_row(row: &[RatFun]) -> Vec<IntPoly> {
    let den = row
        .iter()
        .filter(|c| !c.is_zero())
        .fold(TPoly::one(), |acc, c| acc.lcm(c.den()));
    let polys: Vec<TPoly> = row
        .iter()
        .map(|c| {
            if c.is_zero() {
                TPoly::zero()
            } else if den.is_one() {
                c.num().clone()
            } else {
                c.num() * &den.exact_div(c.den())
            }
        })
        .collect();
    let scale = polys
        .iter()
        .fold(BigInt::one(), |acc, p| acc.lcm(&p.denominator_lcm()));
    polys
        .iter()
        .map(|p| IntPoly::new(p.to_integer_coeffs(&scale)))
        .collect()
}

struct Echelon {
    rows: Vec<Vec<IntPoly>>,
    /// Pivot column of row `k`, for the first `rank` rows.
    pivots: Vec<usize>,
}

/// Fraction-free forward elimination on the first `ncols` columns; any
/// further columns (a right-hand side) are carried along.
fn eliminate(mut a: Vec<Vec<IntPoly>>, ncols: usize) -> Echelon {
    let m = a.len();
    let width = a.first().map_or(0, Vec::len);
    let mut used = vec![false; ncols];
    let mut pivots = Vec::new();
    let mut prev = IntPoly::one();
    for k in 0..m.min(ncols) {
        // smallest t-degree; ties go to the leftmost column, then the topmost row
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, e) in row.iter().enumerate().take(ncols) {
                if used[j] || e.is_zero() {
                    continue;
                }
                let key = (e.degree(), j, i);
                if best.is_none_or(|b| key < b) {
                    best = Some(key);
                }
            }
        }
        let Some((_, pc, pr)) = best else {
            break;
        };
        a.swap(k, pr);
        used[pc] = true;
        pivots.push(pc);
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let p = &pivot_row[pc];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[pc]);
            for l in 0..width {
                if l == pc || (l < ncols && used[l]) {
                    continue;
                }
                let updated = if factor.is_zero() {
                    if row[l].is_zero() {
                        continue;
                    }
                    row[l].mul(p)
                } else {
                    row[l].cross(p, &factor, &pivot_row[l])
                };
                row[l] = if prev.is_one() {
                    updated
                } else {
                    updated.div_exact(&prev)
                };
            }
        }
        prev = p.clone();
    }
    Echelon { rows: a, pivots }
}

/// Solves `M·x = b` exactly. Free variables are set to zero.
pub fn solve(m: &FtMatrix, b: &[RatFun]) -> Result<SolveOutcome> {
    if b.len() != m.rows {
        return Err(Error::Shape(format!(
            "right-hand side of length {} for {} equations",
            b.len(),
            m.rows
        )));
    }
    let aug: Vec<Vec<IntPoly>> = (0..m.rows)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.push(b[i].clone());
            integer_row(&row)
        })
        .collect();
    let ech = eliminate(aug, m.cols);
    let rank = ech.pivots.len();
    let rhs = m.cols;
    let consistent = ech.rows[rank..].iter().all(|r| r[rhs].is_zero());
    if !consistent {
        return Ok(SolveOutcome {
            consistent: false,
            solution: None,
            pivot_columns: ech.pivots,
        });
    }
    let mut x = vec![RatFun::zero(); m.cols];
    if rank > 0 {
        let det = ech.rows[rank - 1][ech.pivots[rank - 1]].clone();
        // scaled unknowns det·x, polynomial by Cramer's rule
        let mut scaled: Vec<IntPoly> = vec![IntPoly::default(); rank];
        for k in (0..rank).rev() {
            let row = &ech.rows[k];
            let mut acc = det.mul(&row[rhs]);
            for l in k + 1..rank {
                let c = &row[ech.pivots[l]];
                if !c.is_zero() && !scaled[l].is_zero() {
                    acc = acc.cross(&IntPoly::one(), c, &scaled[l]);
                }
            }
            scaled[k] = acc.div_exact(&row[ech.pivots[k]]);
        }
        let den = TPoly::from_integer_coeffs(det.0);
        for (k, s) in scaled.into_iter().enumerate() {
            x[ech.pivots[k]] = RatFun::new(TPoly::from_integer_coeffs(s.0), den.clone());
        }
    }
    Ok(SolveOutcome {
        consistent: true,
        solution: Some(x),
        pivot_columns: ech.pivots,
    })
}

/// Rank over `Q(t)`.
pub fn rank(m: &FtMatrix) -> usize {
    let a: Vec<Vec<IntPoly>> = (0..m.rows).map(|i| integer_row(m.row(i))).collect();
    eliminate(a, m.cols).pivots.len()
}
