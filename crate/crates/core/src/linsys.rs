//! Hermite form through linear systems over `Q(t)`.
//!
//! For a degree profile `(d_1, ..., d_n)` the matrix equation `P·A = G`, with
//! `deg_D P ≤ β = (n-1)d + max d_i` and `G` upper triangular with monic
//! diagonal entries of degree `d_i` and reduced off-diagonal entries, is a
//! linear system over `Q(t)` in the coefficients of `P` and `G`. Write `P_ij
//! = Σ_ℓ p_ijℓ D^ℓ`; then row `(j, ℓ)` of the coefficient matrix `Â` holds
//! the `D`-coefficients of `D^ℓ·A_jk` in column block `k`, and row `i` of
//! `P·A = G` reads `p̂_i·Â = ĝ_i`.
//!
//! The system is solvable exactly when `d_i ≥ h_i` for all `i`, where `h_i`
//! are the diagonal degrees of the Hermite form, so each `h_i` is found by
//! binary search with the other diagonals held at the cap `n·d`. Solving at
//! `(h_1, ..., h_n)` yields the Hermite form and its unique transform.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Degree, RatFun, TPoly};
use crate::ftlinalg::{self, FtMatrix};
use crate::matrix::{is_hermite, DegreeProfile, HermiteResult, OreMatrix};
use crate::ore::OrePoly;

/// Multiplies each row on the left by the lcm of the denominators in that
/// row. Returns the cleared matrix and the row multipliers.
pub fn clear_denominators_with_scalars(a: &OreMatrix) -> (OreMatrix, Vec<TPoly>) {
    let mut out = a.clone();
    let mut scalars = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        let lcm = a
            .row(i)
            .iter()
            .flat_map(|e| e.coeffs().iter())
            .filter(|c| !c.is_zero())
            .fold(TPoly::one(), |acc, c| acc.lcm(c.den()));
        if !lcm.is_one() {
            out.scale_row(i, &RatFun::from_poly(lcm.clone()));
        }
        scalars.push(lcm);
    }
    (out, scalars)
}

/// Row-wise denominator clearing; the row scaling is unimodular, so the
/// Hermite form is unchanged.
pub fn clear_denominators(a: &OreMatrix) -> OreMatrix {
    clear_denominators_with_scalars(a).0
}

/// What fills slot `(k, c)` of row `i` of `Ĝ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GSlot {
    /// Unknown coefficient with its variable index in the global layout.
    Unknown(usize),
    /// Forced to zero.
    Zero,
    /// The monic leading coefficient of a diagonal entry.
    One,
}

/// Variable layout: `P̂` unknowns first, row-major by `(i, j)` with
/// ascending powers of `D`, then the unknown `Ĝ` coefficients by `(i, k, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownLayout {
    n: usize,
    beta: usize,
    mu: usize,
    slots: Vec<GSlot>,
    g_unknowns: usize,
}

impl UnknownLayout {
    fn new(n: usize, beta: usize, mu: usize, profile: &DegreeProfile) -> Self {
        let mut slots = Vec::with_capacity(n * n * (mu + 1));
        let mut next = n * n * (beta + 1);
        for i in 0..n {
            for k in 0..n {
                for c in 0..=mu {
                    let slot = if k < i {
                        GSlot::Zero
                    } else if k == i && c == profile.0[i] {
                        GSlot::One
                    } else if c < profile.0[k] {
                        next += 1;
                        GSlot::Unknown(next - 1)
                    } else {
                        GSlot::Zero
                    };
                    slots.push(slot);
                }
            }
        }
        UnknownLayout {
            n,
            beta,
            mu,
            slots,
            g_unknowns: next - n * n * (beta + 1),
        }
    }

    /// Variable index of the coefficient of `D^l` in `P_ij`.
    pub fn p_var(&self, i: usize, j: usize, l: usize) -> usize {
        assert!(l <= self.beta);
        (i * self.n + j) * (self.beta + 1) + l
    }

    /// Slot `(k, c)` in row `i` of `Ĝ`, i.e. the coefficient of `D^c` in `G_ik`.
    pub fn g_slot(&self, i: usize, k: usize, c: usize) -> GSlot {
        self.slots[(i * self.n + k) * (self.mu + 1) + c]
    }

    pub fn p_unknowns(&self) -> usize {
        self.n * self.n * (self.beta + 1)
    }

    pub fn g_unknowns(&self) -> usize {
        self.g_unknowns
    }

    pub fn total_unknowns(&self) -> usize {
        self.p_unknowns() + self.g_unknowns
    }
}

/// The linear system `P̂·Â = Ĝ` for one degree profile.
#[derive(Debug, Clone)]
pub struct EncodedSystem {
    pub ahat: FtMatrix,
    pub layout: UnknownLayout,
    pub profile: DegreeProfile,
    pub beta: usize,
    pub d: usize,
    n: usize,
}

impl EncodedSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mu(&self) -> usize {
        self.beta + self.d
    }

    /// `(n(β+1), n(β+d+1))`
    pub fn ahat_shape(&self) -> (usize, usize) {
        (self.ahat.rows(), self.ahat.cols())
    }

    /// Scalar equations in the full system (all rows of `P`).
    pub fn equation_count(&self) -> usize {
        self.n * self.ahat.cols()
    }

    /// The equations of row `i` whose `Ĝ` slot is pinned, as `M·p̂_iᵀ = b`.
    /// Equations at unknown `Ĝ` slots only define that unknown and drop out.
    pub fn pinned_system(&self, i: usize) -> (FtMatrix, Vec<RatFun>) {
        let mu = self.mu();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for k in 0..self.n {
            for c in 0..=mu {
                let value = match self.layout.g_slot(i, k, c) {
                    GSlot::Unknown(_) => continue,
                    GSlot::Zero => RatFun::zero(),
                    GSlot::One => RatFun::one(),
                };
                let col = k * (mu + 1) + c;
                rows.push((0..self.ahat.rows()).map(|r| self.ahat.get(r, col).clone()).collect());
                rhs.push(value);
            }
        }
        (FtMatrix::from_rows(rows).expect("nonempty system"), rhs)
    }

    /// Solves for row `i` of `P̂`; `None` when that row is inconsistent.
    pub fn solve_row(&self, i: usize) -> Result<Option<Vec<RatFun>>> {
        let (m, b) = self.pinned_system(i);
        Ok(ftlinalg::solve(&m, &b)?.solution)
    }

    /// Rebuilds `P` from solved rows of `P̂`.
    pub fn decode_p(&self, rows: &[Vec<RatFun>], derivation: crate::field::Derivation) -> OreMatrix {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            for j in 0..n {
                let start = j * (self.beta + 1);
                entries.push(OrePoly::new(row[start..=start + self.beta].to_vec(), derivation));
            }
        }
        OreMatrix::new(n, n, entries).expect("square layout")
    }

    /// Checks that `G` has the shape the profile pins: zero below the
    /// diagonal, monic diagonal entries of the prescribed degree, and zero
    /// coefficients at every other pinned slot.
    pub fn matches_pins(&self, g: &OreMatrix) -> bool {
        let mu = self.mu();
        (0..self.n).all(|i| {
            (0..self.n).all(|k| {
                let e = g.get(i, k);
                if !e.deg_d().at_most(mu) {
                    return false;
                }
                (0..=mu).all(|c| match self.layout.g_slot(i, k, c) {
                    GSlot::Unknown(_) => true,
                    GSlot::Zero => e.coeff(c).is_zero(),
                    GSlot::One => e.coeff(c).is_one(),
                })
            })
        })
    }
}

fn require_square(a: &OreMatrix) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(Error::Shape(format!(
            "Hermite form needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )))
    }
}

fn require_polynomial(a: &OreMatrix) -> Result<()> {
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if !a.get(i, j).is_polynomial() {
                return Err(Error::NotCleared { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// Assembles `Â` and the `Ĝ` pattern for `profile`.
pub fn build_system(a: &OreMatrix, profile: &DegreeProfile) -> Result<EncodedSystem> {
    require_square(a)?;
    require_polynomial(a)?;
    let n = a.rows();
    if profile.len() != n {
        return Err(Error::Shape(format!(
            "degree profile of length {} for a {n}x{n} matrix",
            profile.len()
        )));
    }
    let d = a.deg_d().or_zero();
    let beta = (n - 1) * d + profile.max();
    let mu = beta + d;
    let mut ahat = FtMatrix::zeros(n * (beta + 1), n * (mu + 1));
    for j in 0..n {
        for k in 0..n {
            let entry = a.get(j, k);
            if entry.is_zero() {
                continue;
            }
            let shifts = std::iter::once(entry.clone()).chain(entry.shift_powers(beta));
            for (l, shifted) in shifts.enumerate() {
                for (c, coeff) in shifted.coeffs().iter().enumerate() {
                    if !coeff.is_zero() {
                        ahat.set(j * (beta + 1) + l, k * (mu + 1) + c, coeff.clone());
                    }
                }
            }
        }
    }
    Ok(EncodedSystem {
        ahat,
        layout: UnknownLayout::new(n, beta, mu, profile),
        profile: profile.clone(),
        beta,
        d,
        n,
    })
}

fn rows_consistent(sys: &EncodedSystem, rows: impl IntoIterator<Item = usize>) -> Result<bool> {
    for i in rows {
        if sys.solve_row(i)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `P·A = G` has a solution for `profile`.
pub fn probe_consistent(a: &OreMatrix, profile: &DegreeProfile) -> Result<bool> {
    let sys = build_system(a, profile)?;
    rows_consistent(&sys, 0..a.rows())
}

/// One consistency probe made during the degree search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeRecord {
    pub profile: DegreeProfile,
    pub consistent: bool,
    pub ahat_shape: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinsysStats {
    pub probes: Vec<ProbeRecord>,
    /// `Â` shape of the final solve at the Hermite degrees.
    pub final_ahat_shape: (usize, usize),
    pub final_beta: usize,
    /// Unknowns and equations of the final system (all rows of `P`).
    pub final_unknowns: usize,
    pub final_equations: usize,
    /// Largest `deg_t` among the solved `P̂` coefficients.
    pub max_solution_deg_t: Degree,
    /// `m·e` with `m = n(β+1)` unknowns per row and `e = deg_t Â`.
    pub solution_deg_t_bound: usize,
}

impl LinsysStats {
    pub fn probe_count(&self) -> usize {
        self.probes.len()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct LinsysOptions {
    /// Run the per-diagonal searches on the rayon pool.
    pub parallel: bool,
}

/// Probe budget `n·(⌈log₂(nd+1)⌉ + 1)`.
pub fn probe_budget(n: usize, d: usize) -> usize {
    let range = n * d + 1;
    let ceil_log2 = usize::BITS as usize - (range - 1).leading_zeros() as usize;
    n * (ceil_log2 + 1)
}

/// Diagonal degrees of the Hermite form of a cleared, full-rank matrix.
pub fn search_degrees(a: &OreMatrix) -> Result<DegreeProfile> {
    Ok(search_degrees_with(a, LinsysOptions::default())?.0)
}

pub fn search_degrees_with(
    a: &OreMatrix,
    opts: LinsysOptions,
) -> Result<(DegreeProfile, Vec<ProbeRecord>)> {
    require_square(a)?;
    require_polynomial(a)?;
    let n = a.rows();
    let cap = n * a.deg_d().or_zero();

    let top = DegreeProfile::uniform(n, cap);
    let sys = build_system(a, &top)?;
    let top_ok = rows_consistent(&sys, 0..n)?;
    let mut log = vec![ProbeRecord {
        profile: top,
        consistent: top_ok,
        ahat_shape: sys.ahat_shape(),
    }];
    if !top_ok {
        return Err(Error::RankDeficient {
            dependent_rows: Vec::new(),
        });
    }

    // Rows below i see the same system as at the cap, which was just solved.
    let search = |i: usize| -> Result<(usize, Vec<ProbeRecord>)> {
        let (mut lo, mut hi) = (0, cap);
        let mut records = Vec::new();
        while lo < hi {
            let mid = (lo + hi) / 2;
            let mut profile = DegreeProfile::uniform(n, cap);
            profile.0[i] = mid;
            let sys = build_system(a, &profile)?;
            let ok = rows_consistent(&sys, 0..=i)?;
            records.push(ProbeRecord {
                profile,
                consistent: ok,
                ahat_shape: sys.ahat_shape(),
            });
            if ok {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        Ok((lo, records))
    };

    let per_diag: Vec<(usize, Vec<ProbeRecord>)> = if opts.parallel {
        (0..n).into_par_iter().map(search).collect::<Result<_>>()?
    } else {
        (0..n).map(search).collect::<Result<_>>()?
    };
    let mut degs = Vec::with_capacity(n);
    for (h, records) in per_diag {
        degs.push(h);
        log.extend(records);
    }
    Ok((DegreeProfile(degs), log))
}

/// Hermite form and transform through the linear-system reduction.
pub fn hermite_via_linsys(a: &OreMatrix) -> Result<HermiteResult> {
    Ok(hermite_via_linsys_with(a, LinsysOptions::default())?.0)
}

pub fn hermite_via_linsys_with(
    a: &OreMatrix,
    opts: LinsysOptions,
) -> Result<(HermiteResult, LinsysStats)> {
    require_square(a)?;
    let n = a.rows();
    let dv = a.derivation();
    let (cleared, scalars) = clear_denominators_with_scalars(a);
    let (profile, probes) = search_degrees_with(&cleared, opts)?;

    let sys = build_system(&cleared, &profile)?;
    let solve_one = |i: usize| -> Result<Vec<RatFun>> {
        sys.solve_row(i)?.ok_or_else(|| {
            Error::Verification(format!("row {i} inconsistent at the discovered degrees"))
        })
    };
    let rows: Vec<Vec<RatFun>> = if opts.parallel {
        (0..n).into_par_iter().map(solve_one).collect::<Result<_>>()?
    } else {
        (0..n).map(solve_one).collect::<Result<_>>()?
    };
    let max_solution_deg_t = rows
        .iter()
        .flatten()
        .map(RatFun::deg_t)
        .max()
        .unwrap_or(Degree::NegInf);

    let p = sys.decode_p(&rows, dv);
    let g = p.mul(&cleared)?;
    if !sys.matches_pins(&g) {
        return Err(Error::Verification("decoded G violates the pinned pattern".into()));
    }
    if !is_hermite(&g) {
        return Err(Error::Verification("decoded G is not in Hermite form".into()));
    }
    let scale = OreMatrix::diagonal(
        scalars
            .into_iter()
            .map(|s| OrePoly::constant(RatFun::from_poly(s), dv))
            .collect(),
    );
    let u = p.mul(&scale)?;
    if u.mul(a)? != g {
        return Err(Error::Verification("U·A differs from H".into()));
    }

    let e = sys.ahat.deg_t().or_zero();
    let stats = LinsysStats {
        probes,
        final_ahat_shape: sys.ahat_shape(),
        final_beta: sys.beta,
        final_unknowns: sys.layout.total_unknowns(),
        final_equations: sys.equation_count(),
        max_solution_deg_t,
        solution_deg_t_bound: sys.ahat.rows() * e,
    };
    Ok((HermiteResult::from_parts(u, g), stats))
}
