//! Hermite form by pairwise Euclidean elimination.
//!
//! Column by column, the pivot row is combined with every other row through
//! the 2×2 unimodular transform built from the GCRD and LCLM cofactors, which
//! zeroes the column below the pivot. Diagonals are then made monic and each
//! entry above the diagonal is reduced modulo the diagonal entry below it.
//! The transform `U` is obtained by replaying every row operation on an
//! identity matrix.

use std::collections::BTreeSet;

use super::{HermiteResult, OreMatrix};
use crate::error::{Error, Result};
use crate::ore::OrePoly;

/// Builds `W` with `W·(a, b)ᵀ = (g, 0)ᵀ`, `g = gcrd(a, b)`.
///
/// The first row holds the Euclidean cofactors, the second row the LCLM
/// cofactors `(s, tt)` with `s·a = -tt·b`.
pub fn unimodular_2x2(a: &OrePoly, b: &OrePoly) -> Result<(OreMatrix, OrePoly)> {
    a.assert_same_derivation(b);
    let dv = a.derivation();
    let zero = OrePoly::zero(dv);
    let one = OrePoly::one(dv);
    let w = |e: [OrePoly; 4]| OreMatrix::new(2, 2, e.to_vec());
    match (a.is_zero(), b.is_zero()) {
        (true, true) => Err(Error::ZeroOperand),
        (false, true) => {
            let inv = OrePoly::constant(a.lc().inv()?, dv);
            Ok((w([inv, zero.clone(), zero, one])?, a.monic()))
        }
        (true, false) => {
            let inv = OrePoly::constant(b.lc().inv()?, dv);
            Ok((w([zero.clone(), inv, one, zero])?, b.monic()))
        }
        (false, false) => {
            let (gc, s, tt) = a.gcrd_lclm(b)?;
            Ok((w([gc.u, gc.v, s, tt])?, gc.g))
        }
    }
}

/// Computes `(U, H)` with `U·A = H`, `U` unimodular, `H` in Hermite form.
pub fn hermite_elimination(a: &OreMatrix) -> Result<HermiteResult> {
    if !a.is_square() {
        return Err(Error::Shape(format!(
            "Hermite form needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut h = a.clone();
    let mut u = OreMatrix::identity(n, a.derivation());

    let mut pivot_row = 0;
    for col in 0..n {
        if pivot_row == n {
            break;
        }
        let pivot = (pivot_row..n)
            .filter(|&i| !h.get(i, col).is_zero())
            .min_by_key(|&i| {
                let (dd, dt) = h.get(i, col).degrees();
                (dd, dt, i)
            });
        let Some(p) = pivot else {
            continue;
        };
        h.swap_rows(pivot_row, p);
        u.swap_rows(pivot_row, p);
        for i in pivot_row + 1..n {
            if h.get(i, col).is_zero() {
                continue;
            }
            let (w, _) = unimodular_2x2(h.get(pivot_row, col), h.get(i, col))?;
            h.combine_rows(pivot_row, i, &w);
            u.combine_rows(pivot_row, i, &w);
            debug_assert!(h.get(i, col).is_zero());
        }
        pivot_row += 1;
    }

    let rank_ok = pivot_row == n && (0..n).all(|k| !h.get(k, k).is_zero());
    if !rank_ok {
        // rows pivot_row.. of h vanish; the matching rows of u are left relations
        let u = &u;
        let dependent: BTreeSet<usize> = (pivot_row..n)
            .flat_map(|i| (0..n).filter(move |&j| !u.get(i, j).is_zero()))
            .collect();
        return Err(Error::RankDeficient {
            dependent_rows: dependent.into_iter().collect(),
        });
    }

    for k in 0..n {
        let lc = h.get(k, k).lc();
        if !lc.is_one() {
            let inv = lc.inv()?;
            h.scale_row(k, &inv);
            u.scale_row(k, &inv);
        }
    }
    let (h, u) = off_diagonal_reduce(h, u)?;
    Ok(HermiteResult::from_parts(u, h))
}

/// Reduces every entry above the diagonal modulo the diagonal entry below it
/// (right division), mirroring the row operations into `u`.
pub fn off_diagonal_reduce(mut h: OreMatrix, mut u: OreMatrix) -> Result<(OreMatrix, OreMatrix)> {
    if !h.is_square() || u.rows() != h.rows() {
        return Err(Error::Shape("off-diagonal reduction needs square, matching matrices".into()));
    }
    let n = h.rows();
    for j in 1..n {
        let diag = h.get(j, j).clone();
        if diag.is_zero() {
            return Err(Error::DivisionByZero);
        }
        for i in 0..j {
            let (q, _) = h.get(i, j).right_divrem(&diag)?;
            if !q.is_zero() {
                let neg = -q;
                h.add_row_multiple(i, j, &neg);
                u.add_row_multiple(i, j, &neg);
            }
        }
    }
    Ok((h, u))
}

/// Upper triangular, monic diagonal, and every entry above the diagonal of
/// lower `D`-degree than the diagonal entry in its column.
pub fn is_hermite(h: &OreMatrix) -> bool {
    if !h.is_square() {
        return false;
    }
    let n = h.rows();
    for i in 0..n {
        if !h.get(i, i).is_monic() {
            return false;
        }
        for j in 0..i {
            if !h.get(i, j).is_zero() {
                return false;
            }
        }
        for j in i + 1..n {
            if h.get(i, j).deg_d() >= h.get(j, j).deg_d() {
                return false;
            }
        }
    }
    true
}

/// Two-sided inverse of a unimodular matrix. A square matrix is unimodular
/// exactly when its Hermite form is the identity; the accumulated transform
/// is then the inverse.
pub fn inverse_unimodular(u: &OreMatrix) -> Result<OreMatrix> {
    match hermite_elimination(u) {
        Ok(res) if res.h.is_identity() => Ok(res.u),
        Ok(_) | Err(Error::RankDeficient { .. }) => Err(Error::NotUnimodular),
        Err(e) => Err(e),
    }
}
