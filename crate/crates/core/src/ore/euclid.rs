//! Right division and the right Euclidean algorithm.

use super::OrePoly;
use crate::error::{Error, Result};
use crate::field::Degree;

/// Monic greatest common right divisor `g` with cofactors: `u·f + v·h = g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcrdResult {
    pub g: OrePoly,
    pub u: OrePoly,
    pub v: OrePoly,
}

impl OrePoly {
    /// Right division: `self = q·divisor + r` with `deg_D r < deg_D divisor`.
    pub fn right_divrem(&self, divisor: &OrePoly) -> Result<(OrePoly, OrePoly)> {
        self.assert_same_derivation(divisor);
        let Degree::Finite(dg) = divisor.deg_d() else {
            return Err(Error::DivisionByZero);
        };
        let mut rem = self.clone();
        let Degree::Finite(df) = rem.deg_d() else {
            return Ok((OrePoly::zero(self.derivation), rem));
        };
        if df < dg {
            return Ok((OrePoly::zero(self.derivation), rem));
        }
        let inv_lc = divisor.lc().inv()?;
        let mut shifted = Vec::with_capacity(df - dg + 1);
        shifted.push(divisor.clone());
        shifted.extend(divisor.shift_powers(df - dg));
        let mut quot = vec![crate::field::RatFun::zero(); df - dg + 1];
        while let Degree::Finite(dr) = rem.deg_d() {
            if dr < dg {
                break;
            }
            let k = dr - dg;
            let c = &rem.lc() * &inv_lc;
            rem = &rem - &shifted[k].scale_left(&c);
            debug_assert!(rem.deg_d() < Degree::Finite(dr));
            quot[k] = c;
        }
        Ok((OrePoly::new(quot, self.derivation), rem))
    }

    /// Extended right Euclidean algorithm. The returned `g` is monic (or zero
    /// when both inputs vanish) and `u·self + v·other = g`.
    pub fn gcrd_extended(&self, other: &OrePoly) -> GcrdResult {
        let (g, u, v, _, _) = self.euclid(other);
        if g.is_zero() {
            return GcrdResult { g, u, v };
        }
        let inv = g.lc().inv().expect("nonzero leading coefficient");
        GcrdResult {
            g: g.scale_left(&inv),
            u: u.scale_left(&inv),
            v: v.scale_left(&inv),
        }
    }

    /// Monic greatest common right divisor.
    pub fn gcrd(&self, other: &OrePoly) -> OrePoly {
        self.gcrd_extended(other).g
    }

    /// Least common left multiple: returns `(l, s, tt)` with
    /// `l = s·self = -tt·other`, `l` monic.
    pub fn lclm(&self, other: &OrePoly) -> Result<(OrePoly, OrePoly, OrePoly)> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroOperand);
        }
        let (_, _, _, s, tt) = self.euclid(other);
        let l = s.mul(self);
        let inv = l.lc().inv()?;
        Ok((l.scale_left(&inv), s.scale_left(&inv), tt.scale_left(&inv)))
    }

    /// Gcrd with cofactors and the lclm cofactors from a single remainder
    /// sequence: `u·self + v·other = g` and `s·self = -tt·other = l`.
    pub fn gcrd_lclm(&self, other: &OrePoly) -> Result<(GcrdResult, OrePoly, OrePoly)> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroOperand);
        }
        let (g, u, v, s, tt) = self.euclid(other);
        let ginv = g.lc().inv()?;
        let linv = (&s.lc() * &self.lc()).inv()?;
        let gc = GcrdResult {
            g: g.scale_left(&ginv),
            u: u.scale_left(&ginv),
            v: v.scale_left(&ginv),
        };
        Ok((gc, s.scale_left(&linv), tt.scale_left(&linv)))
    }

    /// Runs the remainder sequence to completion and returns the last nonzero
    /// remainder with its cofactors, plus the cofactors annihilating both inputs.
    fn euclid(&self, other: &OrePoly) -> (OrePoly, OrePoly, OrePoly, OrePoly, OrePoly) {
        self.assert_same_derivation(other);
        let dv = self.derivation;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (OrePoly::one(dv), OrePoly::zero(dv));
        let (mut v0, mut v1) = (OrePoly::zero(dv), OrePoly::one(dv));
        while !r1.is_zero() {
            let (q, r) = r0.right_divrem(&r1).expect("nonzero divisor");
            let u2 = &u0 - &q.mul(&u1);
            let v2 = &v0 - &q.mul(&v1);
            r0 = std::mem::replace(&mut r1, r);
            u0 = std::mem::replace(&mut u1, u2);
            v0 = std::mem::replace(&mut v1, v2);
        }
        (r0, u0, v0, u1, v1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Derivation, RatFun, TPoly};

    const STD: Derivation = Derivation::Standard;

    fn c(n: &[i64]) -> RatFun {
        RatFun::from_poly(TPoly::from_ints(n))
    }

    fn op(coeffs: Vec<RatFun>) -> OrePoly {
        OrePoly::new(coeffs, STD)
    }

    fn dpow(k: usize) -> OrePoly {
        OrePoly::d_power(k, STD)
    }

    #[test]
    fn divrem_examples() {
        let one = OrePoly::one(STD);
        let (q, r) = (&dpow(1) + &one).right_divrem(&dpow(1)).unwrap();
        assert_eq!((q, r), (one.clone(), one.clone()));

        let f = op(vec![c(&[1, 1]), c(&[0, 0, 3])]);
        let (q, r) = f.right_divrem(&f).unwrap();
        assert!(q.is_one() && r.is_zero());

        // D^2 = ((1/t)D - 1/t^2)·(tD)
        let td = op(vec![c(&[]), c(&[0, 1])]);
        let (q, r) = dpow(2).right_divrem(&td).unwrap();
        let inv_t = RatFun::new(TPoly::one(), TPoly::from_ints(&[0, 1]));
        let inv_t2 = RatFun::new(TPoly::one(), TPoly::from_ints(&[0, 0, 1]));
        assert_eq!(q, op(vec![-inv_t2, inv_t]));
        assert!(r.is_zero());
        assert_eq!(&q * &td, dpow(2));

        assert_eq!(dpow(1).right_divrem(&OrePoly::zero(STD)), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcrd_examples() {
        let res = dpow(2).gcrd_extended(&dpow(1));
        assert_eq!(res.g, dpow(1));
        assert_eq!(&(&res.u * &dpow(2)) + &(&res.v * &dpow(1)), res.g);

        let f = op(vec![c(&[1]), c(&[0, 2])]);
        let res = f.gcrd_extended(&OrePoly::zero(STD));
        assert_eq!(res.g, f.monic());
        assert_eq!(res.u, OrePoly::constant(f.lc().inv().unwrap(), STD));
        assert!(res.v.is_zero());

        // D + t and D: the remainder t is a unit, so g = 1.
        let a = op(vec![c(&[0, 1]), c(&[1])]);
        let res = a.gcrd_extended(&dpow(1));
        assert!(res.g.is_one());
        assert_eq!(&(&res.u * &a) + &(&res.v * &dpow(1)), res.g);

        let zero = OrePoly::zero(STD);
        assert!(zero.gcrd_extended(&zero).g.is_zero());
    }

    #[test]
    fn lclm_examples() {
        let (l, s, tt) = dpow(1).lclm(&dpow(1)).unwrap();
        assert_eq!(l, dpow(1));
        assert_eq!(&s * &dpow(1), l);
        assert_eq!(-(&tt * &dpow(1)), l);

        let f = op(vec![c(&[1]), c(&[0, 2]), c(&[3])]);
        let (l, _, _) = f.lclm(&OrePoly::one(STD)).unwrap();
        assert_eq!(l, f.monic());

        let t = OrePoly::constant(RatFun::t(), STD);
        let (l, s, tt) = dpow(1).lclm(&t).unwrap();
        assert_eq!(l, dpow(1));
        assert_eq!(&s * &dpow(1), l);
        assert_eq!(-(&tt * &t), l);

        assert_eq!(dpow(1).lclm(&OrePoly::zero(STD)), Err(Error::ZeroOperand));
    }
}
