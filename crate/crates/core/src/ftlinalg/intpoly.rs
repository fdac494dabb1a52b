//! Minimal dense `Z[t]` arithmetic for fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        IntPoly(c)
    }

    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn mul(&self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::default();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    /// `self·a - other·b`
    pub fn cross(&self, a: &IntPoly, other: &IntPoly, b: &IntPoly) -> IntPoly {
        let left = self.mul(a);
        let right = other.mul(b);
        let n = left.0.len().max(right.0.len());
        let mut out = left.0;
        out.resize(n, BigInt::zero());
        for (o, r) in out.iter_mut().zip(right.0) {
            *o -= r;
        }
        IntPoly::new(out)
    }

    /// Quotient of a division known to be exact in `Z[t]`.
    pub fn div_exact(&self, divisor: &IntPoly) -> IntPoly {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if divisor.is_one() || self.is_zero() {
            return self.clone();
        }
        let dd = divisor.0.len() - 1;
        let nd = self.0.len() - 1;
        assert!(nd >= dd, "inexact division in Z[t]");
        let lc = &divisor.0[dd];
        let mut rem = self.0.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            debug_assert!(r.is_zero(), "inexact division in Z[t]");
            for (j, c) in divisor.0.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        debug_assert!(rem.iter().all(Zero::is_zero), "inexact division in Z[t]");
        IntPoly::new(quot)
    }
}
