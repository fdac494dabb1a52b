//! Exact arithmetic in `Q[t]` and in the rational function field `Q(t)`.
//!
//! Everything here is exact: coefficients are arbitrary precision rationals,
//! rational functions are kept reduced with a monic denominator so that
//! structural equality coincides with field equality.

mod degree;
mod ratfun;
mod tpoly;
mod zpoly;

pub use degree::Degree;
pub use ratfun::{ArithOp, RatFun};
pub use tpoly::TPoly;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational number used as the base field `F = Q`.
pub type BigRat = BigRational;

/// Shorthand for a small rational constant.
pub fn rat(num: i64, den: i64) -> BigRat {
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

/// The pseudo-derivation `δ` acting on `Q(t)`.
///
/// `Standard` is `d/dt` (so `δ(t) = 1`); `Euler` is `t·d/dt` (so `δ(t) = t`).
/// Both satisfy additivity and the Leibniz rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Derivation {
    #[default]
    Standard,
    Euler,
}

impl Derivation {
    pub fn apply_poly(self, p: &TPoly) -> TPoly {
        match self {
            Derivation::Standard => p.derivative(),
            Derivation::Euler => p.derivative().shift_up(1),
        }
    }

    pub fn apply(self, a: &RatFun) -> RatFun {
        a.derivative(self)
    }

    pub fn name(self) -> &'static str {
        match self {
            Derivation::Standard => "standard",
            Derivation::Euler => "euler",
        }
    }
}
