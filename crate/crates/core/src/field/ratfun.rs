use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{BigRat, Degree, Derivation, TPoly};
use crate::error::{Error, Result};

/// Element of `Q(t)` in canonical form.
///
/// `num/den` with `gcd(num, den) = 1`, `den` monic, and zero stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: TPoly,
    den: TPoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl RatFun {
    /// Reduces `num/den`. Panics if `den` is zero.
    pub fn new(num: TPoly, den: TPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFun::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.lc();
        if lc.is_one() {
            RatFun { num, den }
        } else {
            let inv = lc.recip();
            RatFun {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: TPoly) -> Self {
        RatFun {
            num: p,
            den: TPoly::one(),
        }
    }

    pub fn constant(c: BigRat) -> Self {
        RatFun::from_poly(TPoly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        RatFun::constant(BigRat::from_integer(c.into()))
    }

    pub fn t() -> Self {
        RatFun::from_poly(TPoly::t())
    }

    pub fn zero() -> Self {
        RatFun::from_poly(TPoly::zero())
    }

    pub fn one() -> Self {
        RatFun::from_poly(TPoly::one())
    }

    pub fn num(&self) -> &TPoly {
        &self.num
    }

    pub fn den(&self) -> &TPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `max(deg num, deg den)`, or `-∞` for zero.
    pub fn deg_t(&self) -> Degree {
        if self.is_zero() {
            return Degree::NegInf;
        }
        self.num.deg().max(self.den.deg())
    }

    pub fn inv(&self) -> Result<RatFun> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lc = self.num.lc().recip();
        Ok(RatFun {
            num: self.den.scale(&lc),
            den: self.num.scale(&lc),
        })
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<RatFun> {
        Ok(self * &rhs.inv()?)
    }

    pub fn arith(&self, op: ArithOp, rhs: &RatFun) -> Result<RatFun> {
        match op {
            ArithOp::Add => Ok(self + rhs),
            ArithOp::Sub => Ok(self - rhs),
            ArithOp::Mul => Ok(self * rhs),
            ArithOp::Div => self.checked_div(rhs),
        }
    }

    pub fn scale(&self, c: &BigRat) -> RatFun {
        if c.is_zero() {
            return RatFun::zero();
        }
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// `δ(self)`, extended to quotients by the quotient rule.
    pub fn derivative(&self, d: Derivation) -> RatFun {
        if self.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() {
            return RatFun::from_poly(d.apply_poly(&self.num));
        }
        let top = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let top = match d {
            Derivation::Standard => top,
            Derivation::Euler => top.shift_up(1),
        };
        RatFun::new(top, &self.den * &self.den)
    }

    fn add_signed(&self, rhs: &RatFun, negate: bool) -> RatFun {
        let c = if negate { -&rhs.num } else { rhs.num.clone() };
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return RatFun {
                num: c,
                den: rhs.den.clone(),
            };
        }
        if self.den == rhs.den {
            let num = &self.num + &c;
            if self.den.is_one() {
                return RatFun::from_poly(num);
            }
            return RatFun::new(num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&c * &self.den);
            return RatFun {
                num,
                den: &self.den * &rhs.den,
            };
        }
        let b = self.den.exact_div(&g);
        let d = rhs.den.exact_div(&g);
        let num = &(&self.num * &d) + &(&c * &b);
        let den = &b * &rhs.den;
        if num.is_zero() {
            return RatFun::zero();
        }
        let h = num.gcd(&g);
        if h.is_one() {
            RatFun { num, den }
        } else {
            RatFun {
                num: num.exact_div(&h),
                den: den.exact_div(&h),
            }
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl Add<&RatFun> for &RatFun {
    type Output = RatFun;

    fn add(self, rhs: &RatFun) -> RatFun {
        self.add_signed(rhs, false)
    }
}

impl Sub<&RatFun> for &RatFun {
    type Output = RatFun;

    fn sub(self, rhs: &RatFun) -> RatFun {
        self.add_signed(rhs, true)
    }
}

impl Mul<&RatFun> for &RatFun {
    type Output = RatFun;

    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFun::from_poly(&self.num * &rhs.num);
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.exact_div(&g1), rhs.den.exact_div(&g1))
        };
        let (c, b) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.exact_div(&g2), self.den.exact_div(&g2))
        };
        RatFun {
            num: &a * &c,
            den: &b * &d,
        }
    }
}

impl Neg for &RatFun {
    type Output = RatFun;

    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;

    fn neg(self) -> RatFun {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<RatFun> for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: RatFun) -> RatFun {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $method(self, rhs: &RatFun) -> RatFun {
                (&self).$method(rhs)
            }
        }
        impl $tr<RatFun> for &RatFun {
            type Output = RatFun;
            fn $method(self, rhs: RatFun) -> RatFun {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Zero for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }

    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
}

impl One for RatFun {
    fn one() -> Self {
        RatFun::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn poly(c: &[i64]) -> TPoly {
        TPoly::from_ints(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFun {
        RatFun::new(poly(n), poly(d))
    }

    #[test]
    fn arithmetic_examples() {
        let inv_t = rf(&[1], &[0, 1]);
        assert_eq!(&inv_t + &inv_t, rf(&[2], &[0, 1]));
        let a = rf(&[1, 1], &[0, 1]);
        let b = rf(&[0, 1], &[1, 1]);
        assert!((&a * &b).is_one());
        let c = RatFun::new(poly(&[2, 2]), poly(&[2]));
        assert_eq!(&c + &RatFun::zero(), RatFun::from_poly(poly(&[1, 1])));
        assert_eq!(c.den(), &TPoly::one());
    }

    #[test]
    fn division_by_zero_is_reported() {
        let a = RatFun::t();
        assert_eq!(a.arith(ArithOp::Div, &RatFun::zero()), Err(Error::DivisionByZero));
        assert_eq!(
            a.arith(ArithOp::Div, &RatFun::t()).unwrap(),
            RatFun::one()
        );
    }

    #[test]
    fn derivative_examples() {
        let inv_t = rf(&[1], &[0, 1]);
        assert_eq!(inv_t.derivative(Derivation::Standard), rf(&[-1], &[0, 0, 1]));
        let t2 = RatFun::from_poly(poly(&[0, 0, 1]));
        assert_eq!(t2.derivative(Derivation::Standard), RatFun::from_poly(poly(&[0, 2])));
        assert_eq!(t2.derivative(Derivation::Euler), RatFun::from_poly(poly(&[0, 0, 2])));
        // euler on a quotient: t·(1/t)' = -1/t
        assert_eq!(inv_t.derivative(Derivation::Euler), rf(&[-1], &[0, 1]));
    }

    #[test]
    fn deg_t_examples() {
        assert_eq!(rf(&[1, 0, 1], &[0, 1]).deg_t(), Degree::Finite(2));
        assert_eq!(RatFun::from_int(5).deg_t(), Degree::Finite(0));
        assert_eq!(RatFun::zero().deg_t(), Degree::NegInf);
    }

    #[test]
    fn canonical_denominator_is_monic() {
        let a = RatFun::new(poly(&[3]), poly(&[0, 6]));
        assert_eq!(a.num(), &TPoly::constant(rat(1, 2)));
        assert_eq!(a.den(), &poly(&[0, 1]));
        let z = RatFun::new(TPoly::zero(), poly(&[1, 7]));
        assert_eq!(z.den(), &TPoly::one());
    }
}
