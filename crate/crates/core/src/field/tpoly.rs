use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{zpoly, BigRat, Degree};

/// Dense univariate polynomial in `t` over `Q`.
///
/// `coeffs[i]` is the coefficient of `t^i`; the last stored coefficient is
/// never zero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    coeffs: Vec<BigRat>,
}

impl TPoly {
    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        TPoly::new(coeffs.iter().map(|&c| BigRat::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TPoly::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        TPoly::new(vec![c])
    }

    /// `c·t^k`
    pub fn monomial(c: BigRat, k: usize) -> Self {
        if c.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![BigRat::zero(); k];
        coeffs.push(c);
        TPoly { coeffs }
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        TPoly::monomial(BigRat::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> Degree {
        self.degree().into()
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> BigRat {
        self.coeffs.last().cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn scale(&self, c: &BigRat) -> TPoly {
        if c.is_zero() {
            return TPoly::zero();
        }
        TPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> TPoly {
        if self.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![BigRat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        TPoly { coeffs }
    }

    pub fn monic(&self) -> TPoly {
        match self.coeffs.last() {
            None => TPoly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn derivative(&self) -> TPoly {
        TPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division; panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &TPoly) -> (TPoly, TPoly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let Some(nd) = self.degree() else {
            return (TPoly::zero(), TPoly::zero());
        };
        if nd < dd {
            return (TPoly::zero(), self.clone());
        }
        let inv_lc = divisor.lc().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRat::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &inv_lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (TPoly::new(quot), TPoly::new(rem))
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, divisor: &TPoly) -> TPoly {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        if divisor.is_unit() {
            return self.scale(&divisor.coeffs[0].recip());
        }
        let (ca, a) = self.primitive();
        let (cb, b) = divisor.primitive();
        let q = zpoly::div_exact(&a, &b).expect("inexact polynomial division");
        TPoly::from_integer_coeffs(q).scale(&(ca / cb))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &TPoly) -> TPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_unit() || other.is_unit() {
            return TPoly::one();
        }
        let g = zpoly::gcd(&self.primitive().1, &other.primitive().1);
        TPoly::from_integer_coeffs(g).monic()
    }

    /// `self = c·p` with `p` a primitive integer polynomial with positive
    /// leading coefficient.
    fn primitive(&self) -> (BigRat, Vec<BigInt>) {
        let den = self.denominator_lcm();
        let mut ints = self.to_integer_coeffs(&den);
        let mut cont = zpoly::content(&ints);
        if self.lc().is_negative() {
            cont = -cont;
        }
        for c in &mut ints {
            *c /= &cont;
        }
        (BigRat::new(cont, den), ints)
    }

    /// Integer coefficients over a common denominator: `self = p / den`.
    fn over_common_denominator(&self) -> (Vec<BigInt>, BigInt) {
        let den = self.denominator_lcm();
        (self.to_integer_coeffs(&den), den)
    }

    /// Monic least common multiple; zero if either input is zero.
    pub fn lcm(&self, other: &TPoly) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let g = self.gcd(other);
        (&self.exact_div(&g) * other).monic()
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Integer coefficients of `scale·self`; `scale` must clear all denominators.
    pub fn to_integer_coeffs(&self, scale: &BigInt) -> Vec<BigInt> {
        self.coeffs
            .iter()
            .map(|c| {
                let (q, r) = scale.div_rem(c.denom());
                debug_assert!(r.is_zero());
                c.numer() * q
            })
            .collect()
    }

    pub fn from_integer_coeffs(coeffs: Vec<BigInt>) -> TPoly {
        TPoly::new(coeffs.into_iter().map(BigRat::from_integer).collect())
    }

    pub(crate) fn fmt_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    write!(f, "t")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }

    /// Number of nonzero monomials.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly({self})")
    }
}

impl Add<&TPoly> for &TPoly {
    type Output = TPoly;

    fn add(self, rhs: &TPoly) -> TPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        TPoly::new(coeffs)
    }
}

impl Sub<&TPoly> for &TPoly {
    type Output = TPoly;

    fn sub(self, rhs: &TPoly) -> TPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigRat::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        TPoly::new(coeffs)
    }
}

impl Mul<&TPoly> for &TPoly {
    type Output = TPoly;

    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        if rhs.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return rhs.clone();
        }
        let (a, da) = self.over_common_denominator();
        let (b, db) = rhs.over_common_denominator();
        let den = da * db;
        TPoly::new(
            zpoly::mul(&a, &b)
                .into_iter()
                .map(|c| BigRat::new(c, den.clone()))
                .collect(),
        )
    }
}

impl Neg for &TPoly {
    type Output = TPoly;

    fn neg(self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<TPoly> for TPoly {
            type Output = TPoly;
            fn $method(self, rhs: TPoly) -> TPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&TPoly> for TPoly {
            type Output = TPoly;
            fn $method(self, rhs: &TPoly) -> TPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<TPoly> for &TPoly {
            type Output = TPoly;
            fn $method(self, rhs: TPoly) -> TPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for TPoly {
    type Output = TPoly;

    fn neg(self) -> TPoly {
        -&self
    }
}
