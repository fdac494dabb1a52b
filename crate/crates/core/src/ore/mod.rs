//! The differential polynomial ring `Q(t)[D; δ]`.
//!
//! Elements are written with coefficients on the left of the powers of `D`,
//! `f = f_0 + f_1 D + ... + f_d D^d`, and multiply according to
//! `D a = a D + δ(a)` for `a ∈ Q(t)`.

mod euclid;

pub use euclid::GcrdResult;

use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{Degree, Derivation, RatFun};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrePoly {
    coeffs: Vec<RatFun>,
    derivation: Derivation,
}

impl OrePoly {
    pub fn new(mut coeffs: Vec<RatFun>, derivation: Derivation) -> Self {
        while coeffs.last().is_some_and(RatFun::is_zero) {
            coeffs.pop();
        }
        OrePoly { coeffs, derivation }
    }

    pub fn zero(derivation: Derivation) -> Self {
        OrePoly {
            coeffs: Vec::new(),
            derivation,
        }
    }

    pub fn one(derivation: Derivation) -> Self {
        OrePoly::constant(RatFun::one(), derivation)
    }

    pub fn constant(c: RatFun, derivation: Derivation) -> Self {
        OrePoly::new(vec![c], derivation)
    }

    /// `c·D^k`
    pub fn monomial(c: RatFun, k: usize, derivation: Derivation) -> Self {
        if c.is_zero() {
            return OrePoly::zero(derivation);
        }
        let mut coeffs = vec![RatFun::zero(); k];
        coeffs.push(c);
        OrePoly { coeffs, derivation }
    }

    /// `D^k`
    pub fn d_power(k: usize, derivation: Derivation) -> Self {
        OrePoly::monomial(RatFun::one(), k, derivation)
    }

    pub fn derivation(&self) -> Derivation {
        self.derivation
    }

    pub fn coeffs(&self) -> &[RatFun] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RatFun {
        self.coeffs.get(i).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Nonzero elements of degree zero in `D` are exactly the units.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(RatFun::is_one)
    }

    pub fn is_polynomial(&self) -> bool {
        self.coeffs.iter().all(RatFun::is_polynomial)
    }

    pub fn deg_d(&self) -> Degree {
        self.coeffs.len().checked_sub(1).into()
    }

    /// Largest `deg_t` over the coefficients.
    pub fn deg_t(&self) -> Degree {
        self.coeffs
            .iter()
            .map(RatFun::deg_t)
            .max()
            .unwrap_or(Degree::NegInf)
    }

    /// `(deg_D, deg_t)`.
    pub fn degrees(&self) -> (Degree, Degree) {
        (self.deg_d(), self.deg_t())
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> RatFun {
        self.coeffs.last().cloned().unwrap_or_else(RatFun::zero)
    }

    /// Left multiplication by a scalar, `c·f`.
    pub fn scale_left(&self, c: &RatFun) -> OrePoly {
        if c.is_zero() {
            return OrePoly::zero(self.derivation);
        }
        if c.is_one() {
            return self.clone();
        }
        OrePoly {
            coeffs: self.coeffs.iter().map(|a| c * a).collect(),
            derivation: self.derivation,
        }
    }

    /// `(1/lc)·f`; zero stays zero.
    pub fn monic(&self) -> OrePoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale_left(&lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    /// `D·f = Σ f_i D^{i+1} + Σ δ(f_i) D^i`.
    pub fn shift(&self) -> OrePoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(self.coeffs[0].derivative(self.derivation));
        for i in 1..self.coeffs.len() {
            coeffs.push(&self.coeffs[i - 1] + &self.coeffs[i].derivative(self.derivation));
        }
        coeffs.push(self.coeffs[self.coeffs.len() - 1].clone());
        OrePoly::new(coeffs, self.derivation)
    }

    /// `[D f, D^2 f, ..., D^m f]`, each obtained from the previous one by [`shift`](Self::shift).
    pub fn shift_powers(&self, m: usize) -> Vec<OrePoly> {
        let mut out = Vec::with_capacity(m);
        let mut cur = self.clone();
        for _ in 0..m {
            cur = cur.shift();
            out.push(cur.clone());
        }
        out
    }

    /// Non-commutative product `self · rhs`.
    pub fn mul(&self, rhs: &OrePoly) -> OrePoly {
        self.assert_same_derivation(rhs);
        if self.is_zero() || rhs.is_zero() {
            return OrePoly::zero(self.derivation);
        }
        if rhs.is_unit() && rhs.coeffs[0].is_one() {
            return self.clone();
        }
        let mut acc = vec![RatFun::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        let mut power = rhs.clone();
        for (i, fi) in self.coeffs.iter().enumerate() {
            if i > 0 {
                power = power.shift();
            }
            if fi.is_zero() {
                continue;
            }
            for (slot, c) in acc.iter_mut().zip(&power.coeffs) {
                if !c.is_zero() {
                    *slot = &*slot + &(fi * c);
                }
            }
        }
        OrePoly::new(acc, self.derivation)
    }

    pub(crate) fn assert_same_derivation(&self, other: &OrePoly) {
        assert_eq!(
            self.derivation, other.derivation,
            "mixing differential polynomials over different derivations"
        );
    }

    fn zip_with(&self, rhs: &OrePoly, negate: bool) -> OrePoly {
        self.assert_same_derivation(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) if negate => a - b,
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) if negate => -b,
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        OrePoly::new(coeffs, self.derivation)
    }
}

impl std::fmt::Debug for OrePoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OrePoly({})", crate::text::print_entry(self))
    }
}

impl std::fmt::Display for OrePoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::text::print_entry(self))
    }
}

impl Add<&OrePoly> for &OrePoly {
    type Output = OrePoly;

    fn add(self, rhs: &OrePoly) -> OrePoly {
        self.zip_with(rhs, false)
    }
}

impl Sub<&OrePoly> for &OrePoly {
    type Output = OrePoly;

    fn sub(self, rhs: &OrePoly) -> OrePoly {
        self.zip_with(rhs, true)
    }
}

impl Mul<&OrePoly> for &OrePoly {
    type Output = OrePoly;

    fn mul(self, rhs: &OrePoly) -> OrePoly {
        OrePoly::mul(self, rhs)
    }
}

impl Neg for &OrePoly {
    type Output = OrePoly;

    fn neg(self) -> OrePoly {
        OrePoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            derivation: self.derivation,
        }
    }
}

impl Neg for OrePoly {
    type Output = OrePoly;

    fn neg(self) -> OrePoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<OrePoly> for OrePoly {
            type Output = OrePoly;
            fn $method(self, rhs: OrePoly) -> OrePoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&OrePoly> for OrePoly {
            type Output = OrePoly;
            fn $method(self, rhs: &OrePoly) -> OrePoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<OrePoly> for &OrePoly {
            type Output = OrePoly;
            fn $method(self, rhs: OrePoly) -> OrePoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);

impl Mul<OrePoly> for OrePoly {
    type Output = OrePoly;

    fn mul(self, rhs: OrePoly) -> OrePoly {
        OrePoly::mul(&self, &rhs)
    }
}

impl Mul<&OrePoly> for OrePoly {
    type Output = OrePoly;

    fn mul(self, rhs: &OrePoly) -> OrePoly {
        OrePoly::mul(&self, rhs)
    }
}

impl Mul<OrePoly> for &OrePoly {
    type Output = OrePoly;

    fn mul(self, rhs: OrePoly) -> OrePoly {
        OrePoly::mul(self, &rhs)
    }
}
