//! Integer polynomial kernels behind the `Q[t]` arithmetic.
//!
//! Polynomials are little-endian coefficient slices without trailing zeros.
//! The gcd is computed modulo word-sized primes and lifted by Chinese
//! remaindering; a candidate is accepted only after exact trial division.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Gcd of the coefficients, positive; zero for the zero polynomial.
pub(crate) fn content(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `a / b` when `b` divides `a` in `Z[t]`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let lb = b.last().expect("division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (j, c) in b.iter().enumerate() {
            rem[k + j] -= &q * c;
        }
        quot[k] = q;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

/// Primitive gcd with positive leading coefficient. Both inputs nonzero.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let ca = content(a);
    let cb = content(b);
    let a: Vec<BigInt> = a.iter().map(|c| c / &ca).collect();
    let b: Vec<BigInt> = b.iter().map(|c| c / &cb).collect();
    if a.len() == 1 || b.len() == 1 {
        return vec![BigInt::one()];
    }
    let gamma = a.last().unwrap().gcd(b.last().unwrap());

    let mut acc: Option<(Vec<BigInt>, BigInt)> = None;
    let mut last_candidate: Option<Vec<BigInt>> = None;
    for p in Primes::new() {
        let lp_a = residue(a.last().unwrap(), p);
        let lp_b = residue(b.last().unwrap(), p);
        if lp_a == 0 || lp_b == 0 {
            continue;
        }
        let ap: Vec<u64> = a.iter().map(|c| residue(c, p)).collect();
        let bp: Vec<u64> = b.iter().map(|c| residue(c, p)).collect();
        let mut gp = gcd_mod(ap, bp, p);
        if gp.len() == 1 {
            return vec![BigInt::one()];
        }
        let g = residue(&gamma, p);
        for c in &mut gp {
            *c = mulmod(*c, g, p);
        }
        let (coeffs, modulus) = match acc.take() {
            Some((h, m)) if h.len() == gp.len() => (crt(&h, &m, &gp, p), m * p),
            Some((h, m)) if h.len() < gp.len() => {
                acc = Some((h, m));
                continue;
            }
            _ => (gp.iter().map(|&c| BigInt::from(c)).collect(), BigInt::from(p)),
        };
        let lifted = symmetric(&coeffs, &modulus);
        let stable = last_candidate.as_ref() == Some(&lifted);
        acc = Some((coeffs, modulus));
        if stable {
            let c = content(&lifted);
            let cand: Vec<BigInt> = lifted.iter().map(|x| x / &c).collect();
            let cand = if cand.last().unwrap().is_negative() {
                cand.into_iter().map(|x| -x).collect()
            } else {
                cand
            };
            if div_exact(&a, &cand).is_some() && div_exact(&b, &cand).is_some() {
                return cand;
            }
        }
        last_candidate = Some(lifted);
    }
    unreachable!("prime supply exhausted")
}

fn residue(c: &BigInt, p: u64) -> u64 {
    let r = (c % BigInt::from(p)).to_i64().unwrap();
    if r < 0 {
        (r + p as i64) as u64
    } else {
        r as u64
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Monic gcd over `Z/p`.
fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = invmod(*b.last().unwrap(), p);
        while a.len() >= b.len() {
            let c = mulmod(*a.last().unwrap(), inv, p);
            let off = a.len() - b.len();
            for (j, &x) in b.iter().enumerate() {
                a[off + j] = (a[off + j] + p - mulmod(c, x, p)) % p;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    let inv = invmod(*a.last().unwrap(), p);
    a.iter().map(|&c| mulmod(c, inv, p)).collect()
}

fn crt(h: &[BigInt], m: &BigInt, g: &[u64], p: u64) -> Vec<BigInt> {
    let minv = invmod(residue(m, p), p);
    h.iter()
        .zip(g)
        .map(|(hc, &gc)| {
            let diff = (gc + p - residue(hc, p)) % p;
            hc + m * BigInt::from(mulmod(diff, minv, p))
        })
        .collect()
}

fn symmetric(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half: BigInt = m >> 1;
    v.iter()
        .map(|c| if c > &half { c - m } else { c.clone() })
        .collect()
}

const CACHED_PRIMES: usize = 64;

fn cached_primes() -> &'static [u64] {
    static CACHE: OnceLock<Vec<u64>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let mut it = Primes { next: (1u64 << 62) - 1, cached: 0 };
        let mut v = Vec::with_capacity(CACHED_PRIMES);
        while v.len() < CACHED_PRIMES {
            let c = it.next;
            it.next -= 2;
            if is_prime(c) {
                v.push(c);
            }
        }
        v
    })
}

/// Descending primes below `2^62`.
struct Primes {
    next: u64,
    cached: usize,
}

impl Primes {
    fn new() -> Self {
        let cache = cached_primes();
        Primes { next: cache[cache.len() - 1] - 2, cached: 0 }
    }
}

impl Iterator for Primes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if let Some(&p) = cached_primes().get(self.cached) {
            self.cached += 1;
            return Some(p);
        }
        while self.next > 2 {
            let c = self.next;
            self.next -= 2;
            if is_prime(c) {
                return Some(c);
            }
        }
        None
    }
}

/// Deterministic Miller-Rabin for 64-bit inputs.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_primes() {
        let got: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(got, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
    }

    #[test]
    fn gcd_examples() {
        // (t^2 - 1, t - 1) -> t - 1
        assert_eq!(gcd(&z(&[-1, 0, 1]), &z(&[-1, 1])), z(&[-1, 1]));
        // (2t+2)(3t-1), (2t+2)(t+5) -> t + 1
        let a = mul(&z(&[2, 2]), &z(&[-1, 3]));
        let b = mul(&z(&[2, 2]), &z(&[5, 1]));
        assert_eq!(gcd(&a, &b), z(&[1, 1]));
        assert_eq!(gcd(&z(&[1, 0, 1]), &z(&[0, 1])), z(&[1]));
    }

    #[test]
    fn gcd_with_large_coefficients() {
        let big: BigInt = num_traits::pow(BigInt::from(10), 40) + 7;
        let f = vec![big.clone(), BigInt::from(3), BigInt::one()];
        let a = mul(&f, &z(&[5, -9, 2]));
        let b = mul(&f, &z(&[-1, 0, 0, 11]));
        assert_eq!(gcd(&a, &b), f);
    }

    #[test]
    fn exact_division() {
        let a = mul(&z(&[1, 2, 3]), &z(&[-4, 5]));
        assert_eq!(div_exact(&a, &z(&[-4, 5])), Some(z(&[1, 2, 3])));
        assert_eq!(div_exact(&a, &z(&[1, 1])), None);
    }
}
