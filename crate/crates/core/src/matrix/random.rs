//! Seeded generators for test instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{hermite_elimination, OreMatrix};
use crate::field::{BigRat, Derivation, RatFun, TPoly};
use crate::ore::OrePoly;

fn random_tpoly(rng: &mut ChaCha8Rng, degt: usize, bound: i64) -> TPoly {
    TPoly::new(
        (0..=degt)
            .map(|_| BigRat::from_integer(rng.gen_range(-bound..=bound).into()))
            .collect(),
    )
}

fn random_entry(rng: &mut ChaCha8Rng, degd: usize, degt: usize, derivation: Derivation) -> OrePoly {
    let coeffs = (0..=degd)
        .map(|_| RatFun::from_poly(random_tpoly(rng, degt, 3)))
        .collect();
    OrePoly::new(coeffs, derivation)
}

/// Random `n × n` matrix with polynomial coefficients, `deg_D ≤ degd`,
/// `deg_t ≤ degt` and small integer coefficients. Entries are zero with
/// probability 1/5. No rank guarantee.
pub fn random_matrix(n: usize, degd: usize, degt: usize, seed: u64, derivation: Derivation) -> OreMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = (0..n * n)
        .map(|_| {
            if rng.gen_ratio(1, 5) {
                OrePoly::zero(derivation)
            } else {
                random_entry(&mut rng, degd, degt, derivation)
            }
        })
        .collect();
    OreMatrix::new(n, n, entries).expect("positive dimensions")
}

/// Like [`random_matrix`], but resamples until the matrix has full row rank
/// and attains `deg_D = degd`. Returns the matrix and the seed that produced it.
pub fn random_full_rank(
    n: usize,
    degd: usize,
    degt: usize,
    seed: u64,
    derivation: Derivation,
) -> (OreMatrix, u64) {
    let mut s = seed;
    loop {
        let a = random_matrix(n, degd, degt, s, derivation);
        if a.deg_d().finite() == Some(degd) && hermite_elimination(&a).is_ok() {
            return (a, s);
        }
        s = s.wrapping_add(0x9e37_79b9_7f4a_7c15);
    }
}

/// Product of `steps` random elementary row operations applied to `I_n`:
/// transvections `row_i += f·row_j` with `deg_D f ≤ 1`, `deg_t f ≤ 1`,
/// row swaps, and scalings by nonzero rational constants.
pub fn random_unimodular(n: usize, steps: usize, seed: u64) -> OreMatrix {
    random_unimodular_with(n, steps, 1, 1, seed, Derivation::Standard)
}

/// [`random_unimodular`] with explicit multiplier degrees and derivation.
pub fn random_unimodular_with(
    n: usize,
    steps: usize,
    degd: usize,
    degt: usize,
    seed: u64,
    derivation: Derivation,
) -> OreMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = OreMatrix::identity(n, derivation);
    for _ in 0..steps {
        let kind = if n == 1 { 2 } else { rng.gen_range(0..6) };
        match kind {
            // swaps and scalings are kept rarer than transvections
            0 => {
                let i = rng.gen_range(0..n);
                let j = (i + rng.gen_range(1..n)) % n;
                m.swap_rows(i, j);
            }
            1 | 2 => {
                let i = rng.gen_range(0..n);
                let mut c = 0;
                while c == 0 {
                    c = rng.gen_range(-3..=3);
                }
                let den = rng.gen_range(1..=3);
                m.scale_row(i, &RatFun::constant(BigRat::new(c.into(), den.into())));
            }
            _ => {
                let i = rng.gen_range(0..n);
                let j = (i + rng.gen_range(1..n)) % n;
                let f = random_entry(&mut rng, degd, degt, derivation);
                m.add_row_multiple(i, j, &f);
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::inverse_unimodular;

    #[test]
    fn zero_steps_is_identity() {
        assert!(random_unimodular(3, 0, 7).is_identity());
    }

    #[test]
    fn one_by_one_is_a_unit() {
        let m = random_unimodular(1, 5, 11);
        assert!(m.get(0, 0).is_unit());
    }

    #[test]
    fn reproducible_and_unimodular() {
        let a = random_unimodular(2, 6, 42);
        assert_eq!(a, random_unimodular(2, 6, 42));
        let res = hermite_elimination(&a).unwrap();
        assert!(res.h.is_identity());
        let v = inverse_unimodular(&a).unwrap();
        assert!(a.mul(&v).unwrap().is_identity());
        assert!(v.mul(&a).unwrap().is_identity());
    }

    #[test]
    fn full_rank_generator_respects_degrees() {
        let (a, _) = random_full_rank(2, 2, 1, 3, Derivation::Standard);
        assert_eq!(a.deg_d().finite(), Some(2));
        assert!(a.deg_t().at_most(1));
        assert!(a.is_polynomial());
    }
}
