#![allow(dead_code)]

use ore_hermite::field::rat;
use ore_hermite::{Derivation, OrePoly, RatFun, TPoly};
use proptest::prelude::*;

pub fn tpoly(max_deg: usize) -> impl Strategy<Value = TPoly> {
    prop::collection::vec((-4i64..=4, 1i64..=3), 0..=max_deg + 1)
        .prop_map(|cs| TPoly::new(cs.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

pub fn nonzero_tpoly(max_deg: usize) -> impl Strategy<Value = TPoly> {
    tpoly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn ratfun() -> impl Strategy<Value = RatFun> {
    (tpoly(2), nonzero_tpoly(2)).prop_map(|(n, d)| RatFun::new(n, d))
}

pub fn nonzero_ratfun() -> impl Strategy<Value = RatFun> {
    ratfun().prop_filter("nonzero", |a| !a.is_zero())
}

pub fn derivation() -> impl Strategy<Value = Derivation> {
    prop_oneof![Just(Derivation::Standard), Just(Derivation::Euler)]
}

/// Coefficients are polynomials or simple quotients, `deg_D ≤ max_d`.
pub fn ore_poly(max_d: usize, dv: Derivation) -> impl Strategy<Value = OrePoly> {
    let coeff = prop_oneof![
        3 => tpoly(2).prop_map(RatFun::from_poly),
        1 => (tpoly(1), nonzero_tpoly(1)).prop_map(|(n, d)| RatFun::new(n, d)),
    ];
    prop::collection::vec(coeff, 0..=max_d + 1).prop_map(move |cs| OrePoly::new(cs, dv))
}

pub fn nonzero_ore_poly(max_d: usize, dv: Derivation) -> impl Strategy<Value = OrePoly> {
    ore_poly(max_d, dv).prop_filter("nonzero", |f| !f.is_zero())
}

/// Polynomial coefficients only.
pub fn poly_ore_poly(max_d: usize, max_t: usize, dv: Derivation) -> impl Strategy<Value = OrePoly> {
    prop::collection::vec(tpoly(max_t).prop_map(RatFun::from_poly), 0..=max_d + 1)
        .prop_map(move |cs| OrePoly::new(cs, dv))
}

pub const EXAMPLE_3X3: &str = "\
3 3
1 + (t+2)*D + D^2; 2 + (2*t+1)*D; 1 + (1+t)*D
2*t + t^2 + t*D; 2 + 2*t + 2*t^2 + D; 4*t + t^2
3 + t + (3+t)*D + D^2; 8 + 4*t + (5+3*t)*D + D^2; 7 + 8*t + (2+4*t)*D
";

pub const EXAMPLE_3X3_HERMITE: &str = "\
3 3
2 + t + D; 1 + 2*t; (-2 + t + 2*t^2)/(2*t) - 1/(2*t)*D
0; 2 + t + D; 1 + 7*t/2 + 1/2*D
0; 0; -2/t + (-1 + 2*t + t^2)/t*D + D^2
";
