mod common;

use common::*;
use ore_hermite::text::{parse_entry, parse_instance, print_entry, print_instance};
use ore_hermite::{Derivation, Error, OreMatrix, OrePoly, RatFun, TPoly};
use proptest::prelude::*;

const STD: Derivation = Derivation::Standard;

fn matrix() -> impl Strategy<Value = OreMatrix> {
    (1usize..=3, 1usize..=3, derivation()).prop_flat_map(|(r, c, dv)| {
        prop::collection::vec(ore_poly(2, dv), r * c)
            .prop_map(move |e| OreMatrix::new(r, c, e).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn entry_round_trip(f in derivation().prop_flat_map(|dv| ore_poly(3, dv))) {
        let text = print_entry(&f);
        let back = parse_entry(&text, f.derivation()).unwrap();
        prop_assert_eq!(&back, &f, "{}", text);
        prop_assert_eq!(print_entry(&back), text);
    }

    #[test]
    fn instance_round_trip(m in matrix()) {
        let text = print_instance(&m);
        prop_assert_eq!(parse_instance(&text).unwrap(), m);
    }
}

#[test]
fn entry_examples() {
    let f = parse_entry("1 + (t+2)*D + D^2", STD).unwrap();
    assert_eq!(
        f,
        OrePoly::new(
            vec![
                RatFun::one(),
                RatFun::from_poly(TPoly::from_ints(&[2, 1])),
                RatFun::one()
            ],
            STD
        )
    );
    assert!(parse_entry("0", STD).unwrap().is_zero());
    let g = parse_entry("(-1/2)/(t)*D", STD).unwrap();
    assert_eq!(
        g,
        OrePoly::monomial(RatFun::new(TPoly::from_ints(&[-1]), TPoly::from_ints(&[0, 2])), 1, STD)
    );
    assert_eq!(print_entry(&OrePoly::zero(STD)), "0");
    // products are taken in the Ore ring
    assert_eq!(parse_entry("D*t", STD).unwrap(), parse_entry("t*D + 1", STD).unwrap());
    assert_eq!(
        parse_entry("D*t", Derivation::Euler).unwrap(),
        parse_entry("t*D + t", Derivation::Euler).unwrap()
    );
}

#[test]
fn worked_example_entry_rendering() {
    let h = parse_instance(EXAMPLE_3X3_HERMITE).unwrap();
    assert_eq!(
        print_entry(h.get(2, 2)),
        "(-2)/(t) + (-1 + 2*t + t^2)/(t)*D + D^2"
    );
    assert_eq!(parse_instance(&print_instance(&h)).unwrap(), h);
}

fn parse_err(text: &str) -> (usize, usize) {
    match parse_instance(text) {
        Err(Error::Parse { line, column, .. }) => (line, column),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn errors_carry_positions() {
    parse_err("2 2\nD; 1\n");
    assert_eq!(parse_err("2 x\n").0, 1);
    assert_eq!(parse_err("# c\n1 2\nD; 1 +\n").0, 3);
    assert_eq!(parse_err("1 1\nD; 1\n").0, 2);
    assert_eq!(parse_err("1 1 sideways\nD\n").0, 1);
    assert!(matches!(parse_entry("1/D", STD), Err(Error::Parse { .. })));
    assert!(matches!(parse_entry("1/0", STD), Err(Error::Parse { .. })));
    assert!(matches!(parse_entry("t^", STD), Err(Error::Parse { .. })));
    let m = parse_instance("# header next\n\n1 2 euler\n t*D ; 1 # trailing\n").unwrap();
    assert_eq!(m.derivation(), Derivation::Euler);
}
