mod common;

use common::*;
use ore_hermite::linsys::{
    build_system, clear_denominators, hermite_via_linsys_with, probe_budget, probe_consistent,
    search_degrees,
};
use ore_hermite::matrix::{random_full_rank, random_unimodular};
use ore_hermite::text::{parse_entry, parse_instance};
use ore_hermite::{
    hermite_elimination, hermite_via_linsys, DegreeProfile, Derivation, Error, LinsysOptions,
    OreMatrix, OrePoly,
};

const STD: Derivation = Derivation::Standard;

fn e(s: &str) -> OrePoly {
    parse_entry(s, STD).unwrap()
}

fn m(rows: &[&[&str]]) -> OreMatrix {
    OreMatrix::from_rows(rows.iter().map(|r| r.iter().map(|s| e(s)).collect()).collect()).unwrap()
}

fn corpus() -> Vec<OreMatrix> {
    let mut out = Vec::new();
    for (k, (n, d, t)) in [(1, 2, 1), (2, 1, 1), (2, 2, 1), (2, 1, 2), (3, 1, 1)].into_iter().enumerate() {
        for s in 0..2u64 {
            out.push(random_full_rank(n, d, t, 500 + 10 * k as u64 + s, STD).0);
        }
    }
    out
}

#[test]
fn clearing_examples() {
    let a = m(&[&["D", "1 + t"]]);
    assert_eq!(clear_denominators(&a), a);
    assert_eq!(clear_denominators(&m(&[&["1/t*D", "1"]])), m(&[&["D", "t"]]));
    assert_eq!(
        clear_denominators(&m(&[&["1/t*D + 1/(t+1)", "0"]])),
        m(&[&["(t+1)*D + t", "0"]])
    );
}

#[test]
fn system_shapes() {
    let a = m(&[&["D + t", "1"], &["t", "D"]]);
    let sys = build_system(&a, &DegreeProfile(vec![1, 1])).unwrap();
    assert_eq!(sys.beta, 2);
    assert_eq!(sys.ahat_shape(), (6, 8));
    assert!(sys.ahat.deg_t().at_most(1));

    let one = m(&[&["D"]]);
    assert!(probe_consistent(&one, &DegreeProfile(vec![1])).unwrap());
    assert!(!probe_consistent(&one, &DegreeProfile(vec![0])).unwrap());
    let res = hermite_via_linsys(&one).unwrap();
    assert!(res.u.is_identity());
    assert_eq!(res.h, one);

    assert!(matches!(
        build_system(&m(&[&["1/t"]]), &DegreeProfile(vec![0])),
        Err(Error::NotCleared { .. })
    ));
}

#[test]
fn identity_and_diagonal_inputs() {
    let id = OreMatrix::identity(3, STD);
    assert!(probe_consistent(&id, &DegreeProfile(vec![0, 0, 0])).unwrap());
    assert_eq!(search_degrees(&id).unwrap().0, vec![0, 0, 0]);
    let res = hermite_via_linsys(&id).unwrap();
    assert!(res.u.is_identity() && res.h.is_identity());

    let diag = m(&[&["D^2", "0"], &["0", "D"]]);
    assert_eq!(search_degrees(&diag).unwrap().0, vec![2, 1]);
}

#[test]
fn worked_example() {
    let a = parse_instance(EXAMPLE_3X3).unwrap();
    let expected = parse_instance(EXAMPLE_3X3_HERMITE).unwrap();
    let (res, stats) = hermite_via_linsys_with(&a, LinsysOptions::default()).unwrap();
    assert_eq!(res.h, expected);
    assert_eq!(res.diag_degrees.0, vec![1, 1, 2]);
    assert!(stats.probe_count() <= probe_budget(3, 2));
    assert_eq!(probe_budget(3, 2), 12);
    assert!(!probe_consistent(&a, &DegreeProfile(vec![0, 6, 6])).unwrap());
    assert!(probe_consistent(&a, &DegreeProfile(vec![1, 1, 2])).unwrap());
    // β = (n-1)d + max h = 4 + 2, Â is n(β+1) × n(β+d+1)
    assert_eq!(stats.final_beta, 6);
    assert_eq!(stats.final_ahat_shape, (21, 27));
    assert_eq!(res, hermite_elimination(&a).unwrap());
}

#[test]
fn agrees_with_elimination() {
    for a in corpus() {
        let n = a.rows();
        let d = a.deg_d().or_zero();
        let (res, stats) = hermite_via_linsys_with(&a, LinsysOptions::default()).unwrap();
        assert_eq!(res, hermite_elimination(&a).unwrap());
        assert!(stats.probe_count() <= probe_budget(n, d));
        let hmax = res.diag_degrees.max();
        assert!(res.h.deg_d().at_most(n * d));
        assert!(res.u.deg_d().at_most((n - 1) * d + hmax));
        let beta = (n - 1) * d + hmax;
        assert_eq!(stats.final_beta, beta);
        assert_eq!(stats.final_ahat_shape, (n * (beta + 1), n * (beta + d + 1)));
        assert!(stats.max_solution_deg_t.at_most(stats.solution_deg_t_bound));
        for p in &stats.probes {
            let b = (n - 1) * d + p.profile.max();
            assert_eq!(p.ahat_shape, (n * (b + 1), n * (b + d + 1)));
            assert!(p.profile.within_cap(n * d));
        }
    }
}

#[test]
fn parallel_search_matches_sequential() {
    let a = parse_instance(EXAMPLE_3X3).unwrap();
    let seq = hermite_via_linsys_with(&a, LinsysOptions { parallel: false }).unwrap();
    let par = hermite_via_linsys_with(&a, LinsysOptions { parallel: true }).unwrap();
    assert_eq!(seq.0, par.0);
    assert_eq!(seq.1.probe_count(), par.1.probe_count());
}

#[test]
fn consistency_is_monotone() {
    for a in corpus().into_iter().filter(|a| a.rows() <= 2) {
        let n = a.rows();
        let cap = n * a.deg_d().or_zero();
        let h = search_degrees(&a).unwrap();
        let profiles: Vec<DegreeProfile> = (0..(cap + 1).pow(n as u32))
            .map(|mut k| {
                DegreeProfile(
                    (0..n)
                        .map(|_| {
                            let v = k % (cap + 1);
                            k /= cap + 1;
                            v
                        })
                        .collect(),
                )
            })
            .collect();
        for p in &profiles {
            let ok = probe_consistent(&a, p).unwrap();
            assert_eq!(ok, p.dominates(&h), "profile {:?} against {:?}", p.0, h.0);
        }
    }
}

#[test]
fn unimodular_invariance() {
    for (k, a) in corpus().into_iter().enumerate().step_by(3) {
        let mm = random_unimodular(a.rows(), 3, 40 + k as u64);
        let lhs = hermite_via_linsys(&mm.mul(&a).unwrap()).unwrap();
        assert_eq!(lhs.h, hermite_via_linsys(&a).unwrap().h);
    }
}

#[test]
fn rank_deficient_input() {
    let a = m(&[&["D", "1"], &["t*D", "t"]]);
    assert!(matches!(hermite_via_linsys(&a), Err(Error::RankDeficient { .. })));
    assert!(matches!(
        hermite_via_linsys(&OreMatrix::zeros(1, 2, STD)),
        Err(Error::Shape(_))
    ));
}
