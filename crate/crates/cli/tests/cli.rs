use std::fs;
use std::path::PathBuf;

use ore_hermite::text::{parse_instance, print_instance};
use ore_hermite::{Derivation, OreMatrix};
use ore_hermite_cli::{run, Outcome, EXIT_FAILED, EXIT_OK, EXIT_USAGE};

const EXAMPLE: &str = "\
# the 3x3 example
3 3
1 + (t+2)*D + D^2; 2 + (2*t+1)*D; 1 + (1+t)*D
2*t + t^2 + t*D; 2 + 2*t + 2*t^2 + D; 4*t + t^2
3 + t + (3+t)*D + D^2; 8 + 4*t + (5+3*t)*D + D^2; 7 + 8*t + (2+4*t)*D
";

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("ore-hermite-cli-{tag}-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn write(&self, name: &str, text: &str) -> String {
        let p = self.0.join(name);
        fs::write(&p, text).unwrap();
        p.to_string_lossy().into_owned()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = fs::remove_dir_all(&self.0);
    }
}

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("ore-hermite").chain(args.iter().copied()))
}

#[test]
fn both_algorithms_print_identical_forms() {
    let s = Scratch::new("identical");
    let input = s.write("a.txt", EXAMPLE);
    let elim = cli(&["hermite", "--input", &input, "--algorithm", "elim"]);
    let lin = cli(&["hermite", "--input", &input, "--algorithm", "linsys", "--jobs", "2"]);
    assert_eq!(elim.code, EXIT_OK, "{}", elim.stderr);
    assert_eq!(lin.code, EXIT_OK, "{}", lin.stderr);
    assert_eq!(elim.stdout, lin.stdout);
    let h = parse_instance(&elim.stdout).unwrap();
    assert_eq!(h.get(1, 2), &ore_hermite::text::parse_entry("1 + 7*t/2 + D/2", Derivation::Standard).unwrap());
}

#[test]
fn emit_both_separates_u_and_h() {
    let s = Scratch::new("both");
    let input = s.write("a.txt", EXAMPLE);
    let out = cli(&["hermite", "--input", &input, "--emit", "both", "--verify"]);
    assert_eq!(out.code, EXIT_OK);
    let (u, h) = out.stdout.split_once("---\n").unwrap();
    let (u, h) = (parse_instance(u).unwrap(), parse_instance(h).unwrap());
    let a = parse_instance(EXAMPLE).unwrap();
    assert_eq!(u.mul(&a).unwrap(), h);
    assert!(out.stderr.contains("product U*A = H: ok"));
}

#[test]
fn linsys_output_passes_check() {
    let s = Scratch::new("pipeline");
    let input = s.write("a.txt", EXAMPLE);
    let u = cli(&["hermite", "--input", &input, "--algorithm", "linsys", "--emit", "u"]);
    let h = cli(&["hermite", "--input", &input, "--algorithm", "linsys", "--emit", "h"]);
    let up = s.write("u.txt", &u.stdout);
    let hp = s.write("h.txt", &h.stdout);
    let out = cli(&["check", "--input", &input, "--u", &up, "--h", &hp, "--json"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    for key in ["productOk", "shapeOk", "unimodularOk", "degreeBoundsOk"] {
        assert_eq!(v[key], true, "{key}");
    }
}

#[test]
fn check_rejects_non_hermite() {
    let s = Scratch::new("reject");
    let input = s.write("a.txt", EXAMPLE);
    let id = s.write("i.txt", &print_instance(&OreMatrix::identity(3, Derivation::Standard)));
    let out = cli(&["check", "--input", &input, "--u", &id, "--h", &input, "--json"]);
    assert_eq!(out.code, EXIT_FAILED);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["shapeOk"], false);
    assert_eq!(v["productOk"], true);
}

#[test]
fn json_output_keeps_entries_as_strings() {
    let s = Scratch::new("json");
    let input = s.write("a.txt", EXAMPLE);
    let out = cli(&["hermite", "--input", &input, "--algorithm", "linsys", "--emit", "both", "--json", "--verify"]);
    assert_eq!(out.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["diagDegrees"], serde_json::json!([1, 1, 2]));
    assert_eq!(v["H"][2][2], "(-2)/(t) + (-1 + 2*t + t^2)/(t)*D + D^2");
    assert!(v["U"][0][0].is_string());
    assert!(v["probes"].as_u64().unwrap() <= 12);
    assert_eq!(v["verification"]["passed"], true);
}

#[test]
fn rank_deficiency_exits_one_with_rows() {
    let s = Scratch::new("rank");
    let input = s.write("a.txt", "2 2\nD; 1\nt*D; t\n");
    for alg in ["elim", "linsys"] {
        let out = cli(&["hermite", "--input", &input, "--algorithm", alg]);
        assert_eq!(out.code, EXIT_FAILED);
        assert!(out.stderr.contains("rows 1, 2"), "{}", out.stderr);
    }
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let s = Scratch::new("usage");
    let bad = s.write("bad.txt", "2 2\nD; 1 +\n0; 1\n");
    let out = cli(&["hermite", "--input", &bad]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);
    assert_eq!(cli(&["hermite"]).code, EXIT_USAGE);
    assert_eq!(cli(&["hermite", "--input", &bad, "--algorithm", "fast"]).code, EXIT_USAGE);
    assert_eq!(cli(&["hermite", "--input", &bad, "--jobs", "0"]).code, EXIT_USAGE);
    assert_eq!(cli(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(cli(&["hermite", "--input", "/nonexistent/file"]).code, EXIT_USAGE);
    let rect = s.write("rect.txt", "1 2\nD; 1\n");
    assert_eq!(cli(&["hermite", "--input", &rect]).code, EXIT_USAGE);
    assert_eq!(cli(&["--help"]).code, EXIT_OK);
}

#[test]
fn random_is_reproducible() {
    let args = ["random", "--n", "3", "--degd", "2", "--degt", "1", "--seed", "17"];
    let a = cli(&args);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a, cli(&args));
    let m = parse_instance(&a.stdout).unwrap();
    assert_eq!((m.rows(), m.cols()), (3, 3));
    assert_eq!(m.deg_d().finite(), Some(2));

    let u = cli(&["random", "--n", "2", "--degd", "1", "--degt", "1", "--seed", "5", "--unimodular-steps", "6"]);
    let m = parse_instance(&u.stdout).unwrap();
    assert!(ore_hermite::hermite_elimination(&m).unwrap().h.is_identity());
}
