use std::path::PathBuf;
use std::process::Command;

use pseudogb::cli::{parse_basis, run, Problem};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("pseudogb").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn without_timing(s: &str) -> String {
    s.lines().filter(|l| !l.starts_with("time:")).collect::<Vec<_>>().join("\n")
}

#[test]
fn contract_prints_curve_norm() {
    let (code, out, _) = call(&["contract", &fixture("elliptic_curve_singular.toml")]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "norm: 67390312367240773632"), "{out}");
    assert!(out.contains("rows=[[143327232,87572938752],[0,470184984576]]"));
}

#[test]
fn bad_primes_of_curve_and_of_x2_minus_5() {
    let (code, out, _) = call(&["bad-primes", &fixture("elliptic_curve.toml")]);
    assert_eq!(code, 0);
    for line in ["  <2, a>^31", "  <3, a + 1>^7", "  <3, a + 2>^15"] {
        assert!(out.lines().any(|l| l.starts_with(line)), "{out}");
    }

    let (code, out, _) = call(&["bad-primes", &fixture("x2_minus_5.toml"), "--bound", "10"]);
    assert_eq!(code, 0);
    let primes: Vec<&str> = out
        .lines()
        .filter_map(|l| l.trim().split('^').next().filter(|p| p.starts_with('<')))
        .collect();
    assert_eq!(primes, ["<2>", "<5>"]);
}

#[test]
fn member_accepts_generators_and_rejects_outsiders() {
    let f = fixture("sqrt10_ideal.toml");
    let (_, out, _) = call(&["member", &f, "--poly", "y^2 - 2"]);
    assert!(out.contains("member: true"));
    let (_, out, _) = call(&["member", &f, "--poly", "3*x*y + 1"]);
    assert!(out.contains("member: true"));
    let (_, out, _) = call(&["member", &f, "--poly", "1"]);
    assert!(out.contains("member: false"));
    let (_, out, _) = call(&["member", &f, "--poly", "x + 6*a", "--ideal", "2, a"]);
    assert!(out.contains("member: true"));
    let (_, out, _) = call(&["member", &f, "--poly", "x", "--ideal", "2, a"]);
    assert!(out.contains("member: false"));
    // non-integral input is never a member
    let (_, out, _) = call(&["member", &f, "--poly", "y^2/3"]);
    assert!(out.contains("member: false"));
}

#[test]
fn printed_bases_round_trip() {
    for (cmd, file) in [
        ("groebner", "sqrt10_ideal.toml"),
        ("strong-groebner", "sqrt10_ideal.toml"),
        ("groebner", "elliptic_curve_singular.toml"),
    ] {
        let path = fixture(file);
        let (code, out, _) = call(&[cmd, &path]);
        assert_eq!(code, 0);
        let ring = Problem::load(path.as_ref(), None).unwrap().ring;
        let basis = parse_basis(&ring, &out).unwrap();
        assert!(!basis.is_empty());
        let mut again = String::new();
        for p in basis.iter() {
            again += &format!("  poly: {}\n  ideal: {}\n", p.poly(), p.ideal());
        }
        let body: String = out
            .lines()
            .filter(|l| l.starts_with("  "))
            .map(|l| format!("{l}\n"))
            .collect();
        assert_eq!(body, again);
        assert_eq!(parse_basis(&ring, &again).unwrap().elems(), basis.elems());
    }
}

#[test]
fn output_is_deterministic() {
    let f = fixture("elliptic_curve_singular.toml");
    let a = call(&["groebner", &f]).1;
    let b = call(&["groebner", &f]).1;
    assert_eq!(without_timing(&a), without_timing(&b));
    assert!(a.lines().last().unwrap().starts_with("time: "));
}

#[test]
fn flags_change_the_computation() {
    let f = fixture("sqrt10_ideal.toml");
    let (code, out, _) = call(&["groebner", &f, "--order", "degrevlex", "--no-product-criterion", "--conductor", "off"]);
    assert_eq!(code, 0);
    assert!(out.contains("order = degrevlex"));
    let (code, _, _) = call(&["groebner", &f, "--canonical", "false"]);
    assert_eq!(code, 0);
    let (code, out, _) = call(&["intersect", &f, &f]);
    assert_eq!(code, 0);
    assert!(out.contains("intersection: "));
    let (code, out, _) = call(&["factor-ideal", &f, "--ideal", "10"]);
    assert_eq!(code, 0);
    assert!(out.contains("<2, a>^2") && out.contains("<5, a>^2"), "{out}");
}

#[test]
fn exit_codes() {
    let f = fixture("sqrt10_ideal.toml");
    // zero contraction is a domain error
    let (code, _, err) = call(&["contract", &fixture("elliptic_curve.toml")]);
    assert_eq!(code, 1);
    assert!(err.contains("AppError::ZeroIntersection"), "{err}");
    let (code, _, err) = call(&["groebner", &f, "--conductor", "7"]);
    assert_eq!(code, 1);
    assert!(err.contains("CommandError::ConductorNotInIdeal"));

    assert_eq!(call(&["groebner", "/nonexistent.toml"]).0, 2);
    assert_eq!(call(&["member", &f, "--poly", "x +* y"]).0, 2);
    assert_eq!(call(&["groebner", &f, "--order", "grevlex"]).0, 2);
    assert_eq!(call(&["bad-primes", &f]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
}

#[test]
fn unknown_keys_are_rejected() {
    let text = "[field]\nminpoly = [0, 1]\n[ring]\nvars = [\"x\"]\ncolour = \"red\"\n";
    assert!(Problem::parse(text, None).is_err());
    let text = "[field]\nminpoly = [0, 1]\n[ring]\nvars = [\"x\"]\n[[generators]]\npoly = \"x\"\nideal = [\"2\"]\n";
    assert!(Problem::parse(text, None).is_err());
    let ok = "[field]\nminpoly = [0, 1]\n[ring]\nvars = [\"x\"]\n[[generators]]\npoly = \"x\"\ncoeff_ideal = [\"2\"]\n";
    assert_eq!(Problem::parse(ok, None).unwrap().generators.len(), 1);
}

#[test]
fn integral_basis_from_file() {
    // Q(√5) with R = Z[(1+√5)/2]
    let text = "[field]\nminpoly = [-5, 0, 1]\nbasis = [[1, 0], [\"1/2\", \"1/2\"]]\n\
                [ring]\nvars = [\"x\"]\n[[generators]]\npoly = \"x - (1+a)/2\"\n";
    let p = Problem::parse(text, None).unwrap();
    assert_eq!(p.generators.len(), 1);
    assert!(p.generators.get(0).ideal().is_unit());
}

#[test]
fn binary_exit_code_and_tracing() {
    let bin = env!("CARGO_BIN_EXE_pseudogb");
    let out = Command::new(bin)
        .args(["groebner", &fixture("sqrt10_ideal.toml")])
        .env("PSEUDOGB_VERBOSE", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("pair ("));

    let out = Command::new(bin)
        .args(["contract", &fixture("elliptic_curve.toml")])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
