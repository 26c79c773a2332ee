use std::fs;
use std::path::PathBuf;

use mincsp::instance::ColoredGraph;
use mincsp::instance::random::random_colored_graph;
use mincsp_cli::{experiment_mkds, experiment_recolored, run};

fn input(name: &str) -> String {
    format!("{}/../core/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn expected(name: &str) -> String {
    fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("mincsp").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no `{key}` in {out}"))
}

#[test]
fn golden_outputs() {
    let cases: [(&[&str], &str); 6] = [
        (&["classify", &input("nae.lang")], "classify_nae.txt"),
        (&["--flat", "classify", &input("nae.lang")], "classify_nae.flat"),
        (&["--flat", "solve", &input("triangle.dcsp"), "--k", "1"], "solve_triangle.flat"),
        (&["solve", &input("hitting.dcsp")], "solve_hitting.txt"),
        (&["--flat", "solve", &input("small.odds")], "solve_small_odds.flat"),
        (&["experiment-mkds", &input("rainbow.mkds")], "experiment_rainbow.txt"),
    ];
    for (args, golden) in cases {
        let (code, out, err) = cli(args);
        assert_eq!(code, 0, "{golden}: {err}");
        assert_eq!(out, expected(golden), "{golden}");
    }
}

#[test]
fn help_lists_every_flag() {
    let (code, top, _) = cli(&["--help"]);
    assert_eq!(code, 0);
    for sub in ["classify", "solve", "reduce", "verify", "gen", "experiment-mkds", "--flat"] {
        assert!(top.contains(sub), "{sub}");
    }
    let flags: [(&str, &[&str]); 6] = [
        ("classify", &["--flat"]),
        ("solve", &["--k", "--method", "--engine"]),
        ("reduce", &["--from", "--to", "--groups", "--pairs"]),
        ("verify", &["--reduction", "--seeds"]),
        ("gen", &["--seed", "--n", "--m", "--lang", "--p", "--max-size", "--classes", "--satisfiable", "--out"]),
        ("experiment-mkds", &["--k", "--seed", "--repetitions"]),
    ];
    for (sub, list) in flags {
        let (code, help, _) = cli(&[sub, "--help"]);
        assert_eq!(code, 0);
        for f in list {
            assert!(help.contains(f), "{sub} {f}");
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["solve", &input("triangle.dcsp"), "--k", "0"]).0, 1);
    assert_eq!(cli(&["solve", &input("small.nc"), "--k", "0"]).0, 1);
    assert_eq!(cli(&["solve", "/does/not/exist.dcsp"]).0, 2);
    assert_eq!(cli(&["solve", &input("nae.lang")]).0, 2);
    assert_eq!(cli(&["solve", &input("small.odds"), "--engine", "syndrome"]).0, 2);
    assert_eq!(cli(&["frobnicate"]).0, 2);
    assert_eq!(cli(&["solve", &input("triangle.dcsp"), "--k", "-1"]).0, 2);
    assert_eq!(cli(&["solve", &input("triangle.dcsp"), "--method", "ihsb"]).0, 2);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.odds");
    fs::write(&bad, "universe 2\nset odd 0 7\n").unwrap();
    let (code, _, err) = cli(&["solve", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");

    let infeasible = dir.path().join("inf.odds");
    fs::write(&infeasible, "universe 2\nset odd 0 1\nset even 0 1\n").unwrap();
    let (code, out, _) = cli(&["--flat", "solve", infeasible.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(field(&out, "status"), "infeasible");
}

#[test]
fn satisfiable_instance_with_zero_budget() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sat.dcsp");
    fs::write(&path, "relation imp 2\n00\n01\n11\nend\nvariables a b\nconstraint imp a b\n").unwrap();
    let (code, out, _) = cli(&["--flat", "solve", path.to_str().unwrap(), "--k", "0"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "cost"), "0");
}

#[test]
fn reducing_to_odd_set_matches_direct_solve() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..10 {
        let nc = dir.path().join(format!("{seed}.nc"));
        let odds = dir.path().join(format!("{seed}.odds"));
        let (nc_s, odds_s) = (nc.to_str().unwrap(), odds.to_str().unwrap());
        let seed_s = seed.to_string();
        assert_eq!(cli(&["gen", "nc", "--seed", &seed_s, "--n", "5", "--m", "8", "--out", nc_s]).0, 0);
        let (code, out, _) = cli(&["--flat", "reduce", "--from", "nc", "--to", "oddset", nc_s, odds_s]);
        assert_eq!(code, 0);
        assert_eq!(field(&out, "kind"), "cost_preserving");
        let direct = cli(&["--flat", "solve", nc_s, "--k", "5"]);
        let reduced = cli(&["--flat", "solve", odds_s, "--k", "5"]);
        assert_eq!(direct.0, reduced.0, "seed {seed}");
        assert_eq!(field(&direct.1, "cost"), field(&reduced.1, "cost"), "seed {seed}");
    }
}

#[test]
fn every_reduction_edge_runs() {
    let dir = tempfile::tempdir().unwrap();
    let out = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let edges: [(&str, &str, String); 10] = [
        ("evenodd", "oddset", input("small.odds")),
        ("oddset", "oddset-squared", input("small.odds")),
        ("dcsp", "dcsp-plain", input("hitting.dcsp")),
        ("dcsp", "dcsp-dual", input("hitting.dcsp")),
        ("mcirc", "dcsp", input("and_or.mcirc")),
        ("cnf", "oddset", input("small.cnf")),
        ("mkds", "oddset", input("rainbow.mkds")),
        ("nc", "oddset", input("small.nc")),
        ("dcsp", "dcsp-const", input("triangle.dcsp")),
        ("dcsp-b3", "nc", input("triangle.dcsp")),
    ];
    for (i, (from, to, src)) in edges.iter().enumerate() {
        let target = out(&format!("t{i}"));
        let (code, _, err) = cli(&["reduce", "--from", from, "--to", to, src, &target, "--pairs", "0-1,1-2"]);
        assert_eq!(code, 0, "{from} -> {to}: {err}");
        assert!(!fs::read_to_string(&target).unwrap().is_empty());
    }
    let (code, _, err) = cli(&["reduce", "--from", "nc", "--to", "dcsp", &input("small.nc"), &out("x")]);
    assert_eq!(code, 2);
    assert!(err.contains("no reduction"));
}

#[test]
fn generated_instances_are_reproducible_and_solvable() {
    for kind in ["dcsp", "oddset", "evenodd", "nc", "mcirc", "mkds", "cnf"] {
        let a = cli(&["gen", kind, "--seed", "11"]);
        let b = cli(&["gen", kind, "--seed", "11"]);
        assert_eq!(a.0, 0, "{kind}: {}", a.2);
        assert_eq!(a.1, b.1, "{kind}");
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.dcsp");
    let p = path.to_str().unwrap();
    assert_eq!(cli(&["gen", "dcsp", "--seed", "4", "--p", "0.2", "--out", p]).0, 0);
    let first = cli(&["--flat", "solve", p]);
    assert!(first.0 <= 1);
    assert_eq!(first, cli(&["--flat", "solve", p]));
    assert_eq!(cli(&["gen", "dcsp", "--p", "1.5"]).0, 2);
}

#[test]
fn verify_command() {
    let (code, out, _) = cli(&["--flat", "verify", "--reduction", "dualize", "--seeds", "5"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "failed"), "0");
    assert_eq!(cli(&["verify", "--reduction", "eliminate_undeletable_mutant", "--seeds", "50"]).0, 1);
    assert_eq!(cli(&["verify", "--reduction", "nope"]).0, 2);
}

#[test]
fn experiment_examples() {
    let mut edgeless = ColoredGraph::new(3);
    for c in 0..3 {
        edgeless.add_vertex(&format!("v{c}"), c).unwrap();
    }
    assert_eq!(experiment_mkds(&edgeless).unwrap().induced_edges, 0);
    for seed in 0..5 {
        let g = random_colored_graph(3, 3, 0.4, seed);
        assert_eq!(experiment_mkds(&g).unwrap().induced_edges, g.densest_multicolored().unwrap().1);
    }
    assert!(experiment_mkds(&ColoredGraph::new(5)).is_err());
    let triangle: ColoredGraph = fs::read_to_string(PathBuf::from(input("rainbow.mkds"))).unwrap().parse().unwrap();
    let recolored = experiment_recolored(&triangle, 3, 1, 10).unwrap();
    assert_eq!(recolored.guesses, 80);
    assert!(recolored.induced_edges <= 3);
    let (code, out, _) = cli(&["--flat", "experiment-mkds", &input("rainbow.mkds"), "--repetitions", "10", "--seed", "1"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "guesses"), "80");
}
