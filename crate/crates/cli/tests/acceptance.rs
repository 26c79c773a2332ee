//! One pass/fail line per acceptance criterion. Every criterion builds a
//! deterministic text report; criterion 9 reruns the others and compares bytes.

use std::time::{Duration, Instant};

use mincsp::classify::classify;
use mincsp::gf2::Gf2Vector;
use mincsp::instance::random::{
    random_colored_graph, random_dcsp_star, random_evenodd, random_nc, random_oddset, random_satisfiable_cnf3,
};
use mincsp::instance::{ColoredGraph, NearestCodeword};
use mincsp::lp::rat;
use mincsp::reduce::{
    dcsp_b2_to_b3, dcsp_b3_to_nc, max3sat_assignment, max3sat_to_oddset, mkds_guess_to_oddset, mkds_inhabited_pairs,
    nc_to_oddset, oddset_self_improve, oddset_to_dcsp_b2, run_suite, Problem,
};
use mincsp::relation::library::*;
use mincsp::relation::{IhsPolarity, Language, Relation};
use mincsp::solve::{
    approx_ihsb, brute_force_dcsp, solve_bijunctive, solve_nc_exhaustive, solve_nc_syndrome, solve_oddset_coset,
    solve_oddset_enumeration, Status,
};
use mincsp_cli::experiment_mkds;

struct Outcome {
    pass: bool,
    /// Deterministic record of everything computed.
    report: String,
    summary: String,
}

fn outcome(failures: &[String], report: Vec<String>, summary: impl Into<String>) -> Outcome {
    let summary = summary.into();
    Outcome {
        pass: failures.is_empty(),
        report: report.join("\n"),
        summary: match failures.first() {
            None => summary,
            Some(f) => format!("{summary}; {} failures, first: {f}", failures.len()),
        },
    }
}

fn lang(rs: Vec<Relation>) -> Language {
    Language::new(rs).unwrap()
}

fn roster() -> Outcome {
    let cases = [
        (vec![negative_unit()], "POLY_VALID"),
        (vec![positive_unit()], "POLY_VALID"),
        (vec![implication()], "POLY_VALID"),
        (vec![xor(), implication()], "FPT_BIJUNCTIVE"),
        (vec![or(3), positive_unit(), negative_unit(), implication()], "APPROX_IHSB(3,+)"),
        (vec![nand(3), positive_unit(), negative_unit(), implication()], "APPROX_IHSB(3,-)"),
        (vec![even(4), positive_unit(), negative_unit()], "ODDSET_EQUIVALENT"),
        (vec![even(4), xor()], "ODDSET_EQUIVALENT"),
        (vec![clause_ppn(), positive_unit(), negative_unit()], "HARD_WP"),
        (vec![clause_nnp(), positive_unit(), negative_unit()], "HARD_WP"),
        (vec![nae()], "HARD_NP"),
    ];
    let mut report = Vec::new();
    let mut failures = Vec::new();
    for (i, (rs, want)) in cases.into_iter().enumerate() {
        let got = classify(&lang(rs)).unwrap().class.to_string();
        report.push(format!("{i} {got}"));
        if got != want {
            failures.push(format!("roster {i}: {got}, expected {want}"));
        }
    }
    outcome(&failures, report, "11 languages classified")
}

fn exact_solvers() -> Outcome {
    let bij = lang(vec![xor(), implication(), positive_unit(), negative_unit(), or(2)]);
    let mut report = Vec::new();
    let mut failures = Vec::new();
    for seed in 0..100u64 {
        let n = 4 + (seed % 9) as usize;
        let m = 8 + (seed % 17) as usize;
        let inst = random_dcsp_star(&bij, n, m, 0.1, seed);
        let brute = brute_force_dcsp(&inst).unwrap().cost;
        match solve_bijunctive(&inst, m) {
            Ok(out) if out.cost == brute => report.push(format!("bij {seed} {brute:?}")),
            other => failures.push(format!("bijunctive seed {seed}: {other:?} vs {brute:?}")),
        }
    }
    for seed in 0..100u64 {
        let n = 4 + (seed % 9) as usize;
        let e = random_evenodd(n, 2 + (seed % 7) as usize, 4, seed);
        let a = solve_oddset_enumeration(&e, n).unwrap();
        let b = solve_oddset_coset(&e, n).unwrap();
        report.push(format!("odd {seed} {:?} {:?}", a.cost, a.solution));
        if a.cost != b.cost || a.solution != b.solution {
            failures.push(format!("odd set seed {seed}: {:?} vs {:?}", a.cost, b.cost));
        }
    }
    for seed in 0..100u64 {
        let nc = random_nc(8, 6, seed);
        let (x, d) = solve_nc_exhaustive(&nc).unwrap();
        let (_, e) = solve_nc_syndrome(&nc).unwrap();
        report.push(format!("nc {seed} {d} {}", x.to_bit_string()));
        if d != e {
            failures.push(format!("nearest codeword seed {seed}: {d} vs {e}"));
        }
    }
    outcome(&failures, report, "300 instances against exhaustive search")
}

fn approximation() -> Outcome {
    let ihs = lang(vec![or(2), positive_unit(), negative_unit(), implication()]);
    let mut report = Vec::new();
    let mut failures = Vec::new();
    let mut worst = (0usize, 1usize);
    for seed in 0..200u64 {
        let n = 4 + (seed % 9) as usize;
        let m = 8 + (seed % 17) as usize;
        let inst = random_dcsp_star(&ihs, n, m, 0.0, seed);
        let opt = brute_force_dcsp(&inst).unwrap().cost.unwrap();
        let out = approx_ihsb(&inst, 2, IhsPolarity::Plus).unwrap();
        let cost = out.cost.unwrap();
        let lp = out.lp_value.clone().unwrap();
        report.push(format!("{seed} opt={opt} cost={cost} lp={lp} status={}", out.status));
        if out.status != Status::WithinRatio(3) || cost > 3 * opt || lp > rat(opt as i64) {
            failures.push(format!("seed {seed}: opt {opt}, cost {cost}, lp {lp}, {}", out.status));
        }
        if opt > 0 && cost * worst.1 > worst.0 * opt {
            worst = (cost, opt);
        }
    }
    outcome(&failures, report, format!("200 instances, worst cost/opt {}/{}", worst.0, worst.1))
}

/// Optima at NC, Odd Set, B2, B3 and NC again, and the cost of the terminal
/// optimum pulled back to the source.
fn cycle_stations(nc: &NearestCodeword) -> (Vec<usize>, usize) {
    let opt = |o: Option<usize>| o.expect("every station is feasible");
    let odd = nc_to_oddset(nc);
    let b2 = odd.then(|e| oddset_to_dcsp_b2(e).unwrap());
    let b3 = b2.then(|i| dcsp_b2_to_b3(i).unwrap());
    let stations_b2 = oddset_to_dcsp_b2(&nc_to_oddset(nc).target).unwrap().target;
    let mut opts = vec![
        opt(nc.optimum().unwrap().map(|s| s.1)),
        opt(nc_to_oddset(nc).target.optimum().unwrap().map(|s| s.1)),
        opt(stations_b2.optimum().unwrap().map(|s| s.1)),
        opt(b3.target.optimum().unwrap().map(|s| s.1)),
    ];
    let full = b3.then(|i| dcsp_b3_to_nc(i).unwrap());
    let (best, end) = full.target.optimum().unwrap().unwrap();
    opts.push(end);
    let back: Gf2Vector = full.pull_back(&best);
    (opts, nc.distance(&back))
}

fn cycle() -> Outcome {
    let mut report = Vec::new();
    let mut failures = Vec::new();
    for (rows, cols) in [(6, 8), (8, 6)] {
        for seed in 0..50u64 {
            let nc = random_nc(rows, cols, seed);
            let (opts, pulled) = cycle_stations(&nc);
            report.push(format!("{rows}x{cols} {seed} {opts:?} {pulled}"));
            if opts.windows(2).any(|w| w[0] != w[1]) || pulled != opts[0] {
                failures.push(format!("{rows}x{cols} seed {seed}: stations {opts:?}, pulled back {pulled}"));
            }
        }
    }
    outcome(&failures, report, "100 instances (6x8 and 8x6), five stations each")
}

fn reductions() -> Outcome {
    let mut report = Vec::new();
    let mut failures = Vec::new();
    for name in ["eliminate_undeletable", "add_constants", "evenodd_to_odd", "mcs_to_dcsp", "dualize"] {
        let r = run_suite(name, 50).unwrap();
        report.push(r.to_string());
        if let Some((seed, msg)) = r.failures.first() {
            failures.push(format!("{name} seed {seed}: {msg}"));
        }
    }
    let mutant = run_suite("eliminate_undeletable_mutant", 50).unwrap();
    report.push(mutant.to_string());
    if mutant.ok() {
        failures.push("corrupted copy count went unnoticed".to_string());
    }
    outcome(
        &failures,
        report,
        format!("5 suites x 50 seeds; mutant caught on {} seeds", mutant.failures.len()),
    )
}

fn squaring() -> Outcome {
    let mut report = Vec::new();
    let mut failures = Vec::new();
    for seed in 0..50u64 {
        let n = 1 + (seed % 4) as usize;
        let m = (seed / 4 % 5) as usize;
        let e = random_oddset(n, m, 3, seed);
        let k = e.optimum().unwrap().map(|s| s.1);
        let k2 = oddset_self_improve(&e).target.optimum().unwrap().map(|s| s.1);
        report.push(format!("{seed} {k:?} {k2:?}"));
        if k2 != k.map(|k| 1 + k + k * k) {
            failures.push(format!("seed {seed}: {k:?} then {k2:?}"));
        }
    }
    outcome(&failures, report, "50 instances with n, m <= 4")
}

fn rainbow_triangle() -> ColoredGraph {
    let mut g = ColoredGraph::new(3);
    for (name, c) in [("a", 0), ("b", 1), ("c", 2)] {
        g.add_vertex(name, c).unwrap();
    }
    for (u, v) in [(0, 1), (1, 2), (0, 2)] {
        g.add_edge(u, v).unwrap();
    }
    g
}

fn mkds() -> Outcome {
    let mut report = Vec::new();
    let mut failures = Vec::new();
    let graphs = std::iter::once(("triangle".to_string(), rainbow_triangle()))
        .chain((0..20u64).map(|s| (format!("seed {s}"), random_colored_graph(3, 3, 0.5, s))));
    for (label, g) in graphs {
        let (best, m) = g.densest_multicolored().unwrap();
        let found = experiment_mkds(&g).unwrap();
        let gadget = mkds_guess_to_oddset(&g, &mkds_inhabited_pairs(&g, &best)).unwrap();
        let opt = gadget.instance.optimum().unwrap().map(|s| s.1);
        report.push(format!("{label} m={m} found={} gadget={opt:?}", found.induced_edges));
        if found.induced_edges != m {
            failures.push(format!("{label}: recovered {} edges, maximum {m}", found.induced_edges));
        }
        if opt != Some(gadget.expected_size()) {
            failures.push(format!("{label}: gadget optimum {opt:?}, expected {}", gadget.expected_size()));
        }
    }
    outcome(&failures, report, "21 graphs")
}

fn max3sat() -> Outcome {
    let mut report = Vec::new();
    let mut failures = Vec::new();
    for seed in 0..20u64 {
        let (f, _) = random_satisfiable_cnf3(4 + (seed % 4) as usize, 3 + (seed % 4) as usize, seed);
        let gadget = max3sat_to_oddset(&f, 2).unwrap();
        let Some((t, cost)) = gadget.instance.optimum().unwrap() else {
            failures.push(format!("seed {seed}: gadget infeasible"));
            continue;
        };
        let a = max3sat_assignment(&gadget, &f, &t);
        report.push(format!("{seed} {cost} {t:?}"));
        if cost != 2 || !f.is_satisfied(&a) {
            failures.push(format!("seed {seed}: optimum {cost}, satisfied {}", f.satisfied_count(&a)));
        }
    }
    outcome(&failures, report, "20 satisfiable formulas, k = 2")
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

const CRITERIA: [Criterion; 8] = [
    ("classifier roster", roster, Duration::from_secs(1)),
    ("exact solvers match exhaustive search", exact_solvers, Duration::from_secs(120)),
    ("IHS-B approximation ratio", approximation, Duration::from_secs(300)),
    ("nearest codeword cycle", cycle, Duration::from_secs(300)),
    ("reduction suites and mutant", reductions, Duration::from_secs(180)),
    ("odd set squaring law", squaring, Duration::from_secs(300)),
    ("densest subgraph gadget", mkds, Duration::from_secs(300)),
    ("max-3-sat gadget", max3sat, Duration::from_secs(300)),
];

fn main() {
    let mut reports = Vec::new();
    let mut all = true;
    for (i, (name, run, limit)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        let pass = o.pass && elapsed <= *limit;
        all &= pass;
        println!(
            "criterion {}: {} {name}: {} ({} ms)",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            o.summary,
            elapsed.as_millis()
        );
        reports.push(o.report);
    }
    let same = CRITERIA.iter().zip(&reports).all(|((_, run, _), first)| run().report == *first);
    all &= same;
    println!(
        "criterion 9: {} determinism: {}",
        if same { "PASS" } else { "FAIL" },
        if same {
            "reruns are byte-identical"
        } else {
            "reruns differ"
        }
    );
    if !all {
        eprintln!("some acceptance criteria failed");
        std::process::exit(1);
    }
}
