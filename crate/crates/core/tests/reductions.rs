use mincsp::gf2::Gf2Vector;
use mincsp::instance::random::random_nc;
use mincsp::instance::NearestCodeword;
use mincsp::reduce::{
    dcsp_b2_to_b3, dcsp_b3_to_nc, eliminate_undeletable, nc_to_oddset, oddset_to_dcsp_b2, run_suite, Problem,
    ReductionKind, SUITES,
};

#[test]
fn all_suites_pass_fifty_seeds() {
    for name in SUITES.iter().filter(|n| !n.ends_with("mutant")) {
        let r = run_suite(name, 50).unwrap();
        assert!(r.ok(), "{r}: {:?}", r.failures.first());
        assert!(r.passed >= 25, "{r}");
    }
}

#[test]
fn mutant_copy_count_fails() {
    let r = run_suite("eliminate_undeletable_mutant", 50).unwrap();
    assert!(!r.failures.is_empty(), "{r}");
}

#[test]
fn suite_reports_are_deterministic() {
    assert_eq!(run_suite("nc_to_oddset", 10).unwrap(), run_suite("nc_to_oddset", 10).unwrap());
}

/// Optimum at every station of NC → Odd Set → B2 → B3 → NC, and the terminal
/// optimum pulled back through the whole chain.
fn cycle(nc: &NearestCodeword) -> (Vec<usize>, usize) {
    let to_odd = nc_to_oddset(nc);
    let to_b2 = to_odd.then(|odd| oddset_to_dcsp_b2(odd).unwrap());
    let to_b3 = to_b2.then(|b2| {
        let plain = eliminate_undeletable(b2).unwrap();
        plain.then(|p| dcsp_b2_to_b3(p).unwrap())
    });
    let odd_opt = nc_to_oddset(nc).target.optimum().unwrap().unwrap().1;
    let b2 = oddset_to_dcsp_b2(&nc_to_oddset(nc).target).unwrap().target;
    let b2_opt = b2.optimum().unwrap().unwrap().1;
    let b3_opt = to_b3.target.optimum().unwrap().unwrap().1;
    let full = to_b3.then(|b3| dcsp_b3_to_nc(b3).unwrap());
    assert_eq!(full.kind, ReductionKind::CostPreserving);
    let (best, end_opt) = full.target.optimum().unwrap().unwrap();
    let back: Gf2Vector = full.pull_back(&best);
    (vec![nc.optimum().unwrap().unwrap().1, odd_opt, b2_opt, b3_opt, end_opt], nc.distance(&back))
}

#[test]
fn codeword_cycle_preserves_optimum() {
    for (rows, cols) in [(6, 8), (8, 6)] {
        for seed in 0..10 {
            let nc = random_nc(rows, cols, seed);
            let (opts, pulled) = cycle(&nc);
            assert!(opts.windows(2).all(|w| w[0] == w[1]), "{rows}x{cols} seed {seed}: {opts:?}");
            assert_eq!(pulled, opts[0], "{rows}x{cols} seed {seed}");
        }
    }
}
