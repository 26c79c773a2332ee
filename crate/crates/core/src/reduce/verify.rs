//! Checking reductions against exact oracles, and the named seed suites.

use std::fmt;

use super::{
    add_constants, dcsp_b2_to_b3, dcsp_b3_to_nc, dualize, eliminate_undeletable, eliminate_undeletable_with_copies,
    evenodd_to_odd, mcs_to_dcsp, nc_to_oddset, odd_over_b2, oddset_self_improve, oddset_to_dcsp_b2, pp_expand,
    Problem, ReductionArtifact, ReductionKind,
};
use crate::error::ReductionError;
use crate::instance::random::{
    random_circuit, random_dcsp, random_dcsp_star, random_evenodd, random_nc, random_oddset,
};
use crate::relation::{library, Language};

/// Target solutions sampled per check, besides the optimal one.
const SAMPLES_PER_CHECK: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub passed: bool,
    /// The source had no feasible solution, so nothing was checked.
    pub skipped: bool,
    pub source_opt: Option<usize>,
    pub target_opt: Option<usize>,
    /// Cost of the pulled-back optimal target solution.
    pub pulled_cost: Option<usize>,
    pub message: String,
}

impl VerifyReport {
    fn skip(message: impl Into<String>) -> Self {
        Self {
            passed: true,
            skipped: true,
            source_opt: None,
            target_opt: None,
            pulled_cost: None,
            message: message.into(),
        }
    }
}

/// Compares optima of source and target with the exact oracles and checks the
/// pull-back of an optimal target solution, plus the ratio on sampled target
/// solutions. Failures carry the serialized source.
pub fn verify_reduction<S: Problem, T: Problem>(
    source: &S,
    artifact: &ReductionArtifact<S, T>,
    seed: u64,
) -> Result<VerifyReport, ReductionError> {
    let Some((_, opt_s)) = source.optimum()? else {
        return Ok(VerifyReport::skip("source is infeasible"));
    };
    let mut report = VerifyReport {
        passed: true,
        skipped: false,
        source_opt: Some(opt_s),
        target_opt: None,
        pulled_cost: None,
        message: String::new(),
    };
    let mut problems = Vec::new();
    match artifact.target.optimum()? {
        None => problems.push("target is infeasible for a feasible source".to_string()),
        Some((best, opt_t)) => {
            report.target_opt = Some(opt_t);
            let pulled = source.cost(&artifact.pull_back(&best));
            report.pulled_cost = pulled;
            match artifact.kind {
                ReductionKind::CostPreserving => {
                    if opt_t != opt_s {
                        problems.push(format!("optima differ: source {opt_s}, target {opt_t}"));
                    }
                    if pulled != Some(opt_s) {
                        problems.push(format!("optimal target pulls back to cost {pulled:?}, optimum is {opt_s}"));
                    }
                }
                ReductionKind::AReduction { alpha } => {
                    if opt_s > alpha * opt_t {
                        problems.push(format!("source optimum {opt_s} exceeds {alpha}·{opt_t}"));
                    }
                    if pulled.is_none_or(|c| c > alpha * opt_t) {
                        problems.push(format!("optimal target pulls back to cost {pulled:?}, bound {}", alpha * opt_t));
                    }
                }
                ReductionKind::Squaring => {
                    if opt_t != 1 + opt_s + opt_s * opt_s {
                        problems.push(format!("target optimum {opt_t}, expected 1 + {opt_s} + {opt_s}²"));
                    }
                    if pulled != Some(opt_s) {
                        problems.push(format!("optimal target pulls back to cost {pulled:?}, optimum is {opt_s}"));
                    }
                }
            }
        }
    }
    if let Some(alpha) = artifact.kind.alpha() {
        for s in artifact.target.samples(seed, SAMPLES_PER_CHECK) {
            let Some(cost) = artifact.target.cost(&s) else { continue };
            match source.cost(&artifact.pull_back(&s)) {
                Some(c) if c <= alpha * cost => {}
                other => problems.push(format!("sampled target cost {cost} pulls back to {other:?}")),
            }
        }
    }
    if !problems.is_empty() {
        report.passed = false;
        report.message = format!(
            "{}\n--- source ({}) ---\n{}",
            problems.join("; "),
            S::kind_name(),
            source.to_text()
        );
    }
    Ok(report)
}

/// Builds the reduction and verifies it; an infeasible source is a skip.
fn check<S: Problem, T: Problem>(
    source: S,
    build: impl FnOnce(&S) -> Result<ReductionArtifact<S, T>, ReductionError>,
    seed: u64,
) -> Result<VerifyReport, ReductionError> {
    match build(&source) {
        Ok(art) => verify_reduction(&source, &art, seed),
        Err(ReductionError::InfeasibleSource) => Ok(VerifyReport::skip("source is infeasible")),
        Err(e) => Err(e),
    }
}

pub const SUITES: &[&str] = &[
    "eliminate_undeletable",
    "eliminate_undeletable_mutant",
    "add_constants",
    "evenodd_to_odd",
    "mcs_to_dcsp",
    "dualize",
    "nc_to_oddset",
    "oddset_to_dcsp_b2",
    "dcsp_b2_to_b3",
    "dcsp_b3_to_nc",
    "pp_expand",
    "oddset_self_improve",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub passed: usize,
    pub skipped: usize,
    /// `(seed, message)` per failing seed, ascending.
    pub failures: Vec<(u64, String)>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "suite={} passed={} skipped={} failed={}",
            self.name,
            self.passed,
            self.skipped,
            self.failures.len()
        )
    }
}

fn unit_language() -> Language {
    Language::new(vec![library::implication(), library::positive_unit(), library::negative_unit()])
        .expect("distinct names")
}

fn run_seed(name: &str, seed: u64) -> Result<VerifyReport, ReductionError> {
    let n = 6 + (seed % 5) as usize;
    match name {
        "eliminate_undeletable" => check(random_dcsp_star(&unit_language(), n, 8, 0.3, seed), eliminate_undeletable, seed),
        "eliminate_undeletable_mutant" => check(
            random_dcsp_star(&unit_language(), n, 8, 0.3, seed),
            |i| eliminate_undeletable_with_copies(i, 1),
            seed,
        ),
        "add_constants" => check(random_dcsp_star(&library::b2(), 6, 6, 0.2, seed), add_constants, seed),
        "evenodd_to_odd" => check(random_evenodd(n, 5, 4, seed), |e| Ok(evenodd_to_odd(e)), seed),
        "mcs_to_dcsp" => check(random_circuit(4, 6, seed), mcs_to_dcsp, seed),
        "dualize" => {
            let lang = Language::new(vec![library::clause_nnp(), library::positive_unit(), library::negative_unit()])
                .expect("distinct names");
            check(random_dcsp_star(&lang, n, 10, 0.2, seed), |i| Ok(dualize(i)), seed)
        }
        "nc_to_oddset" => check(random_nc(8, 6, seed), |nc| Ok(nc_to_oddset(nc)), seed),
        "oddset_to_dcsp_b2" => check(random_oddset(6, 4, 3, seed), oddset_to_dcsp_b2, seed),
        "dcsp_b2_to_b3" => check(random_dcsp(&library::b2(), 5, 6, seed), dcsp_b2_to_b3, seed),
        "dcsp_b3_to_nc" => check(random_dcsp(&library::b3(), n, 10, seed), dcsp_b3_to_nc, seed),
        "pp_expand" => {
            let lang = Language::new(vec![
                library::odd(3),
                library::even(4),
                library::positive_unit(),
                library::negative_unit(),
            ])
            .expect("distinct names");
            check(
                random_dcsp_star(&lang, 6, 6, 0.2, seed),
                |i| pp_expand(i, &odd_over_b2(3), &library::b2()),
                seed,
            )
        }
        "oddset_self_improve" => {
            let size = 1 + (seed % 4) as usize;
            check(random_oddset(size, 1 + (seed / 4 % 4) as usize, 3, seed), |e| Ok(oddset_self_improve(e)), seed)
        }
        other => Err(ReductionError::Precondition(format!("unknown suite `{other}`"))),
    }
}

/// Runs seeds `0..seeds` of a named suite in seed order.
pub fn run_suite(name: &str, seeds: u64) -> Result<SuiteReport, ReductionError> {
    let mut out = SuiteReport {
        name: name.to_string(),
        passed: 0,
        skipped: 0,
        failures: Vec::new(),
    };
    for seed in 0..seeds {
        let r = run_seed(name, seed)?;
        if r.skipped {
            out.skipped += 1;
        } else if r.passed {
            out.passed += 1;
        } else {
            out.failures.push((seed, r.message));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suite("nope", 1).is_err());
    }

    #[test]
    fn mutant_is_caught() {
        let r = run_suite("eliminate_undeletable_mutant", 50).unwrap();
        assert!(!r.ok());
        assert!(r.failures[0].1.contains("--- source (dcsp) ---"));
    }

    #[test]
    fn every_suite_passes_a_few_seeds() {
        for name in SUITES.iter().filter(|n| !n.ends_with("mutant")) {
            let r = run_suite(name, 5).unwrap();
            assert!(r.ok(), "{name}: {:?}", r.failures);
        }
    }
}
