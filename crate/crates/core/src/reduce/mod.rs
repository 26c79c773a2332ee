//! Executable reductions with solution pull-back.
//!
//! A [`ReductionArtifact`] carries the target instance, the declared kind
//! (cost-preserving or an A-reduction with constant `α`), and a map from target
//! solutions back to source solutions.

mod circuit;
mod cycle;
mod dcsp;
mod gadgets;
mod parity;
mod pp;
pub mod verify;

use std::fmt;

use rand::Rng;

pub use circuit::mcs_to_dcsp;
pub use cycle::{dcsp_b2_to_b3, dcsp_b3_to_nc, oddset_to_dcsp_b2};
pub use dcsp::{add_constants, dualize, eliminate_undeletable, eliminate_undeletable_with_copies};
pub use gadgets::{
    cnf_groups, kds_color_coding, max3sat_assignment, max3sat_to_oddset, mkds_guess_to_oddset, mkds_inhabited_pairs,
    mkds_vertices, Max3SatGadget, MkdsElement, MkdsGadget, MAX_GROUP_VARIABLES,
};
pub use parity::{evenodd_to_odd, nc_to_oddset, oddset_self_improve};
pub use pp::{check_pp_definition, even3_over_b2, odd_over_b2, pp_expand, Atom, PpDefinition};
pub use verify::{run_suite, verify_reduction, SuiteReport, VerifyReport, SUITES};

use crate::error::SolveError;
use crate::gf2::Gf2Vector;
use crate::instance::random::rng;
use crate::instance::{DcspInstance, DcspSolution, EvenOddSetInstance, MonotoneCircuit, NearestCodeword};
use crate::solve::{
    brute_force_dcsp, exact_dcsp, min_satisfying_weight, solve_nc_exact, solve_oddset_exact, NcEngine,
    OddSetEngine, Status,
};

/// Above this many variables the DCSP oracle switches to variable elimination.
pub const BRUTE_FORCE_ORACLE_VARIABLES: usize = 16;

/// An optimization problem with an exact oracle at desk scale.
pub trait Problem: Clone + 'static {
    type Solution: Clone + fmt::Debug + 'static;

    fn kind_name() -> &'static str;

    /// Cost of a feasible solution, `None` if the solution is not feasible.
    fn cost(&self, s: &Self::Solution) -> Option<usize>;

    /// An optimal solution with its cost, `None` if the instance has no feasible solution.
    fn optimum(&self) -> Result<Option<(Self::Solution, usize)>, SolveError>;

    fn to_text(&self) -> String;

    /// Up to `count` feasible solutions drawn from `seed`, for ratio checks.
    fn samples(&self, _seed: u64, _count: usize) -> Vec<Self::Solution> {
        Vec::new()
    }
}

impl Problem for DcspInstance {
    type Solution = DcspSolution;

    fn kind_name() -> &'static str {
        "dcsp"
    }

    fn cost(&self, s: &DcspSolution) -> Option<usize> {
        self.check_solution(s).then(|| s.cost())
    }

    /// Brute force up to the enumeration cap, variable elimination beyond it.
    fn optimum(&self) -> Result<Option<(DcspSolution, usize)>, SolveError> {
        if self.num_variables() <= BRUTE_FORCE_ORACLE_VARIABLES {
            let out = brute_force_dcsp(self)?;
            return Ok(out.solution.zip(out.cost));
        }
        Ok(exact_dcsp(self)?.map(|(c, a)| (DcspSolution::from_assignment(self, a), c)))
    }

    fn to_text(&self) -> String {
        DcspInstance::to_text(self)
    }

    /// Uniform assignments that respect the undeletable constraints.
    fn samples(&self, seed: u64, count: usize) -> Vec<DcspSolution> {
        let mut r = rng(seed);
        (0..count)
            .map(|_| (0..self.num_variables()).map(|_| r.gen_bool(0.5)).collect::<Vec<bool>>())
            .filter(|a| !self.violates_undeletable(a))
            .map(|a| DcspSolution::from_assignment(self, a))
            .collect()
    }
}

impl Problem for EvenOddSetInstance {
    /// Sorted element list.
    type Solution = Vec<usize>;

    fn kind_name() -> &'static str {
        "oddset"
    }

    fn cost(&self, t: &Vec<usize>) -> Option<usize> {
        self.check_parity_solution(t).then_some(t.len())
    }

    fn optimum(&self) -> Result<Option<(Vec<usize>, usize)>, SolveError> {
        let out = solve_oddset_exact(self, self.universe(), OddSetEngine::Auto)?;
        debug_assert_ne!(out.status, Status::BudgetExceeded);
        Ok(out.solution.zip(out.cost))
    }

    fn to_text(&self) -> String {
        EvenOddSetInstance::to_text(self)
    }
}

impl Problem for NearestCodeword {
    type Solution = Gf2Vector;

    fn kind_name() -> &'static str {
        "nc"
    }

    fn cost(&self, x: &Gf2Vector) -> Option<usize> {
        (x.len() == self.cols()).then(|| self.distance(x))
    }

    fn optimum(&self) -> Result<Option<(Gf2Vector, usize)>, SolveError> {
        solve_nc_exact(self, NcEngine::Auto).map(Some)
    }

    fn to_text(&self) -> String {
        NearestCodeword::to_text(self)
    }

    fn samples(&self, seed: u64, count: usize) -> Vec<Gf2Vector> {
        let mut r = rng(seed);
        (0..count)
            .map(|_| Gf2Vector::from_bits(&(0..self.cols()).map(|_| r.gen_bool(0.5)).collect::<Vec<_>>()))
            .collect()
    }
}

impl Problem for MonotoneCircuit {
    /// Input values in input order.
    type Solution = Vec<bool>;

    fn kind_name() -> &'static str {
        "mcirc"
    }

    fn cost(&self, inputs: &Vec<bool>) -> Option<usize> {
        (inputs.len() == self.num_inputs() && self.evaluate(inputs)).then(|| inputs.iter().filter(|&&b| b).count())
    }

    fn optimum(&self) -> Result<Option<(Vec<bool>, usize)>, SolveError> {
        min_satisfying_weight(self)
    }

    fn to_text(&self) -> String {
        MonotoneCircuit::to_text(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionKind {
    CostPreserving,
    /// Pulled-back cost is at most `alpha` times the target cost.
    AReduction { alpha: usize },
    /// Target optimum is `1 + k + k²` for source optimum `k`.
    Squaring,
}

impl ReductionKind {
    /// Ratio constant; `None` for squaring.
    pub fn alpha(self) -> Option<usize> {
        match self {
            ReductionKind::CostPreserving => Some(1),
            ReductionKind::AReduction { alpha } => Some(alpha),
            ReductionKind::Squaring => None,
        }
    }

    fn compose(self, other: ReductionKind) -> ReductionKind {
        match (self, other) {
            (ReductionKind::CostPreserving, ReductionKind::CostPreserving) => ReductionKind::CostPreserving,
            (a, b) => match (a.alpha(), b.alpha()) {
                (Some(x), Some(y)) => ReductionKind::AReduction { alpha: x * y },
                _ => ReductionKind::Squaring,
            },
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionKind::CostPreserving => f.write_str("cost_preserving"),
            ReductionKind::AReduction { alpha } => write!(f, "a_reduction({alpha})"),
            ReductionKind::Squaring => f.write_str("squaring"),
        }
    }
}

type PullBack<S, T> = Box<dyn Fn(&<T as Problem>::Solution) -> <S as Problem>::Solution>;

pub struct ReductionArtifact<S: Problem, T: Problem> {
    pub target: T,
    pub kind: ReductionKind,
    pub note: String,
    pull_back: PullBack<S, T>,
}

impl<S: Problem, T: Problem> ReductionArtifact<S, T> {
    pub fn new(
        target: T,
        kind: ReductionKind,
        note: impl Into<String>,
        pull_back: impl Fn(&T::Solution) -> S::Solution + 'static,
    ) -> Self {
        Self {
            target,
            kind,
            note: note.into(),
            pull_back: Box::new(pull_back),
        }
    }

    /// Maps a feasible target solution to a feasible source solution.
    pub fn pull_back(&self, s: &T::Solution) -> S::Solution {
        (self.pull_back)(s)
    }

    /// Chains a reduction from this target onward.
    pub fn then<U: Problem>(self, next: impl FnOnce(&T) -> ReductionArtifact<T, U>) -> ReductionArtifact<S, U> {
        let second = next(&self.target);
        let first_back = self.pull_back;
        let second_back = second.pull_back;
        ReductionArtifact {
            target: second.target,
            kind: self.kind.compose(second.kind),
            note: format!("{}; {}", self.note, second.note),
            pull_back: Box::new(move |s| first_back(&second_back(s))),
        }
    }
}

impl<S: Problem, T: Problem> fmt::Debug for ReductionArtifact<S, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ReductionArtifact")
            .field("source", &S::kind_name())
            .field("target", &T::kind_name())
            .field("kind", &self.kind)
            .field("note", &self.note)
            .finish()
    }
}
