//! Solvers for each class, the exact oracles, and the dispatcher.

mod auto;
mod bijunctive;
mod brute;
pub mod elimination;
mod ihsb;
mod nc;
mod oddset;
mod valid;

use std::fmt;

pub use auto::solve_auto;
pub use bijunctive::{binary_clause_groups, solve_bijunctive};
pub use brute::{brute_force_dcsp, min_satisfying_weight, MAX_BRUTE_FORCE_VARIABLES};
pub use elimination::{exact_dcsp, exact_nc};
pub use ihsb::{approx_ihsb, ihs_ratio};
pub use nc::{solve_nc_exact, solve_nc_exhaustive, solve_nc_syndrome, NcEngine};
pub use oddset::{solve_oddset_coset, solve_oddset_enumeration, solve_oddset_exact, OddSetEngine};
pub use valid::solve_valid;

use crate::instance::DcspSolution;
use crate::lp::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Optimal,
    /// Cost is at most this factor times the optimum.
    WithinRatio(usize),
    BudgetExceeded,
    Infeasible,
}

impl Status {
    pub fn is_success(self) -> bool {
        matches!(self, Status::Optimal | Status::WithinRatio(_))
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Optimal => f.write_str("optimal"),
            Status::WithinRatio(r) => write!(f, "within_ratio({r})"),
            Status::BudgetExceeded => f.write_str("budget_exceeded"),
            Status::Infeasible => f.write_str("infeasible"),
        }
    }
}

/// Result of a solver run. `solution` is present on success, and may be present
/// with `BudgetExceeded` when an approximation found something over budget.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome<S> {
    pub status: Status,
    pub solution: Option<S>,
    pub cost: Option<usize>,
    pub notes: Vec<String>,
    /// Optimum of the LP relaxation, for solvers that use one.
    pub lp_value: Option<Rational>,
}

pub type SolveOutcome = Outcome<DcspSolution>;

impl<S> Outcome<S> {
    pub fn found(status: Status, solution: S, cost: usize) -> Self {
        Self {
            status,
            solution: Some(solution),
            cost: Some(cost),
            notes: Vec::new(),
            lp_value: None,
        }
    }

    pub fn empty(status: Status) -> Self {
        Self {
            status,
            solution: None,
            cost: None,
            notes: Vec::new(),
            lp_value: None,
        }
    }

    pub fn infeasible() -> Self {
        Self::empty(Status::Infeasible)
    }

    pub fn budget_exceeded() -> Self {
        Self::empty(Status::BudgetExceeded)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Downgrades an exact result whose cost exceeds `k`, or a ratio-`r` result
    /// whose cost exceeds `r·k` (which certifies that the optimum exceeds `k`).
    /// The approximate solution is kept.
    pub fn within_budget(self, k: usize) -> Self {
        match (self.status, self.cost) {
            (Status::Optimal, Some(c)) if c > k => Self {
                status: Status::BudgetExceeded,
                solution: None,
                cost: None,
                ..self
            },
            (Status::WithinRatio(r), Some(c)) if c > r.saturating_mul(k) => Self {
                status: Status::BudgetExceeded,
                ..self
            },
            _ => self,
        }
    }

    pub fn map<T>(self, f: impl FnOnce(S) -> T) -> Outcome<T> {
        Outcome {
            status: self.status,
            solution: self.solution.map(f),
            cost: self.cost,
            notes: self.notes,
            lp_value: self.lp_value,
        }
    }
}
