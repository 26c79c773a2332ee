//! Dispatch by trichotomy class.

use super::{
    approx_ihsb, brute_force_dcsp, solve_bijunctive, solve_oddset_exact, solve_valid, OddSetEngine, Outcome,
    SolveOutcome, Status,
};
use crate::classify::{classify, TrichotomyClass};
use crate::error::SolveError;
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::instance::{DcspInstance, DcspSolution, NearestCodeword};
use crate::reduce::nc_to_oddset;
use crate::relation::affine_equations;

/// Classifies the language and runs the matching solver. Exact results above `k`
/// become `BudgetExceeded`, as do approximate results above `ratio·k`.
pub fn solve_auto(inst: &DcspInstance, k: usize) -> Result<SolveOutcome, SolveError> {
    let class = classify(inst.language())?.class;
    let out = match class {
        TrichotomyClass::PolyValid => solve_valid(inst)?,
        TrichotomyClass::FptBijunctive => solve_bijunctive(inst, k)?,
        TrichotomyClass::ApproxIhsb { width, polarity } => approx_ihsb(inst, width, polarity)?,
        TrichotomyClass::OddsetEquivalent => solve_affine(inst)?,
        TrichotomyClass::HardNp | TrichotomyClass::HardWp => brute_force_dcsp(inst)?
            .with_note(format!("warning: {class} language, exact answer by exhaustive search")),
    };
    Ok(out.with_note(format!("class={class}")).within_budget(k))
}

/// Affine languages: every constraint becomes its parity equations, giving a
/// Nearest Codeword instance that is solved through Odd Set. Undeletable
/// equations are repeated past the largest possible deletable cost. With at most
/// one equation per constraint the result is exact, otherwise within the largest
/// equation count.
fn solve_affine(inst: &DcspInstance) -> Result<SolveOutcome, SolveError> {
    let n = inst.num_variables();
    let mut soft: Vec<(Gf2Vector, bool)> = Vec::new();
    let mut hard: Vec<(Gf2Vector, bool)> = Vec::new();
    let mut alpha = 1;
    for (i, c) in inst.constraints().iter().enumerate() {
        let r = inst.relation_of(i);
        let equations = affine_equations(r)
            .ok_or_else(|| SolveError::Precondition(format!("relation `{}` is not affine", r.label())))?;
        let mut rows = Vec::new();
        for eq in &equations {
            let mut row = Gf2Vector::zeros(n);
            for &coord in &eq.coords {
                row.flip(c.scope[coord]);
            }
            if !row.is_zero() || eq.odd {
                rows.push((row, eq.odd));
            }
        }
        alpha = alpha.max(rows.len());
        if c.undeletable {
            hard.extend(rows);
        } else {
            soft.extend(rows);
        }
    }
    let hard_matrix = Gf2Matrix::from_rows(n, hard.iter().map(|(r, _)| r.clone()).collect());
    let hard_target = Gf2Vector::from_bits(&hard.iter().map(|(_, b)| *b).collect::<Vec<_>>());
    if hard_matrix.solve(&hard_target).is_none() {
        return Ok(Outcome::infeasible());
    }
    let copies = soft.len() + 1;
    let mut rows = soft.clone();
    for h in &hard {
        rows.extend(std::iter::repeat_n(h.clone(), copies));
    }
    let nc = NearestCodeword::new(
        Gf2Matrix::from_rows(n, rows.iter().map(|(r, _)| r.clone()).collect()),
        Gf2Vector::from_bits(&rows.iter().map(|(_, b)| *b).collect::<Vec<_>>()),
    )
    .expect("one target bit per row");
    let artifact = nc_to_oddset(&nc);
    let odd = solve_oddset_exact(&artifact.target, artifact.target.universe(), OddSetEngine::Auto)?;
    let t = odd.solution.expect("nearest codeword instances always have a solution");
    let x = artifact.pull_back(&t);
    let solution = DcspSolution::from_assignment(inst, x.bits());
    debug_assert!(!inst.violates_undeletable(&solution.assignment));
    let cost = solution.cost();
    let status = if alpha == 1 {
        Status::Optimal
    } else {
        Status::WithinRatio(alpha)
    };
    Ok(Outcome::found(status, solution, cost).with_note("solver=affine via nearest codeword and odd set"))
}
