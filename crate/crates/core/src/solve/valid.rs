use super::{Outcome, SolveOutcome, Status};
use crate::error::SolveError;
use crate::instance::{DcspInstance, DcspSolution};

/// Constant assignment for 0-valid (tried first) or 1-valid languages.
pub fn solve_valid(inst: &DcspInstance) -> Result<SolveOutcome, SolveError> {
    let lang = inst.language();
    let value = if lang.relations().iter().all(|r| r.is_zero_valid()) {
        false
    } else if lang.relations().iter().all(|r| r.is_one_valid()) {
        true
    } else {
        return Err(SolveError::Precondition(
            "language is neither 0-valid nor 1-valid".to_string(),
        ));
    };
    let assignment = vec![value; inst.num_variables()];
    debug_assert!(inst.violated(&assignment).is_empty());
    Ok(Outcome::found(
        Status::Optimal,
        DcspSolution {
            deletion: Vec::new(),
            assignment,
        },
        0,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::random::random_dcsp;
    use crate::relation::{library, Language};

    #[test]
    fn constant_witnesses() {
        let zero = Language::new(vec![library::implication(), library::negative_unit()]).unwrap();
        let out = solve_valid(&random_dcsp(&zero, 4, 8, 1)).unwrap();
        assert_eq!(out.cost, Some(0));
        assert!(out.solution.unwrap().assignment.iter().all(|&b| !b));

        let one = Language::new(vec![library::implication(), library::positive_unit()]).unwrap();
        let out = solve_valid(&random_dcsp(&one, 4, 8, 1)).unwrap();
        assert!(out.solution.unwrap().assignment.iter().all(|&b| b));

        let neither = Language::new(vec![library::positive_unit(), library::negative_unit()]).unwrap();
        assert!(solve_valid(&random_dcsp(&neither, 2, 2, 1)).is_err());
    }
}
