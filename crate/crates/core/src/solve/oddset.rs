//! Exact Odd Set (and Even/Odd Set) solvers.
//!
//! Solutions are sorted element lists. Among minimum solutions both engines
//! return the one whose indicator bit-string (element 0 first) is least.

use super::{Outcome, Status};
use crate::error::SolveError;
use crate::gf2::{min_weight_affine_solution, Gf2Matrix, Gf2Vector, MAX_FREE_VARIABLES};
use crate::instance::EvenOddSetInstance;

/// Most subsets the enumeration engine will visit.
pub const MAX_ENUMERATED_SUBSETS: u128 = 1 << 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OddSetEngine {
    /// Subsets by increasing size.
    Enumeration,
    /// Minimum-weight solution of the GF(2) parity system.
    Coset,
    /// Coset when the system has at most 24 free variables, enumeration otherwise.
    #[default]
    Auto,
}

/// Set-by-element incidence matrix and parity targets: `T` is a solution iff
/// `A·1_T = t`.
pub fn parity_system(e: &EvenOddSetInstance) -> (Gf2Matrix, Gf2Vector) {
    let rows = e
        .sets()
        .iter()
        .map(|s| {
            let mut row = Gf2Vector::zeros(e.universe());
            for &x in &s.elements {
                row.set(x, true);
            }
            row
        })
        .collect();
    let target: Vec<bool> = e.sets().iter().map(|s| s.odd).collect();
    (Gf2Matrix::from_rows(e.universe(), rows), Gf2Vector::from_bits(&target))
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Engine (a). Subsets are tried by increasing size, and the enumeration cap
/// applies to the sizes actually reached. Inconsistent parity systems are
/// infeasible outright; otherwise an unmet search reports `BudgetExceeded`.
pub fn solve_oddset_enumeration(e: &EvenOddSetInstance, k: usize) -> Result<Outcome<Vec<usize>>, SolveError> {
    let n = e.universe();
    let top = k.min(n);
    let (a, t) = parity_system(e);
    if a.solve(&t).is_none() {
        return Ok(Outcome::infeasible());
    }
    let words = e.num_sets().div_ceil(64);
    let mut signature = vec![vec![0u64; words]; n];
    let mut target = vec![0u64; words];
    for (i, s) in e.sets().iter().enumerate() {
        for &x in &s.elements {
            signature[x][i / 64] |= 1 << (i % 64);
        }
        if s.odd {
            target[i / 64] |= 1 << (i % 64);
        }
    }
    // position p = n-1-x stands for element x; colex order on positions is
    // ascending bit-string order with element 0 as the leading bit
    let mut acc = vec![0u64; words];
    let mut enumerated = 0u128;
    for size in 0..=top {
        enumerated += binomial(n, size);
        if enumerated > MAX_ENUMERATED_SUBSETS {
            return Err(SolveError::TooLarge(format!(
                "enumerating subsets of size ≤ {size} from {n} elements"
            )));
        }
        let mut pos: Vec<usize> = (0..size).collect();
        loop {
            acc.iter_mut().for_each(|w| *w = 0);
            for &p in &pos {
                for (a, s) in acc.iter_mut().zip(&signature[n - 1 - p]) {
                    *a ^= s;
                }
            }
            if acc == target {
                let mut t: Vec<usize> = pos.iter().map(|&p| n - 1 - p).collect();
                t.sort_unstable();
                return Ok(Outcome::found(Status::Optimal, t, size));
            }
            let Some(j) = (0..size).find(|&j| pos[j] + 1 != pos.get(j + 1).copied().unwrap_or(n)) else {
                break;
            };
            pos[j] += 1;
            for (i, p) in pos.iter_mut().enumerate().take(j) {
                *p = i;
            }
        }
    }
    Ok(if k >= n {
        Outcome::infeasible()
    } else {
        Outcome::budget_exceeded()
    })
}

/// Engine (b).
pub fn solve_oddset_coset(e: &EvenOddSetInstance, k: usize) -> Result<Outcome<Vec<usize>>, SolveError> {
    let (a, t) = parity_system(e);
    Ok(match min_weight_affine_solution(&a, &t)? {
        None => Outcome::infeasible(),
        Some((_, w)) if w > k => Outcome::budget_exceeded(),
        Some((x, w)) => Outcome::found(Status::Optimal, x.support(), w),
    })
}

pub fn solve_oddset_exact(
    e: &EvenOddSetInstance,
    k: usize,
    engine: OddSetEngine,
) -> Result<Outcome<Vec<usize>>, SolveError> {
    match engine {
        OddSetEngine::Enumeration => solve_oddset_enumeration(e, k),
        OddSetEngine::Coset => solve_oddset_coset(e, k),
        OddSetEngine::Auto => {
            let (a, _) = parity_system(e);
            if e.universe() - a.rank() <= MAX_FREE_VARIABLES {
                solve_oddset_coset(e, k)
            } else {
                solve_oddset_enumeration(e, k)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::random::{random_evenodd, random_oddset};

    #[test]
    fn units_force_both() {
        let e = EvenOddSetInstance::odd_sets(2, &[vec![0], vec![1]]).unwrap();
        for engine in [OddSetEngine::Enumeration, OddSetEngine::Coset] {
            let out = solve_oddset_exact(&e, 2, engine).unwrap();
            assert_eq!(out.solution, Some(vec![0, 1]));
            assert_eq!(out.cost, Some(2));
            assert_eq!(solve_oddset_exact(&e, 1, engine).unwrap().status, Status::BudgetExceeded);
        }
    }

    #[test]
    fn empty_odd_set_is_infeasible() {
        let e = EvenOddSetInstance::odd_sets(3, &[vec![]]).unwrap();
        assert_eq!(solve_oddset_enumeration(&e, 3).unwrap().status, Status::Infeasible);
        assert_eq!(solve_oddset_coset(&e, 0).unwrap().status, Status::Infeasible);
    }

    #[test]
    fn tie_break_prefers_later_elements() {
        let e = EvenOddSetInstance::odd_sets(2, &[vec![0, 1]]).unwrap();
        assert_eq!(solve_oddset_enumeration(&e, 2).unwrap().solution, Some(vec![1]));
        assert_eq!(solve_oddset_coset(&e, 2).unwrap().solution, Some(vec![1]));
    }

    #[test]
    fn engines_agree() {
        for seed in 0..100 {
            let e = if seed % 2 == 0 {
                random_oddset(10, 8, 4, seed)
            } else {
                random_evenodd(10, 8, 4, seed)
            };
            let a = solve_oddset_enumeration(&e, 10).unwrap();
            let b = solve_oddset_coset(&e, 10).unwrap();
            assert_eq!(a, b, "seed {seed}");
            if let Some(t) = &a.solution {
                assert!(e.check_parity_solution(t));
            }
        }
    }
}
