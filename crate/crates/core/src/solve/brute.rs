//! Exhaustive oracles.

use super::{Outcome, SolveOutcome, Status};
use crate::error::SolveError;
use crate::instance::{DcspInstance, DcspSolution, MonotoneCircuit};

pub const MAX_BRUTE_FORCE_VARIABLES: usize = 24;

/// Per-constraint evaluation data: scope bit positions and membership table.
struct Compiled<'a> {
    scopes: Vec<Vec<u32>>,
    inst: &'a DcspInstance,
}

impl<'a> Compiled<'a> {
    fn new(inst: &'a DcspInstance) -> Self {
        let n = inst.num_variables() as u32;
        let scopes = inst
            .constraints()
            .iter()
            .map(|c| c.scope.iter().map(|&v| n - 1 - v as u32).collect())
            .collect();
        Self { scopes, inst }
    }

    fn satisfied(&self, i: usize, code: u32) -> bool {
        let t = self.scopes[i].iter().fold(0u32, |acc, &b| (acc << 1) | (code >> b & 1));
        self.inst.relation_of(i).contains(t)
    }
}

fn decode(n: usize, code: u32) -> Vec<bool> {
    (0..n).map(|v| code >> (n - 1 - v) & 1 == 1).collect()
}

/// Enumerates all assignments. Picks minimum cost, then lexicographically least
/// deletion set, then the lexicographically least witness.
pub fn brute_force_dcsp(inst: &DcspInstance) -> Result<SolveOutcome, SolveError> {
    let n = inst.num_variables();
    if n > MAX_BRUTE_FORCE_VARIABLES {
        return Err(SolveError::TooLarge(format!(
            "{n} variables exceed the brute-force cap of {MAX_BRUTE_FORCE_VARIABLES}"
        )));
    }
    let compiled = Compiled::new(inst);
    let undeletable: Vec<usize> = (0..inst.num_constraints())
        .filter(|&i| inst.constraint(i).undeletable)
        .collect();
    let deletable = inst.deletable();
    let mut best: Option<(Vec<usize>, u32)> = None;
    let mut violated = Vec::with_capacity(deletable.len());
    'codes: for code in 0..(1u64 << n) as u32 {
        for &i in &undeletable {
            if !compiled.satisfied(i, code) {
                continue 'codes;
            }
        }
        violated.clear();
        for &i in &deletable {
            if !compiled.satisfied(i, code) {
                violated.push(i);
                if let Some((w, _)) = &best {
                    if violated.len() > w.len() {
                        continue 'codes;
                    }
                }
            }
        }
        let better = match &best {
            None => true,
            Some((w, _)) => (violated.len(), &violated) < (w.len(), w),
        };
        if better {
            best = Some((violated.clone(), code));
        }
    }
    Ok(match best {
        None => Outcome::infeasible(),
        Some((deletion, code)) => {
            let cost = deletion.len();
            Outcome::found(
                Status::Optimal,
                DcspSolution {
                    deletion,
                    assignment: decode(n, code),
                },
                cost,
            )
        }
    })
}

/// Minimum number of true inputs making the output true, with the lexicographically
/// least such input vector (input 0 first). `None` if even all-true fails.
pub fn min_satisfying_weight(c: &MonotoneCircuit) -> Result<Option<(Vec<bool>, usize)>, SolveError> {
    let n = c.num_inputs();
    if n > MAX_BRUTE_FORCE_VARIABLES {
        return Err(SolveError::TooLarge(format!("{n} circuit inputs exceed the cap")));
    }
    let mut best: Option<(u32, usize)> = None;
    for code in 0..(1u64 << n) as u32 {
        let w = code.count_ones() as usize;
        if best.is_some_and(|(_, bw)| w >= bw) {
            continue;
        }
        let inputs = decode(n, code);
        if c.evaluate(&inputs) {
            best = Some((code, w));
        }
    }
    Ok(best.map(|(code, w)| (decode(n, code), w)))
}
