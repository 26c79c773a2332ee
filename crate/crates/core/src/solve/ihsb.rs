//! LP rounding for IHS-B languages.
//!
//! Each constraint becomes its group of IHS clauses sharing one deletion
//! variable `z`. The relaxation is solved exactly and rounded by the best
//! threshold in `(0, 1/(B+1)]`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{Outcome, SolveOutcome, Status};
use crate::error::SolveError;
use crate::instance::{DcspInstance, DcspSolution};
use crate::lp::{rat, ratio, LinearProgram, LpResult, Rational, Sense};
use crate::relation::{clause_decomposition, prime_clauses, Clause, IhsPolarity, Language};

fn groups_for(lang: &Language, b: usize, polarity: IhsPolarity) -> Result<Vec<Vec<Clause>>, SolveError> {
    let family = polarity.family(b);
    lang.relations()
        .iter()
        .map(|r| {
            clause_decomposition(r, &family)
                .map(|c| prime_clauses(&c))
                .ok_or_else(|| {
                    SolveError::Precondition(format!(
                        "relation `{}` is not IHS-{b}{}",
                        r.label(),
                        polarity.sign()
                    ))
                })
        })
        .collect()
}

/// Guaranteed ratio `c·(B+1)`, where `c` is the largest clause group of a relation
/// (at least 1). `None` if the language is not IHS-B of that polarity.
pub fn ihs_ratio(lang: &Language, b: usize, polarity: IhsPolarity) -> Option<usize> {
    let groups = groups_for(lang, b, polarity).ok()?;
    let c = groups.iter().map(Vec::len).max().unwrap_or(0).max(1);
    Some(c * (b + 1))
}

/// `(B+1)`-style approximation for IHS-B instances. Minus polarity is handled by
/// solving the complemented instance and complementing the witness.
pub fn approx_ihsb(inst: &DcspInstance, b: usize, polarity: IhsPolarity) -> Result<SolveOutcome, SolveError> {
    let b = b.max(1);
    let ratio_bound = ihs_ratio(inst.language(), b, polarity).ok_or_else(|| {
        SolveError::Precondition(format!("language is not IHS-{b}{}", polarity.sign()))
    })?;
    match polarity {
        IhsPolarity::Plus => approx_plus(inst, b, ratio_bound),
        IhsPolarity::Minus => {
            let out = approx_plus(&inst.dualized(), b, ratio_bound)?;
            Ok(out.map(|s| DcspSolution {
                deletion: s.deletion,
                assignment: s.assignment.iter().map(|&v| !v).collect(),
            }))
        }
    }
}

fn approx_plus(inst: &DcspInstance, b: usize, ratio_bound: usize) -> Result<SolveOutcome, SolveError> {
    let groups = groups_for(inst.language(), b, IhsPolarity::Plus)?;
    let n = inst.num_variables();
    let deletable = inst.deletable();
    let z_of: HashMap<usize, usize> = deletable.iter().enumerate().map(|(k, &j)| (j, n + k)).collect();
    let mut lp = LinearProgram::new(n + deletable.len());
    for k in 0..deletable.len() {
        lp.objective[n + k] = Rational::one();
    }
    for (j, c) in inst.constraints().iter().enumerate() {
        for clause in &groups[c.relation] {
            // Σ positives − negative + z ≥ 1 − #negatives, after folding repeated variables
            let mut coeff: HashMap<usize, i64> = HashMap::new();
            let mut pos = Vec::new();
            let mut neg = Vec::new();
            for l in clause.literals() {
                let v = c.scope[l.coord];
                if l.positive {
                    pos.push(v);
                } else {
                    neg.push(v);
                }
            }
            pos.sort_unstable();
            pos.dedup();
            neg.sort_unstable();
            neg.dedup();
            if pos.iter().any(|v| neg.contains(v)) {
                continue;
            }
            for &v in &pos {
                *coeff.entry(v).or_default() += 1;
            }
            for &v in &neg {
                *coeff.entry(v).or_default() -= 1;
            }
            let mut row: Vec<(usize, Rational)> = coeff.into_iter().map(|(v, a)| (v, rat(a))).collect();
            row.sort_by_key(|(v, _)| *v);
            if let Some(&z) = z_of.get(&j) {
                row.push((z, Rational::one()));
            }
            lp.add_row(row, Sense::Ge, rat(1 - neg.len() as i64));
        }
    }
    let (lp_value, x) = match lp.minimize() {
        LpResult::Optimal { value, x } => (value, x),
        LpResult::Infeasible => return Ok(Outcome::infeasible()),
        LpResult::Unbounded => unreachable!("objective is a sum of nonnegative variables"),
    };
    let cap = ratio(1, b as i64 + 1);
    let mut thresholds: Vec<Rational> = x[..n]
        .iter()
        .filter(|v| **v > Rational::zero() && **v <= cap)
        .cloned()
        .collect();
    thresholds.push(cap);
    thresholds.sort();
    thresholds.dedup();
    let mut best: Option<DcspSolution> = None;
    for t in &thresholds {
        let assignment: Vec<bool> = x[..n].iter().map(|v| v >= t).collect();
        if inst.violates_undeletable(&assignment) {
            continue;
        }
        let s = DcspSolution::from_assignment(inst, assignment);
        if best.as_ref().is_none_or(|bs| s.cost() < bs.cost()) {
            best = Some(s);
        }
    }
    let mut out = match best {
        Some(s) => {
            let cost = s.cost();
            Outcome::found(Status::WithinRatio(ratio_bound), s, cost)
        }
        None => Outcome::infeasible(),
    };
    out.lp_value = Some(lp_value);
    Ok(out)
}
