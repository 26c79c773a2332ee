//! Exact minimum-cost assignment by variable elimination over cost tables.
//!
//! Serves as the exact oracle for structured instances with many variables but
//! small elimination width, such as the long gadget chains produced by the
//! parity reductions.

use std::collections::BTreeMap;

use crate::error::SolveError;
use crate::gf2::Gf2Vector;
use crate::instance::{DcspInstance, NearestCodeword};

/// Cost marking a forbidden combination.
pub const FORBIDDEN: u64 = u64::MAX / 4;

/// Largest scope an intermediate table may have.
pub const MAX_WIDTH: usize = 22;

/// A table over sorted distinct variables; entry index bit `i` is the value of `vars[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub vars: Vec<usize>,
    pub table: Vec<u64>,
}

/// Sum of nonnegative cost factors over Boolean variables.
#[derive(Debug, Clone, Default)]
pub struct CostNetwork {
    num_vars: usize,
    /// Factors merged by scope.
    factors: BTreeMap<Vec<usize>, Vec<u64>>,
}

fn add(a: u64, b: u64) -> u64 {
    a.saturating_add(b).min(FORBIDDEN)
}

impl CostNetwork {
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            factors: BTreeMap::new(),
        }
    }

    /// Adds a factor over `scope` (repeats allowed); `cost` sees values in scope order.
    pub fn add_factor(&mut self, scope: &[usize], cost: impl Fn(&[bool]) -> u64) -> Result<(), SolveError> {
        let mut vars = scope.to_vec();
        vars.sort_unstable();
        vars.dedup();
        if vars.len() > MAX_WIDTH {
            return Err(SolveError::TooLarge(format!("factor over {} variables", vars.len())));
        }
        let mut table = vec![0u64; 1 << vars.len()];
        let positions: Vec<usize> = scope.iter().map(|v| vars.binary_search(v).unwrap()).collect();
        let mut values = vec![false; scope.len()];
        for (idx, entry) in table.iter_mut().enumerate() {
            for (k, &p) in positions.iter().enumerate() {
                values[k] = idx >> p & 1 == 1;
            }
            *entry = cost(&values).min(FORBIDDEN);
        }
        match self.factors.get_mut(&vars) {
            Some(existing) => {
                for (e, t) in existing.iter_mut().zip(table) {
                    *e = add(*e, t);
                }
            }
            None => {
                self.factors.insert(vars, table);
            }
        }
        Ok(())
    }

    /// Minimum total cost and an assignment reaching it (ties resolved towards 0
    /// in reverse elimination order). `None` when every assignment is forbidden.
    pub fn minimize(&self) -> Result<Option<(u64, Vec<bool>)>, SolveError> {
        let mut pool: Vec<Factor> = self
            .factors
            .iter()
            .map(|(vars, table)| Factor {
                vars: vars.clone(),
                table: table.clone(),
            })
            .collect();
        let mut constant = 0u64;
        pool.retain(|f| {
            if f.vars.is_empty() {
                constant = add(constant, f.table[0]);
                false
            } else {
                true
            }
        });
        let mut alive = vec![true; self.num_vars];
        // (variable, scope of the remaining neighbours, argmin table over that scope)
        let mut trace: Vec<(usize, Vec<usize>, Vec<bool>)> = Vec::new();
        let mut touching: Vec<Vec<usize>> = vec![Vec::new(); self.num_vars];
        for (fi, f) in pool.iter().enumerate() {
            for &v in &f.vars {
                touching[v].push(fi);
            }
        }
        let mut live = vec![true; pool.len()];
        for _ in 0..self.num_vars {
            // min-degree choice, ties broken by the lowest index
            let mut choice: Option<(usize, usize)> = None;
            for v in (0..self.num_vars).filter(|&v| alive[v]) {
                let mut scope: Vec<usize> = touching[v]
                    .iter()
                    .filter(|&&fi| live[fi])
                    .flat_map(|&fi| pool[fi].vars.iter().copied())
                    .collect();
                scope.sort_unstable();
                scope.dedup();
                if choice.is_none_or(|(_, d)| scope.len() < d) {
                    choice = Some((v, scope.len()));
                    if scope.len() <= 1 {
                        break;
                    }
                }
            }
            let (v, _) = choice.expect("a live variable remains");
            alive[v] = false;
            let members: Vec<usize> = touching[v].iter().copied().filter(|&fi| live[fi]).collect();
            let mut scope: Vec<usize> = members
                .iter()
                .flat_map(|&fi| pool[fi].vars.iter().copied())
                .filter(|&u| u != v)
                .collect();
            scope.sort_unstable();
            scope.dedup();
            if scope.len() > MAX_WIDTH {
                return Err(SolveError::TooLarge(format!(
                    "elimination width {} exceeds {MAX_WIDTH}",
                    scope.len()
                )));
            }
            let mut table = vec![0u64; 1 << scope.len()];
            let mut argmin = vec![false; 1 << scope.len()];
            // map each member factor's variables to bit positions in the extended scope
            let maps: Vec<Vec<Option<usize>>> = members
                .iter()
                .map(|&fi| {
                    pool[fi]
                        .vars
                        .iter()
                        .map(|u| scope.binary_search(u).ok())
                        .collect()
                })
                .collect();
            for idx in 0..table.len() {
                let mut cost = [0u64; 2];
                for (val, c) in cost.iter_mut().enumerate() {
                    for (m, &fi) in members.iter().enumerate() {
                        let mut fidx = 0usize;
                        for (k, pos) in maps[m].iter().enumerate() {
                            let bit = match pos {
                                Some(p) => idx >> p & 1,
                                None => val,
                            };
                            fidx |= bit << k;
                        }
                        *c = add(*c, pool[fi].table[fidx]);
                    }
                }
                table[idx] = cost[0].min(cost[1]);
                argmin[idx] = cost[1] < cost[0];
            }
            for &fi in &members {
                live[fi] = false;
            }
            if scope.is_empty() {
                constant = add(constant, table[0]);
            } else {
                let fi = pool.len();
                for &u in &scope {
                    touching[u].push(fi);
                }
                pool.push(Factor {
                    vars: scope.clone(),
                    table,
                });
                live.push(true);
            }
            trace.push((v, scope, argmin));
        }
        if constant >= FORBIDDEN {
            return Ok(None);
        }
        let mut assignment = vec![false; self.num_vars];
        for (v, scope, argmin) in trace.iter().rev() {
            let idx = scope
                .iter()
                .enumerate()
                .fold(0usize, |acc, (k, &u)| acc | (assignment[u] as usize) << k);
            assignment[*v] = argmin[idx];
        }
        Ok(Some((constant, assignment)))
    }
}

/// Exact optimum of a constraint-deletion instance by variable elimination.
/// Returns the optimal cost and an optimal assignment, or `None` if infeasible.
pub fn exact_dcsp(inst: &DcspInstance) -> Result<Option<(usize, Vec<bool>)>, SolveError> {
    let mut net = CostNetwork::new(inst.num_variables());
    for (i, c) in inst.constraints().iter().enumerate() {
        let r = inst.relation_of(i);
        let penalty = if c.undeletable { FORBIDDEN } else { 1 };
        net.add_factor(&c.scope, |vals| {
            let code = vals.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32);
            if r.contains(code) {
                0
            } else {
                penalty
            }
        })?;
    }
    Ok(net.minimize()?.map(|(c, a)| (c as usize, a)))
}

/// Exact Nearest Codeword distance by variable elimination over the row parities.
pub fn exact_nc(nc: &NearestCodeword) -> Result<(usize, Gf2Vector), SolveError> {
    let mut net = CostNetwork::new(nc.cols());
    for i in 0..nc.rows() {
        let support = nc.a.row(i).support();
        let target = nc.b.get(i);
        net.add_factor(&support, |vals| {
            let parity = vals.iter().filter(|&&b| b).count() % 2 == 1;
            u64::from(parity != target)
        })?;
    }
    let (cost, x) = net.minimize()?.expect("row parities are never forbidden");
    Ok((cost as usize, Gf2Vector::from_bits(&x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::random::{random_dcsp_star, random_nc};
    use crate::relation::{library, Language};
    use crate::solve::brute_force_dcsp;

    #[test]
    fn matches_brute_force_on_random_instances() {
        let langs = [
            library::b2(),
            Language::new(vec![library::nae(), library::implication()]).unwrap(),
            Language::new(vec![library::clause_ppn(), library::positive_unit(), library::negative_unit()]).unwrap(),
        ];
        for (li, lang) in langs.iter().enumerate() {
            for seed in 0..40 {
                let inst = random_dcsp_star(lang, 7, 10, 0.15, seed * 3 + li as u64);
                let brute = brute_force_dcsp(&inst).unwrap();
                let ve = exact_dcsp(&inst).unwrap();
                assert_eq!(brute.cost, ve.as_ref().map(|(c, _)| *c), "seed {seed}");
                if let Some((c, a)) = ve {
                    assert_eq!(inst.assignment_cost(&a), Some(c));
                }
            }
        }
    }

    #[test]
    fn nc_distance_matches_enumeration() {
        for seed in 0..30 {
            let nc = random_nc(8, 6, seed);
            let best = (0..64u32)
                .map(|c| nc.distance(&Gf2Vector::from_bits(&(0..6).map(|i| c >> i & 1 == 1).collect::<Vec<_>>())))
                .min()
                .unwrap();
            let (d, x) = exact_nc(&nc).unwrap();
            assert_eq!(d, best);
            assert_eq!(nc.distance(&x), d);
        }
    }

    #[test]
    fn long_chain_is_cheap() {
        let lang = Language::new(vec![library::xor()]).unwrap();
        let mut inst = DcspInstance::with_variables(lang, 400);
        for v in 0..399 {
            inst.add_constraint("xor", vec![v, v + 1], false).unwrap();
        }
        inst.add_constraint("xor", vec![0, 399], false).unwrap();
        // an even cycle of xor constraints is satisfiable
        assert_eq!(exact_dcsp(&inst).unwrap().unwrap().0, 0);
    }
}
