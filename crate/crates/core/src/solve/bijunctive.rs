//! Exact constraint deletion for bijunctive languages.
//!
//! Each constraint is replaced by the group of binary clauses it implies. The
//! search branches on certificates of unsatisfiability in the implication graph:
//! a literal `v` that reaches `¬v` and is reached back. One group on every such
//! certificate must be deleted.

use std::collections::{HashMap, VecDeque};

use super::{Outcome, SolveOutcome, Status};
use crate::error::SolveError;
use crate::instance::{DcspInstance, DcspSolution};
use crate::relation::{clause_decomposition, prime_clauses, ClauseFamily};

/// Literal node: `2v` is `v`, `2v + 1` is `¬v`.
type Lit = usize;

fn lit(var: usize, positive: bool) -> Lit {
    2 * var + usize::from(!positive)
}

/// Binary clauses `(a ∨ b)` per constraint, over literal nodes. Units appear as `(a, a)`.
pub fn binary_clause_groups(inst: &DcspInstance) -> Result<Vec<Vec<(Lit, Lit)>>, SolveError> {
    let mut cache = HashMap::new();
    let mut groups = Vec::with_capacity(inst.num_constraints());
    for (i, c) in inst.constraints().iter().enumerate() {
        let clauses = match cache.get(&c.relation) {
            Some(cl) => cl,
            None => {
                let r = inst.relation_of(i);
                let cl = clause_decomposition(r, &ClauseFamily::Binary).ok_or_else(|| {
                    SolveError::Precondition(format!("relation `{}` is not bijunctive", r.label()))
                })?;
                cache.entry(c.relation).or_insert(prime_clauses(&cl))
            }
        };
        let mut group = Vec::new();
        for clause in clauses {
            let mut lits: Vec<Lit> = clause
                .literals()
                .iter()
                .map(|l| lit(c.scope[l.coord], l.positive))
                .collect();
            lits.sort_unstable();
            lits.dedup();
            match lits.as_slice() {
                [a] => group.push((*a, *a)),
                [a, b] if *a == (*b ^ 1) => {}
                [a, b] => group.push((*a, *b)),
                _ => unreachable!("binary clauses have at most two literals"),
            }
        }
        group.sort_unstable();
        group.dedup();
        groups.push(group);
    }
    Ok(groups)
}

struct Graph {
    nodes: usize,
    /// `(target, group)` per node.
    adj: Vec<Vec<(Lit, usize)>>,
    deletable: Vec<bool>,
}

impl Graph {
    fn new(inst: &DcspInstance, groups: &[Vec<(Lit, Lit)>]) -> Self {
        let nodes = 2 * inst.num_variables();
        let mut adj = vec![Vec::new(); nodes];
        for (g, clauses) in groups.iter().enumerate() {
            for &(a, b) in clauses {
                adj[a ^ 1].push((b, g));
                if a != b {
                    adj[b ^ 1].push((a, g));
                }
            }
        }
        let deletable = inst.constraints().iter().map(|c| !c.undeletable).collect();
        Self { nodes, adj, deletable }
    }

    /// Tarjan components; ids come out in reverse topological order.
    fn components(&self, active: &[bool]) -> Vec<usize> {
        let n = self.nodes;
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut comp = vec![usize::MAX; n];
        let mut stack = Vec::new();
        let (mut next_index, mut next_comp) = (0, 0);
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            let mut call: Vec<(usize, usize)> = vec![(root, 0)];
            index[root] = next_index;
            low[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut edge)) = call.last_mut() {
                if *edge < self.adj[v].len() {
                    let (w, g) = self.adj[v][*edge];
                    *edge += 1;
                    if !active[g] {
                        continue;
                    }
                    if index[w] == usize::MAX {
                        index[w] = next_index;
                        low[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some(&(parent, _)) = call.last() {
                        low[parent] = low[parent].min(low[v]);
                    }
                    if low[v] == index[v] {
                        loop {
                            let w = stack.pop().unwrap();
                            on_stack[w] = false;
                            comp[w] = next_comp;
                            if w == v {
                                break;
                            }
                        }
                        next_comp += 1;
                    }
                }
            }
        }
        comp
    }

    /// Groups on shortest paths between some `v` and `¬v`, or `None` if satisfiable.
    fn certificate(&self, active: &[bool]) -> Option<Vec<usize>> {
        let comp = self.components(active);
        let v = (0..self.nodes / 2).find(|&v| comp[2 * v] == comp[2 * v + 1])?;
        let mut groups = self.path_groups(active, 2 * v, 2 * v + 1);
        groups.extend(self.path_groups(active, 2 * v + 1, 2 * v));
        groups.sort_unstable();
        groups.dedup();
        Some(groups)
    }

    fn path_groups(&self, active: &[bool], from: Lit, to: Lit) -> Vec<usize> {
        let mut parent: Vec<Option<(Lit, usize)>> = vec![None; self.nodes];
        let mut seen = vec![false; self.nodes];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for &(w, g) in &self.adj[u] {
                if active[g] && !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((u, g));
                    queue.push_back(w);
                }
            }
        }
        let mut groups = Vec::new();
        let mut cur = to;
        while cur != from {
            let (p, g) = parent[cur].expect("target is reachable inside its component");
            groups.push(g);
            cur = p;
        }
        groups
    }

    fn assignment(&self, active: &[bool]) -> Vec<bool> {
        let comp = self.components(active);
        (0..self.nodes / 2).map(|v| comp[2 * v] < comp[2 * v + 1]).collect()
    }

    /// Deletes at most `budget` more groups (never `forbidden` ones) to reach
    /// satisfiability. On success `active` holds the final state.
    fn search(&self, active: &mut [bool], forbidden: &mut [bool], budget: usize) -> bool {
        let Some(cert) = self.certificate(active) else {
            return true;
        };
        let candidates: Vec<usize> = cert
            .iter()
            .copied()
            .filter(|&g| self.deletable[g] && !forbidden[g])
            .collect();
        if candidates.is_empty() || budget == 0 {
            return false;
        }
        if self.packing_bound(active, forbidden, budget) > budget {
            return false;
        }
        let mut newly_forbidden = Vec::new();
        let mut found = false;
        for &g in &candidates {
            active[g] = false;
            if self.search(active, forbidden, budget - 1) {
                found = true;
                break;
            }
            active[g] = true;
            forbidden[g] = true;
            newly_forbidden.push(g);
        }
        for g in newly_forbidden {
            forbidden[g] = false;
        }
        found
    }

    /// Number of group-disjoint certificates found greedily, capped at `budget + 1`.
    /// A certificate without a usable group counts as unsatisfiable (`budget + 1`).
    fn packing_bound(&self, active: &[bool], forbidden: &[bool], budget: usize) -> usize {
        let mut tmp = active.to_vec();
        let mut count = 0;
        while let Some(cert) = self.certificate(&tmp) {
            if !cert.iter().any(|&g| self.deletable[g] && !forbidden[g]) {
                return budget + 1;
            }
            count += 1;
            if count > budget {
                break;
            }
            for g in cert {
                tmp[g] = false;
            }
        }
        count
    }

    /// Whether some deletion of exactly the forced groups plus at most `budget`
    /// others (avoiding `forbidden`) exists. Returns the final active state.
    fn try_with(&self, forced: &[usize], forbidden: &[usize], budget: usize) -> Option<Vec<bool>> {
        let mut active = vec![true; self.deletable.len()];
        for &g in forced {
            active[g] = false;
        }
        let mut forb = vec![false; self.deletable.len()];
        for &g in forbidden {
            forb[g] = true;
        }
        self.search(&mut active, &mut forb, budget).then_some(active)
    }
}

/// Exact minimum deletion for bijunctive languages; the deletion set is the
/// lexicographically least optimal one.
pub fn solve_bijunctive(inst: &DcspInstance, k: usize) -> Result<SolveOutcome, SolveError> {
    let groups = binary_clause_groups(inst)?;
    let graph = Graph::new(inst, &groups);
    let undeletable_only: Vec<bool> = graph.deletable.iter().map(|&d| !d).collect();
    if graph.certificate(&undeletable_only).is_some() {
        return Ok(Outcome::infeasible());
    }
    let Some(opt) = (0..=k).find(|&b| graph.try_with(&[], &[], b).is_some()) else {
        return Ok(Outcome::budget_exceeded());
    };
    let deletable: Vec<usize> = (0..groups.len()).filter(|&g| graph.deletable[g]).collect();
    let mut forced: Vec<usize> = Vec::new();
    let mut forbidden: Vec<usize> = Vec::new();
    let mut final_state = None;
    for _ in 0..opt {
        let start = forced.last().map_or(0, |&l| l + 1);
        let mut skipped = Vec::new();
        for &c in deletable.iter().filter(|&&c| c >= start) {
            let mut f = forced.clone();
            f.push(c);
            let mut fb = forbidden.clone();
            fb.extend(&skipped);
            if let Some(state) = graph.try_with(&f, &fb, opt - f.len()) {
                forced = f;
                forbidden = fb;
                final_state = Some(state);
                break;
            }
            skipped.push(c);
        }
    }
    let active = final_state.unwrap_or_else(|| vec![true; groups.len()]);
    let assignment = graph.assignment(&active);
    let deletion = inst.violated(&assignment);
    debug_assert_eq!(deletion, forced);
    debug_assert!(deletion.iter().all(|&i| !inst.constraint(i).undeletable));
    let cost = deletion.len();
    Ok(Outcome::found(Status::Optimal, DcspSolution { deletion, assignment }, cost))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::random::random_dcsp_star;
    use crate::relation::{library, Language};
    use crate::solve::brute_force_dcsp;

    fn triangle() -> DcspInstance {
        let lang = Language::new(vec![library::xor()]).unwrap();
        let mut inst = DcspInstance::with_variables(lang, 3);
        for (u, v) in [(0, 1), (1, 2), (0, 2)] {
            inst.add_constraint("xor", vec![u, v], false).unwrap();
        }
        inst
    }

    #[test]
    fn odd_triangle_costs_one() {
        let out = solve_bijunctive(&triangle(), 1).unwrap();
        assert_eq!(out.status, Status::Optimal);
        assert_eq!(out.cost, Some(1));
        assert_eq!(out.solution.unwrap().deletion, vec![0]);
        assert_eq!(solve_bijunctive(&triangle(), 0).unwrap().status, Status::BudgetExceeded);
    }

    #[test]
    fn satisfiable_needs_nothing() {
        let lang = Language::new(vec![library::implication()]).unwrap();
        let mut inst = DcspInstance::with_variables(lang, 3);
        inst.add_constraint("imp", vec![0, 1], false).unwrap();
        inst.add_constraint("imp", vec![1, 2], false).unwrap();
        assert_eq!(solve_bijunctive(&inst, 0).unwrap().cost, Some(0));
    }

    #[test]
    fn matches_brute_force_including_tie_break() {
        let lang = Language::new(vec![
            library::xor(),
            library::implication(),
            library::positive_unit(),
            library::negative_unit(),
            library::equality(),
        ])
        .unwrap();
        for seed in 0..60 {
            let inst = random_dcsp_star(&lang, 6, 12, 0.1, seed);
            let brute = brute_force_dcsp(&inst).unwrap();
            let ours = solve_bijunctive(&inst, 12).unwrap();
            assert_eq!(brute.status, ours.status, "seed {seed}");
            assert_eq!(
                brute.solution.map(|s| s.deletion),
                ours.solution.map(|s| s.deletion),
                "seed {seed}"
            );
        }
    }

    #[test]
    fn non_bijunctive_is_rejected() {
        let lang = Language::new(vec![library::nae()]).unwrap();
        let mut inst = DcspInstance::with_variables(lang, 3);
        inst.add_constraint("nae", vec![0, 1, 2], false).unwrap();
        assert!(matches!(solve_bijunctive(&inst, 1), Err(SolveError::Precondition(_))));
    }
}
