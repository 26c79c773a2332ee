//! Odd Set gadgets for multicolored densest subgraph and Max-3-SAT.

use std::collections::BTreeSet;

use rand::Rng;

use crate::error::ReductionError;
use crate::instance::random::rng;
use crate::instance::{Cnf3, ColoredGraph, EvenOddSetInstance};

/// Largest variable set of a clause group; its assignments are enumerated.
pub const MAX_GROUP_VARIABLES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MkdsElement {
    Vertex(usize),
    /// Edge as `(min, max)` vertex pair.
    Edge(usize, usize),
}

#[derive(Debug, Clone)]
pub struct MkdsGadget {
    pub instance: EvenOddSetInstance,
    /// Guessed class pairs, normalized to `i < j` and sorted.
    pub pairs: Vec<(usize, usize)>,
    /// Classes touched by some pair, ascending.
    pub classes: Vec<usize>,
    pub elements: Vec<MkdsElement>,
    /// Index of the set `S_i` for each entry of `classes`.
    pub class_sets: Vec<usize>,
}

impl MkdsGadget {
    /// `k' + |P|`, the target size when the guess is correct.
    pub fn expected_size(&self) -> usize {
        self.classes.len() + self.pairs.len()
    }
}

/// Class pairs holding at least one edge induced by `vertices`.
pub fn mkds_inhabited_pairs(g: &ColoredGraph, vertices: &[usize]) -> Vec<(usize, usize)> {
    let pairs: BTreeSet<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|(u, v)| vertices.contains(u) && vertices.contains(v))
        .map(|&(u, v)| {
            let (a, b) = (g.class_of(u), g.class_of(v));
            (a.min(b), a.max(b))
        })
        .collect();
    pairs.into_iter().collect()
}

/// Odd Set instance for the guess `pairs`: an element per vertex of a touched
/// class and per edge between guessed classes, the sets `S_{u,j}` for every
/// vertex `u` of a guessed pair's class, then `S_i` per touched class.
pub fn mkds_guess_to_oddset(g: &ColoredGraph, pairs: &[(usize, usize)]) -> Result<MkdsGadget, ReductionError> {
    let k = g.num_classes();
    let mut normalized = BTreeSet::new();
    for &(i, j) in pairs {
        if i == j || i >= k || j >= k {
            return Err(ReductionError::Precondition(format!(
                "({i}, {j}) is not a pair of distinct classes among {k}"
            )));
        }
        normalized.insert((i.min(j), i.max(j)));
    }
    let pairs: Vec<(usize, usize)> = normalized.into_iter().collect();
    let classes: Vec<usize> = pairs
        .iter()
        .flat_map(|&(i, j)| [i, j])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let mut elements = Vec::new();
    let mut vertex_element = vec![None; g.num_vertices()];
    for &c in &classes {
        for v in g.class_members(c) {
            vertex_element[v] = Some(elements.len());
            elements.push(MkdsElement::Vertex(v));
        }
    }
    // edge element index per guessed pair, in edge order
    let mut pair_edges: Vec<Vec<(usize, usize, usize)>> = Vec::new();
    for &(i, j) in &pairs {
        let mut list = Vec::new();
        for (u, v) in g.edges_between(i, j) {
            list.push((u, v, elements.len()));
            elements.push(MkdsElement::Edge(u, v));
        }
        pair_edges.push(list);
    }

    let mut inst = EvenOddSetInstance::new(elements.len());
    for (p, &(i, j)) in pairs.iter().enumerate() {
        for own in [i, j] {
            let members = g.class_members(own);
            for &u in &members {
                let mut set: Vec<usize> = members
                    .iter()
                    .filter(|&&v| v != u)
                    .map(|&v| vertex_element[v].expect("touched class"))
                    .collect();
                set.extend(pair_edges[p].iter().filter(|e| e.0 == u || e.1 == u).map(|e| e.2));
                inst.add_set(&set, true)?;
            }
        }
    }
    let mut class_sets = Vec::new();
    for &c in &classes {
        let set: Vec<usize> = g
            .class_members(c)
            .iter()
            .map(|&v| vertex_element[v].expect("touched class"))
            .collect();
        class_sets.push(inst.add_set(&set, true)?);
    }
    Ok(MkdsGadget {
        instance: inst,
        pairs,
        classes,
        elements,
        class_sets,
    })
}

/// One vertex per nonempty class: the lowest element of `z ∩ S_i` for touched
/// classes, the lowest vertex elsewhere (or when `z` misses `S_i`).
pub fn mkds_vertices(gadget: &MkdsGadget, g: &ColoredGraph, z: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for c in 0..g.num_classes() {
        let members = g.class_members(c);
        let Some(&lowest) = members.first() else { continue };
        let picked = gadget.classes.iter().position(|&x| x == c).and_then(|p| {
            let set = &gadget.instance.sets()[gadget.class_sets[p]].elements;
            z.iter().copied().filter(|e| set.contains(e)).min()
        });
        out.push(match picked.map(|e| gadget.elements[e]) {
            Some(MkdsElement::Vertex(v)) => v,
            _ => lowest,
        });
    }
    out
}

/// Random colorings of an uncolored graph into `k` classes, one per repetition.
/// Vertices are named `v0, v1, …`; repetition `r` draws from seed `seed + r`.
pub fn kds_color_coding(
    n: usize,
    edges: &[(usize, usize)],
    k: usize,
    seed: u64,
    repetitions: usize,
) -> Result<Vec<ColoredGraph>, ReductionError> {
    if k == 0 {
        return Err(ReductionError::Precondition("color coding needs k ≥ 1".to_string()));
    }
    let mut out = Vec::with_capacity(repetitions);
    for r in 0..repetitions {
        let mut random = rng(seed.wrapping_add(r as u64));
        let mut g = ColoredGraph::new(k);
        for v in 0..n {
            g.add_vertex(&format!("v{v}"), random.gen_range(0..k))?;
        }
        for &(u, v) in edges {
            if g.class_of(u) != g.class_of(v) && !g.has_edge(u, v) {
                g.add_edge(u, v)?;
            }
        }
        out.push(g);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct Max3SatGadget {
    pub instance: EvenOddSetInstance,
    /// Clause indices per group.
    pub groups: Vec<Vec<usize>>,
    /// Sorted variables per group.
    pub group_vars: Vec<Vec<usize>>,
    /// `(group, assignment of its variables)` per element.
    pub elements: Vec<(usize, Vec<bool>)>,
    /// Index of `U_i` for each group.
    pub group_sets: Vec<usize>,
}

/// Round-robin partition of clause indices into `k` groups.
pub fn cnf_groups(cnf: &Cnf3, k: usize) -> Vec<Vec<usize>> {
    let mut groups = vec![Vec::new(); k];
    for c in 0..cnf.clauses().len() {
        groups[c % k].push(c);
    }
    groups
}

/// Odd Set instance with one element per satisfying assignment of each group's
/// variables, the sets `U_i`, and `S_{y,i,j}` for every ordered pair of groups
/// and shared variable `y`.
pub fn max3sat_to_oddset(cnf: &Cnf3, k: usize) -> Result<Max3SatGadget, ReductionError> {
    if k == 0 {
        return Err(ReductionError::Precondition("at least one group is needed".to_string()));
    }
    let groups = cnf_groups(cnf, k);
    let mut group_vars = Vec::with_capacity(k);
    for g in &groups {
        let vars: BTreeSet<usize> = g.iter().flat_map(|&c| Cnf3::clause_vars(&cnf.clauses()[c])).collect();
        if vars.len() > MAX_GROUP_VARIABLES {
            return Err(ReductionError::Precondition(format!(
                "a clause group has {} variables, the limit is {MAX_GROUP_VARIABLES}",
                vars.len()
            )));
        }
        group_vars.push(vars.into_iter().collect::<Vec<usize>>());
    }

    let mut elements = Vec::new();
    let mut ranges = Vec::with_capacity(k);
    let mut full = vec![false; cnf.num_vars()];
    for (i, vars) in group_vars.iter().enumerate() {
        let start = elements.len();
        let w = vars.len();
        for code in 0..1u32 << w {
            let a: Vec<bool> = (0..w).map(|p| code >> (w - 1 - p) & 1 == 1).collect();
            for (p, &v) in vars.iter().enumerate() {
                full[v] = a[p];
            }
            if groups[i].iter().all(|&c| Cnf3::clause_satisfied(&cnf.clauses()[c], &full)) {
                elements.push((i, a));
            }
        }
        ranges.push(start..elements.len());
    }

    let mut inst = EvenOddSetInstance::new(elements.len());
    let mut group_sets = Vec::with_capacity(k);
    for r in &ranges {
        group_sets.push(inst.add_set(&r.clone().collect::<Vec<_>>(), true)?);
    }
    for i in 0..k {
        for j in (0..k).filter(|&j| j != i) {
            for (pi, &y) in group_vars[i].iter().enumerate() {
                let Ok(pj) = group_vars[j].binary_search(&y) else { continue };
                let mut set: Vec<usize> = ranges[i].clone().filter(|&e| elements[e].1[pi]).collect();
                set.extend(ranges[j].clone().filter(|&e| !elements[e].1[pj]));
                inst.add_set(&set, true)?;
            }
        }
    }
    Ok(Max3SatGadget {
        instance: inst,
        groups,
        group_vars,
        elements,
        group_sets,
    })
}

/// Global assignment read off a target solution: groups hit exactly once fix
/// their variables first, then the lowest chosen element of every other group
/// fills what is still unset, and the rest is false.
pub fn max3sat_assignment(gadget: &Max3SatGadget, cnf: &Cnf3, t: &[usize]) -> Vec<bool> {
    let mut chosen: Vec<Vec<usize>> = vec![Vec::new(); gadget.groups.len()];
    let mut sorted = t.to_vec();
    sorted.sort_unstable();
    for &e in &sorted {
        chosen[gadget.elements[e].0].push(e);
    }
    let mut value: Vec<Option<bool>> = vec![None; cnf.num_vars()];
    let apply = |e: usize, value: &mut Vec<Option<bool>>| {
        let (g, a) = &gadget.elements[e];
        for (p, &v) in gadget.group_vars[*g].iter().enumerate() {
            value[v].get_or_insert(a[p]);
        }
    };
    for c in chosen.iter().filter(|c| c.len() == 1) {
        apply(c[0], &mut value);
    }
    for c in chosen.iter().filter(|c| c.len() > 1) {
        apply(c[0], &mut value);
    }
    value.into_iter().map(|v| v.unwrap_or(false)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::random::{random_colored_graph, random_satisfiable_cnf3};
    use crate::reduce::Problem;

    fn rainbow_triangle() -> ColoredGraph {
        let mut g = ColoredGraph::new(3);
        for c in 0..3 {
            g.add_vertex(&format!("v{c}"), c).unwrap();
        }
        for (u, v) in [(0, 1), (1, 2), (0, 2)] {
            g.add_edge(u, v).unwrap();
        }
        g
    }

    fn opt(e: &EvenOddSetInstance) -> Option<(Vec<usize>, usize)> {
        e.optimum().unwrap()
    }

    #[test]
    fn empty_guess() {
        let gadget = mkds_guess_to_oddset(&rainbow_triangle(), &[]).unwrap();
        assert_eq!(gadget.instance.universe(), 0);
        assert_eq!(gadget.instance.num_sets(), 0);
        assert_eq!(opt(&gadget.instance).unwrap().1, 0);
    }

    #[test]
    fn triangle_full_guess() {
        let g = rainbow_triangle();
        let gadget = mkds_guess_to_oddset(&g, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(gadget.instance.universe(), 6);
        let (z, cost) = opt(&gadget.instance).unwrap();
        assert_eq!(cost, 6);
        assert_eq!(g.induced_edges(&mkds_vertices(&gadget, &g, &z)), 3);
    }

    #[test]
    fn path_guess() {
        let mut g = ColoredGraph::new(3);
        for (name, c) in [("a", 0), ("b", 1), ("b2", 1), ("c", 2)] {
            g.add_vertex(name, c).unwrap();
        }
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 3).unwrap();
        g.add_edge(2, 3).unwrap();
        let gadget = mkds_guess_to_oddset(&g, &[(0, 1), (1, 2)]).unwrap();
        let (z, cost) = opt(&gadget.instance).unwrap();
        assert_eq!(cost, 5);
        assert_eq!(g.induced_edges(&mkds_vertices(&gadget, &g, &z)), 2);
    }

    #[test]
    fn bad_pairs_are_rejected() {
        assert!(mkds_guess_to_oddset(&rainbow_triangle(), &[(1, 1)]).is_err());
        assert!(mkds_guess_to_oddset(&rainbow_triangle(), &[(0, 3)]).is_err());
    }

    #[test]
    fn correct_guess_reaches_expected_size() {
        for seed in 0..10 {
            let g = random_colored_graph(3, 3, 0.5, seed);
            let (best, m) = g.densest_multicolored().unwrap();
            let gadget = mkds_guess_to_oddset(&g, &mkds_inhabited_pairs(&g, &best)).unwrap();
            assert_eq!(gadget.pairs.len(), m);
            let (z, cost) = opt(&gadget.instance).unwrap();
            assert_eq!(cost, gadget.expected_size(), "seed {seed}");
            assert_eq!(g.induced_edges(&mkds_vertices(&gadget, &g, &z)), m, "seed {seed}");
        }
    }

    #[test]
    fn color_coding_is_reproducible() {
        let edges = [(0, 1), (1, 2), (0, 2), (2, 3)];
        let a = kds_color_coding(4, &edges, 3, 9, 5).unwrap();
        let b = kds_color_coding(4, &edges, 3, 9, 5).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|g| g.num_vertices() == 4));
        assert!(a.iter().all(|g| g.edges().iter().all(|&(u, v)| g.class_of(u) != g.class_of(v))));
    }

    #[test]
    fn planted_triangle_gets_rainbow() {
        // ⌈5 · 3³ / 3!⌉ = 23 repetitions
        let edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)];
        for seed in 0..20 {
            let colorings = kds_color_coding(6, &edges, 3, seed * 100, 23).unwrap();
            let hit = colorings
                .iter()
                .any(|g| (0..3).map(|v| g.class_of(v)).collect::<BTreeSet<_>>().len() == 3);
            assert!(hit, "seed {seed}");
        }
    }

    #[test]
    fn single_clause_single_group() {
        let mut f = Cnf3::new(3);
        f.add_clause(&[1, 2, 3]).unwrap();
        let gadget = max3sat_to_oddset(&f, 1).unwrap();
        assert_eq!(gadget.instance.universe(), 7);
        assert_eq!(gadget.instance.num_sets(), 1);
        assert_eq!(opt(&gadget.instance).unwrap().1, 1);
    }

    #[test]
    fn unsatisfiable_group_gives_empty_set() {
        let mut f = Cnf3::new(1);
        f.add_clause(&[1]).unwrap();
        f.add_clause(&[-1]).unwrap();
        let gadget = max3sat_to_oddset(&f, 1).unwrap();
        assert!(gadget.instance.sets()[0].elements.is_empty());
        assert!(opt(&gadget.instance).is_none());
    }

    #[test]
    fn satisfiable_formulas_reach_k() {
        for seed in 0..10 {
            let (f, _) = random_satisfiable_cnf3(5, 6, seed);
            let gadget = max3sat_to_oddset(&f, 2).unwrap();
            let (t, cost) = opt(&gadget.instance).unwrap();
            assert_eq!(cost, 2, "seed {seed}");
            assert!(f.is_satisfied(&max3sat_assignment(&gadget, &f, &t)), "seed {seed}");
        }
    }
}
