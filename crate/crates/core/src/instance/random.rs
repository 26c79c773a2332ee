//! Seeded random instance generators. Every generator is a pure function of its arguments.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Cnf3, ColoredGraph, DcspInstance, EvenOddSetInstance, MonotoneCircuit, NearestCodeword};
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::relation::Language;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `m` deletable constraints over `n` variables; relations and scopes uniform,
/// repeated scope variables allowed.
pub fn random_dcsp(lang: &Language, n: usize, m: usize, seed: u64) -> DcspInstance {
    random_dcsp_star(lang, n, m, 0.0, seed)
}

/// Like [`random_dcsp`], marking each constraint undeletable with probability `p_undeletable`.
pub fn random_dcsp_star(lang: &Language, n: usize, m: usize, p_undeletable: f64, seed: u64) -> DcspInstance {
    assert!(n > 0 || m == 0, "constraints need variables");
    let mut r = rng(seed);
    let mut inst = DcspInstance::with_variables(lang.clone(), n);
    for _ in 0..m {
        let rel = r.gen_range(0..lang.len());
        let scope = (0..lang.get(rel).arity()).map(|_| r.gen_range(0..n)).collect();
        let undeletable = p_undeletable > 0.0 && r.gen_bool(p_undeletable);
        inst.add_constraint_at(rel, scope, undeletable).expect("generated scope is valid");
    }
    inst
}

fn random_subset(r: &mut ChaCha8Rng, n: usize, max_size: usize) -> Vec<usize> {
    let size = r.gen_range(1..=max_size.min(n).max(1)).min(n);
    let mut s = sample(r, n, size).into_vec();
    s.sort_unstable();
    s
}

/// All-odd instance with `m` nonempty sets of size at most `max_size`.
pub fn random_oddset(n: usize, m: usize, max_size: usize, seed: u64) -> EvenOddSetInstance {
    let mut r = rng(seed);
    let mut inst = EvenOddSetInstance::new(n);
    for _ in 0..m {
        let s = random_subset(&mut r, n, max_size);
        inst.add_set(&s, true).expect("generated set is valid");
    }
    inst
}

/// Like [`random_oddset`] with uniformly random parity targets.
pub fn random_evenodd(n: usize, m: usize, max_size: usize, seed: u64) -> EvenOddSetInstance {
    let mut r = rng(seed);
    let mut inst = EvenOddSetInstance::new(n);
    for _ in 0..m {
        let s = random_subset(&mut r, n, max_size);
        let odd = r.gen_bool(0.5);
        inst.add_set(&s, odd).expect("generated set is valid");
    }
    inst
}

/// Uniform `m×n` matrix and uniform target.
pub fn random_nc(m: usize, n: usize, seed: u64) -> NearestCodeword {
    let mut r = rng(seed);
    let rows = (0..m)
        .map(|_| Gf2Vector::from_bits(&(0..n).map(|_| r.gen_bool(0.5)).collect::<Vec<_>>()))
        .collect();
    let b = Gf2Vector::from_bits(&(0..m).map(|_| r.gen_bool(0.5)).collect::<Vec<_>>());
    NearestCodeword::new(Gf2Matrix::from_rows(n, rows), b).expect("dimensions agree")
}

/// `inputs` inputs followed by `gates` random and/or gates; the last gate is the output.
pub fn random_circuit(inputs: usize, gates: usize, seed: u64) -> MonotoneCircuit {
    assert!(inputs > 0, "a circuit needs an input");
    let mut r = rng(seed);
    let mut c = MonotoneCircuit::new();
    for i in 0..inputs {
        c.input(&format!("i{i}")).unwrap();
    }
    for g in 0..gates {
        let len = c.gates().len();
        let (a, b) = (r.gen_range(0..len), r.gen_range(0..len));
        let name = format!("g{g}");
        if r.gen_bool(0.5) {
            c.and(&name, a, b).unwrap();
        } else {
            c.or(&name, a, b).unwrap();
        }
    }
    let out = c.gates().len() - 1;
    c.set_output(out).unwrap();
    c
}

/// `k` classes of `per_class` vertices; each cross-class pair is an edge with probability `p`.
pub fn random_colored_graph(k: usize, per_class: usize, p: f64, seed: u64) -> ColoredGraph {
    let mut r = rng(seed);
    let mut g = ColoredGraph::new(k);
    for c in 0..k {
        for i in 0..per_class {
            g.add_vertex(&format!("c{c}v{i}"), c).unwrap();
        }
    }
    let n = g.num_vertices();
    for u in 0..n {
        for v in u + 1..n {
            if g.class_of(u) != g.class_of(v) && r.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

fn random_clause(r: &mut ChaCha8Rng, n: usize) -> Vec<i32> {
    let width = r.gen_range(1..=3.min(n));
    sample(r, n, width)
        .into_iter()
        .map(|v| {
            let lit = v as i32 + 1;
            if r.gen_bool(0.5) {
                lit
            } else {
                -lit
            }
        })
        .collect()
}

/// `m` clauses of 1 to 3 distinct variables.
pub fn random_cnf3(n: usize, m: usize, seed: u64) -> Cnf3 {
    let mut r = rng(seed);
    let mut f = Cnf3::new(n);
    for _ in 0..m {
        let c = random_clause(&mut r, n);
        f.add_clause(&c).unwrap();
    }
    f
}

/// A formula satisfied by a hidden random assignment, which is returned alongside.
pub fn random_satisfiable_cnf3(n: usize, m: usize, seed: u64) -> (Cnf3, Vec<bool>) {
    let mut r = rng(seed);
    let planted: Vec<bool> = (0..n).map(|_| r.gen_bool(0.5)).collect();
    let mut f = Cnf3::new(n);
    while f.clauses().len() < m {
        let c = random_clause(&mut r, n);
        if Cnf3::clause_satisfied(&c, &planted) {
            f.add_clause(&c).unwrap();
        }
    }
    (f, planted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::library;

    #[test]
    fn dcsp_is_reproducible() {
        let lang = Language::new(vec![library::implication()]).unwrap();
        let a = random_dcsp(&lang, 4, 6, 7);
        let b = random_dcsp(&lang, 4, 6, 7);
        assert_eq!(a.to_text(), b.to_text());
        assert_eq!(a.num_constraints(), 6);
    }

    #[test]
    fn generators_respect_arities() {
        let lang = library::b2();
        for seed in 0..1000 {
            let inst = random_dcsp_star(&lang, 5, 8, 0.2, seed);
            for (i, c) in inst.constraints().iter().enumerate() {
                assert_eq!(c.scope.len(), inst.relation_of(i).arity());
                assert!(c.scope.iter().all(|&v| v < 5));
            }
            assert!(inst.to_text().parse::<DcspInstance>().is_ok());
        }
    }

    #[test]
    fn satisfiable_formulas_are_satisfied() {
        for seed in 0..50 {
            let (f, a) = random_satisfiable_cnf3(5, 6, seed);
            assert!(f.is_satisfied(&a));
        }
    }

    #[test]
    fn other_generators_round_trip() {
        for seed in 0..20 {
            let e = random_evenodd(6, 5, 4, seed);
            assert_eq!(e.to_text().parse::<EvenOddSetInstance>().unwrap(), e);
            let nc = random_nc(6, 8, seed);
            assert_eq!(nc.to_text().parse::<NearestCodeword>().unwrap(), nc);
            let c = random_circuit(3, 5, seed);
            assert_eq!(c.to_text().parse::<MonotoneCircuit>().unwrap(), c);
            let g = random_colored_graph(3, 3, 0.5, seed);
            assert_eq!(g.to_text().parse::<ColoredGraph>().unwrap(), g);
            let f = random_cnf3(4, 6, seed);
            assert_eq!(f.to_text().parse::<Cnf3>().unwrap(), f);
        }
    }
}
