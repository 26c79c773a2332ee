//! Primitive positive definitions: checking them, and expanding constraints
//! into their defining atoms.

use super::{ReductionArtifact, ReductionKind};
use crate::error::ReductionError;
use crate::instance::{DcspInstance, DcspSolution};
use crate::relation::{Language, Relation};

/// Largest number of free plus existential variables a check will enumerate.
const MAX_DEFINITION_VARIABLES: usize = 26;

/// Variables `0..free` are the defined coordinates, `free..free + existential`
/// are quantified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Relation { name: String, args: Vec<usize> },
    Equality(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PpDefinition {
    /// Name of the defined relation.
    pub target: String,
    pub free: usize,
    pub existential: usize,
    pub atoms: Vec<Atom>,
    pub equality_allowed: bool,
}

fn lookup<'a>(lang: &'a Language, name: &str) -> Result<&'a Relation, ReductionError> {
    Ok(lang.by_name(name)?)
}

fn validate(r: &Relation, lang: &Language, d: &PpDefinition) -> Result<(), ReductionError> {
    let arity_error = |what: String| Err(ReductionError::Precondition(what));
    if d.free != r.arity() {
        return arity_error(format!(
            "definition has {} free variables, relation `{}` has arity {}",
            d.free,
            r.label(),
            r.arity()
        ));
    }
    let total = d.free + d.existential;
    if total > MAX_DEFINITION_VARIABLES {
        return arity_error(format!("{total} definition variables exceed {MAX_DEFINITION_VARIABLES}"));
    }
    for atom in &d.atoms {
        let args: Vec<usize> = match atom {
            Atom::Relation { name, args } => {
                let rel = lookup(lang, name)?;
                if rel.arity() != args.len() {
                    return arity_error(format!(
                        "atom `{name}` has {} arguments, arity is {}",
                        args.len(),
                        rel.arity()
                    ));
                }
                args.clone()
            }
            Atom::Equality(a, b) => {
                if !d.equality_allowed {
                    return arity_error("equality atom in an equality-free definition".to_string());
                }
                vec![*a, *b]
            }
        };
        if let Some(v) = args.iter().find(|&&v| v >= total) {
            return arity_error(format!("atom argument {v} is not a definition variable"));
        }
    }
    Ok(())
}

/// Checks `R(x) ⇔ ∃y. atoms(x, y)` by enumerating every `x` and `y`.
pub fn check_pp_definition(r: &Relation, lang: &Language, d: &PpDefinition) -> Result<bool, ReductionError> {
    validate(r, lang, d)?;
    let compiled: Vec<(Option<&Relation>, Vec<usize>)> = d
        .atoms
        .iter()
        .map(|a| match a {
            Atom::Relation { name, args } => (Some(lang.by_name(name).expect("validated")), args.clone()),
            Atom::Equality(a, b) => (None, vec![*a, *b]),
        })
        .collect();
    let total = d.free + d.existential;
    let value = |code: u64, v: usize| code >> (total - 1 - v) & 1 == 1;
    for x in 0..(1u64 << d.free) {
        let mut definable = false;
        for y in 0..(1u64 << d.existential) {
            let code = x << d.existential | y;
            let all = compiled.iter().all(|(rel, args)| match rel {
                Some(rel) => rel.contains(args.iter().fold(0u32, |acc, &v| acc << 1 | value(code, v) as u32)),
                None => value(code, args[0]) == value(code, args[1]),
            });
            if all {
                definable = true;
                break;
            }
        }
        if definable != r.contains(x as u32) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Replaces every constraint on `d.target` by the atoms of `d` over fresh
/// existential variables, keeping its deletability. The definition must be
/// equality-free and correct over `gamma`. The target language is `gamma`
/// followed by the remaining source relations it lacks.
pub fn pp_expand(
    inst: &DcspInstance,
    d: &PpDefinition,
    gamma: &Language,
) -> Result<ReductionArtifact<DcspInstance, DcspInstance>, ReductionError> {
    if d.equality_allowed || d.atoms.iter().any(|a| matches!(a, Atom::Equality(..))) {
        return Err(ReductionError::Precondition(
            "expansion needs an equality-free definition".to_string(),
        ));
    }
    let source_lang = inst.language();
    let r = source_lang.by_name(&d.target)?;
    if !check_pp_definition(r, gamma, d)? {
        return Err(ReductionError::Precondition(format!(
            "the definition does not define `{}`",
            d.target
        )));
    }
    let mut relations = gamma.relations().to_vec();
    for rel in source_lang.relations() {
        let name = rel.label();
        if name == d.target {
            continue;
        }
        match gamma.by_name(&name) {
            Ok(existing) if existing.same_tuples(rel) => {}
            Ok(_) => {
                return Err(ReductionError::Precondition(format!(
                    "relation `{name}` differs between the instance and the defining language"
                )))
            }
            Err(_) => relations.push(rel.clone()),
        }
    }
    let mut target = DcspInstance::new(Language::new(relations)?);
    for name in inst.variable_names() {
        target.add_variable(name)?;
    }
    let mut expanded_deletable = 0;
    for (i, c) in inst.constraints().iter().enumerate() {
        let name = inst.relation_name(i);
        if name != d.target {
            target.add_constraint(name, c.scope.clone(), c.undeletable)?;
            continue;
        }
        if !c.undeletable {
            expanded_deletable += 1;
        }
        let fresh: Vec<usize> = (0..d.existential)
            .map(|j| target.fresh_variable(&format!("{}_c{i}_e{j}", d.target)))
            .collect();
        let var = |v: usize| if v < d.free { c.scope[v] } else { fresh[v - d.free] };
        for atom in &d.atoms {
            if let Atom::Relation { name, args } = atom {
                target.add_constraint(name, args.iter().map(|&v| var(v)).collect(), c.undeletable)?;
            }
        }
    }
    // undeletable occurrences cost nothing on either side
    let kind = if expanded_deletable == 0 {
        ReductionKind::CostPreserving
    } else {
        ReductionKind::AReduction {
            alpha: d.atoms.len().max(1),
        }
    };
    let source = inst.clone();
    let n = inst.num_variables();
    Ok(ReductionArtifact::new(
        target,
        kind,
        format!("`{}` expanded into {} atoms", d.target, d.atoms.len()),
        move |s: &DcspSolution| DcspSolution::from_assignment(&source, s.assignment[..n].to_vec()),
    ))
}

fn atom(name: &str, args: &[usize]) -> Atom {
    Atom::Relation {
        name: name.to_string(),
        args: args.to_vec(),
    }
}

/// `even³(x1, x2, x3) = ∃w. even⁴(x1, x2, x3, w) ∧ w̄`.
pub fn even3_over_b2() -> PpDefinition {
    PpDefinition {
        target: "even3".to_string(),
        free: 3,
        existential: 1,
        atoms: vec![atom("even4", &[0, 1, 2, 3]), atom("notx", &[3])],
        equality_allowed: false,
    }
}

/// `oddⁿ` over `{even⁴, x, x̄}`. `odd²(a, b) = ∃z, o. even⁴(a, b, z, o) ∧ z̄ ∧ o`, and
/// `oddⁿ⁺¹(x1..xₙ₊₁) = ∃u. oddⁿ(x1..xₙ₋₁, u) ∧ even³(u, xₙ, xₙ₊₁)` with `even³`
/// expanded as in [`even3_over_b2`].
pub fn odd_over_b2(n: usize) -> PpDefinition {
    assert!(n >= 1, "odd relations have arity at least 1");
    let name = format!("odd{n}");
    match n {
        1 => PpDefinition {
            target: name,
            free: 1,
            existential: 0,
            atoms: vec![atom("x", &[0])],
            equality_allowed: false,
        },
        2 => PpDefinition {
            target: name,
            free: 2,
            existential: 2,
            atoms: vec![atom("even4", &[0, 1, 2, 3]), atom("notx", &[2]), atom("x", &[3])],
            equality_allowed: false,
        },
        _ => {
            let prev = odd_over_b2(n - 1);
            let u = n + prev.existential;
            let w = u + 1;
            let remap = |v: usize| {
                if v < n - 2 {
                    v
                } else if v == n - 2 {
                    u
                } else {
                    n + (v - prev.free)
                }
            };
            let mut atoms: Vec<Atom> = prev
                .atoms
                .iter()
                .map(|a| match a {
                    Atom::Relation { name, args } => Atom::Relation {
                        name: name.clone(),
                        args: args.iter().map(|&v| remap(v)).collect(),
                    },
                    Atom::Equality(a, b) => Atom::Equality(remap(*a), remap(*b)),
                })
                .collect();
            atoms.push(atom("even4", &[u, n - 2, n - 1, w]));
            atoms.push(atom("notx", &[w]));
            PpDefinition {
                target: name,
                free: n,
                existential: prev.existential + 2,
                atoms,
                equality_allowed: false,
            }
        }
    }
}
