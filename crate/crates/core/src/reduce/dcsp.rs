use super::{ReductionArtifact, ReductionKind};
use crate::error::{ReductionError, SolveError};
use crate::instance::{DcspInstance, DcspSolution};
use crate::relation::{library, Language, Relation};
use crate::solve::{brute_force_dcsp, exact_dcsp, MAX_BRUTE_FORCE_VARIABLES};

type DcspArtifact = ReductionArtifact<DcspInstance, DcspInstance>;

/// An assignment satisfying every undeletable constraint, if one exists.
pub(crate) fn feasible_witness(inst: &DcspInstance) -> Result<Option<Vec<bool>>, SolveError> {
    let mut hard = DcspInstance::with_variables(inst.language().clone(), inst.num_variables());
    for c in inst.constraints().iter().filter(|c| c.undeletable) {
        hard.add_constraint_at(c.relation, c.scope.clone(), false)
            .expect("copied constraints are well formed");
    }
    if hard.num_constraints() == 0 {
        return Ok(Some(vec![false; inst.num_variables()]));
    }
    let found = match exact_dcsp(&hard) {
        Ok(r) => r.filter(|(c, _)| *c == 0).map(|(_, a)| a),
        Err(SolveError::TooLarge(_)) if hard.num_variables() <= MAX_BRUTE_FORCE_VARIABLES => brute_force_dcsp(&hard)?
            .solution
            .filter(|s| s.deletion.is_empty())
            .map(|s| s.assignment),
        Err(e) => return Err(e),
    };
    Ok(found)
}

/// Makes every constraint deletable by repeating each undeletable one `m + 1`
/// times, `m` being the number of constraints. Requires a feasible source.
pub fn eliminate_undeletable(inst: &DcspInstance) -> Result<DcspArtifact, ReductionError> {
    eliminate_undeletable_with_copies(inst, inst.num_constraints() + 1)
}

/// [`eliminate_undeletable`] with an explicit copy count. Fewer than `m + 1`
/// copies can break cost preservation; the verification suite uses this to
/// check that the harness notices.
pub fn eliminate_undeletable_with_copies(inst: &DcspInstance, copies: usize) -> Result<DcspArtifact, ReductionError> {
    let witness = feasible_witness(inst)?.ok_or(ReductionError::InfeasibleSource)?;
    let mut target = DcspInstance::new(inst.language().clone());
    for name in inst.variable_names() {
        target.add_variable(name)?;
    }
    for c in inst.constraints() {
        let times = if c.undeletable { copies } else { 1 };
        for _ in 0..times {
            target.add_constraint_at(c.relation, c.scope.clone(), false)?;
        }
    }
    let source = inst.clone();
    Ok(ReductionArtifact::new(
        target,
        ReductionKind::CostPreserving,
        format!("undeletable constraints repeated {copies} times"),
        move |s: &DcspSolution| {
            // a target solution that breaks an undeletable constraint pays for all of
            // its copies, which is more than deleting every deletable constraint
            let assignment = if source.violates_undeletable(&s.assignment) {
                witness.clone()
            } else {
                s.assignment.clone()
            };
            DcspSolution::from_assignment(&source, assignment)
        },
    ))
}

fn is_self_dual(r: &Relation) -> bool {
    r.complemented().same_tuples(r)
}

/// Replaces constant constraints by equalities with two fresh variables tied by
/// an undeletable `x ⊕ y`: `v = 0` becomes `x ⊕ u, u ⊕ v` and `v = 1` becomes
/// `y ⊕ u, u ⊕ v` with a fresh `u`. The other relations must be self-dual; the
/// target language drops the unit relations and contains `x ⊕ y`.
pub fn add_constants(inst: &DcspInstance) -> Result<DcspArtifact, ReductionError> {
    let (zero, one, xor) = (library::negative_unit(), library::positive_unit(), library::xor());
    let source_lang = inst.language();
    let mut kept: Vec<Relation> = Vec::new();
    // source relation index -> Some(target index) or None for units
    let mut remap: Vec<Option<usize>> = Vec::new();
    for r in source_lang.relations() {
        if r.same_tuples(&zero) || r.same_tuples(&one) {
            remap.push(None);
            continue;
        }
        if !is_self_dual(r) {
            return Err(ReductionError::Precondition(format!(
                "relation `{}` is not self-dual",
                r.label()
            )));
        }
        remap.push(Some(kept.len()));
        kept.push(r.clone());
    }
    let xor_index = match kept.iter().position(|r| r.same_tuples(&xor)) {
        Some(i) => i,
        None => {
            kept.push(xor);
            kept.len() - 1
        }
    };
    let lang = Language::new(kept)?;
    let mut target = DcspInstance::new(lang);
    for name in inst.variable_names() {
        target.add_variable(name)?;
    }
    let x = target.fresh_variable("zero");
    let y = target.fresh_variable("one");
    for (i, c) in inst.constraints().iter().enumerate() {
        match remap[c.relation] {
            Some(rel) => {
                target.add_constraint_at(rel, c.scope.clone(), c.undeletable)?;
            }
            None => {
                let constant = if inst.relation_of(i).same_tuples(&zero) { x } else { y };
                let u = target.fresh_variable("u");
                target.add_constraint_at(xor_index, vec![constant, u], c.undeletable)?;
                target.add_constraint_at(xor_index, vec![u, c.scope[0]], c.undeletable)?;
            }
        }
    }
    target.add_constraint_at(xor_index, vec![x, y], true)?;
    let source = inst.clone();
    let n = inst.num_variables();
    Ok(ReductionArtifact::new(
        target,
        ReductionKind::CostPreserving,
        "constants replaced by equalities with an undeletable x ⊕ y pair",
        move |s: &DcspSolution| {
            // self-duality lets us flip everything so that x reads 0
            let flip = s.assignment[x];
            let assignment = s.assignment[..n].iter().map(|&v| v != flip).collect();
            DcspSolution::from_assignment(&source, assignment)
        },
    ))
}

fn dual_name(r: &Relation) -> String {
    let name = r.label();
    if is_self_dual(r) {
        return name;
    }
    let complement = r.complemented();
    let swaps = [("x", "notx"), ("clause_ppn", "clause_nnp")];
    for (a, b) in swaps {
        for (from, to) in [(a, b), (b, a)] {
            if name == from && library::by_name(to).is_some_and(|t| t.same_tuples(&complement)) {
                return to.to_string();
            }
        }
    }
    for (from, to) in [("or", "nand"), ("nand", "or"), ("even", "odd"), ("odd", "even")] {
        if let Some(rest) = name.strip_prefix(from) {
            let candidate = format!("{to}{rest}");
            if library::by_name(&candidate).is_some_and(|t| t.same_tuples(&complement)) {
                return candidate;
            }
        }
    }
    match name.strip_suffix("_dual") {
        Some(base) => base.to_string(),
        None => format!("{name}_dual"),
    }
}

/// Complements every relation (`t ↦ ¬t`) and every witness.
pub fn dualize(inst: &DcspInstance) -> DcspArtifact {
    let plain = inst.dualized();
    let renamed: Vec<Relation> = inst
        .language()
        .relations()
        .iter()
        .zip(plain.language().relations())
        .map(|(r, d)| d.clone().named(dual_name(r)))
        .collect();
    let target = match Language::new(renamed) {
        Ok(lang) => {
            let mut t = DcspInstance::new(lang);
            for name in inst.variable_names() {
                t.add_variable(name).expect("names are distinct");
            }
            for c in inst.constraints() {
                t.add_constraint_at(c.relation, c.scope.clone(), c.undeletable)
                    .expect("arities are unchanged");
            }
            t
        }
        Err(_) => plain,
    };
    ReductionArtifact::new(
        target,
        ReductionKind::CostPreserving,
        "every literal negated",
        |s: &DcspSolution| DcspSolution {
            deletion: s.deletion.clone(),
            assignment: s.assignment.iter().map(|&v| !v).collect(),
        },
    )
}
