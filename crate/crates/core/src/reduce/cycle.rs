//! The cost-preserving cycle Odd Set → DCSP(B2) → DCSP(B3) → Nearest Codeword.

use super::dcsp::{add_constants, eliminate_undeletable};
use super::parity::evenodd_to_odd;
use super::pp::{odd_over_b2, pp_expand};
use super::{ReductionArtifact, ReductionKind};
use crate::error::ReductionError;
use crate::gf2::{Gf2Matrix, Gf2Vector};
use crate::instance::{DcspInstance, DcspSolution, EvenOddSetInstance, NearestCodeword};
use crate::relation::{library, Language, Relation};

/// Odd Set to plain DCSP over `{even⁴, x, x̄}`: a variable per element, an
/// undeletable `odd^s` on each set (expanded into B2 atoms), and a deletable `x̄`
/// per element that occurs in some set. Undeletable constraints are then removed
/// by repetition. Even targets are first folded into odd ones.
pub fn oddset_to_dcsp_b2(
    e: &EvenOddSetInstance,
) -> Result<ReductionArtifact<EvenOddSetInstance, DcspInstance>, ReductionError> {
    let folded = evenodd_to_odd(e);
    let odd = &folded.target;
    if odd.sets().iter().any(|s| s.elements.is_empty()) {
        return Err(ReductionError::InfeasibleSource);
    }
    let mut sizes: Vec<usize> = odd.sets().iter().map(|s| s.elements.len()).filter(|&s| s >= 2).collect();
    sizes.sort_unstable();
    sizes.dedup();
    let mut relations = library::b2().relations().to_vec();
    relations.extend(sizes.iter().map(|&s| library::odd(s)));
    let mut inst = DcspInstance::new(Language::new(relations)?);
    for x in 0..odd.universe() {
        inst.add_variable(&format!("e{x}"))?;
    }
    let mut appears = vec![false; odd.universe()];
    for s in odd.sets() {
        let name = if s.elements.len() == 1 {
            "x".to_string()
        } else {
            format!("odd{}", s.elements.len())
        };
        inst.add_constraint(&name, s.elements.clone(), true)?;
        for &x in &s.elements {
            appears[x] = true;
        }
    }
    for x in (0..odd.universe()).filter(|&x| appears[x]) {
        inst.add_constraint("notx", vec![x], false)?;
    }
    let first = ReductionArtifact::new(
        inst,
        ReductionKind::CostPreserving,
        "odd set as undeletable parity constraints with deletable negative units",
        move |s: &DcspSolution| (0..appears.len()).filter(|&x| appears[x] && s.assignment[x]).collect(),
    );
    let mut art = folded.then(|_| first);
    let b2 = library::b2();
    for &s in &sizes {
        let next = pp_expand(&art.target, &odd_over_b2(s), &b2)?;
        art = art.then(|_| next);
    }
    let last = eliminate_undeletable(&art.target)?;
    Ok(art.then(|_| last))
}

fn check_language(inst: &DcspInstance, allowed: &[Relation], what: &str) -> Result<(), ReductionError> {
    for r in inst.language().relations() {
        if !allowed.iter().any(|a| a.same_tuples(r)) {
            return Err(ReductionError::Precondition(format!(
                "relation `{}` is not in {what}",
                r.label()
            )));
        }
    }
    Ok(())
}

/// DCSP over B2 to plain DCSP over `{even⁴, x ⊕ y}` by adding constants, then
/// removing the undeletable `x ⊕ y` by repetition.
pub fn dcsp_b2_to_b3(inst: &DcspInstance) -> Result<ReductionArtifact<DcspInstance, DcspInstance>, ReductionError> {
    check_language(inst, library::b2().relations(), "{even4, x, notx}")?;
    let constants = add_constants(inst)?;
    let plain = eliminate_undeletable(&constants.target)?;
    Ok(constants.then(|_| plain))
}

/// DCSP over B3 (all constraints deletable) to Nearest Codeword: one row per
/// constraint with ones on its scope (repeated variables cancel), target bit 1
/// exactly for `x ⊕ y`.
pub fn dcsp_b3_to_nc(
    inst: &DcspInstance,
) -> Result<ReductionArtifact<DcspInstance, NearestCodeword>, ReductionError> {
    check_language(inst, library::b3().relations(), "{even4, xor}")?;
    if inst.undeletable_count() > 0 {
        return Err(ReductionError::Precondition(
            "undeletable constraints must be eliminated first".to_string(),
        ));
    }
    let n = inst.num_variables();
    let xor = library::xor();
    let mut rows = Vec::with_capacity(inst.num_constraints());
    let mut target = Vec::with_capacity(inst.num_constraints());
    for (i, c) in inst.constraints().iter().enumerate() {
        let mut row = Gf2Vector::zeros(n);
        for &v in &c.scope {
            row.flip(v);
        }
        rows.push(row);
        target.push(inst.relation_of(i).same_tuples(&xor));
    }
    let nc = NearestCodeword::new(Gf2Matrix::from_rows(n, rows), Gf2Vector::from_bits(&target))?;
    let source = inst.clone();
    Ok(ReductionArtifact::new(
        nc,
        ReductionKind::CostPreserving,
        "one parity row per constraint",
        move |x: &Gf2Vector| DcspSolution::from_assignment(&source, x.bits()),
    ))
}
