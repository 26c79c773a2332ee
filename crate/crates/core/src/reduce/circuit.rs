use super::{ReductionArtifact, ReductionKind};
use crate::error::ReductionError;
use crate::instance::{DcspInstance, DcspSolution, GateKind, MonotoneCircuit};
use crate::relation::{library, Language};

/// Monotone circuit satisfiability to constraint deletion over `{x ∨ y ∨ z̄, x, x̄}`.
///
/// One variable per gate. An AND gate `y = a ∧ b` gives `a ∨ a ∨ ȳ` and `b ∨ b ∨ ȳ`,
/// an OR gate gives `a ∨ b ∨ ȳ`, and the output gets a unit `x`; all of these are
/// undeletable. Every input gets a deletable `x̄`, so deleted input units are the
/// true inputs. The pull-back raises gate values bottom-up until each gate equals
/// its function, which keeps the output true.
pub fn mcs_to_dcsp(c: &MonotoneCircuit) -> Result<ReductionArtifact<MonotoneCircuit, DcspInstance>, ReductionError> {
    if !c.has_output() {
        return Err(ReductionError::Precondition("circuit has no output gate".to_string()));
    }
    let lang = Language::new(vec![library::clause_ppn(), library::positive_unit(), library::negative_unit()])?;
    let mut inst = DcspInstance::new(lang);
    for g in c.gates() {
        inst.add_variable(&g.name)?;
    }
    for (y, g) in c.gates().iter().enumerate() {
        match g.kind {
            GateKind::Input => {}
            GateKind::And(a, b) => {
                inst.add_constraint("clause_ppn", vec![a, a, y], true)?;
                inst.add_constraint("clause_ppn", vec![b, b, y], true)?;
            }
            GateKind::Or(a, b) => {
                inst.add_constraint("clause_ppn", vec![a, b, y], true)?;
            }
        }
    }
    inst.add_constraint("x", vec![c.output()], true)?;
    let inputs = c.inputs();
    for &i in &inputs {
        inst.add_constraint("notx", vec![i], false)?;
    }
    let circuit = c.clone();
    Ok(ReductionArtifact::new(
        inst,
        ReductionKind::CostPreserving,
        "monotone circuit gadgets with deletable input units",
        move |s: &DcspSolution| {
            let mut value = s.assignment.clone();
            for (y, g) in circuit.gates().iter().enumerate() {
                let raised = match g.kind {
                    GateKind::Input => false,
                    GateKind::And(a, b) => value[a] && value[b],
                    GateKind::Or(a, b) => value[a] || value[b],
                };
                value[y] |= raised;
            }
            inputs.iter().map(|&i| value[i]).collect()
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduce::Problem;

    fn check(text: &str, expected: Option<usize>) {
        let c: MonotoneCircuit = text.parse().unwrap();
        let art = mcs_to_dcsp(&c).unwrap();
        let target = art.target.optimum().unwrap();
        assert_eq!(target.as_ref().map(|(_, k)| *k), expected);
        assert_eq!(c.optimum().unwrap().map(|(_, k)| k), expected);
        if let Some((s, k)) = target {
            assert_eq!(c.cost(&art.pull_back(&s)), Some(k));
        }
    }

    #[test]
    fn and_gate_needs_both() {
        check("input a\ninput b\nand g a b\noutput g\n", Some(2));
    }

    #[test]
    fn or_gate_needs_one() {
        check("input a\ninput b\nor g a b\noutput g\n", Some(1));
    }

    #[test]
    fn lazy_gate_values_are_repaired() {
        let c: MonotoneCircuit = "input a\ninput b\nand g a b\nor h g b\noutput h\n".parse().unwrap();
        let art = mcs_to_dcsp(&c).unwrap();
        // b true, g left at 0 although a ∧ b is false anyway; h true through b
        let s = DcspSolution::from_assignment(&art.target, vec![false, true, false, true]);
        assert!(art.target.check_solution(&s));
        assert_eq!(art.pull_back(&s), vec![false, true]);
    }
}
