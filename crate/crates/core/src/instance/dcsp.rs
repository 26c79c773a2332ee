//! Constraint-deletion instances over a language, with an undeletable subset.
//!
//! Text format (`.dcsp`): relation blocks as in `.lang`, then
//!
//! ```text
//! variables a b c
//! constraint imp a b
//! undeletable notx c
//! ```

use std::collections::HashMap;
use std::str::FromStr;

use crate::error::{InstanceError, ParseError};
use crate::relation::{parse_relation_block, write_relation_block, Language, Relation};
use crate::text;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Constraint {
    /// Index into the instance language.
    pub relation: usize,
    pub scope: Vec<usize>,
    pub undeletable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DcspInstance {
    language: Language,
    variables: Vec<String>,
    names: HashMap<String, usize>,
    constraints: Vec<Constraint>,
}

/// A deletion set together with an assignment satisfying everything outside it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DcspSolution {
    /// Sorted constraint indices.
    pub deletion: Vec<usize>,
    pub assignment: Vec<bool>,
}

impl DcspSolution {
    /// The solution induced by an assignment: delete exactly what it violates.
    pub fn from_assignment(inst: &DcspInstance, assignment: Vec<bool>) -> Self {
        Self {
            deletion: inst.violated(&assignment),
            assignment,
        }
    }

    pub fn cost(&self) -> usize {
        self.deletion.len()
    }
}

impl DcspInstance {
    pub fn new(language: Language) -> Self {
        Self {
            language,
            variables: Vec::new(),
            names: HashMap::new(),
            constraints: Vec::new(),
        }
    }

    pub fn with_variables(language: Language, n: usize) -> Self {
        let mut inst = Self::new(language);
        for i in 0..n {
            inst.fresh_variable(&format!("v{i}"));
        }
        inst
    }

    pub fn language(&self) -> &Language {
        &self.language
    }

    pub fn num_variables(&self) -> usize {
        self.variables.len()
    }

    pub fn variable_names(&self) -> &[String] {
        &self.variables
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.names.get(name).copied()
    }

    pub fn add_variable(&mut self, name: &str) -> Result<usize, InstanceError> {
        if self.names.contains_key(name) {
            return Err(InstanceError::DuplicateVariable(name.to_string()));
        }
        let i = self.variables.len();
        self.variables.push(name.to_string());
        self.names.insert(name.to_string(), i);
        Ok(i)
    }

    /// Adds a variable named `prefix`, or `prefix_1`, `prefix_2`, … if taken.
    pub fn fresh_variable(&mut self, prefix: &str) -> usize {
        if !self.names.contains_key(prefix) {
            return self.add_variable(prefix).unwrap();
        }
        let mut i = 1;
        loop {
            let name = format!("{prefix}_{i}");
            if !self.names.contains_key(&name) {
                return self.add_variable(&name).unwrap();
            }
            i += 1;
        }
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    pub fn constraint(&self, i: usize) -> &Constraint {
        &self.constraints[i]
    }

    pub fn relation_of(&self, i: usize) -> &Relation {
        self.language.get(self.constraints[i].relation)
    }

    pub fn relation_name(&self, i: usize) -> &str {
        self.relation_of(i).name().unwrap_or("")
    }

    /// Adds a constraint by relation name; returns its index.
    pub fn add_constraint(
        &mut self,
        relation: &str,
        scope: Vec<usize>,
        undeletable: bool,
    ) -> Result<usize, InstanceError> {
        let rel = self.language.position(relation).ok_or_else(|| {
            InstanceError::Relation(crate::error::RelationError::UnknownRelation(relation.to_string()))
        })?;
        self.add_constraint_at(rel, scope, undeletable)
    }

    pub fn add_constraint_at(
        &mut self,
        relation: usize,
        scope: Vec<usize>,
        undeletable: bool,
    ) -> Result<usize, InstanceError> {
        let index = self.constraints.len();
        let r = self.language.get(relation);
        if scope.len() != r.arity() {
            return Err(InstanceError::ScopeArity {
                index,
                relation: r.label(),
                arity: r.arity(),
                got: scope.len(),
            });
        }
        if let Some(&var) = scope.iter().find(|&&v| v >= self.variables.len()) {
            return Err(InstanceError::UnknownVariable { index, var });
        }
        self.constraints.push(Constraint {
            relation,
            scope,
            undeletable,
        });
        Ok(index)
    }

    /// Same variables and constraints, with the language swapped for one that has
    /// the same relation names at the same positions or a superset appended.
    pub fn relabel_language(&self, language: Language) -> Result<DcspInstance, InstanceError> {
        let mut out = DcspInstance::new(language);
        for v in &self.variables {
            out.add_variable(v)?;
        }
        for c in &self.constraints {
            out.add_constraint(self.language.get(c.relation).name().unwrap_or(""), c.scope.clone(), c.undeletable)?;
        }
        Ok(out)
    }

    /// Every relation replaced by its complement under the same name. An
    /// assignment satisfies a constraint here iff its complement does in `self`.
    pub fn dualized(&self) -> DcspInstance {
        let relations = self
            .language
            .relations()
            .iter()
            .map(|r| r.complemented().named(r.label()))
            .collect();
        let language = Language::new(relations).expect("names carry over unchanged");
        DcspInstance {
            language,
            variables: self.variables.clone(),
            names: self.names.clone(),
            constraints: self.constraints.clone(),
        }
    }

    pub fn is_satisfied(&self, i: usize, assignment: &[bool]) -> bool {
        let c = &self.constraints[i];
        let code = c.scope.iter().fold(0u32, |acc, &v| (acc << 1) | assignment[v] as u32);
        self.language.get(c.relation).contains(code)
    }

    /// Every violated constraint, ascending.
    pub fn violated(&self, assignment: &[bool]) -> Vec<usize> {
        assert_eq!(assignment.len(), self.variables.len(), "assignment length");
        (0..self.constraints.len())
            .filter(|&i| !self.is_satisfied(i, assignment))
            .collect()
    }

    pub fn violates_undeletable(&self, assignment: &[bool]) -> bool {
        (0..self.constraints.len()).any(|i| self.constraints[i].undeletable && !self.is_satisfied(i, assignment))
    }

    /// Number of violated constraints if no undeletable one is violated.
    pub fn assignment_cost(&self, assignment: &[bool]) -> Option<usize> {
        let v = self.violated(assignment);
        (!v.iter().any(|&i| self.constraints[i].undeletable)).then_some(v.len())
    }

    pub fn undeletable_count(&self) -> usize {
        self.constraints.iter().filter(|c| c.undeletable).count()
    }

    pub fn deletable(&self) -> Vec<usize> {
        (0..self.constraints.len())
            .filter(|&i| !self.constraints[i].undeletable)
            .collect()
    }

    /// Validates a deletion set: in range, distinct, deletable. Returns it sorted.
    pub fn deletion_set(&self, indices: &[usize]) -> Result<Vec<usize>, InstanceError> {
        let mut seen = vec![false; self.constraints.len()];
        for &i in indices {
            if i >= self.constraints.len() {
                return Err(InstanceError::DeletionOutOfRange(i));
            }
            if seen[i] {
                return Err(InstanceError::DeletionRepeat(i));
            }
            if self.constraints[i].undeletable {
                return Err(InstanceError::DeletesUndeletable(i));
            }
            seen[i] = true;
        }
        let mut w = indices.to_vec();
        w.sort_unstable();
        Ok(w)
    }

    /// `witness` satisfies every constraint outside `deletion`.
    pub fn check_deletion_set(&self, deletion: &[usize], witness: &[bool]) -> bool {
        witness.len() == self.variables.len()
            && self.violated(witness).iter().all(|i| deletion.contains(i))
    }

    /// Valid deletion set and witness.
    pub fn check_solution(&self, s: &DcspSolution) -> bool {
        self.deletion_set(&s.deletion).is_ok() && self.check_deletion_set(&s.deletion, &s.assignment)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in self.language.relations() {
            write_relation_block(r, &mut out);
        }
        if !self.variables.is_empty() {
            out.push_str("variables");
            for v in &self.variables {
                out.push(' ');
                out.push_str(v);
            }
            out.push('\n');
        }
        for c in &self.constraints {
            out.push_str(if c.undeletable { "undeletable " } else { "constraint " });
            out.push_str(self.language.get(c.relation).name().unwrap_or(""));
            for &v in &c.scope {
                out.push(' ');
                out.push_str(&self.variables[v]);
            }
            out.push('\n');
        }
        out
    }
}

impl FromStr for DcspInstance {
    type Err = ParseError;

    fn from_str(input: &str) -> Result<Self, ParseError> {
        let lines = text::lines(input);
        let mut relations: Vec<Relation> = Vec::new();
        let mut pos = 0;
        while pos < lines.len() && lines[pos].keyword() == "relation" {
            let number = lines[pos].number;
            let r = parse_relation_block(&lines, &mut pos)?;
            if relations.iter().any(|s| s.name() == r.name()) {
                return Err(ParseError::new(number, format!("duplicate relation name `{}`", r.label())));
            }
            relations.push(r);
        }
        if relations.is_empty() {
            let line = lines.first().map_or(text::end_line(input), |l| l.number);
            return Err(ParseError::new(line, "an instance must declare at least one relation"));
        }
        let mut inst = DcspInstance::new(Language::new(relations).map_err(|e| ParseError::new(1, e.to_string()))?);
        for line in &lines[pos..] {
            match line.keyword() {
                "variables" => {
                    for name in line.args() {
                        inst.add_variable(name).map_err(|e| line.err(e.to_string()))?;
                    }
                }
                kw @ ("constraint" | "undeletable") => {
                    let args = line.args();
                    if args.is_empty() {
                        return Err(line.err(format!("`{kw}` needs a relation name")));
                    }
                    let mut scope = Vec::with_capacity(args.len() - 1);
                    for name in &args[1..] {
                        let v = inst
                            .variable_index(name)
                            .ok_or_else(|| line.err(format!("undeclared variable `{name}`")))?;
                        scope.push(v);
                    }
                    inst.add_constraint(args[0], scope, kw == "undeletable")
                        .map_err(|e| line.err(e.to_string()))?;
                }
                "relation" => return Err(line.err("relation blocks must precede variables and constraints")),
                other => return Err(line.err(format!("unknown keyword `{other}`"))),
            }
        }
        Ok(inst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::library;

    fn units() -> DcspInstance {
        let lang = Language::new(vec![library::positive_unit(), library::negative_unit()]).unwrap();
        let mut inst = DcspInstance::new(lang);
        let a = inst.add_variable("a").unwrap();
        inst.add_constraint("x", vec![a], false).unwrap();
        inst.add_constraint("notx", vec![a], false).unwrap();
        inst
    }

    #[test]
    fn one_unit_fails() {
        let inst = units();
        assert_eq!(inst.violated(&[false]), vec![0]);
        assert_eq!(inst.violated(&[true]), vec![1]);
        assert!(inst.check_deletion_set(&[0], &[false]));
        assert!(!inst.check_deletion_set(&[1], &[false]));
    }

    #[test]
    fn odd2_triangle_violates_one_or_three() {
        let lang = Language::new(vec![library::xor()]).unwrap();
        let mut inst = DcspInstance::with_variables(lang, 3);
        for (u, v) in [(0, 1), (1, 2), (0, 2)] {
            inst.add_constraint("xor", vec![u, v], false).unwrap();
        }
        for code in 0..8u32 {
            let a: Vec<bool> = (0..3).map(|i| code >> i & 1 == 1).collect();
            let k = inst.violated(&a).len();
            assert!(k == 1 || k == 3);
        }
    }

    #[test]
    fn deletion_set_validation() {
        let mut inst = units();
        inst.add_constraint("x", vec![0], true).unwrap();
        assert_eq!(inst.deletion_set(&[1, 0]), Ok(vec![0, 1]));
        assert_eq!(inst.deletion_set(&[3]), Err(InstanceError::DeletionOutOfRange(3)));
        assert_eq!(inst.deletion_set(&[0, 0]), Err(InstanceError::DeletionRepeat(0)));
        assert_eq!(inst.deletion_set(&[2]), Err(InstanceError::DeletesUndeletable(2)));
    }

    #[test]
    fn text_round_trip() {
        let mut inst = units();
        inst.add_constraint("x", vec![0], true).unwrap();
        let text = inst.to_text();
        assert!(text.contains("variables a\nconstraint x a\nconstraint notx a\nundeletable x a\n"));
        assert_eq!(text.parse::<DcspInstance>().unwrap(), inst);
    }

    #[test]
    fn parse_errors() {
        let head = "relation x 1\n1\nend\n";
        let err = format!("{head}variables a\nconstraint x b\n").parse::<DcspInstance>().unwrap_err();
        assert_eq!(err.line, 5);
        let err = format!("{head}variables a\nconstraint x a a\n").parse::<DcspInstance>().unwrap_err();
        assert_eq!(err.line, 5);
        let err = format!("{head}variables a a\n").parse::<DcspInstance>().unwrap_err();
        assert_eq!(err.line, 4);
        let err = format!("{head}variables a\nconstraint y a\n").parse::<DcspInstance>().unwrap_err();
        assert_eq!(err.line, 5);
        let err = "variables a\n".parse::<DcspInstance>().unwrap_err();
        assert_eq!(err.line, 1);
    }

    #[test]
    fn repeated_scope_variables() {
        let lang = Language::new(vec![library::clause_ppn()]).unwrap();
        let mut inst = DcspInstance::with_variables(lang, 2);
        // y ∨ y ∨ x̄ is x → y
        inst.add_constraint("clause_ppn", vec![1, 1, 0], false).unwrap();
        assert_eq!(inst.violated(&[true, false]), vec![0]);
        assert!(inst.violated(&[false, false]).is_empty());
        assert!(inst.violated(&[true, true]).is_empty());
    }
}
