//! CNF formulas with at most three literals per clause (DIMACS subset).

use std::str::FromStr;

use crate::error::{InstanceError, ParseError};
use crate::text;

/// Literals use DIMACS numbering: `v` is variable `v-1` true, `-v` is it false.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cnf3 {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl Cnf3 {
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            clauses: Vec::new(),
        }
    }

    pub fn add_clause(&mut self, literals: &[i32]) -> Result<(), InstanceError> {
        if literals.is_empty() || literals.len() > 3 {
            return Err(InstanceError::Formula(format!(
                "clauses need 1 to 3 literals, found {}",
                literals.len()
            )));
        }
        if let Some(&l) = literals
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize > self.num_vars)
        {
            return Err(InstanceError::Formula(format!("literal {l} out of range")));
        }
        self.clauses.push(literals.to_vec());
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn clause_satisfied(clause: &[i32], assignment: &[bool]) -> bool {
        clause
            .iter()
            .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
    }

    pub fn satisfied_count(&self, assignment: &[bool]) -> usize {
        self.clauses
            .iter()
            .filter(|c| Self::clause_satisfied(c, assignment))
            .count()
    }

    pub fn is_satisfied(&self, assignment: &[bool]) -> bool {
        self.satisfied_count(assignment) == self.clauses.len()
    }

    /// 0-based variables occurring in the clause.
    pub fn clause_vars(clause: &[i32]) -> Vec<usize> {
        let mut v: Vec<usize> = clause.iter().map(|l| l.unsigned_abs() as usize - 1).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                out.push_str(&format!("{l} "));
            }
            out.push_str("0\n");
        }
        out
    }
}

impl FromStr for Cnf3 {
    type Err = ParseError;

    fn from_str(input: &str) -> Result<Self, ParseError> {
        let lines: Vec<_> = text::lines(input)
            .into_iter()
            .filter(|l| l.keyword() != "c")
            .collect();
        let Some(head) = lines.first() else {
            return Err(ParseError::new(text::end_line(input), "missing `p cnf` header"));
        };
        if head.tokens.len() != 4 || head.tokens[0] != "p" || head.tokens[1] != "cnf" {
            return Err(head.err("expected `p cnf <variables> <clauses>`"));
        }
        let n: usize = head.number_arg(head.tokens[2], "variable count")?;
        let m: usize = head.number_arg(head.tokens[3], "clause count")?;
        let mut f = Cnf3::new(n);
        for line in &lines[1..] {
            let mut lits = Vec::new();
            for tok in &line.tokens {
                lits.push(
                    tok.parse::<i32>()
                        .map_err(|_| line.err(format!("`{tok}` is not a literal")))?,
                );
            }
            if lits.last() != Some(&0) {
                return Err(line.err("a clause line must end with 0"));
            }
            lits.pop();
            f.add_clause(&lits).map_err(|e| line.err(e.to_string()))?;
        }
        if f.clauses.len() != m {
            let last = lines.last().map_or(head.number, |l| l.number);
            return Err(ParseError::new(
                last,
                format!("header declares {m} clauses, found {}", f.clauses.len()),
            ));
        }
        Ok(f)
    }
}
