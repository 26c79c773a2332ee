//! Monotone circuits with fan-in two.
//!
//! Text format (`.mcirc`); operands must be defined on earlier lines:
//!
//! ```text
//! input i1
//! input i2
//! and g i1 i2
//! output g
//! ```

use std::collections::HashMap;
use std::str::FromStr;

use crate::error::{InstanceError, ParseError};
use crate::text;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GateKind {
    Input,
    And(usize, usize),
    Or(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gate {
    pub name: String,
    pub kind: GateKind,
}

/// Gates in topological order; operands always precede the gate using them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneCircuit {
    gates: Vec<Gate>,
    names: HashMap<String, usize>,
    output: Option<usize>,
}

impl MonotoneCircuit {
    pub fn new() -> Self {
        Self {
            gates: Vec::new(),
            names: HashMap::new(),
            output: None,
        }
    }

    fn push(&mut self, name: &str, kind: GateKind) -> Result<usize, InstanceError> {
        if self.names.contains_key(name) {
            return Err(InstanceError::Circuit(format!("gate `{name}` defined twice")));
        }
        if let GateKind::And(a, b) | GateKind::Or(a, b) = kind {
            if a >= self.gates.len() || b >= self.gates.len() {
                return Err(InstanceError::Circuit(format!("gate `{name}` uses an undefined operand")));
            }
        }
        let id = self.gates.len();
        self.gates.push(Gate {
            name: name.to_string(),
            kind,
        });
        self.names.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn input(&mut self, name: &str) -> Result<usize, InstanceError> {
        self.push(name, GateKind::Input)
    }

    pub fn and(&mut self, name: &str, a: usize, b: usize) -> Result<usize, InstanceError> {
        self.push(name, GateKind::And(a, b))
    }

    pub fn or(&mut self, name: &str, a: usize, b: usize) -> Result<usize, InstanceError> {
        self.push(name, GateKind::Or(a, b))
    }

    pub fn set_output(&mut self, gate: usize) -> Result<(), InstanceError> {
        if gate >= self.gates.len() {
            return Err(InstanceError::Circuit(format!("output gate {gate} undefined")));
        }
        self.output = Some(gate);
        Ok(())
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn gate_index(&self, name: &str) -> Option<usize> {
        self.names.get(name).copied()
    }

    /// Panics if no output was set.
    pub fn output(&self) -> usize {
        self.output.expect("circuit has no output gate")
    }

    pub fn has_output(&self) -> bool {
        self.output.is_some()
    }

    /// Gate ids of the inputs, in definition order.
    pub fn inputs(&self) -> Vec<usize> {
        (0..self.gates.len())
            .filter(|&g| self.gates[g].kind == GateKind::Input)
            .collect()
    }

    pub fn num_inputs(&self) -> usize {
        self.inputs().len()
    }

    /// Value of every gate given the input values (in `inputs()` order).
    pub fn evaluate_all(&self, inputs: &[bool]) -> Vec<bool> {
        let mut values = Vec::with_capacity(self.gates.len());
        let mut next = inputs.iter();
        for g in &self.gates {
            let v = match g.kind {
                GateKind::Input => *next.next().expect("too few input values"),
                GateKind::And(a, b) => values[a] && values[b],
                GateKind::Or(a, b) => values[a] || values[b],
            };
            values.push(v);
        }
        values
    }

    pub fn evaluate(&self, inputs: &[bool]) -> bool {
        self.evaluate_all(inputs)[self.output()]
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for g in &self.gates {
            match g.kind {
                GateKind::Input => out.push_str(&format!("input {}\n", g.name)),
                GateKind::And(a, b) => {
                    out.push_str(&format!("and {} {} {}\n", g.name, self.gates[a].name, self.gates[b].name))
                }
                GateKind::Or(a, b) => {
                    out.push_str(&format!("or {} {} {}\n", g.name, self.gates[a].name, self.gates[b].name))
                }
            }
        }
        if let Some(o) = self.output {
            out.push_str(&format!("output {}\n", self.gates[o].name));
        }
        out
    }
}

impl Default for MonotoneCircuit {
    fn default() -> Self {
        Self::new()
    }
}

impl FromStr for MonotoneCircuit {
    type Err = ParseError;

    fn from_str(input: &str) -> Result<Self, ParseError> {
        let mut c = MonotoneCircuit::new();
        let lines = text::lines(input);
        for line in &lines {
            if c.output.is_some() {
                return Err(line.err("nothing may follow the `output` line"));
            }
            let lookup = |name: &str| {
                c.gate_index(name)
                    .ok_or_else(|| line.err(format!("operand `{name}` is not defined on an earlier line")))
            };
            match line.keyword() {
                "input" => {
                    let args = line.expect_args(1)?;
                    c.input(args[0]).map_err(|e| line.err(e.to_string()))?;
                }
                kw @ ("and" | "or") => {
                    let args = line
                        .expect_args(3)
                        .map_err(|_| line.err(format!("`{kw}` takes a name and exactly two operands")))?;
                    let (a, b) = (lookup(args[1])?, lookup(args[2])?);
                    let r = if kw == "and" { c.and(args[0], a, b) } else { c.or(args[0], a, b) };
                    r.map_err(|e| line.err(e.to_string()))?;
                }
                "output" => {
                    let args = line.expect_args(1)?;
                    let g = lookup(args[0])?;
                    c.set_output(g).map_err(|e| line.err(e.to_string()))?;
                }
                other => return Err(line.err(format!("unknown keyword `{other}`"))),
            }
        }
        if c.output.is_none() {
            return Err(ParseError::new(text::end_line(input), "missing `output` line"));
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn and_circuit() -> MonotoneCircuit {
        let mut c = MonotoneCircuit::new();
        let a = c.input("i1").unwrap();
        let b = c.input("i2").unwrap();
        let g = c.and("g", a, b).unwrap();
        c.set_output(g).unwrap();
        c
    }

    #[test]
    fn evaluation() {
        let c = and_circuit();
        assert!(c.evaluate(&[true, true]));
        assert!(!c.evaluate(&[true, false]));
    }

    #[test]
    fn text_round_trip() {
        let c = and_circuit();
        assert_eq!(c.to_text(), "input i1\ninput i2\nand g i1 i2\noutput g\n");
        assert_eq!(c.to_text().parse::<MonotoneCircuit>().unwrap(), c);
    }

    #[test]
    fn parse_errors() {
        assert_eq!("input a\nand g a b\noutput g\n".parse::<MonotoneCircuit>().unwrap_err().line, 2);
        assert_eq!("input a\nand g a\noutput g\n".parse::<MonotoneCircuit>().unwrap_err().line, 2);
        assert_eq!("input a\ninput a\n".parse::<MonotoneCircuit>().unwrap_err().line, 2);
        assert_eq!("input a\n".parse::<MonotoneCircuit>().unwrap_err().line, 1);
        assert_eq!("input a\nor g a a a\n".parse::<MonotoneCircuit>().unwrap_err().line, 2);
        assert_eq!("input a\noutput a\ninput b\n".parse::<MonotoneCircuit>().unwrap_err().line, 3);
        assert_eq!("not g a\n".parse::<MonotoneCircuit>().unwrap_err().line, 1);
    }
}
