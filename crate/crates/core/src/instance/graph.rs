//! Graphs whose vertices are partitioned into color classes.
//!
//! Text format (`.mkds`), classes 0-based:
//!
//! ```text
//! classes 3
//! vertex a 0
//! vertex b 1
//! edge a b
//! ```

use std::collections::HashMap;
use std::str::FromStr;

use crate::error::{InstanceError, ParseError};
use crate::text;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    classes: usize,
    names: Vec<String>,
    class_of: Vec<usize>,
    index: HashMap<String, usize>,
    /// Each edge stored as `(min, max)`.
    edges: Vec<(usize, usize)>,
}

impl ColoredGraph {
    pub fn new(classes: usize) -> Self {
        Self {
            classes,
            names: Vec::new(),
            class_of: Vec::new(),
            index: HashMap::new(),
            edges: Vec::new(),
        }
    }

    pub fn add_vertex(&mut self, name: &str, class: usize) -> Result<usize, InstanceError> {
        if class >= self.classes {
            return Err(InstanceError::Graph(format!(
                "vertex `{name}` has class {class}, only {} classes exist",
                self.classes
            )));
        }
        if self.index.contains_key(name) {
            return Err(InstanceError::Graph(format!("vertex `{name}` defined twice")));
        }
        let v = self.names.len();
        self.names.push(name.to_string());
        self.class_of.push(class);
        self.index.insert(name.to_string(), v);
        Ok(v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), InstanceError> {
        if u >= self.names.len() || v >= self.names.len() {
            return Err(InstanceError::Graph("edge endpoint undefined".to_string()));
        }
        if u == v {
            return Err(InstanceError::Graph(format!("self-loop on `{}`", self.names[u])));
        }
        let e = (u.min(v), u.max(v));
        if self.edges.contains(&e) {
            return Err(InstanceError::Graph(format!(
                "edge `{}`–`{}` listed twice",
                self.names[e.0], self.names[e.1]
            )));
        }
        self.edges.push(e);
        Ok(())
    }

    pub fn num_classes(&self) -> usize {
        self.classes
    }

    pub fn num_vertices(&self) -> usize {
        self.names.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn class_members(&self, class: usize) -> Vec<usize> {
        (0..self.names.len()).filter(|&v| self.class_of[v] == class).collect()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edges with one endpoint in each of the two classes, in insertion order.
    pub fn edges_between(&self, i: usize, j: usize) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .copied()
            .filter(|&(u, v)| {
                let (cu, cv) = (self.class_of[u], self.class_of[v]);
                (cu == i && cv == j) || (cu == j && cv == i)
            })
            .collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Number of edges with both endpoints in `vertices`.
    pub fn induced_edges(&self, vertices: &[usize]) -> usize {
        self.edges
            .iter()
            .filter(|(u, v)| vertices.contains(u) && vertices.contains(v))
            .count()
    }

    /// Maximum induced edge count over all choices of one vertex per class.
    /// `None` if some class is empty.
    pub fn densest_multicolored(&self) -> Option<(Vec<usize>, usize)> {
        let members: Vec<Vec<usize>> = (0..self.classes).map(|c| self.class_members(c)).collect();
        if members.iter().any(Vec::is_empty) {
            return None;
        }
        let mut best: Option<(Vec<usize>, usize)> = None;
        let mut pick = vec![0usize; self.classes];
        loop {
            let chosen: Vec<usize> = pick.iter().enumerate().map(|(c, &i)| members[c][i]).collect();
            let e = self.induced_edges(&chosen);
            if best.as_ref().is_none_or(|(_, b)| e > *b) {
                best = Some((chosen, e));
            }
            let mut c = 0;
            loop {
                if c == self.classes {
                    return best;
                }
                pick[c] += 1;
                if pick[c] < members[c].len() {
                    break;
                }
                pick[c] = 0;
                c += 1;
            }
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("classes {}\n", self.classes);
        for (v, name) in self.names.iter().enumerate() {
            out.push_str(&format!("vertex {name} {}\n", self.class_of[v]));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("edge {} {}\n", self.names[u], self.names[v]));
        }
        out
    }
}

impl FromStr for ColoredGraph {
    type Err = ParseError;

    fn from_str(input: &str) -> Result<Self, ParseError> {
        let lines = text::lines(input);
        let Some(head) = lines.first() else {
            return Err(ParseError::new(text::end_line(input), "missing `classes` line"));
        };
        if head.keyword() != "classes" {
            return Err(head.err(format!("expected `classes`, found `{}`", head.keyword())));
        }
        let k = head.number_arg(head.expect_args(1)?[0], "class count")?;
        let mut g = ColoredGraph::new(k);
        for line in &lines[1..] {
            match line.keyword() {
                "vertex" => {
                    let args = line.expect_args(2)?;
                    let class = line.number_arg(args[1], "class")?;
                    g.add_vertex(args[0], class).map_err(|e| line.err(e.to_string()))?;
                }
                "edge" => {
                    let args = line.expect_args(2)?;
                    let end = |name: &str| {
                        g.vertex_index(name)
                            .ok_or_else(|| line.err(format!("undeclared vertex `{name}`")))
                    };
                    let (u, v) = (end(args[0])?, end(args[1])?);
                    g.add_edge(u, v).map_err(|e| line.err(e.to_string()))?;
                }
                other => return Err(line.err(format!("unknown keyword `{other}`"))),
            }
        }
        Ok(g)
    }
}
