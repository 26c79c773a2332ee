//! Instance kinds, their text formats, evaluation, and random generators.

mod circuit;
mod cnf;
mod codeword;
mod dcsp;
mod graph;
mod parity;
pub mod random;

pub use circuit::{Gate, GateKind, MonotoneCircuit};
pub use cnf::Cnf3;
pub use codeword::NearestCodeword;
pub use dcsp::{Constraint, DcspInstance, DcspSolution};
pub use graph::ColoredGraph;
pub use parity::{EvenOddSetInstance, ParitySet};
