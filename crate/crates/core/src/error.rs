use thiserror::Error;

/// A text-format error, always tied to the 1-based line where it was found.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error("arity {0} outside the supported range 1..=16")]
    ArityOutOfRange(usize),
    #[error("tuple `{tuple}` has length {len}, expected {arity}")]
    TupleLength {
        tuple: String,
        len: usize,
        arity: usize,
    },
    #[error("tuple `{0}` is not a bit-string")]
    NotBits(String),
    #[error("a relation needs at least one tuple")]
    Empty,
    #[error("relation names must be unique, `{0}` repeats")]
    DuplicateName(String),
    #[error("every relation in a language needs a name")]
    Unnamed,
    #[error("a language needs at least one relation")]
    EmptyLanguage,
    #[error("no relation named `{0}`")]
    UnknownRelation(String),
    #[error("property mechanisms disagree on `{property}` for relation {relation}")]
    Inconsistent { property: String, relation: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("constraint {index}: scope has {got} variables, relation `{relation}` has arity {arity}")]
    ScopeArity {
        index: usize,
        relation: String,
        arity: usize,
        got: usize,
    },
    #[error("constraint {index}: variable index {var} out of range")]
    UnknownVariable { index: usize, var: usize },
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("deletion set index {0} out of range")]
    DeletionOutOfRange(usize),
    #[error("deletion set repeats constraint {0}")]
    DeletionRepeat(usize),
    #[error("constraint {0} is undeletable")]
    DeletesUndeletable(usize),
    #[error("element {element} outside universe of size {universe}")]
    ElementOutOfRange { element: usize, universe: usize },
    #[error("set {0} lists an element twice")]
    RepeatedElement(usize),
    #[error("malformed circuit: {0}")]
    Circuit(String),
    #[error("malformed graph: {0}")]
    Graph(String),
    #[error("malformed formula: {0}")]
    Formula(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error(transparent)]
    Relation(#[from] RelationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("solver precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Relation(#[from] RelationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("reduction precondition violated: {0}")]
    Precondition(String),
    #[error("source instance has no feasible solution")]
    InfeasibleSource,
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Relation(#[from] RelationError),
}
