use thiserror::Error;

/// Errors reported by the library.
///
/// Evidence failures are not represented here: they are programming errors
/// and are caught by debug assertions inside the recursion operators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WfError {
    #[error("transitive closure is undecidable without predecessor enumeration")]
    Undecidable,

    #[error("descent did not terminate within {max_steps} steps")]
    BudgetExhausted { max_steps: usize },

    #[error("search budget of {budget} states exceeded")]
    SearchBudget { budget: usize },

    #[error("list is not strictly descending at position {index}")]
    NotDescending { index: usize },

    #[error("elements at positions {first} and {second} are not related in either direction")]
    Incomparable { first: usize, second: usize },

    #[error("tree node has {branches} branches; only 0 or 1 encode a natural number")]
    NotANumeral { branches: usize },

    #[error("arithmetic overflow: {0}")]
    Overflow(&'static str),

    #[error("value {value} exceeds the budget of {budget}")]
    ValueBudget { value: u64, budget: u64 },

    #[error("tuple has {found} components, expected {expected}")]
    Arity { expected: usize, found: usize },

    #[error("edge set has a cycle through node {node}")]
    Cyclic { node: usize },

    #[error("node {node} is outside a carrier of {size} elements")]
    OutOfRange { node: usize, size: usize },

    #[error("operation needs a multiset, not an atom")]
    NotAMultiset,

    #[error("value is not well-formed at nesting depth {depth}")]
    IllFormed { depth: u64 },

    #[error("multiplicity must be positive")]
    ZeroMultiplicity,

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A syntax error with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}
