//! Well-founded relations as values.
//!
//! A relation carries a decision procedure producing *evidence* of descent
//! and a recursion operator `wfrec` whose step function may call itself
//! only on elements it can certify as smaller.  Relations are assembled from
//! combinators (inverse image, subrelation, transitive closure, disjoint
//! sum, lexicographic products, power types, W-trees), and the derived
//! orderings (multisets, nested multisets, finite functions, ordinal
//! notations) are built from those, inheriting their recursion operators.

pub mod combinators;
pub mod depth;
pub mod derived;
pub mod error;
pub mod harness;
pub mod nat;
pub mod ordinal;
pub mod power;
pub mod programs;
pub mod relation;
pub mod wtree;

pub use combinators::{
    disjoint_sum, inverse_image, lex_product, lex_sigma, subrelation, transitive_closure, Chain, FiniteRelation,
    LexEvidence, Sum, SumEvidence,
};
pub use error::{ParseError, WfError};
pub use nat::{nat_wfrec, NatLess, NatLessEvidence};
pub use ordinal::Ordinal;
pub use power::{pow_relation, DescendingList};
pub use relation::{rec, step, wfrec_direct, EmptyRelation, Never, Rec, Step, WellFounded};
pub use wtree::{wtree_relation, WTree};
