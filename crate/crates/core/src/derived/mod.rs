//! Orderings assembled from the combinators: stepped lexicographic tuples,
//! finite functions, multisets, nested multisets and the unification
//! ordering.

mod finfun;
mod multiset;
mod nested;
mod tuple;
mod unification;

pub use finfun::{finfun_as_pairs, finfun_exp, FinFunExp, FiniteFunction};
pub use multiset::{
    dm_oracle, multiset_descent_step, multiset_of, multiset_relation, multiset_size, nat_multiset_descent_bound,
    occurrences, positive_less, Multiset, MultisetDisplay, MultisetRelation, PositiveLess,
};
pub use nested::{
    nested_multiset_relation, nm_atom, nm_bag, nm_members, nm_singleton, nm_union, BagEvidence, Layer, LayerEvidence,
    LayerRelation, NestedMultiset, NestedMultisetRelation,
};
pub use tuple::{stepped_lex, stepped_tuple, SteppedLex, SteppedTuple, TupleEvidence, TuplePower};
pub use unification::{unification_ordering, UnificationEvidence, UnificationOrdering};
