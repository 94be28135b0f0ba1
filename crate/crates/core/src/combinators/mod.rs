//! Relation transformers.  Each builds its recursion operator out of the
//! operators of the relations it is made from.

mod closure;
mod finite;
mod inverse_image;
mod lex;
mod subrelation;
mod sum;

pub use closure::{
    finite_power_decide, refl_trans_reachable, transitive_closure, trcases, Chain, ChainCase,
    TransitiveClosure,
};
pub use finite::{EdgeIndex, FiniteRelation};
pub use inverse_image::{inverse_image, InverseImage};
pub use lex::{lex_product, lex_sigma, LexEvidence, LexSigma};
pub use subrelation::{subrelation, Subrelation};
pub use sum::{disjoint_sum, DisjointSum, Sum, SumEvidence};
