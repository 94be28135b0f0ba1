//! Worked programs defined by well-founded recursion: Quicksort over the
//! length measure, course-of-values Fibonacci, Ackermann's function over a
//! lexicographic product, and expressions ordered for unification.

mod arith;
mod expr;
mod lists;

pub use arith::{ackermann, ackermann_with_budget, fib_cov, DEFAULT_ACK_BUDGET};
pub use expr::{expr_substructure, expr_unification_ordering, unification_demo_carrier, vars, Expr, ExprLabel, ExprSubstructure};
pub use lists::{append, filter, length, length_relation, qless, quicksort, quicksort_step, LengthRelation};
