use std::collections::BTreeSet;
use std::fmt;

use crate::combinators::{inverse_image, transitive_closure, InverseImage, TransitiveClosure};
use crate::derived::{unification_ordering, UnificationOrdering};
use crate::wtree::{wtree_relation, WTree, WTreeRelation};

/// A first-order expression: a variable, or a head symbol applied to
/// arguments (constants are applications with no arguments).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Expr {
    Var(String),
    App(String, Vec<Expr>),
}

impl Expr {
    pub fn var(name: &str) -> Self {
        Expr::Var(name.to_string())
    }

    pub fn app(head: &str, args: Vec<Expr>) -> Self {
        Expr::App(head.to_string(), args)
    }

    /// The tree whose nodes are the expression's symbols.
    pub fn to_wtree(&self) -> WTree<ExprLabel> {
        match self {
            Expr::Var(x) => WTree::leaf(ExprLabel::Var(x.clone())),
            Expr::App(f, args) => WTree::sup(ExprLabel::App(f.clone()), args.iter().map(Expr::to_wtree).collect()),
        }
    }

    /// The converse of [`to_wtree`](Expr::to_wtree); `None` for a variable
    /// node with branches.
    pub fn from_wtree(w: &WTree<ExprLabel>) -> Option<Self> {
        match w.label() {
            ExprLabel::Var(x) if w.branches().is_empty() => Some(Expr::Var(x.clone())),
            ExprLabel::Var(_) => None,
            ExprLabel::App(f) => Some(Expr::App(
                f.clone(),
                w.branches().iter().map(Expr::from_wtree).collect::<Option<_>>()?,
            )),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var(x) => f.write_str(x),
            Expr::App(h, args) if args.is_empty() => f.write_str(h),
            Expr::App(h, args) => {
                write!(f, "{h}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Node labels of the tree embedding.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExprLabel {
    Var(String),
    App(String),
}

/// The variables occurring in `e`.
pub fn vars(e: &Expr) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let mut stack = vec![e];
    while let Some(e) = stack.pop() {
        match e {
            Expr::Var(x) => {
                out.insert(x.clone());
            }
            Expr::App(_, args) => stack.extend(args),
        }
    }
    out
}

/// Proper substructure: the transitive closure of the immediate
/// subexpression relation, which is the subtree relation pulled back along
/// the tree embedding.
pub type ExprSubstructure = TransitiveClosure<InverseImage<WTreeRelation<ExprLabel>, Expr>>;

pub fn expr_substructure() -> ExprSubstructure {
    let immediate = inverse_image(wtree_relation(), Expr::to_wtree)
        .with_preimage(|w: &WTree<ExprLabel>| Expr::from_wtree(w).into_iter().collect());
    transitive_closure(immediate)
}

/// The unification ordering on expression pairs.
pub fn expr_unification_ordering() -> UnificationOrdering<ExprSubstructure> {
    unification_ordering(expr_substructure(), vars)
}

/// A small carrier of expression pairs: every pair drawn from a handful of
/// expressions over the variables `x` and `y`.
pub fn unification_demo_carrier() -> Vec<(Expr, Expr)> {
    let (x, y) = (Expr::var("x"), Expr::var("y"));
    let exprs = vec![
        x.clone(),
        y.clone(),
        Expr::app("a", vec![]),
        Expr::app("g", vec![x.clone()]),
        Expr::app("f", vec![x.clone(), y.clone()]),
        Expr::app("f", vec![Expr::app("g", vec![x.clone()]), y.clone()]),
    ];
    exprs
        .iter()
        .flat_map(|a| exprs.iter().map(move |b| (a.clone(), b.clone())))
        .collect()
}
