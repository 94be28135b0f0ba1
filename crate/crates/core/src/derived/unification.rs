use std::collections::BTreeSet;
use std::sync::Arc;

use crate::combinators::{inverse_image, lex_product, subrelation, InverseImage, LexEvidence, LexSigma, Subrelation};
use crate::nat::{NatLess, NatLessEvidence};
use crate::relation::WellFounded;

/// Why one pair precedes another in the unification ordering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum UnificationEvidence<E> {
    /// The variables of the smaller pair form a proper subset.
    FewerVars,
    /// Same variables, and the first component is a proper substructure.
    Substructure(E),
}

type Pair<R> = (<R as WellFounded>::Elem, <R as WellFounded>::Elem);

/// `⟨x', y'⟩ ≺ ⟨x, y⟩` when `vars(x') ∪ vars(y') ⊂ vars(x) ∪ vars(y)`, or
/// the variable sets are equal and `x' ≺ x`.
///
/// Built as a subrelation of the inverse image of `< × ≺` under
/// `⟨x, y⟩ ↦ ⟨|vars(x) ∪ vars(y)|, x⟩`.
pub type UnificationOrdering<R> =
    Subrelation<InverseImage<LexSigma<NatLess, R>, Pair<R>>, UnificationEvidence<<R as WellFounded>::Evidence>>;

pub fn unification_ordering<R, V, F>(substructure: R, vars: F) -> UnificationOrdering<R>
where
    R: WellFounded + Send + Sync,
    V: Ord + 'static,
    F: Fn(&R::Elem) -> BTreeSet<V> + Send + Sync + 'static,
{
    let vars = Arc::new(vars);
    let union = {
        let vars = vars.clone();
        move |(x, y): &Pair<R>| -> BTreeSet<V> {
            let mut s = vars(x);
            s.extend(vars(y));
            s
        }
    };
    let union = Arc::new(union);
    let u = union.clone();
    let measure = move |p: &Pair<R>| (u(p).len() as u64, p.0.clone());
    let base = inverse_image(lex_product(NatLess, substructure.clone()), measure);
    let u = union.clone();
    let embed = move |lesser: &Pair<R>, greater: &Pair<R>, e: &UnificationEvidence<R::Evidence>| match e {
        UnificationEvidence::FewerVars => LexEvidence::First(
            NatLessEvidence::between(u(lesser).len() as u64, u(greater).len() as u64)
                .expect("a proper subset is smaller"),
        ),
        UnificationEvidence::Substructure(e) => LexEvidence::Second(e.clone()),
    };
    let decide = move |lesser: &Pair<R>, greater: &Pair<R>| {
        let (small, large) = (union(lesser), union(greater));
        if small.len() < large.len() && small.is_subset(&large) {
            Some(UnificationEvidence::FewerVars)
        } else if small == large {
            substructure.decide(&lesser.0, &greater.0).map(UnificationEvidence::Substructure)
        } else {
            None
        }
    };
    subrelation(base, embed, decide)
}
