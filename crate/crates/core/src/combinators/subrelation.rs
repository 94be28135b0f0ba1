use std::fmt::{self, Debug};
use std::rc::Rc;
use std::sync::Arc;

use crate::relation::{guarded, Rec, Step, WellFounded};

type SubDecide<A, E> = Arc<dyn Fn(&A, &A) -> Option<E> + Send + Sync>;
type Embed<A, E, EB> = Arc<dyn Fn(&A, &A, &E) -> EB + Send + Sync>;

/// A relation `≪` contained in a well-founded `≺`, witnessed by a function
/// turning `x' ≪ x` evidence into `x' ≺ x` evidence.
pub struct Subrelation<R: WellFounded, E> {
    base: R,
    sub_decide: SubDecide<R::Elem, E>,
    embed: Embed<R::Elem, E, R::Evidence>,
}

impl<R: WellFounded, E> Clone for Subrelation<R, E> {
    fn clone(&self) -> Self {
        Subrelation {
            base: self.base.clone(),
            sub_decide: self.sub_decide.clone(),
            embed: self.embed.clone(),
        }
    }
}

impl<R: WellFounded + Debug, E> Debug for Subrelation<R, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subrelation").field("base", &self.base).finish_non_exhaustive()
    }
}

/// Builds the subrelation of `base` decided by `sub_decide`, with `embed`
/// mapping its evidence into the base relation's.
pub fn subrelation<R, E, D, F>(base: R, embed: F, sub_decide: D) -> Subrelation<R, E>
where
    R: WellFounded,
    D: Fn(&R::Elem, &R::Elem) -> Option<E> + Send + Sync + 'static,
    F: Fn(&R::Elem, &R::Elem, &E) -> R::Evidence + Send + Sync + 'static,
{
    Subrelation {
        base,
        sub_decide: Arc::new(sub_decide),
        embed: Arc::new(embed),
    }
}

impl<R: WellFounded, E> Subrelation<R, E> {
    pub fn base(&self) -> &R {
        &self.base
    }

    /// Base-relation evidence for a pair related by the subrelation.
    pub fn embed(&self, lesser: &R::Elem, greater: &R::Elem, evidence: &E) -> R::Evidence {
        (self.embed)(lesser, greater, evidence)
    }
}

impl<R, E> WellFounded for Subrelation<R, E>
where
    R: WellFounded,
    E: Clone + Debug + 'static,
{
    type Elem = R::Elem;
    type Evidence = E;

    fn decide(&self, lesser: &R::Elem, greater: &R::Elem) -> Option<E> {
        let e = (self.sub_decide)(lesser, greater)?;
        debug_assert!(
            self.base.validate(lesser, greater, &(self.embed)(lesser, greater, &e)),
            "embedding of {lesser:?} ≪ {greater:?} is rejected by the base relation"
        );
        Some(e)
    }

    fn validate(&self, lesser: &R::Elem, greater: &R::Elem, evidence: &E) -> bool {
        (self.sub_decide)(lesser, greater).is_some()
            && self.base.validate(lesser, greater, &(self.embed)(lesser, greater, evidence))
    }

    fn predecessors(&self, x: &R::Elem) -> Option<Vec<(R::Elem, E)>> {
        let preds = self.base.predecessors(x)?;
        Some(
            preds
                .into_iter()
                .filter_map(|(y, _)| self.decide(&y, x).map(|e| (y, e)))
                .collect(),
        )
    }

    fn elements(&self) -> Option<Vec<R::Elem>> {
        self.base.elements()
    }

    /// `s(x, ih) = step(x, λ x' lt. ih(x', f(x', x, lt)))`, recursing with
    /// the base relation's operator.
    fn wfrec<P: 'static>(&self, step: &Step<R::Elem, E, P>, a: &R::Elem) -> P {
        let this = self.clone();
        let step = step.clone();
        let s: Step<R::Elem, R::Evidence, P> = Rc::new(move |x, ih| {
            let embed = this.embed.clone();
            let at = x.clone();
            let t: Rec<R::Elem, E, P> = Rc::new(move |x2, lt| ih(x2, &embed(x2, &at, lt)));
            step(x, guarded(&this, x, t))
        });
        self.base.wfrec(&s, a)
    }
}
