//! The relation abstraction and the generic recursion operator.
//!
//! A [`WellFounded`] relation packages a decision procedure that returns
//! *evidence* for `lesser ≺ greater`, optionally an enumeration of
//! predecessors, and a recursion operator `wfrec`.  A step function receives
//! the current element together with a callback that may only be invoked on
//! elements for which the step holds evidence of descent:
//!
//! ```text
//! wfrec(step, a) = step(a, (x', e) ↦ wfrec(step, x'))
//! ```
//!
//! Each combinator builds its `wfrec` out of the `wfrec` of its components,
//! so the callback handed to a step is usually a closure over several layers
//! of auxiliary functions rather than a direct re-dispatch.

use std::fmt::Debug;
use std::hash::Hash;
use std::rc::Rc;

use crate::depth::DepthGuard;

/// Callback giving access to results for smaller elements.
pub type Rec<A, E, P> = Rc<dyn Fn(&A, &E) -> P>;

/// A recursion step: computes the result at `x` given results below `x`.
pub type Step<A, E, P> = Rc<dyn Fn(&A, Rec<A, E, P>) -> P>;

/// Wraps a closure as a [`Step`].
pub fn step<A, E, P, F>(f: F) -> Step<A, E, P>
where
    F: Fn(&A, Rec<A, E, P>) -> P + 'static,
{
    Rc::new(f)
}

/// Wraps a closure as a [`Rec`].
pub fn rec<A, E, P, F>(f: F) -> Rec<A, E, P>
where
    F: Fn(&A, &E) -> P + 'static,
{
    Rc::new(f)
}

/// A decidable relation with evidence and a recursion operator.
///
/// Implementations must be irreflexive and asymmetric, and when
/// [`predecessors`](WellFounded::predecessors) is provided it must list
/// exactly the elements for which [`decide`](WellFounded::decide) succeeds.
pub trait WellFounded: Clone + 'static {
    type Elem: Clone + Eq + Hash + Debug + 'static;
    type Evidence: Clone + Debug + 'static;

    /// Evidence that `lesser ≺ greater`, if the relation holds.
    fn decide(&self, lesser: &Self::Elem, greater: &Self::Elem) -> Option<Self::Evidence>;

    /// Checks that `evidence` certifies `lesser ≺ greater`.
    fn validate(&self, lesser: &Self::Elem, greater: &Self::Elem, evidence: &Self::Evidence) -> bool {
        let _ = evidence;
        self.decide(lesser, greater).is_some()
    }

    /// All `(x', e)` with `e` certifying `x' ≺ x`, for finitely branching
    /// relations that can enumerate them.
    fn predecessors(&self, x: &Self::Elem) -> Option<Vec<(Self::Elem, Self::Evidence)>> {
        let _ = x;
        None
    }

    /// The whole carrier, when it is finite and enumerable.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// The recursion operator.
    fn wfrec<P: 'static>(&self, step: &Step<Self::Elem, Self::Evidence, P>, a: &Self::Elem) -> P;
}

/// Wraps `inner` so that, in debug builds, every invocation checks that the
/// supplied evidence certifies descent below `greater`.
pub(crate) fn guarded<R: WellFounded, P: 'static>(
    rel: &R,
    greater: &R::Elem,
    inner: Rec<R::Elem, R::Evidence, P>,
) -> Rec<R::Elem, R::Evidence, P> {
    if cfg!(debug_assertions) {
        let rel = rel.clone();
        let greater = greater.clone();
        Rc::new(move |x, e| {
            assert!(
                rel.validate(x, &greater, e),
                "recursive call on {x:?} with evidence {e:?} that does not certify descent below {greater:?}"
            );
            inner(x, e)
        })
    } else {
        inner
    }
}

/// Evaluates `wfrec` by direct re-dispatch: the callback handed to `step`
/// recurses into this same function.
///
/// Works for any relation and serves as an independent route against which
/// the compositional operators can be compared.
pub fn wfrec_direct<R: WellFounded, P: 'static>(
    rel: &R,
    step: &Step<R::Elem, R::Evidence, P>,
    a: &R::Elem,
) -> P {
    let inner = {
        let rel = rel.clone();
        let step = step.clone();
        rec(move |x: &R::Elem, _e: &R::Evidence| {
            let _g = DepthGuard::enter();
            wfrec_direct(&rel, &step, x)
        })
    };
    step(a, guarded(rel, a, inner))
}

/// The uninhabited evidence type of the empty relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Never {}

/// The empty relation on any carrier.  Trivially well-founded: no element
/// has a predecessor, so a step never gets to recurse.
#[derive(Debug, Clone)]
pub struct EmptyRelation<T> {
    carrier: Option<Vec<T>>,
}

impl<T> EmptyRelation<T> {
    pub fn new() -> Self {
        EmptyRelation { carrier: None }
    }

    /// An empty relation over an explicitly enumerated carrier.
    pub fn over(carrier: Vec<T>) -> Self {
        EmptyRelation {
            carrier: Some(carrier),
        }
    }
}

impl<T> Default for EmptyRelation<T> {
    fn default() -> Self {
        Self::new()
    }
}

/// Shorthand for [`EmptyRelation::new`].
pub fn empty_relation<T>() -> EmptyRelation<T> {
    EmptyRelation::new()
}

impl<T: Clone + Eq + Hash + Debug + 'static> WellFounded for EmptyRelation<T> {
    type Elem = T;
    type Evidence = Never;

    fn decide(&self, _lesser: &T, _greater: &T) -> Option<Never> {
        None
    }

    fn validate(&self, _lesser: &T, _greater: &T, evidence: &Never) -> bool {
        match *evidence {}
    }

    fn predecessors(&self, _x: &T) -> Option<Vec<(T, Never)>> {
        Some(Vec::new())
    }

    fn elements(&self) -> Option<Vec<T>> {
        self.carrier.clone()
    }

    fn wfrec<P: 'static>(&self, step: &Step<T, Never, P>, a: &T) -> P {
        step(a, rec(|_x: &T, e: &Never| match *e {}))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_relation_never_relates() {
        let r = EmptyRelation::<()>::over(vec![()]);
        assert!(r.decide(&(), &()).is_none());
        assert_eq!(r.predecessors(&()).unwrap().len(), 0);
        let seven = r.wfrec(&step(|_x: &(), _rec| 7u32), &());
        assert_eq!(seven, 7);
    }
}
