use std::fmt::{self, Debug};
use std::hash::Hash;
use std::rc::Rc;
use std::sync::Arc;

use crate::relation::{guarded, Rec, Step, WellFounded};

type Measure<A, B> = Arc<dyn Fn(&A) -> B + Send + Sync>;
type Preimage<A, B> = Arc<dyn Fn(&B) -> Vec<A> + Send + Sync>;

/// `x' ≺ x` iff `f(x') ≺_B f(x)` for a measure (rank) function `f`.
pub struct InverseImage<R: WellFounded, A> {
    base: R,
    measure: Measure<A, R::Elem>,
    preimage: Option<Preimage<A, R::Elem>>,
    carrier: Option<Vec<A>>,
}

impl<R: WellFounded, A: Clone> Clone for InverseImage<R, A> {
    fn clone(&self) -> Self {
        InverseImage {
            base: self.base.clone(),
            measure: self.measure.clone(),
            preimage: self.preimage.clone(),
            carrier: self.carrier.clone(),
        }
    }
}

impl<R: WellFounded + Debug, A> Debug for InverseImage<R, A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InverseImage").field("base", &self.base).finish_non_exhaustive()
    }
}

/// The inverse image of `base` under `measure`.
pub fn inverse_image<R, A, F>(base: R, measure: F) -> InverseImage<R, A>
where
    R: WellFounded,
    F: Fn(&A) -> R::Elem + Send + Sync + 'static,
{
    InverseImage {
        base,
        measure: Arc::new(measure),
        preimage: None,
        carrier: None,
    }
}

impl<R: WellFounded, A> InverseImage<R, A> {
    /// Supplies the elements mapping to a given base element, which lets
    /// the inverse image enumerate predecessors.
    pub fn with_preimage<F>(mut self, preimage: F) -> Self
    where
        F: Fn(&R::Elem) -> Vec<A> + Send + Sync + 'static,
    {
        self.preimage = Some(Arc::new(preimage));
        self
    }

    /// Restricts attention to a finite carrier: enables `elements()` and,
    /// without an explicit preimage, predecessor enumeration by filtering.
    pub fn with_carrier(mut self, carrier: Vec<A>) -> Self {
        self.carrier = Some(carrier);
        self
    }

    pub fn measure(&self, x: &A) -> R::Elem {
        (self.measure)(x)
    }

    pub fn base(&self) -> &R {
        &self.base
    }
}

impl<R, A> WellFounded for InverseImage<R, A>
where
    R: WellFounded,
    A: Clone + Eq + Hash + Debug + 'static,
{
    type Elem = A;
    type Evidence = R::Evidence;

    fn decide(&self, lesser: &A, greater: &A) -> Option<R::Evidence> {
        self.base.decide(&(self.measure)(lesser), &(self.measure)(greater))
    }

    fn validate(&self, lesser: &A, greater: &A, evidence: &R::Evidence) -> bool {
        self.base
            .validate(&(self.measure)(lesser), &(self.measure)(greater), evidence)
    }

    fn predecessors(&self, x: &A) -> Option<Vec<(A, R::Evidence)>> {
        if let Some(pre) = &self.preimage {
            let preds = self.base.predecessors(&(self.measure)(x))?;
            return Some(
                preds
                    .into_iter()
                    .flat_map(|(y, e)| pre(&y).into_iter().map(move |z| (z, e.clone())))
                    .collect(),
            );
        }
        let carrier = self.carrier.as_ref()?;
        Some(
            carrier
                .iter()
                .filter_map(|z| self.decide(z, x).map(|e| (z.clone(), e)))
                .collect(),
        )
    }

    fn elements(&self) -> Option<Vec<A>> {
        self.carrier.clone()
    }

    /// ```text
    /// t(y, ih)        = λ x' ls. ih(f(x'), ls) x' eq
    /// p(y) x e        = step(x, t(y, (y', ls) p(y')))      [e : f(x) = y]
    /// wf(x)           = p(f(x)) x eq
    /// ```
    fn wfrec<P: 'static>(&self, step: &Step<A, R::Evidence, P>, a: &A) -> P {
        let this = self.clone();
        let step = step.clone();
        let s: Step<R::Elem, R::Evidence, Rc<dyn Fn(&A) -> P>> = Rc::new(move |y, ih| {
            let this = this.clone();
            let step = step.clone();
            let y = y.clone();
            Rc::new(move |z: &A| {
                debug_assert!((this.measure)(z) == y, "measure of {z:?} is not {y:?}");
                let measure = this.measure.clone();
                let ih = ih.clone();
                let t: Rec<A, R::Evidence, P> = Rc::new(move |x2, ls| ih(&measure(x2), ls)(x2));
                step(z, guarded(&this, z, t))
            })
        });
        self.base.wfrec(&s, &(self.measure)(a))(a)
    }
}
