use std::rc::Rc;

use crate::relation::{guarded, Rec, Step, WellFounded};

/// An element of `A + B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sum<A, B> {
    Inl(A),
    Inr(B),
}

/// Evidence for the sum ordering.  There is no right-below-left case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SumEvidence<EA, EB> {
    /// `inl(x') ≺ inl(x)` from `x' ≺_A x`.
    LeftLeft(EA),
    /// `inl(x) ≺ inr(y)`, which always holds.
    LeftRight,
    /// `inr(y') ≺ inr(y)` from `y' ≺_B y`.
    RightRight(EB),
}

/// The ordering on `A + B` that puts every element of `A` before every
/// element of `B`.
#[derive(Debug, Clone)]
pub struct DisjointSum<RA, RB> {
    left: RA,
    right: RB,
}

pub fn disjoint_sum<RA: WellFounded, RB: WellFounded>(left: RA, right: RB) -> DisjointSum<RA, RB> {
    DisjointSum { left, right }
}

type SumElem<RA, RB> = Sum<<RA as WellFounded>::Elem, <RB as WellFounded>::Elem>;
type SumEv<RA, RB> = SumEvidence<<RA as WellFounded>::Evidence, <RB as WellFounded>::Evidence>;

impl<RA: WellFounded, RB: WellFounded> DisjointSum<RA, RB> {
    pub fn left(&self) -> &RA {
        &self.left
    }

    pub fn right(&self) -> &RB {
        &self.right
    }

    /// ```text
    /// q(x, ih_A) inl(x') ls = ih_A(x', ls)
    /// q(x, ih_A) inr(y') ls = contr(ls)
    /// p(x)                  = step(inl(x), q(x, (x', ls) p(x')))
    /// ```
    fn p<P: 'static>(&self, step: &Step<SumElem<RA, RB>, SumEv<RA, RB>, P>, x: &RA::Elem) -> P {
        let this = self.clone();
        let step = step.clone();
        let s: Step<RA::Elem, RA::Evidence, P> = Rc::new(move |x, ih| {
            let q: Rec<SumElem<RA, RB>, SumEv<RA, RB>, P> = Rc::new(move |z, ls| match (z, ls) {
                (Sum::Inl(x2), SumEvidence::LeftLeft(e)) => ih(x2, e),
                _ => unreachable!("nothing lies below a left injection except left injections"),
            });
            let at = Sum::Inl(x.clone());
            step(&at, guarded(&this, &at, q))
        });
        self.left.wfrec(&s, x)
    }

    /// ```text
    /// s(y, ih_B) inl(x') ls = p(x')
    /// s(y, ih_B) inr(y') ls = ih_B(y', ls)
    /// r(y)                  = step(inr(y), s(y, (y', ls) r(y')))
    /// ```
    fn r<P: 'static>(&self, step: &Step<SumElem<RA, RB>, SumEv<RA, RB>, P>, y: &RB::Elem) -> P {
        let this = self.clone();
        let step = step.clone();
        let s: Step<RB::Elem, RB::Evidence, P> = Rc::new(move |y, ih| {
            let (this2, step2) = (this.clone(), step.clone());
            let s_inner: Rec<SumElem<RA, RB>, SumEv<RA, RB>, P> = Rc::new(move |z, ls| match (z, ls) {
                (Sum::Inl(x2), SumEvidence::LeftRight) => this2.p(&step2, x2),
                (Sum::Inr(y2), SumEvidence::RightRight(e)) => ih(y2, e),
                _ => unreachable!("evidence shape does not match the injections"),
            });
            let at = Sum::Inr(y.clone());
            step(&at, guarded(&this, &at, s_inner))
        });
        self.right.wfrec(&s, y)
    }
}

impl<RA: WellFounded, RB: WellFounded> WellFounded for DisjointSum<RA, RB> {
    type Elem = SumElem<RA, RB>;
    type Evidence = SumEv<RA, RB>;

    fn decide(&self, lesser: &Self::Elem, greater: &Self::Elem) -> Option<Self::Evidence> {
        match (lesser, greater) {
            (Sum::Inl(a), Sum::Inl(b)) => self.left.decide(a, b).map(SumEvidence::LeftLeft),
            (Sum::Inl(_), Sum::Inr(_)) => Some(SumEvidence::LeftRight),
            (Sum::Inr(_), Sum::Inl(_)) => None,
            (Sum::Inr(a), Sum::Inr(b)) => self.right.decide(a, b).map(SumEvidence::RightRight),
        }
    }

    fn validate(&self, lesser: &Self::Elem, greater: &Self::Elem, evidence: &Self::Evidence) -> bool {
        match (lesser, greater, evidence) {
            (Sum::Inl(a), Sum::Inl(b), SumEvidence::LeftLeft(e)) => self.left.validate(a, b, e),
            (Sum::Inl(_), Sum::Inr(_), SumEvidence::LeftRight) => true,
            (Sum::Inr(a), Sum::Inr(b), SumEvidence::RightRight(e)) => self.right.validate(a, b, e),
            _ => false,
        }
    }

    fn predecessors(&self, z: &Self::Elem) -> Option<Vec<(Self::Elem, Self::Evidence)>> {
        match z {
            Sum::Inl(x) => Some(
                self.left
                    .predecessors(x)?
                    .into_iter()
                    .map(|(x2, e)| (Sum::Inl(x2), SumEvidence::LeftLeft(e)))
                    .collect(),
            ),
            Sum::Inr(y) => {
                let mut out: Vec<_> = self
                    .left
                    .elements()?
                    .into_iter()
                    .map(|x| (Sum::Inl(x), SumEvidence::LeftRight))
                    .collect();
                out.extend(
                    self.right
                        .predecessors(y)?
                        .into_iter()
                        .map(|(y2, e)| (Sum::Inr(y2), SumEvidence::RightRight(e))),
                );
                Some(out)
            }
        }
    }

    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let mut out: Vec<_> = self.left.elements()?.into_iter().map(Sum::Inl).collect();
        out.extend(self.right.elements()?.into_iter().map(Sum::Inr));
        Some(out)
    }

    /// `wf(inl(x)) = p(x)` and `wf(inr(y)) = r(y)`.
    fn wfrec<P: 'static>(&self, step: &Step<Self::Elem, Self::Evidence, P>, a: &Self::Elem) -> P {
        match a {
            Sum::Inl(x) => self.p(step, x),
            Sum::Inr(y) => self.r(step, y),
        }
    }
}
