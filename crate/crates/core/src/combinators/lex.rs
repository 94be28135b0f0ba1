use std::fmt::{self, Debug};
use std::rc::Rc;
use std::sync::Arc;

use crate::relation::{guarded, Rec, Step, WellFounded};

/// Evidence for the lexicographic ordering on pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LexEvidence<EA, EB> {
    /// The first components descend.
    First(EA),
    /// The first components are equal (a trivial witness, checked by host
    /// equality) and the second components descend under the relation
    /// indexed by that first component.
    Second(EB),
}

type Family<A, RB> = Arc<dyn Fn(&A) -> RB + Send + Sync>;

/// The lexicographic ordering on dependent pairs `⟨x, y⟩` with `y ∈ B(x)`:
/// first components under `≺_A`, ties broken by the relation `family(x)`.
///
/// All members of the family share one element and evidence type; a
/// constant family gives the ordinary lexicographic product.
pub struct LexSigma<RA: WellFounded, RB> {
    first: RA,
    family: Family<RA::Elem, RB>,
}

impl<RA: WellFounded, RB> Clone for LexSigma<RA, RB> {
    fn clone(&self) -> Self {
        LexSigma {
            first: self.first.clone(),
            family: self.family.clone(),
        }
    }
}

impl<RA: WellFounded + Debug, RB> Debug for LexSigma<RA, RB> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LexSigma").field("first", &self.first).finish_non_exhaustive()
    }
}

pub fn lex_sigma<RA, RB, F>(first: RA, family: F) -> LexSigma<RA, RB>
where
    RA: WellFounded,
    RB: WellFounded,
    F: Fn(&RA::Elem) -> RB + Send + Sync + 'static,
{
    LexSigma {
        first,
        family: Arc::new(family),
    }
}

/// The non-dependent product `A × B`.
pub fn lex_product<RA, RB>(first: RA, second: RB) -> LexSigma<RA, RB>
where
    RA: WellFounded,
    RB: WellFounded + Send + Sync,
{
    lex_sigma(first, move |_| second.clone())
}

type Pair<RA, RB> = (<RA as WellFounded>::Elem, <RB as WellFounded>::Elem);
type LexEv<RA, RB> = LexEvidence<<RA as WellFounded>::Evidence, <RB as WellFounded>::Evidence>;
type Fiber<RB, P> = Rc<dyn Fn(&<RB as WellFounded>::Elem) -> P>;

impl<RA: WellFounded, RB: WellFounded> LexSigma<RA, RB> {
    pub fn first(&self) -> &RA {
        &self.first
    }

    /// The relation on the second components over `x`.
    pub fn fiber(&self, x: &RA::Elem) -> RB {
        (self.family)(x)
    }

    /// `p(x) = wfrec_A((x, ih_A) λy. q(x, ih_A, y), x)`: all results over a
    /// fixed first component.
    fn p<P: 'static>(&self, step: &Step<Pair<RA, RB>, LexEv<RA, RB>, P>, x: &RA::Elem) -> Fiber<RB, P> {
        let this = self.clone();
        let step = step.clone();
        let p1: Step<RA::Elem, RA::Evidence, Fiber<RB, P>> = Rc::new(move |x, ih_a| {
            let this = this.clone();
            let step = step.clone();
            let x = x.clone();
            Rc::new(move |y: &RB::Elem| this.q(&step, &x, ih_a.clone(), y))
        });
        self.first.wfrec(&p1, x)
    }

    /// ```text
    /// r(x, ih_A, y, ih_B) ⟨x', y'⟩ inl(ls_A)      = ih_A(x', ls_A) y'
    /// r(x, ih_A, y, ih_B) ⟨x', y'⟩ inr(e, ls_B)   = ih_B(y', ls_B)
    /// q(x, ih_A, y) = step(⟨x, y⟩, r(x, ih_A, y, (y', ls) q(x, ih_A, y')))
    /// ```
    fn q<P: 'static>(
        &self,
        step: &Step<Pair<RA, RB>, LexEv<RA, RB>, P>,
        x: &RA::Elem,
        ih_a: Rec<RA::Elem, RA::Evidence, Fiber<RB, P>>,
        y: &RB::Elem,
    ) -> P {
        let this = self.clone();
        let step = step.clone();
        let at_x = x.clone();
        let q2: Step<RB::Elem, RB::Evidence, P> = Rc::new(move |y, ih_b| {
            let ih_a = ih_a.clone();
            let x = at_x.clone();
            let r: Rec<Pair<RA, RB>, LexEv<RA, RB>, P> = Rc::new(move |(x2, y2), ls| match ls {
                LexEvidence::First(la) => ih_a(x2, la)(y2),
                LexEvidence::Second(lb) => {
                    debug_assert!(*x2 == x, "second-component evidence with differing first components");
                    ih_b(y2, lb)
                }
            });
            let at = (at_x.clone(), y.clone());
            step(&at, guarded(&this, &at, r))
        });
        (self.family)(x).wfrec(&q2, y)
    }
}

impl<RA: WellFounded, RB: WellFounded> WellFounded for LexSigma<RA, RB> {
    type Elem = Pair<RA, RB>;
    type Evidence = LexEv<RA, RB>;

    fn decide(&self, (x2, y2): &Self::Elem, (x, y): &Self::Elem) -> Option<Self::Evidence> {
        if let Some(e) = self.first.decide(x2, x) {
            return Some(LexEvidence::First(e));
        }
        if x2 == x {
            return (self.family)(x).decide(y2, y).map(LexEvidence::Second);
        }
        None
    }

    fn validate(&self, (x2, y2): &Self::Elem, (x, y): &Self::Elem, evidence: &Self::Evidence) -> bool {
        match evidence {
            LexEvidence::First(e) => self.first.validate(x2, x, e),
            LexEvidence::Second(e) => x2 == x && (self.family)(x).validate(y2, y, e),
        }
    }

    fn predecessors(&self, (x, y): &Self::Elem) -> Option<Vec<(Self::Elem, Self::Evidence)>> {
        let mut out = Vec::new();
        for (x2, e) in self.first.predecessors(x)? {
            for y2 in (self.family)(&x2).elements()? {
                out.push(((x2.clone(), y2), LexEvidence::First(e.clone())));
            }
        }
        for (y2, e) in (self.family)(x).predecessors(y)? {
            out.push(((x.clone(), y2), LexEvidence::Second(e)));
        }
        Some(out)
    }

    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let mut out = Vec::new();
        for x in self.first.elements()? {
            for y in (self.family)(&x).elements()? {
                out.push((x.clone(), y));
            }
        }
        Some(out)
    }

    /// `wf⟨x, y⟩ = p(x) y`.
    fn wfrec<P: 'static>(&self, step: &Step<Self::Elem, Self::Evidence, P>, (x, y): &Self::Elem) -> P {
        self.p(step, x)(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinators::FiniteRelation;
    use crate::harness::{check_recursion_equation, check_unique_solution, fuzz_descent};
    use crate::nat::{NatLess, NatLessEvidence};
    use crate::relation::step;

    #[test]
    fn product_examples() {
        let r = lex_product(NatLess, NatLess);
        assert!(matches!(r.decide(&(1, 5), &(2, 0)), Some(LexEvidence::First(_))));
        assert!(matches!(r.decide(&(1, 3), &(1, 4)), Some(LexEvidence::Second(_))));
        assert!(r.decide(&(2, 0), &(1, 5)).is_none());
        assert!(r.decide(&(1, 4), &(1, 4)).is_none());
    }

    #[test]
    fn agrees_with_pair_comparator() {
        let r = lex_product(FiniteRelation::nat_less(5), FiniteRelation::nat_less(5));
        let all = r.elements().unwrap();
        assert_eq!(all.len(), 25);
        for a in &all {
            for b in &all {
                let naive = a.0 < b.0 || (a.0 == b.0 && a.1 < b.1);
                assert_eq!(r.decide(a, b).is_some(), naive);
            }
            assert_eq!(
                r.predecessors(a).unwrap().len(),
                all.iter().filter(|b| b.0 < a.0 || (b.0 == a.0 && b.1 < a.1)).count()
            );
        }
    }

    #[test]
    fn ackermann_at_two_three() {
        let r = lex_product(NatLess, NatLess);
        let s = step(|&(m, n): &(u64, u64), rec: Rec<(u64, u64), LexEv<NatLess, NatLess>, u64>| {
            let first = |m2: u64| LexEvidence::First(NatLessEvidence::between(m2, m).unwrap());
            match (m, n) {
                (0, n) => n + 1,
                (m, 0) => rec(&(m - 1, 1), &first(m - 1)),
                (m, n) => {
                    let inner = rec(&(m, n - 1), &LexEvidence::Second(NatLessEvidence::eq()));
                    rec(&(m - 1, inner), &first(m - 1))
                }
            }
        });
        assert_eq!(r.wfrec(&s, &(2, 3)), 9);
    }

    #[test]
    fn dependent_family() {
        // over x, the second component ranges over 0..=x
        let r = lex_sigma(FiniteRelation::nat_less(4), |x: &usize| FiniteRelation::nat_less(x + 1));
        let all = r.elements().unwrap();
        assert_eq!(all.len(), 10);
        let rr = r.clone();
        let s = step(move |z: &(usize, usize), rec: Rec<(usize, usize), _, u64>| {
            rr.predecessors(z).unwrap().iter().map(|(w, e)| rec(w, e)).sum::<u64>() + 1
        });
        assert!(check_recursion_equation(&r, &s, &all).passed());
        // a total order of 10 elements: the count doubles at each step
        let rank = |z: &(usize, usize)| (z.0 * (z.0 + 1) / 2 + z.1) as u32;
        assert!(check_unique_solution(&r, &s, &all, move |z| 1u64 << rank(z)));
        for seed in 0..5 {
            let chain = fuzz_descent(&r, &(3, 3), 100, seed).unwrap();
            assert_eq!(chain.last(), Some(&(0, 0)));
        }
    }
}
