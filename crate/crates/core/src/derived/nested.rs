use std::any::Any;
use std::fmt::{self, Debug};
use std::hash::{Hash, Hasher};
use std::rc::Rc;

use super::multiset::{multiset_of, multiset_relation, occurrences, Multiset, MultisetRelation};
use crate::combinators::{disjoint_sum, lex_sigma, DisjointSum, LexEvidence, LexSigma, Sum, SumEvidence};
use crate::error::WfError;
use crate::nat::{NatLess, NatLessEvidence};
use crate::power::LexListEvidence;
use crate::relation::{guarded, Rec, Step, WellFounded};

/// A value of `Mⁿ(A)` for some `n`, where `M⁰(A) = A` and
/// `Mⁿ⁺¹(A) = Mⁿ(A) + M(Mⁿ(A))`.
#[derive(Clone)]
pub enum Layer<A, E> {
    /// An element of `A` (depth zero).
    Atom(A),
    /// The left injection: a value of `Mⁿ(A)` viewed in `Mⁿ⁺¹(A)`.
    Lift(Rc<Layer<A, E>>),
    /// The right injection: a multiset of `Mⁿ(A)` values.
    Bag(Multiset<Layer<A, E>, LayerEvidence<E>>),
}

/// Evidence for the relation on `Mⁿ(A)`: base evidence at depth zero, sum
/// evidence above.
#[derive(Debug, Clone)]
pub enum LayerEvidence<E> {
    Atom(E),
    Sum(Box<SumEvidence<LayerEvidence<E>, BagEvidence<E>>>),
}

/// Evidence for the multiset ordering on a layer.
pub type BagEvidence<E> = LexListEvidence<LexEvidence<LayerEvidence<E>, NatLessEvidence>>;

impl<A: PartialEq, E> PartialEq for Layer<A, E> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Layer::Atom(a), Layer::Atom(b)) => a == b,
            (Layer::Lift(a), Layer::Lift(b)) => a == b,
            (Layer::Bag(a), Layer::Bag(b)) => a == b,
            _ => false,
        }
    }
}

impl<A: Eq, E> Eq for Layer<A, E> {}

impl<A: Hash, E> Hash for Layer<A, E> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Layer::Atom(a) => {
                0u8.hash(state);
                a.hash(state);
            }
            Layer::Lift(v) => {
                1u8.hash(state);
                v.hash(state);
            }
            Layer::Bag(m) => {
                2u8.hash(state);
                m.hash(state);
            }
        }
    }
}

impl<A: Debug, E> Debug for Layer<A, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Layer::Atom(a) => write!(f, "{a:?}"),
            Layer::Lift(v) => write!(f, "↑{v:?}"),
            Layer::Bag(m) => f
                .debug_set()
                .entries(m.entries().iter().flat_map(|(x, k)| std::iter::repeat_n(x, *k as usize)))
                .finish(),
        }
    }
}

impl<A, E> Layer<A, E> {
    /// Wraps in `k` left injections.
    pub fn lifted(self, k: usize) -> Self {
        (0..k).fold(self, |v, _| Layer::Lift(Rc::new(v)))
    }

    /// Strips left injections.
    pub fn unlifted(&self) -> &Self {
        match self {
            Layer::Lift(v) => v.unlifted(),
            other => other,
        }
    }

    /// Whether this is a well-formed value of `Mⁿ(A)`.
    pub fn fits(&self, depth: usize) -> bool {
        match (self, depth) {
            (Layer::Atom(_), 0) => true,
            (_, 0) | (Layer::Atom(_), _) => false,
            (Layer::Lift(v), n) => v.fits(n - 1),
            (Layer::Bag(m), n) => m.entries().iter().all(|(x, _)| x.fits(n - 1)),
        }
    }
}

/// The relation on `Mⁿ(A)`.
#[derive(Debug, Clone)]
pub struct LayerRelation<R> {
    base: R,
    depth: usize,
}

type Lay<R> = Layer<<R as WellFounded>::Elem, <R as WellFounded>::Evidence>;
type LayEv<R> = LayerEvidence<<R as WellFounded>::Evidence>;
type Below<R> = DisjointSum<LayerRelation<R>, MultisetRelation<LayerRelation<R>>>;
type BelowElem<R> = Sum<Lay<R>, Multiset<Lay<R>, LayEv<R>>>;
type BelowEv<R> = SumEvidence<LayEv<R>, BagEvidence<<R as WellFounded>::Evidence>>;
type Erased = Box<dyn Any>;

fn unerase<P: 'static>(b: Erased) -> P {
    *b.downcast::<P>().expect("erased result has the requested type")
}

impl<R: WellFounded> LayerRelation<R> {
    pub fn new(base: R, depth: usize) -> Self {
        LayerRelation { base, depth }
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// `Mⁿ⁺¹(A) = Mⁿ(A) + M(Mⁿ(A))`; only meaningful at positive depth.
    fn below(&self) -> Below<R> {
        let inner = LayerRelation::new(self.base.clone(), self.depth - 1);
        disjoint_sum(inner.clone(), multiset_relation(inner))
    }

    fn to_sum(v: &Lay<R>) -> Option<BelowElem<R>> {
        match v {
            Layer::Atom(_) => None,
            Layer::Lift(x) => Some(Sum::Inl((**x).clone())),
            Layer::Bag(m) => Some(Sum::Inr(m.clone())),
        }
    }

    fn from_sum(v: &BelowElem<R>) -> Lay<R> {
        match v {
            Sum::Inl(x) => Layer::Lift(Rc::new(x.clone())),
            Sum::Inr(m) => Layer::Bag(m.clone()),
        }
    }

    /// Recursion with the result type erased, so that the nesting of
    /// combinators below this layer, which refers back to this type, stays
    /// finite at the type level.
    fn wfrec_erased(&self, step: &Step<Lay<R>, LayEv<R>, Erased>, a: &Lay<R>) -> Erased {
        let this = self.clone();
        let step = step.clone();
        if self.depth == 0 {
            let Layer::Atom(x) = a else {
                panic!("{a:?} is not an element of the base type")
            };
            let s: Step<R::Elem, R::Evidence, Erased> = Rc::new(move |x, ih| {
                let at = Layer::Atom(x.clone());
                let t: Rec<Lay<R>, LayEv<R>, Erased> = Rc::new(move |y, e| match (y, e) {
                    (Layer::Atom(y), LayerEvidence::Atom(e)) => ih(y, e),
                    _ => unreachable!("only atoms lie below an atom"),
                });
                step(&at, guarded(&this, &at, t))
            });
            return self.base.wfrec(&s, x);
        }
        let s: Step<BelowElem<R>, BelowEv<R>, Erased> = Rc::new(move |x, ih| {
            let at = Self::from_sum(x);
            let t: Rec<Lay<R>, LayEv<R>, Erased> = Rc::new(move |y, e| {
                let LayerEvidence::Sum(e) = e else {
                    unreachable!("atom evidence above depth zero")
                };
                ih(&Self::to_sum(y).expect("no atoms above depth zero"), e)
            });
            step(&at, guarded(&this, &at, t))
        });
        let a = Self::to_sum(a).unwrap_or_else(|| panic!("{a:?} is not an element of depth {}", self.depth));
        self.below().wfrec(&s, &a)
    }
}

impl<R: WellFounded> WellFounded for LayerRelation<R> {
    type Elem = Lay<R>;
    type Evidence = LayEv<R>;

    fn decide(&self, lesser: &Lay<R>, greater: &Lay<R>) -> Option<LayEv<R>> {
        if self.depth == 0 {
            return match (lesser, greater) {
                (Layer::Atom(a), Layer::Atom(b)) => self.base.decide(a, b).map(LayerEvidence::Atom),
                _ => None,
            };
        }
        let (a, b) = (Self::to_sum(lesser)?, Self::to_sum(greater)?);
        self.below().decide(&a, &b).map(|e| LayerEvidence::Sum(Box::new(e)))
    }

    fn validate(&self, lesser: &Lay<R>, greater: &Lay<R>, evidence: &LayEv<R>) -> bool {
        match (self.depth, lesser, greater, evidence) {
            (0, Layer::Atom(a), Layer::Atom(b), LayerEvidence::Atom(e)) => self.base.validate(a, b, e),
            (0, ..) => false,
            (_, _, _, LayerEvidence::Sum(e)) => match (Self::to_sum(lesser), Self::to_sum(greater)) {
                (Some(a), Some(b)) => self.below().validate(&a, &b, e),
                _ => false,
            },
            _ => false,
        }
    }

    fn wfrec<P: 'static>(&self, step: &Step<Lay<R>, LayEv<R>, P>, a: &Lay<R>) -> P {
        let step = step.clone();
        let erased: Step<Lay<R>, LayEv<R>, Erased> = Rc::new(move |x, ih| {
            let typed: Rec<Lay<R>, LayEv<R>, P> = Rc::new(move |y, e| unerase(ih(y, e)));
            Box::new(step(x, typed))
        });
        unerase(self.wfrec_erased(&erased, a))
    }
}

/// `M*(A) = Σ n ∈ ℕ. Mⁿ(A)`: a depth paired with a value of that depth.
pub type NestedMultiset<A, E> = (u64, Layer<A, E>);

pub type NestedMultisetRelation<R> = LexSigma<NatLess, LayerRelation<R>>;

pub fn nested_multiset_relation<R: WellFounded + Send + Sync>(base: R) -> NestedMultisetRelation<R> {
    lex_sigma(NatLess, move |n: &u64| LayerRelation::new(base.clone(), *n as usize))
}

type Nested<R> = NestedMultiset<<R as WellFounded>::Elem, <R as WellFounded>::Evidence>;

/// An element of `A`, at depth zero.
pub fn nm_atom<A, E>(x: A) -> NestedMultiset<A, E> {
    (0, Layer::Atom(x))
}

/// The multiset with the given members, stored at the smallest depth
/// that holds them all: members are lifted to a common depth first.
pub fn nm_bag<R: WellFounded>(base: &R, members: &[Nested<R>]) -> Result<Nested<R>, WfError> {
    let inner = members.iter().map(|m| m.0).max().unwrap_or(0);
    let lifted: Vec<Lay<R>> = members
        .iter()
        .map(|(d, v)| v.clone().lifted((inner - d) as usize))
        .collect();
    let m = multiset_of(&LayerRelation::new(base.clone(), inner as usize), &lifted)?;
    Ok((inner + 1, Layer::Bag(m)))
}

/// `{x}`.
pub fn nm_singleton<R: WellFounded>(base: &R, x: &Nested<R>) -> Nested<R> {
    nm_bag(base, std::slice::from_ref(x)).expect("a single member is always comparable")
}

/// The members of a multiset, each at its own smallest depth.
pub fn nm_members<A: Clone, E: Clone>(m: &NestedMultiset<A, E>) -> Result<Vec<NestedMultiset<A, E>>, WfError> {
    let Layer::Bag(bag) = &m.1 else {
        return Err(WfError::NotAMultiset);
    };
    Ok(occurrences(bag)
        .into_iter()
        .map(|x| {
            let mut depth = m.0 - 1;
            let mut v = &x;
            while let Layer::Lift(inner) = v {
                v = inner;
                depth -= 1;
            }
            (depth, v.clone())
        })
        .collect())
}

/// Multiset union.  Both operands must be multisets, and their members
/// must be pairwise comparable.
pub fn nm_union<R: WellFounded>(base: &R, a: &Nested<R>, b: &Nested<R>) -> Result<Nested<R>, WfError> {
    let mut members = nm_members(a)?;
    members.extend(nm_members(b)?);
    nm_bag(base, &members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinators::FiniteRelation;
    use crate::harness::{carrier_rank_step, check_recursion_equation};
    use crate::relation::EmptyRelation;

    fn unit() -> EmptyRelation<()> {
        EmptyRelation::over(vec![()])
    }

    type U = NestedMultiset<(), crate::relation::Never>;

    fn zero() -> U {
        nm_atom(())
    }

    fn bag(members: &[U]) -> U {
        nm_bag(&unit(), members).unwrap()
    }

    #[test]
    fn depths() {
        let one = nm_singleton(&unit(), &zero());
        assert_eq!(one.0, 1);
        let omega = nm_singleton(&unit(), &one);
        assert_eq!(omega.0, 2);
        let two = nm_union(&unit(), &one, &one).unwrap();
        assert_eq!(two, bag(&[zero(), zero()]));
        let Layer::Bag(m) = &two.1 else { panic!() };
        assert_eq!(m.entries()[0].1, 2);
        assert_eq!(nm_union(&unit(), &zero(), &one), Err(WfError::NotAMultiset));
        let mixed = nm_union(&unit(), &omega, &one).unwrap();
        assert_eq!(mixed.0, 2);
        assert!(mixed.1.fits(2));
        assert_eq!(nm_members(&mixed).unwrap(), vec![one.clone(), zero()]);
    }

    #[test]
    fn comparisons_over_unit() {
        let r = nested_multiset_relation(unit());
        let one = bag(&[zero()]);
        let three = bag(&[zero(), zero(), zero()]);
        let omega = bag(&[one.clone()]);
        let omega_plus_one = bag(&[one.clone(), zero()]);
        assert!(r.decide(&three, &omega).is_some());
        assert!(r.decide(&omega, &three).is_none());
        assert!(r.decide(&zero(), &one).is_some());
        assert!(r.decide(&omega, &omega_plus_one).is_some());
        assert!(r.decide(&omega, &omega).is_none());
    }

    #[test]
    fn layer_relation_over_naturals() {
        let base = FiniteRelation::nat_less(3);
        let layer = LayerRelation::new(base.clone(), 1);
        let a = Layer::Lift(Rc::new(Layer::Atom(2)));
        let b = Layer::Bag(multiset_of(&LayerRelation::new(base, 0), &[Layer::Atom(0)]).unwrap());
        // every left injection lies below every right injection
        assert!(layer.decide(&a, &b).is_some());
        assert!(layer.decide(&b, &a).is_none());
        assert!(!Layer::<usize, ()>::Atom(1).fits(1));
    }

    /// Everything below ω² built from at most two ω's and two 1's.
    fn small_carrier() -> Vec<U> {
        let one = bag(&[zero()]);
        let mut out = vec![zero()];
        for omegas in 0..=2 {
            for ones in 0..=2 {
                if omegas + ones == 0 {
                    continue;
                }
                let mut members = vec![one.clone(); omegas];
                members.extend(vec![zero(); ones]);
                out.push(bag(&members));
            }
        }
        out
    }

    #[test]
    fn recursion_equation_and_order() {
        let r = nested_multiset_relation(unit());
        let carrier = small_carrier();
        // ordinal value ω·a + b of each element
        let value = |x: &U| -> u32 {
            nm_members(x).map_or(0, |ms| ms.iter().map(|m| if m.0 == 0 { 1 } else { 100 }).sum())
        };
        for a in &carrier {
            for b in &carrier {
                assert_eq!(r.decide(a, b).is_some(), value(a) < value(b), "{a:?} {b:?}");
            }
        }
        let s = carrier_rank_step(&r, &carrier);
        assert!(check_recursion_equation(&r, &s, &carrier).passed());
    }
}
