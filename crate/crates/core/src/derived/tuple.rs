use std::fmt::Debug;
use std::rc::Rc;

use crate::combinators::{lex_product, lex_sigma, LexEvidence, LexSigma};
use crate::error::WfError;
use crate::nat::NatLess;
use crate::relation::{guarded, Rec, Step, WellFounded};

/// Evidence for tuples of equal length: the first `position` components
/// agree and the component at `position` descends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TupleEvidence<E> {
    pub position: usize,
    pub evidence: E,
}

/// The lexicographic order on `Aⁿ` for a fixed `n`, defined by induction:
/// `A⁰` is a one-point type under the empty relation and `Aⁿ⁺¹ = A × Aⁿ`.
#[derive(Debug, Clone)]
pub struct TuplePower<R> {
    base: R,
    arity: usize,
}

impl<R: WellFounded> TuplePower<R> {
    pub fn new(base: R, arity: usize) -> Self {
        TuplePower { base, arity }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn check(&self, v: &[R::Elem]) -> Result<(), WfError> {
        if v.len() == self.arity {
            Ok(())
        } else {
            Err(WfError::Arity {
                expected: self.arity,
                found: v.len(),
            })
        }
    }

    fn all_tuples(&self, arity: usize) -> Option<Vec<Vec<R::Elem>>> {
        let elems = self.base.elements()?;
        let mut out = vec![Vec::new()];
        for _ in 0..arity {
            out = out
                .into_iter()
                .flat_map(|t| {
                    elems.iter().map(move |x| {
                        let mut t = t.clone();
                        t.push(x.clone());
                        t
                    })
                })
                .collect();
        }
        Some(out)
    }
}

type TupleEv<R> = TupleEvidence<<R as WellFounded>::Evidence>;
type Split<R> = (<R as WellFounded>::Elem, Vec<<R as WellFounded>::Elem>);

/// `Aⁿ⁺¹` as the product `A × Aⁿ`.
fn split<A: Clone>(v: &[A]) -> (A, Vec<A>) {
    (v[0].clone(), v[1..].to_vec())
}

fn to_lex<E: Clone>(e: &TupleEvidence<E>) -> LexEvidence<E, TupleEvidence<E>> {
    match e.position {
        0 => LexEvidence::First(e.evidence.clone()),
        k => LexEvidence::Second(TupleEvidence {
            position: k - 1,
            evidence: e.evidence.clone(),
        }),
    }
}

impl<R: WellFounded + Send + Sync> WellFounded for TuplePower<R> {
    type Elem = Vec<R::Elem>;
    type Evidence = TupleEv<R>;

    fn decide(&self, lesser: &Self::Elem, greater: &Self::Elem) -> Option<Self::Evidence> {
        if lesser.len() != self.arity || greater.len() != self.arity {
            return None;
        }
        let position = lesser.iter().zip(greater).position(|(a, b)| a != b)?;
        let evidence = self.base.decide(&lesser[position], &greater[position])?;
        Some(TupleEvidence { position, evidence })
    }

    fn validate(&self, lesser: &Self::Elem, greater: &Self::Elem, e: &Self::Evidence) -> bool {
        lesser.len() == self.arity
            && greater.len() == self.arity
            && e.position < self.arity
            && lesser[..e.position] == greater[..e.position]
            && self.base.validate(&lesser[e.position], &greater[e.position], &e.evidence)
    }

    fn predecessors(&self, x: &Self::Elem) -> Option<Vec<(Self::Elem, Self::Evidence)>> {
        let mut out = Vec::new();
        for position in 0..x.len() {
            let tails = self.all_tuples(self.arity - position - 1)?;
            for (y, evidence) in self.base.predecessors(&x[position])? {
                for tail in &tails {
                    let mut v = x[..position].to_vec();
                    v.push(y.clone());
                    v.extend(tail.iter().cloned());
                    out.push((
                        v,
                        TupleEvidence {
                            position,
                            evidence: evidence.clone(),
                        },
                    ));
                }
            }
        }
        Some(out)
    }

    fn elements(&self) -> Option<Vec<Self::Elem>> {
        self.all_tuples(self.arity)
    }

    /// At arity zero no step can recurse; otherwise recursion runs over
    /// `A × Aⁿ⁻¹`, translating elements and evidence in both directions.
    fn wfrec<P: 'static>(&self, step: &Step<Self::Elem, Self::Evidence, P>, a: &Self::Elem) -> P {
        assert_eq!(a.len(), self.arity, "tuple of the wrong arity");
        if self.arity == 0 {
            let never: Rec<Self::Elem, Self::Evidence, P> =
                Rc::new(|_, _| unreachable!("nothing lies below the empty tuple"));
            return step(a, never);
        }
        let product = lex_product(self.base.clone(), TuplePower::new(self.base.clone(), self.arity - 1));
        let this = self.clone();
        let step = step.clone();
        let s: Step<Split<R>, LexEvidence<R::Evidence, TupleEv<R>>, P> = Rc::new(move |(x, rest), ih| {
            let mut at = vec![x.clone()];
            at.extend(rest.iter().cloned());
            let t: Rec<Self::Elem, Self::Evidence, P> = Rc::new(move |v, e| ih(&split(v), &to_lex(e)));
            step(&at, guarded(&this, &at, t))
        });
        product.wfrec(&s, &split(a))
    }
}

/// A tuple of any length, tagged with its length.
pub type SteppedTuple<A> = (u64, Vec<A>);

pub fn stepped_tuple<A>(components: Vec<A>) -> SteppedTuple<A> {
    (components.len() as u64, components)
}

/// `A^ω = Σ n ∈ ℕ. Aⁿ`: shorter tuples first, equal lengths compared
/// lexicographically.
pub type SteppedLex<R> = LexSigma<NatLess, TuplePower<R>>;

pub fn stepped_lex<R: WellFounded + Send + Sync>(base: R) -> SteppedLex<R> {
    lex_sigma(NatLess, move |n: &u64| TuplePower::new(base.clone(), *n as usize))
}
