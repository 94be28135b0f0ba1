use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::rc::Rc;

use crate::error::WfError;
use crate::relation::{guarded, Rec, Step, WellFounded};

/// Evidence for `x' ≺⁺ x`: a chain `x' = y₀ ≺ y₁ ≺ … ≺ y_k = x` with `k ≥ 1`
/// links, each carrying base-relation evidence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chain<A, E> {
    elems: Vec<A>,
    links: Vec<E>,
}

/// The two shapes of a chain: a single step, or a shorter chain followed by
/// a final step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainCase<A, E> {
    Single(E),
    Extend { mid: A, prefix: Chain<A, E>, last: E },
}

impl<A: Clone, E: Clone> Chain<A, E> {
    /// The one-link chain `lesser ≺ greater`.
    pub fn single(lesser: A, greater: A, evidence: E) -> Self {
        Chain {
            elems: vec![lesser, greater],
            links: vec![evidence],
        }
    }

    /// Builds a chain from its elements (lowest first) and the evidence of
    /// each link; returns `None` if the lengths do not fit or it is empty.
    pub fn from_parts(elems: Vec<A>, links: Vec<E>) -> Option<Self> {
        (!links.is_empty() && elems.len() == links.len() + 1).then_some(Chain { elems, links })
    }

    /// Appends the step `last ≺ next`.
    pub fn extend(mut self, next: A, evidence: E) -> Self {
        self.elems.push(next);
        self.links.push(evidence);
        self
    }

    pub fn elems(&self) -> &[A] {
        &self.elems
    }

    pub fn links(&self) -> &[E] {
        &self.links
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    /// Never true; chains have at least one link.
    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    pub fn lowest(&self) -> &A {
        &self.elems[0]
    }

    pub fn highest(&self) -> &A {
        self.elems.last().expect("chains are nonempty")
    }

    /// Splits off the final link.
    pub fn cases(&self) -> ChainCase<A, E> {
        let k = self.links.len();
        if k == 1 {
            ChainCase::Single(self.links[0].clone())
        } else {
            ChainCase::Extend {
                mid: self.elems[k - 1].clone(),
                prefix: Chain {
                    elems: self.elems[..k].to_vec(),
                    links: self.links[..k - 1].to_vec(),
                },
                last: self.links[k - 1].clone(),
            }
        }
    }
}

impl<A: fmt::Debug, E> fmt::Display for Chain<A, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(" ≺ ")?;
            }
            write!(f, "{x:?}")?;
        }
        Ok(())
    }
}

/// Case analysis on closure evidence: `x' ≺ x`, or `x' ≺⁺ y` and `y ≺ x`.
pub fn trcases<A: Clone, E: Clone>(chain: &Chain<A, E>) -> ChainCase<A, E> {
    chain.cases()
}

/// The irreflexive transitive closure `≺⁺` of a well-founded relation.
#[derive(Debug, Clone)]
pub struct TransitiveClosure<R> {
    base: R,
}

pub fn transitive_closure<R: WellFounded>(base: R) -> TransitiveClosure<R> {
    TransitiveClosure { base }
}

/// Shortest chain from `lesser` up to `greater`, found by a breadth-first
/// search backwards from `greater`.
fn backward_search<R: WellFounded>(
    base: &R,
    lesser: &R::Elem,
    greater: &R::Elem,
) -> Result<Option<Chain<R::Elem, R::Evidence>>, WfError> {
    // parent[y] = (z, e) with e : y ≺ z, z one step closer to `greater`
    let mut parent: HashMap<R::Elem, (R::Elem, R::Evidence)> = HashMap::new();
    let mut seen: HashSet<R::Elem> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(greater.clone());
    queue.push_back(greater.clone());
    while let Some(z) = queue.pop_front() {
        let preds = base.predecessors(&z).ok_or(WfError::Undecidable)?;
        for (y, e) in preds {
            if &y == lesser {
                let mut elems = vec![y.clone()];
                let mut links = vec![e];
                let mut cur = z.clone();
                while let Some((up, e2)) = parent.get(&cur) {
                    elems.push(cur.clone());
                    links.push(e2.clone());
                    cur = up.clone();
                }
                elems.push(cur);
                return Ok(Some(Chain { elems, links }));
            }
            if seen.insert(y.clone()) {
                parent.insert(y.clone(), (z.clone(), e));
                queue.push_back(y);
            }
        }
    }
    Ok(None)
}

impl<R: WellFounded> TransitiveClosure<R> {
    pub fn base(&self) -> &R {
        &self.base
    }

    /// Like [`WellFounded::decide`], but reports a relation without
    /// predecessor enumeration instead of panicking.
    pub fn try_decide(
        &self,
        lesser: &R::Elem,
        greater: &R::Elem,
    ) -> Result<Option<Chain<R::Elem, R::Evidence>>, WfError> {
        if let Some(e) = self.base.decide(lesser, greater) {
            return Ok(Some(Chain::single(lesser.clone(), greater.clone(), e)));
        }
        backward_search(&self.base, lesser, greater)
    }
}

impl<R: WellFounded> WellFounded for TransitiveClosure<R> {
    type Elem = R::Elem;
    type Evidence = Chain<R::Elem, R::Evidence>;

    /// A direct step is preferred; otherwise the shortest chain found by
    /// backward breadth-first search, ties broken by enumeration order.
    ///
    /// # Panics
    ///
    /// If no single step relates the pair and the base relation cannot
    /// enumerate predecessors; see [`TransitiveClosure::try_decide`].
    fn decide(&self, lesser: &R::Elem, greater: &R::Elem) -> Option<Self::Evidence> {
        match self.try_decide(lesser, greater) {
            Ok(r) => r,
            Err(e) => panic!("{e}"),
        }
    }

    fn validate(&self, lesser: &R::Elem, greater: &R::Elem, chain: &Self::Evidence) -> bool {
        chain.elems.len() == chain.links.len() + 1
            && !chain.links.is_empty()
            && chain.lowest() == lesser
            && chain.highest() == greater
            && chain
                .elems
                .windows(2)
                .zip(&chain.links)
                .all(|(w, e)| self.base.validate(&w[0], &w[1], e))
    }

    fn predecessors(&self, x: &R::Elem) -> Option<Vec<(R::Elem, Self::Evidence)>> {
        // every element reachable downwards, with its shortest chain
        let mut out: Vec<(R::Elem, Self::Evidence)> = Vec::new();
        let mut seen: HashSet<R::Elem> = HashSet::new();
        let mut queue: VecDeque<(R::Elem, Option<Self::Evidence>)> = VecDeque::new();
        queue.push_back((x.clone(), None));
        seen.insert(x.clone());
        while let Some((z, chain_z)) = queue.pop_front() {
            for (y, e) in self.base.predecessors(&z)? {
                if !seen.insert(y.clone()) {
                    continue;
                }
                // chain from y up to x: y ≺ z followed by z's chain
                let chain = match &chain_z {
                    None => Chain::single(y.clone(), z.clone(), e),
                    Some(c) => {
                        let mut elems = vec![y.clone()];
                        elems.extend(c.elems.iter().cloned());
                        let mut links = vec![e];
                        links.extend(c.links.iter().cloned());
                        Chain { elems, links }
                    }
                };
                out.push((y.clone(), chain.clone()));
                queue.push_back((y, Some(chain)));
            }
        }
        Some(out)
    }

    fn elements(&self) -> Option<Vec<R::Elem>> {
        self.base.elements()
    }

    /// ```text
    /// q(x) x' lt  = step(x', q(x'))      if trcases(lt) = inl(ls)
    ///             = q(y) x' lt'          if trcases(lt) = inr(y, lt', ls)
    /// wf(x)       = step(x, q(x))
    /// ```
    /// where `q` is defined by recursion over the base relation, so `q(y)`
    /// is the induction hypothesis at `y ≺ x`.
    fn wfrec<P: 'static>(&self, step: &Step<R::Elem, Self::Evidence, P>, a: &R::Elem) -> P {
        step(a, closure_q(self, step, a))
    }
}

fn closure_q<R: WellFounded, P: 'static>(
    tc: &TransitiveClosure<R>,
    step: &Step<R::Elem, Chain<R::Elem, R::Evidence>, P>,
    x: &R::Elem,
) -> Rec<R::Elem, Chain<R::Elem, R::Evidence>, P> {
    type Q<A, E, P> = Rec<A, Chain<A, E>, P>;
    let s: Step<R::Elem, R::Evidence, Q<R::Elem, R::Evidence, P>> = {
        let tc = tc.clone();
        let step = step.clone();
        Rc::new(move |x, ih| {
            let (tc2, step2) = (tc.clone(), step.clone());
            let inner: Q<R::Elem, R::Evidence, P> = Rc::new(move |x2, lt| match lt.cases() {
                ChainCase::Single(_) => step2(x2, closure_q(&tc2, &step2, x2)),
                ChainCase::Extend { mid, prefix, last } => ih(&mid, &last)(x2, &prefix),
            });
            guarded(&tc, x, inner)
        })
    };
    tc.base.wfrec(&s, x)
}

/// A chain of exactly `n` base steps from `lesser` up to `greater`.
///
/// For `n = 0` the answer is `Some(None)` exactly when the two elements are
/// equal (the equality witness).  Returns `None` if no such chain exists.
///
/// # Panics
///
/// If the base relation cannot enumerate predecessors.
pub fn finite_power_decide<R: WellFounded>(
    base: &R,
    n: usize,
    lesser: &R::Elem,
    greater: &R::Elem,
) -> Option<Option<Chain<R::Elem, R::Evidence>>> {
    if n == 0 {
        return (lesser == greater).then_some(None);
    }
    // depth-first over predecessors of `greater`, extending the chain downwards
    fn go<R: WellFounded>(
        base: &R,
        remaining: usize,
        lesser: &R::Elem,
        top: &R::Elem,
        elems: &mut Vec<R::Elem>,
        links: &mut Vec<R::Evidence>,
    ) -> bool {
        let preds = base
            .predecessors(top)
            .expect("finite powers require predecessor enumeration");
        for (y, e) in preds {
            if remaining == 1 {
                if &y == lesser {
                    elems.push(y);
                    links.push(e);
                    return true;
                }
                continue;
            }
            elems.push(y.clone());
            links.push(e);
            if go(base, remaining - 1, lesser, &y, elems, links) {
                return true;
            }
            elems.pop();
            links.pop();
        }
        false
    }
    let mut elems = vec![greater.clone()];
    let mut links = Vec::new();
    if go(base, n, lesser, greater, &mut elems, &mut links) {
        elems.reverse();
        links.reverse();
        Some(Some(Chain { elems, links }))
    } else {
        None
    }
}

/// The reflexive-transitive closure `≺*`: `lesser = greater` or some chain
/// leads from `lesser` up to `greater`.  Not well-founded, hence offered only
/// as a predicate.
///
/// # Panics
///
/// If the base relation cannot enumerate predecessors.
pub fn refl_trans_reachable<R: WellFounded>(base: &R, lesser: &R::Elem, greater: &R::Elem) -> bool {
    lesser == greater
        || backward_search(base, lesser, greater)
            .expect("reachability requires predecessor enumeration")
            .is_some()
}
