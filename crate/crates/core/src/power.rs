//! Lexicographic exponentiation: strictly descending lists compared
//! alphabetically.
//!
//! Over a relation of order type `α` the power type has order type `2^α`.
//! Its recursion operator is built from recursion over the *transitive
//! closure* of the base relation: the auxiliary `q(x)` extends a proof that
//! every list below `l` is handled into one for every list below `l ⊕ [x]`,
//! and the induction hypothesis over `≺⁺` is what allows appending elements
//! smaller than `x`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::rc::Rc;

use crate::combinators::{transitive_closure, Chain, TransitiveClosure};
use crate::error::WfError;
use crate::relation::{guarded, Rec, Step, WellFounded};

/// Evidence that a list is strictly descending: `cert[i]` certifies
/// `elems[i + 1] ≺ elems[i]`.
pub type Certificate<E> = Vec<E>;

/// A list together with a certificate that it strictly descends.
///
/// Equality and hashing look at the elements only: certificates are proof
/// objects and any two for the same list are interchangeable.
#[derive(Clone)]
pub struct DescendingList<A, E> {
    elems: Vec<A>,
    cert: Certificate<E>,
}

impl<A, E> DescendingList<A, E> {
    /// The empty list.
    pub fn nil() -> Self {
        DescendingList {
            elems: Vec::new(),
            cert: Vec::new(),
        }
    }

    /// Checked construction.
    pub fn new<R>(rel: &R, elems: Vec<A>) -> Result<Self, WfError>
    where
        R: WellFounded<Elem = A, Evidence = E>,
    {
        let mut cert = Vec::with_capacity(elems.len().saturating_sub(1));
        for (i, w) in elems.windows(2).enumerate() {
            cert.push(rel.decide(&w[1], &w[0]).ok_or(WfError::NotDescending { index: i + 1 })?);
        }
        Ok(DescendingList { elems, cert })
    }

    /// Trusted construction from a list and its certificate.
    pub fn from_parts(elems: Vec<A>, cert: Certificate<E>) -> Self {
        debug_assert_eq!(cert.len(), elems.len().saturating_sub(1), "certificate length");
        DescendingList { elems, cert }
    }

    pub fn elems(&self) -> &[A] {
        &self.elems
    }

    pub fn cert(&self) -> &[E] {
        &self.cert
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

impl<A: PartialEq, E> PartialEq for DescendingList<A, E> {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
    }
}

impl<A: Eq, E> Eq for DescendingList<A, E> {}

impl<A: Hash, E> Hash for DescendingList<A, E> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.elems.hash(state);
    }
}

impl<A: fmt::Debug, E> fmt::Debug for DescendingList<A, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.elems).finish()
    }
}

impl<A: fmt::Display, E> fmt::Display for DescendingList<A, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

/// Evidence for `l' ⇢ l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LexListEvidence<E> {
    /// `nil ⇢ cons(x, l)`.
    Nil,
    /// `cons(x', l') ⇢ cons(x, l)` because `x' ≺ x`.
    Head(E),
    /// `cons(x, l') ⇢ cons(x, l)` because `l' ⇢ l`.
    Tail(Box<LexListEvidence<E>>),
}

impl<E> LexListEvidence<E> {
    fn tails(k: usize, mut inner: Self) -> Self {
        for _ in 0..k {
            inner = LexListEvidence::Tail(Box::new(inner));
        }
        inner
    }
}

/// Certificate that `l` strictly descends, if it does.
pub fn is_descending<R: WellFounded>(rel: &R, l: &[R::Elem]) -> Option<Certificate<R::Evidence>> {
    l.windows(2).map(|w| rel.decide(&w[1], &w[0])).collect()
}

/// Decides `l' ⇢ l` on arbitrary lists.  This relation is not well-founded
/// by itself: `[1], [0, 1], [0, 0, 1], …` descends forever.
pub fn list_lex_decide<R: WellFounded>(
    rel: &R,
    lesser: &[R::Elem],
    greater: &[R::Elem],
) -> Option<LexListEvidence<R::Evidence>> {
    let mut k = 0;
    loop {
        let x = greater.get(k)?;
        let head = match lesser.get(k) {
            None => LexListEvidence::Nil,
            Some(x2) => match rel.decide(x2, x) {
                Some(e) => LexListEvidence::Head(e),
                None if x2 == x => {
                    k += 1;
                    continue;
                }
                None => return None,
            },
        };
        return Some(LexListEvidence::tails(k, head));
    }
}

/// Checks that `evidence` certifies `l' ⇢ l`.
pub fn list_lex_validate<R: WellFounded>(
    rel: &R,
    lesser: &[R::Elem],
    greater: &[R::Elem],
    evidence: &LexListEvidence<R::Evidence>,
) -> bool {
    let (mut l2, mut l, mut e) = (lesser, greater, evidence);
    loop {
        match (l2.split_first(), l.split_first(), e) {
            (None, Some(_), LexListEvidence::Nil) => return true,
            (Some((x2, _)), Some((x, _)), LexListEvidence::Head(ea)) => return rel.validate(x2, x, ea),
            (Some((x2, t2)), Some((x, t)), LexListEvidence::Tail(inner)) if x2 == x => {
                (l2, l, e) = (t2, t, inner);
            }
            _ => return false,
        }
    }
}

/// Reverse list recursion: `c1` sees each prefix, the element appended to
/// it, and the result for that prefix.
///
/// ```text
/// rlistrec(c0, c1, nil)      = c0
/// rlistrec(c0, c1, l ⊕ [x])  = c1(l, x, rlistrec(c0, c1, l))
/// ```
pub fn rlistrec<A, C, F>(c0: C, mut c1: F, l: &[A]) -> C
where
    F: FnMut(&[A], &A, C) -> C,
{
    // ordinary list recursion over the reversal, whose tail `r[i+1..]` is
    // the reversal of the prefix `l[..n-1-i]`
    let n = l.len();
    let reversed: Vec<&A> = l.iter().rev().collect();
    let mut acc = c0;
    for i in (0..n).rev() {
        acc = c1(&l[..n - 1 - i], reversed[i], acc);
    }
    acc
}

/// From `l' ⊕ l'' ⇢ l` to `l' ⇢ l`.
pub fn apls<A, E: Clone>(lesser: &[A], _suffix: &[A], _greater: &[A], evidence: &LexListEvidence<E>) -> LexListEvidence<E> {
    let mut k = 0;
    let mut e = evidence;
    loop {
        if k == lesser.len() {
            return LexListEvidence::tails(k, LexListEvidence::Nil);
        }
        match e {
            LexListEvidence::Head(ea) => return LexListEvidence::tails(k, LexListEvidence::Head(ea.clone())),
            LexListEvidence::Tail(inner) => {
                k += 1;
                e = inner;
            }
            LexListEvidence::Nil => unreachable!("a nonempty list is never below by the nil case"),
        }
    }
}

/// Splitting evidence for `l' ⇢ l ⊕ l₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LsapCase<A, E> {
    /// `l' ⇢ l`.
    Below(LexListEvidence<E>),
    /// `l' = l ⊕ l₁` with `l₁ ⇢ l₂`.
    Extends { rest: Vec<A>, evidence: LexListEvidence<E> },
}

/// Case analysis on `l' ⇢ l ⊕ l₂`: either `l'` is already below `l`, or it
/// extends `l` by some `l₁ ⇢ l₂`.
pub fn lsap<A: Clone, E: Clone>(
    lesser: &[A],
    prefix: &[A],
    _suffix: &[A],
    evidence: &LexListEvidence<E>,
) -> LsapCase<A, E> {
    let mut e = evidence;
    for k in 0..prefix.len() {
        match e {
            LexListEvidence::Tail(inner) => e = inner,
            _ => return LsapCase::Below(LexListEvidence::tails(k, e.clone())),
        }
    }
    LsapCase::Extends {
        rest: lesser[prefix.len()..].to_vec(),
        evidence: e.clone(),
    }
}

/// `D(l₁ ⊕ l)` gives `D(l₁)` and `D(l)`.
pub fn descap<E: Clone>(front_len: usize, back_len: usize, cert: &[E]) -> (Certificate<E>, Certificate<E>) {
    debug_assert_eq!(cert.len(), (front_len + back_len).saturating_sub(1));
    let front = cert[..front_len.saturating_sub(1)].to_vec();
    let back = if back_len == 0 { Vec::new() } else { cert[front_len..].to_vec() };
    (front, back)
}

/// From `D(l ⊕ [y])` and `l ⊕ [y] ⇢ [x]`, a chain `y ≺⁺ x`: the list
/// descends to `y` and its head is below `x`.
pub fn endls<A: Clone, E: Clone>(
    l: &[A],
    y: &A,
    x: &A,
    cert: &[E],
    evidence: &LexListEvidence<E>,
) -> Chain<A, E> {
    let head = match evidence {
        LexListEvidence::Head(e) => e.clone(),
        _ => unreachable!("below a singleton only by a smaller head"),
    };
    // elements from y up through the list to x
    let mut elems = vec![y.clone()];
    elems.extend(l.iter().rev().cloned());
    elems.push(x.clone());
    let mut links: Vec<E> = cert.iter().rev().cloned().collect();
    links.push(head);
    Chain::from_parts(elems, links).expect("a chain has one link more than the certificate")
}

/// `Σ 2^xᵢ` for a descending list of naturals: an order isomorphism onto `<`.
pub fn pow_nat_rank(l: &[u64]) -> Result<u64, WfError> {
    l.iter().try_fold(0u64, |acc, &x| {
        let bit = 1u64.checked_shl(u32::try_from(x).unwrap_or(u32::MAX)).filter(|_| x < 64);
        bit.and_then(|b| acc.checked_add(b))
            .ok_or(WfError::Overflow("binary rank exceeds 64 bits"))
    })
}

/// The descending list whose binary rank is `r`: its set bits, highest
/// first.
pub fn pow_nat_from_rank(r: u64) -> Vec<u64> {
    (0..64).rev().filter(|b| r >> b & 1 == 1).collect()
}

/// A uniformly random list below `l` in the power order over `<`, drawn
/// through the binary rank rather than by enumerating predecessors (there
/// are `rank(l)` of them).  `None` at the empty list.
pub fn pow_nat_random_predecessor<G: rand::Rng + ?Sized>(l: &[u64], rng: &mut G) -> Result<Option<Vec<u64>>, WfError> {
    let r = pow_nat_rank(l)?;
    Ok((r > 0).then(|| pow_nat_from_rank(rng.gen_range(0..r))))
}

/// The power type over a well-founded relation: descending lists ordered
/// by `⇢`.
#[derive(Debug, Clone)]
pub struct PowRelation<R> {
    base: R,
    closure: TransitiveClosure<R>,
}

pub fn pow_relation<R: WellFounded>(base: R) -> PowRelation<R> {
    PowRelation {
        closure: transitive_closure(base.clone()),
        base,
    }
}

type Dl<R> = DescendingList<<R as WellFounded>::Elem, <R as WellFounded>::Evidence>;
type Lle<R> = LexListEvidence<<R as WellFounded>::Evidence>;
/// `Q(z)`: results for every list below `z`.
type QFn<R, P> = Rec<Dl<R>, Lle<R>, P>;
/// `Π d ∈ D(l). Q(⟨l, d⟩)`.
///
/// A struct rather than an alias: four levels of nested `dyn Fn` aliases
/// trip an internal compiler error in the overcapture lint.
struct PFn<R: WellFounded, P>(Rc<dyn Fn(&[R::Evidence]) -> QFn<R, P>>);

impl<R: WellFounded, P> Clone for PFn<R, P> {
    fn clone(&self) -> Self {
        PFn(self.0.clone())
    }
}

impl<R: WellFounded, P> PFn<R, P> {
    fn new(f: impl Fn(&[R::Evidence]) -> QFn<R, P> + 'static) -> Self {
        PFn(Rc::new(f))
    }

    fn at(&self, d: &[R::Evidence]) -> QFn<R, P> {
        (self.0)(d)
    }
}
/// The type of `q(x)`: from `l` and `Π d. Q(⟨l, d⟩)` to `Π d. Q(⟨l ⊕ [x], d⟩)`.
type QX<R, P> = Rc<dyn Fn(&[<R as WellFounded>::Elem], PFn<R, P>) -> PFn<R, P>>;
/// The type of `s(…, l₁)`: from `l₁ ⇢ [x]` to `Π d'. Q(⟨l ⊕ l₁, d'⟩)`.
type SFn<R, P> = Rc<dyn Fn(&Lle<R>) -> PFn<R, P>>;

impl<R: WellFounded> PowRelation<R> {
    pub fn base(&self) -> &R {
        &self.base
    }

    /// Checked construction of a carrier element.
    pub fn list(&self, elems: Vec<R::Elem>) -> Result<Dl<R>, WfError> {
        DescendingList::new(&self.base, elems)
    }

    /// All descending lists whose head is below `x` (and the empty list).
    fn continuations_below(&self, x: &R::Elem) -> Option<Vec<Vec<R::Elem>>> {
        let mut out = vec![Vec::new()];
        for (y, _) in self.base.predecessors(x)? {
            for tail in self.continuations_below(&y)? {
                let mut l = vec![y.clone()];
                l.extend(tail);
                out.push(l);
            }
        }
        Some(out)
    }

    fn dl(&self, elems: Vec<R::Elem>) -> Dl<R> {
        let cert = is_descending(&self.base, &elems).expect("enumerated lists descend");
        DescendingList::from_parts(elems, cert)
    }

    /// `p(l) = rlistrec(p₀, (l, x, u) q(x)(l, u), l)` with `p₀` vacuous.
    fn p<P: 'static>(&self, step: &Step<Dl<R>, Lle<R>, P>, l: &[R::Elem]) -> PFn<R, P> {
        let p0: PFn<R, P> = PFn::new(|_d| Rc::new(|_z, _ls| unreachable!("no list is below the empty list")));
        rlistrec(p0, |prefix, x, u| self.q(step, x)(prefix, u), l)
    }

    /// `q(x)`, by recursion over `≺⁺`:
    ///
    /// ```text
    /// q(x) l u d ⟨l', d'⟩ lx₀ = u(fst(descap(l, [x], d))) ⟨l', d'⟩ lx
    ///                                   if lsap(l', l, [x], lx₀) = inl(lx)
    ///                        = step(⟨l ⊕ l₁, d'⟩, s(q', l, u, x, l₁) lx d')
    ///                                   if lsap(l', l, [x], lx₀) = inr(l₁, lx)
    /// ```
    fn q<P: 'static>(&self, step: &Step<Dl<R>, Lle<R>, P>, x: &R::Elem) -> QX<R, P> {
        let this = self.clone();
        let step = step.clone();
        let q1: Step<R::Elem, Chain<R::Elem, R::Evidence>, QX<R, P>> = Rc::new(move |x, ih| {
            let (this, step, x) = (this.clone(), step.clone(), x.clone());
            Rc::new(move |l: &[R::Elem], u: PFn<R, P>| {
                let (this, step, x, ih) = (this.clone(), step.clone(), x.clone(), ih.clone());
                let l = l.to_vec();
                PFn::new(move |d: &[R::Evidence]| {
                    let (this2, step, x, ih, u, l) =
                        (this.clone(), step.clone(), x.clone(), ih.clone(), u.clone(), l.clone());
                    let d = d.to_vec();
                    let mut lx_list = l.clone();
                    lx_list.push(x.clone());
                    let at = DescendingList::from_parts(lx_list, d.clone());
                    let r: QFn<R, P> = Rc::new(move |z, lx0| {
                        match lsap(z.elems(), &l, std::slice::from_ref(&x), lx0) {
                            LsapCase::Below(lx) => {
                                let (d_l, _) = descap(l.len(), 1, &d);
                                u.at(&d_l)(z, &lx)
                            }
                            LsapCase::Extends { rest, evidence } => {
                                let s = this2.s(ih.clone(), l.clone(), u.clone(), x.clone(), rest);
                                step(z, s(&evidence).at(z.cert()))
                            }
                        }
                    });
                    guarded(&this, &at, r)
                })
            })
        });
        self.closure.wfrec(&q1, x)
    }

    /// `s(ih, l, u, x, l₁)`, by reverse list recursion on `l₁`:
    ///
    /// ```text
    /// s(…, nil) lx            = u
    /// s(…, l₁ ⊕ [y]) lx d'    = ih(y, endls(l₁, y, x, snd(descap(l, l₁ ⊕ [y], d')), lx))
    ///                             (l ⊕ l₁, s(…, l₁)(apls(l₁, [y], [x], lx))) d'
    /// ```
    fn s<P: 'static>(
        &self,
        ih: Rec<R::Elem, Chain<R::Elem, R::Evidence>, QX<R, P>>,
        l: Vec<R::Elem>,
        u: PFn<R, P>,
        x: R::Elem,
        l1: Vec<R::Elem>,
    ) -> SFn<R, P> {
        let s0: SFn<R, P> = Rc::new(move |_lx| u.clone());
        rlistrec(
            s0,
            |l1p, y, v| {
                let (ih, x, y, v) = (ih.clone(), x.clone(), y.clone(), v.clone());
                let l1p = l1p.to_vec();
                let l = l.clone();
                Rc::new(move |lx: &Lle<R>| {
                    let (ih, x, y, v, l1p, l) = (ih.clone(), x.clone(), y.clone(), v.clone(), l1p.clone(), l.clone());
                    let lx = lx.clone();
                    PFn::new(move |d2: &[R::Evidence]| {
                        let (_, d_l1y) = descap(l.len(), l1p.len() + 1, d2);
                        let ls = endls(&l1p, &y, &x, &d_l1y, &lx);
                        let mut ll1 = l.clone();
                        ll1.extend(l1p.iter().cloned());
                        let shorter = apls(&l1p, std::slice::from_ref(&y), std::slice::from_ref(&x), &lx);
                        ih(&y, &ls)(&ll1, v(&shorter)).at(d2)
                    })
                })
            },
            &l1,
        )
    }
}

impl<R: WellFounded> WellFounded for PowRelation<R> {
    type Elem = Dl<R>;
    type Evidence = Lle<R>;

    fn decide(&self, lesser: &Dl<R>, greater: &Dl<R>) -> Option<Lle<R>> {
        list_lex_decide(&self.base, lesser.elems(), greater.elems())
    }

    fn validate(&self, lesser: &Dl<R>, greater: &Dl<R>, evidence: &Lle<R>) -> bool {
        list_lex_validate(&self.base, lesser.elems(), greater.elems(), evidence)
    }

    /// Every list below `l`: its proper prefixes, and each list that agrees
    /// with `l` up to some position and then continues below it.
    fn predecessors(&self, z: &Dl<R>) -> Option<Vec<(Dl<R>, Lle<R>)>> {
        let l = z.elems();
        let mut out = Vec::new();
        for k in 0..l.len() {
            let prefix = l[..k].to_vec();
            out.push(prefix.clone());
            for (x2, _) in self.base.predecessors(&l[k])? {
                if k > 0 && self.base.decide(&x2, &l[k - 1]).is_none() {
                    continue;
                }
                for tail in self.continuations_below(&x2)? {
                    let mut cand = prefix.clone();
                    cand.push(x2.clone());
                    cand.extend(tail);
                    out.push(cand);
                }
            }
        }
        Some(
            out.into_iter()
                .map(|elems| {
                    let e = list_lex_decide(&self.base, &elems, l).expect("enumerated below");
                    (self.dl(elems), e)
                })
                .collect(),
        )
    }

    fn elements(&self) -> Option<Vec<Dl<R>>> {
        let mut out = vec![DescendingList::nil()];
        for a in self.base.elements()? {
            for tail in self.continuations_below(&a)? {
                let mut l = vec![a.clone()];
                l.extend(tail);
                out.push(self.dl(l));
            }
        }
        Some(out)
    }

    /// `wf⟨l, d⟩ = step(⟨l, d⟩, p(l) d)`.
    fn wfrec<P: 'static>(&self, step: &Step<Dl<R>, Lle<R>, P>, a: &Dl<R>) -> P {
        let below = self.p(step, a.elems()).at(a.cert());
        step(a, guarded(self, a, below))
    }
}
