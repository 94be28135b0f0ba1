//! Wellordering types as finitely branching labelled trees.
//!
//! A tree `sup(a, f)` carries a label and an ordered sequence of branches.
//! The immediate-subtree relation is well-founded, and every well-founded
//! relation with enumerable predecessors is the inverse image of it under
//! the rank function [`wof`].

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::marker::PhantomData;
use std::rc::Rc;

use crate::error::WfError;
use crate::relation::{guarded, Rec, Step, WellFounded};

/// A node `sup(label, branches)`.
///
/// Branches are shared, so cloning a tree is cheap.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WTree<A> {
    label: A,
    branches: Rc<[WTree<A>]>,
}

impl<A> WTree<A> {
    pub fn sup(label: A, branches: Vec<WTree<A>>) -> Self {
        WTree {
            label,
            branches: branches.into(),
        }
    }

    pub fn leaf(label: A) -> Self {
        Self::sup(label, Vec::new())
    }

    pub fn label(&self) -> &A {
        &self.label
    }

    pub fn branches(&self) -> &[WTree<A>] {
        &self.branches
    }

    pub fn node_count(&self) -> usize {
        transrec(&|_, _, counts: Vec<usize>| 1 + counts.iter().sum::<usize>(), self)
    }

    pub fn height(&self) -> usize {
        transrec(&|_, _, hs: Vec<usize>| hs.into_iter().map(|h| h + 1).max().unwrap_or(0), self)
    }
}

/// Renders `label` for a leaf and `label(b₁, …, bₖ)` otherwise.
impl<A: Display> Display for WTree<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if !self.branches.is_empty() {
            write!(f, "(")?;
            for (i, b) in self.branches.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{b}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl<A: Debug> Debug for WTree<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.label)?;
        if !self.branches.is_empty() {
            f.debug_list().entries(self.branches.iter()).finish()?;
        }
        Ok(())
    }
}

/// Transfinite recursion: folds `step(label, branches, branch_results)`
/// bottom-up over the tree.
pub fn transrec<A, C, F>(step: &F, w: &WTree<A>) -> C
where
    F: Fn(&A, &[WTree<A>], Vec<C>) -> C,
{
    let results = w.branches.iter().map(|b| transrec(step, b)).collect();
    step(&w.label, &w.branches, results)
}

/// Evidence that a tree is an immediate subtree: the branch index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BranchIndex(pub usize);

/// The first branch of `w` equal to `lesser`, if any.
pub fn subtree_decide<A: PartialEq>(lesser: &WTree<A>, w: &WTree<A>) -> Option<BranchIndex> {
    w.branches.iter().position(|b| b == lesser).map(BranchIndex)
}

/// The immediate-subtree relation.
pub struct WTreeRelation<A>(PhantomData<fn() -> A>);

impl<A> Clone for WTreeRelation<A> {
    fn clone(&self) -> Self {
        WTreeRelation(PhantomData)
    }
}

impl<A> Debug for WTreeRelation<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("WTreeRelation")
    }
}

pub fn wtree_relation<A>() -> WTreeRelation<A> {
    WTreeRelation(PhantomData)
}

type Thunk<P> = Rc<dyn Fn() -> P>;

impl<A: Clone + Eq + Hash + Debug + 'static> WellFounded for WTreeRelation<A> {
    type Elem = WTree<A>;
    type Evidence = BranchIndex;

    fn decide(&self, lesser: &WTree<A>, greater: &WTree<A>) -> Option<BranchIndex> {
        subtree_decide(lesser, greater)
    }

    fn validate(&self, lesser: &WTree<A>, greater: &WTree<A>, evidence: &BranchIndex) -> bool {
        greater.branches.get(evidence.0) == Some(lesser)
    }

    fn predecessors(&self, x: &WTree<A>) -> Option<Vec<(WTree<A>, BranchIndex)>> {
        Some(
            x.branches
                .iter()
                .enumerate()
                .map(|(i, b)| (b.clone(), BranchIndex(i)))
                .collect(),
        )
    }

    /// `wf(sup(a, f)) = step(sup(a, f), (w', ls) ↦ wf(f(ls)))`, as a
    /// transfinite recursion whose branch results are suspended so that only
    /// the branches the step asks for are evaluated.
    fn wfrec<P: 'static>(&self, step: &Step<WTree<A>, BranchIndex, P>, a: &WTree<A>) -> P {
        let this = self.clone();
        let p = |label: &A, branches: &[WTree<A>], u: Vec<Thunk<P>>| -> Thunk<P> {
            let (this, step) = (this.clone(), step.clone());
            let at = WTree {
                label: label.clone(),
                branches: branches.into(),
            };
            let u: Rc<[Thunk<P>]> = u.into();
            Rc::new(move || {
                let u = u.clone();
                let p1: Rec<WTree<A>, BranchIndex, P> = Rc::new(move |_w, ls| u[ls.0]());
                step(&at, guarded(&this, &at, p1))
            })
        };
        transrec(&p, a)()
    }
}

/// Labels for the encoding of naturals as trees: a zero node has no
/// branches and a successor node has exactly one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NatLabel {
    Zero,
    Succ,
}

impl Display for NatLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NatLabel::Zero => "Z",
            NatLabel::Succ => "S",
        })
    }
}

pub fn encode_nat(n: u64) -> WTree<NatLabel> {
    (0..n).fold(WTree::leaf(NatLabel::Zero), |w, _| WTree::sup(NatLabel::Succ, vec![w]))
}

/// Inverse of [`encode_nat`]; labels are ignored and only the branching
/// structure counts.
pub fn decode_nat<A>(w: &WTree<A>) -> Result<u64, WfError> {
    let mut n = 0;
    let mut node = w;
    loop {
        match node.branches() {
            [] => return Ok(n),
            [next] => {
                n += 1;
                node = next;
            }
            more => return Err(WfError::NotANumeral { branches: more.len() }),
        }
    }
}

/// The rank function: `wof(a) = sup(a, [wof(a') for each predecessor a'])`,
/// defined by recursion over `rel`.
///
/// # Panics
///
/// If the relation does not enumerate predecessors.
pub fn wof<R: WellFounded>(rel: &R, a: &R::Elem) -> WTree<R::Elem> {
    let r = rel.clone();
    let s: Step<R::Elem, R::Evidence, WTree<R::Elem>> = Rc::new(move |a, ih| {
        let branches = r
            .predecessors(a)
            .expect("the rank function needs predecessor enumeration")
            .iter()
            .map(|(x, ls)| ih(x, ls))
            .collect();
        WTree::sup(a.clone(), branches)
    });
    rel.wfrec(&s, a)
}

/// The root label; a left inverse of [`wof`].
pub fn aof<A: Clone>(w: &WTree<A>) -> A {
    w.label.clone()
}

/// Outcome of [`check_characterization`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CharacterizationReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CharacterizationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that `aof(wof(a)) = a` for every element mentioned and that
/// `a' ≺ a` exactly when `wof(a')` is an immediate subtree of `wof(a)`.
pub fn check_characterization<R: WellFounded>(rel: &R, pairs: &[(R::Elem, R::Elem)]) -> CharacterizationReport {
    let mut report = CharacterizationReport::default();
    let mut cache = std::collections::HashMap::new();
    let mut rank = |x: &R::Elem| cache.entry(x.clone()).or_insert_with(|| wof(rel, x)).clone();
    for (lesser, greater) in pairs {
        report.checked += 1;
        let (wl, wg) = (rank(lesser), rank(greater));
        for (x, w) in [(lesser, &wl), (greater, &wg)] {
            if aof(w) != *x {
                report.failures.push(format!("aof(wof({x:?})) = {:?}", aof(w)));
            }
        }
        let related = rel.decide(lesser, greater).is_some();
        let subtree = subtree_decide(&wl, &wg).is_some();
        if related != subtree {
            report
                .failures
                .push(format!("{lesser:?} vs {greater:?}: relation {related}, subtree {subtree}"));
        }
    }
    report
}
