use std::collections::{HashSet, VecDeque};
use std::fmt;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::finfun::{finfun_exp, FinFunExp, FiniteFunction};
use crate::combinators::{inverse_image, InverseImage};
use crate::error::WfError;
use crate::nat::NatLess;
use crate::relation::WellFounded;

/// `<` on the positive naturals, as the inverse image of `<` under `m ↦ m - 1`.
pub type PositiveLess = InverseImage<NatLess, u64>;

pub fn positive_less() -> PositiveLess {
    inverse_image(NatLess, |m: &u64| m.saturating_sub(1)).with_preimage(|y: &u64| vec![y + 1])
}

/// A finite multiset: distinct elements in strictly descending order, each
/// with a positive multiplicity.
pub type Multiset<A, E> = FiniteFunction<A, u64, E>;

/// The multiset ordering, `M(A) = ℕ^A` restricted to positive
/// multiplicities.
pub type MultisetRelation<R> = FinFunExp<R, PositiveLess>;

pub fn multiset_relation<R: WellFounded>(rel: R) -> MultisetRelation<R> {
    finfun_exp(rel, positive_less())
}

/// Collects `items` into a multiset, sorting distinct elements into
/// descending order and merging duplicates.
///
/// Every two distinct elements must be related one way or the other.
pub fn multiset_of<R: WellFounded>(rel: &R, items: &[R::Elem]) -> Result<Multiset<R::Elem, R::Evidence>, WfError> {
    // (element, multiplicity, first position in the input)
    let mut distinct: Vec<(R::Elem, u64, usize)> = Vec::new();
    for (i, x) in items.iter().enumerate() {
        match distinct.iter_mut().find(|(y, _, _)| y == x) {
            Some(entry) => entry.1 += 1,
            None => distinct.push((x.clone(), 1, i)),
        }
    }
    // insertion sort into descending order, comparing with `decide`
    let mut sorted: Vec<(R::Elem, u64, usize)> = Vec::with_capacity(distinct.len());
    for item in distinct {
        let mut at = sorted.len();
        for (j, other) in sorted.iter().enumerate() {
            if rel.decide(&other.0, &item.0).is_some() {
                at = j;
                break;
            }
            if rel.decide(&item.0, &other.0).is_none() {
                let (first, second) = (other.2.min(item.2), other.2.max(item.2));
                return Err(WfError::Incomparable { first, second });
            }
        }
        // everything after `at` must also lie below the new element
        if let Some(other) = sorted[at..].iter().find(|o| rel.decide(&o.0, &item.0).is_none()) {
            let (first, second) = (other.2.min(item.2), other.2.max(item.2));
            return Err(WfError::Incomparable { first, second });
        }
        sorted.insert(at, item);
    }
    FiniteFunction::new(rel, sorted.into_iter().map(|(x, m, _)| (x, m)).collect())
}

/// Each element repeated by its multiplicity, in descending order.
pub fn occurrences<A: Clone, E>(m: &Multiset<A, E>) -> Vec<A> {
    m.entries()
        .iter()
        .flat_map(|(x, k)| std::iter::repeat_n(x.clone(), *k as usize))
        .collect()
}

/// Total number of occurrences.
pub fn multiset_size<A, E>(m: &Multiset<A, E>) -> u64 {
    m.entries().iter().map(|(_, k)| k).sum()
}

/// Renders `{2,1,1}`.
pub struct MultisetDisplay<'a, A, E>(pub &'a Multiset<A, E>);

impl<A: fmt::Display + Clone, E> fmt::Display for MultisetDisplay<'_, A, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in occurrences(self.0).iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

const ORACLE_BUDGET: usize = 200_000;

/// Independent check of the multiset ordering: searches for a sequence of
/// steps from `greater` to `lesser`, each replacing one occurrence by any
/// finite multiset of its predecessors.
///
/// A witnessing sequence can always be scheduled so that no intermediate
/// multiset has more than `|lesser| + |greater|` occurrences, which bounds
/// the search.
pub fn dm_oracle<R>(lesser: &[R::Elem], greater: &[R::Elem], rel: &R) -> Result<bool, WfError>
where
    R: WellFounded,
    R::Elem: Ord,
{
    let canon = |v: &[R::Elem]| {
        let mut v = v.to_vec();
        v.sort();
        v
    };
    let target = canon(lesser);
    let start = canon(greater);
    let bound = target.len() + start.len();
    let mut seen: HashSet<Vec<R::Elem>> = HashSet::new();
    let mut queue = VecDeque::from([start.clone()]);
    seen.insert(start);
    while let Some(current) = queue.pop_front() {
        for i in 0..current.len() {
            if i > 0 && current[i] == current[i - 1] {
                continue;
            }
            let below: Vec<R::Elem> = rel
                .predecessors(&current[i])
                .ok_or(WfError::Undecidable)?
                .into_iter()
                .map(|p| p.0)
                .collect();
            let mut rest = current.clone();
            rest.remove(i);
            let room = bound.saturating_sub(rest.len());
            for extra in multisets_up_to(&below, room) {
                let mut next = rest.clone();
                next.extend(extra);
                next.sort();
                if next == target {
                    return Ok(true);
                }
                if seen.insert(next.clone()) {
                    if seen.len() > ORACLE_BUDGET {
                        return Err(WfError::SearchBudget { budget: ORACLE_BUDGET });
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(false)
}

/// All multisets over `pool` with at most `max` occurrences.
fn multisets_up_to<A: Clone>(pool: &[A], max: usize) -> Vec<Vec<A>> {
    let mut out = vec![Vec::new()];
    fn go<A: Clone>(pool: &[A], from: usize, left: usize, acc: &mut Vec<A>, out: &mut Vec<Vec<A>>) {
        if left == 0 {
            return;
        }
        for j in from..pool.len() {
            acc.push(pool[j].clone());
            out.push(acc.clone());
            go(pool, j, left - 1, acc, out);
            acc.pop();
        }
    }
    go(pool, 0, max, &mut Vec::new(), &mut out);
    out
}

/// One random descent step for multisets: a random occurrence is replaced
/// by up to `cap` random predecessors.  `None` at the empty multiset.
///
/// The multiset ordering is infinitely branching, so descent fuzzing draws
/// from this capped sample rather than from a full predecessor list.
pub fn multiset_descent_step<R: WellFounded>(
    rel: &R,
    m: &Multiset<R::Elem, R::Evidence>,
    cap: usize,
    rng: &mut ChaCha8Rng,
) -> Option<Multiset<R::Elem, R::Evidence>> {
    let mut items = occurrences(m);
    if items.is_empty() {
        return None;
    }
    let i = rng.gen_range(0..items.len());
    let x = items.remove(i);
    let below = rel.predecessors(&x).expect("descent sampling needs predecessor enumeration");
    if !below.is_empty() {
        for _ in 0..rng.gen_range(0..=cap) {
            items.push(below[rng.gen_range(0..below.len())].0.clone());
        }
    }
    Some(multiset_of(rel, &items).expect("predecessors are comparable with the rest"))
}

/// Upper bound on the length of a chain of [`multiset_descent_step`]s over
/// `<` on the naturals, counting the starting multiset.
///
/// An occurrence of `x` can be removed at most `f(x)` times in total,
/// counting the occurrences it is replaced by: `f(0) = 1` and
/// `f(x + 1) = 1 + cap · f(x)`.
pub fn nat_multiset_descent_bound(items: &[u64], cap: usize) -> u128 {
    let f = |x: u64| (0..=x).fold(0u128, |acc, _| acc.saturating_mul(cap as u128).saturating_add(1));
    items.iter().fold(1u128, |acc, &x| acc.saturating_add(f(x)))
}
