use std::fmt::Debug;
use std::hash::Hash;
use std::rc::Rc;

use crate::combinators::{inverse_image, InverseImage};
use crate::nat::{NatLess, NatLessEvidence};
use crate::relation::{Step, WellFounded};

/// `l' ≺ l` iff `l'` is shorter.
pub type LengthRelation<A> = InverseImage<NatLess, Vec<A>>;

pub fn length_relation<A>() -> LengthRelation<A> {
    inverse_image(NatLess, |l: &Vec<A>| length(l))
}

/// `length(nil) = 0`, `length(cons(x, l)) = succ(length(l))`.
pub fn length<A>(l: &[A]) -> u64 {
    l.iter().fold(0, |u, _| u + 1)
}

/// `filter(pf, nil) = nil`; `filter(pf, cons(a, l))` keeps `a` in front of
/// `filter(pf, l)` exactly when `pf(a)` holds.
pub fn filter<A: Clone>(pf: impl Fn(&A) -> bool, l: &[A]) -> Vec<A> {
    l.iter().filter(|x| pf(x)).cloned().collect()
}

pub fn append<A: Clone>(l1: &[A], l2: &[A]) -> Vec<A> {
    let mut out = l1.to_vec();
    out.extend_from_slice(l2);
    out
}

/// Evidence that `filter(pf, l) ≺ cons(a, l)`: filtering never lengthens
/// a list, so the filtered list is strictly shorter than `cons(a, l)`.
pub fn qless<A: Clone>(pf: impl Fn(&A) -> bool, _a: &A, l: &[A]) -> NatLessEvidence {
    let kept = length(&filter(pf, l));
    NatLessEvidence::between(kept, length(l) + 1).expect("filter does not lengthen a list")
}

/// The Quicksort step for a total ordering `le` (`le(b, a)`: `b` sorts no
/// later than `a`):
///
/// ```text
/// s(nil, ih)       = nil
/// s(cons(a, l), ih) = ih(filter(before(a), l)) ⊕ cons(a, ih(filter(after(a), l)))
/// ```
pub fn quicksort_step<A, F>(le: F) -> Step<Vec<A>, NatLessEvidence, Vec<A>>
where
    A: Clone + 'static,
    F: Fn(&A, &A) -> bool + 'static,
{
    let le = Rc::new(le);
    Rc::new(move |l: &Vec<A>, ih| {
        let Some((a, rest)) = l.split_first() else {
            return Vec::new();
        };
        let before = |b: &A| le(b, a);
        let after = |b: &A| !le(b, a);
        let low = ih(&filter(before, rest), &qless(before, a, rest));
        let high = ih(&filter(after, rest), &qless(after, a, rest));
        let mut tail = vec![a.clone()];
        tail.extend(high);
        append(&low, &tail)
    })
}

/// `quick ≡ wfrec(s)` over the length relation.
pub fn quicksort<A, F>(le: F, l: &[A]) -> Vec<A>
where
    A: Clone + Eq + Hash + Debug + 'static,
    F: Fn(&A, &A) -> bool + 'static,
{
    length_relation().wfrec(&quicksort_step(le), &l.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::check_recursion_equation;
    use proptest::prelude::*;

    #[test]
    fn list_examples() {
        assert_eq!(length::<u8>(&[]), 0);
        assert_eq!(filter(|x: &i32| x % 2 == 0, &[1, 2, 3, 4]), vec![2, 4]);
        assert_eq!(append(&[1], &[2, 3]), vec![1, 2, 3]);
    }

    #[test]
    fn qless_examples() {
        let r = length_relation::<i32>();
        let e = qless(|_: &i32| true, &0, &[1, 2]);
        assert_eq!(e, NatLessEvidence::between(2, 3).unwrap());
        assert!(r.validate(&vec![1, 2], &vec![0, 1, 2], &e));
        assert_eq!(qless(|_: &i32| false, &0, &[]), NatLessEvidence::between(0, 1).unwrap());
    }

    #[test]
    fn quicksort_examples() {
        let le = |a: &i32, b: &i32| a <= b;
        assert_eq!(quicksort(le, &[]), Vec::<i32>::new());
        assert_eq!(quicksort(le, &[5]), vec![5]);
        assert_eq!(quicksort(le, &[2, 1, 3, 1]), vec![1, 1, 2, 3]);
    }

    #[test]
    fn ties_go_before_the_pivot() {
        // sort pairs by first component only; elements tied with the pivot
        // are sorted into the low half
        let le = |a: &(u8, char), b: &(u8, char)| a.0 <= b.0;
        let l = [(1, 'a'), (0, 'b'), (1, 'c'), (0, 'd')];
        assert_eq!(quicksort(le, &l), vec![(0, 'd'), (0, 'b'), (1, 'c'), (1, 'a')]);
    }

    proptest! {
        #[test]
        fn sorts_like_the_standard_library(l in prop::collection::vec(-20i32..20, 0..40)) {
            let mut expected = l.clone();
            expected.sort();
            prop_assert_eq!(quicksort(|a: &i32, b: &i32| a <= b, &l), expected);
        }

        #[test]
        fn filter_never_lengthens(l in prop::collection::vec(0u8..10, 0..30), k in 0u8..10) {
            prop_assert!(length(&filter(|x| *x < k, &l)) <= length(&l));
            let e = qless(|x: &u8| *x < k, &k, &l);
            let mut cons = vec![k];
            cons.extend(&l);
            prop_assert!(length_relation::<u8>().validate(&filter(|x| *x < k, &l), &cons, &e));
        }
    }

    #[test]
    fn unfolded_equations() {
        let le = |a: &i32, b: &i32| a <= b;
        let samples: Vec<Vec<i32>> = vec![vec![], vec![3, 1, 2], vec![4, 4, 0, 9, -1], vec![1, 2, 3, 4, 5]];
        assert!(check_recursion_equation(&length_relation(), &quicksort_step(le), &samples).passed());
        for l in samples.iter().filter(|l| !l.is_empty()) {
            let (a, rest) = (l[0], &l[1..]);
            let mut tail = vec![a];
            tail.extend(quicksort(le, &filter(|b| *b > a, rest)));
            assert_eq!(quicksort(le, l), append(&quicksort(le, &filter(|b| *b <= a, rest)), &tail));
        }
    }
}
