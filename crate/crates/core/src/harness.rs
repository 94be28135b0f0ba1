//! Test harnesses shared by every relation: the recursion equation, the
//! uniqueness of its solution on finite carriers, and seeded descent fuzzing.

use std::fmt::Debug;
use std::rc::Rc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::WfError;
use crate::relation::{Rec, Step, WellFounded};

/// Outcome of [`check_recursion_equation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionReport {
    pub checked: usize,
    /// Debug renderings of the samples where the equation failed.
    pub failures: Vec<String>,
}

impl RecursionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `wfrec(step, a) = step(a, (x', e) ↦ wfrec(step, x'))` at every
/// sample.
pub fn check_recursion_equation<R, P>(
    rel: &R,
    step: &Step<R::Elem, R::Evidence, P>,
    samples: &[R::Elem],
) -> RecursionReport
where
    R: WellFounded,
    P: PartialEq + Debug + 'static,
{
    let mut failures = Vec::new();
    for a in samples {
        let lhs = rel.wfrec(step, a);
        let unfolded: Rec<R::Elem, R::Evidence, P> = {
            let rel = rel.clone();
            let step = step.clone();
            Rc::new(move |x, _e| rel.wfrec(&step, x))
        };
        let rhs = step(a, unfolded);
        if lhs != rhs {
            failures.push(format!("{a:?}: wfrec gave {lhs:?}, unfolding gave {rhs:?}"));
        }
    }
    RecursionReport {
        checked: samples.len(),
        failures,
    }
}

/// Returns whether `candidate` satisfies the recursion equation at every
/// element of the finite `carrier`.
///
/// A solution of the equation is unique, so when this returns `true` the
/// candidate is also asserted to coincide with `wfrec`.
///
/// # Panics
///
/// If the candidate solves the equation but differs from `wfrec`, which
/// means the recursion operator itself is wrong.
pub fn check_unique_solution<R, P, F>(
    rel: &R,
    step: &Step<R::Elem, R::Evidence, P>,
    carrier: &[R::Elem],
    candidate: F,
) -> bool
where
    R: WellFounded,
    P: PartialEq + Debug + 'static,
    F: Fn(&R::Elem) -> P + 'static,
{
    let candidate = Rc::new(candidate);
    let satisfies = carrier.iter().all(|a| {
        let c = candidate.clone();
        let via_candidate: Rec<R::Elem, R::Evidence, P> = Rc::new(move |x, _e| c(x));
        candidate(a) == step(a, via_candidate)
    });
    if satisfies {
        for a in carrier {
            let expected = rel.wfrec(step, a);
            assert_eq!(
                candidate(a),
                expected,
                "candidate solves the recursion equation but differs from wfrec at {a:?}"
            );
        }
    }
    satisfies
}

/// A step for exercising the recursion equation on large carriers: it
/// recurses once, on the greatest carrier element below `x` (the first
/// maximal one met in carrier order), and returns one more than that
/// result, or `0` at a carrier-minimal element.
///
/// On a total order the solution is the number of carrier elements below
/// `x`; each evaluation makes a single recursive call per level.
pub fn carrier_rank_step<R: WellFounded>(rel: &R, carrier: &[R::Elem]) -> Step<R::Elem, R::Evidence, u64> {
    let rel = rel.clone();
    let carrier = carrier.to_vec();
    Rc::new(move |x, rec| {
        let mut best: Option<(&R::Elem, R::Evidence)> = None;
        for y in &carrier {
            if let Some(e) = rel.decide(y, x) {
                if best.as_ref().is_none_or(|(b, _)| rel.decide(b, y).is_some()) {
                    best = Some((y, e));
                }
            }
        }
        best.map_or(0, |(y, e)| rec(y, &e) + 1)
    })
}

/// The generator used for all seeded fuzzing.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Walks a strictly descending chain from `start`, choosing a random
/// predecessor at each step until an element without predecessors is
/// reached.
///
/// `max_steps` bounds the number of elements in the chain: a chain that
/// would reach that length is reported as [`WfError::BudgetExhausted`].
///
/// # Panics
///
/// If the relation does not enumerate predecessors.
pub fn fuzz_descent<R: WellFounded>(
    rel: &R,
    start: &R::Elem,
    max_steps: usize,
    seed: u64,
) -> Result<Vec<R::Elem>, WfError> {
    fuzz_descent_with(start, max_steps, seed, |x, rng| {
        let preds = rel
            .predecessors(x)
            .expect("descent fuzzing requires predecessor enumeration");
        if preds.is_empty() {
            None
        } else {
            let i = rng.gen_range(0..preds.len());
            Some(preds[i].0.clone())
        }
    })
}

/// Like [`fuzz_descent`] but with a caller-supplied random step, for
/// infinitely branching orders where only a bounded sample of predecessors
/// can be drawn.  The step returns `None` at a minimal element.
pub fn fuzz_descent_with<A: Clone>(
    start: &A,
    max_steps: usize,
    seed: u64,
    mut next: impl FnMut(&A, &mut ChaCha8Rng) -> Option<A>,
) -> Result<Vec<A>, WfError> {
    let mut rng = seeded_rng(seed);
    let mut chain = vec![start.clone()];
    loop {
        let current = chain.last().expect("chain is never empty");
        match next(current, &mut rng) {
            None => return Ok(chain),
            Some(x) => {
                if chain.len() + 1 >= max_steps {
                    return Err(WfError::BudgetExhausted { max_steps });
                }
                chain.push(x);
            }
        }
    }
}

/// Checks that consecutive chain elements descend under `rel`.
pub fn is_descending_chain<R: WellFounded>(rel: &R, chain: &[R::Elem]) -> bool {
    chain.windows(2).all(|w| rel.decide(&w[1], &w[0]).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nat::{NatLess, NatLessEvidence};
    use crate::relation::{step, EmptyRelation};

    fn fib_table(n: usize) -> Vec<u64> {
        let mut t = vec![0u64, 1];
        while t.len() < n {
            let k = t.len();
            t.push(t[k - 1] + t[k - 2]);
        }
        t.truncate(n);
        t
    }

    fn fib_step() -> Step<u64, NatLessEvidence, u64> {
        step(|n: &u64, rec: Rec<u64, NatLessEvidence, u64>| {
            if *n < 2 {
                *n
            } else {
                rec(&(n - 1), &NatLessEvidence::between(n - 1, *n).unwrap())
                    + rec(&(n - 2), &NatLessEvidence::between(n - 2, *n).unwrap())
            }
        })
    }

    #[test]
    fn recursion_equation_on_naturals() {
        let samples: Vec<u64> = (0..=20).collect();
        let report = check_recursion_equation(&NatLess, &fib_step(), &samples);
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.checked, 21);
    }

    #[test]
    fn recursion_equation_on_empty_relation() {
        let s = step(|_u: &(), _r: Rec<(), crate::relation::Never, u8>| 3u8);
        let report = check_recursion_equation(&EmptyRelation::<()>::new(), &s, &[()]);
        assert!(report.passed());
    }

    #[test]
    fn unique_solution_accepts_table_and_rejects_perturbation() {
        let table = fib_table(6);
        let carrier: Vec<u64> = (0..6).collect();
        let t = table.clone();
        assert!(check_unique_solution(&NatLess, &fib_step(), &carrier, move |n| t[*n as usize]));
        for bad in 0..6 {
            let mut t = table.clone();
            t[bad] += 1;
            assert!(!check_unique_solution(&NatLess, &fib_step(), &carrier, move |n| t[*n as usize]));
        }
        let s = fib_step();
        assert!(check_unique_solution(&NatLess, &fib_step(), &carrier, move |n| {
            NatLess.wfrec(&s, n)
        }));
    }

    #[test]
    fn descent_on_naturals_reaches_zero() {
        for seed in 0..20 {
            let chain = fuzz_descent(&NatLess, &9, 10_000, seed).unwrap();
            assert!(chain.len() <= 10);
            assert_eq!(*chain.last().unwrap(), 0);
            assert!(is_descending_chain(&NatLess, &chain));
        }
    }

    #[test]
    fn descent_is_deterministic_per_seed() {
        let a = fuzz_descent(&NatLess, &500, 10_000, 42).unwrap();
        let b = fuzz_descent(&NatLess, &500, 10_000, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn descent_budget() {
        assert_eq!(
            fuzz_descent(&NatLess, &5, 2, 0),
            Err(WfError::BudgetExhausted { max_steps: 2 })
        );
        let chain = fuzz_descent(&EmptyRelation::<u8>::new(), &4, 10, 0).unwrap();
        assert_eq!(chain, vec![4]);
    }
}
