//! `<` on the natural numbers: course-of-values recursion.
//!
//! `m < 0` is empty and `m < succ(n)` is the disjoint union of `m = n` and
//! `m < n`, so evidence for `m < n` is `n - m - 1` right injections around
//! an equality witness.

use std::fmt;
use std::rc::Rc;

use crate::depth::DepthGuard;
use crate::relation::{guarded, Rec, Step, WellFounded};

/// Evidence for `m < n`, stored as the number of right injections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NatLessEvidence {
    below: u64,
}

/// One unfolding of [`NatLessEvidence`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NatLessCase {
    /// `inl(eq)`: the smaller number is the immediate predecessor.
    Eq,
    /// `inr(ls)`: evidence one level further down.
    Below(NatLessEvidence),
}

impl NatLessEvidence {
    /// Evidence for `m < n`, if it holds.
    pub fn between(m: u64, n: u64) -> Option<Self> {
        (m < n).then(|| NatLessEvidence { below: n - m - 1 })
    }

    /// The equality leaf: evidence for `n < n + 1`.
    pub fn eq() -> Self {
        NatLessEvidence { below: 0 }
    }

    /// Wraps in one more right injection: from `m < n` to `m < n + 1`.
    pub fn inr(self) -> Self {
        NatLessEvidence {
            below: self.below + 1,
        }
    }

    pub fn case(&self) -> NatLessCase {
        match self.below {
            0 => NatLessCase::Eq,
            k => NatLessCase::Below(NatLessEvidence { below: k - 1 }),
        }
    }

    /// Number of right injections (`n - m - 1`).
    pub fn gap(&self) -> u64 {
        self.below
    }

    /// Nesting depth of the proof term, counting the equality leaf.
    pub fn depth(&self) -> u64 {
        self.below + 1
    }
}

impl fmt::Display for NatLessEvidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.below {
            f.write_str("inr(")?;
        }
        f.write_str("inl(eq)")?;
        for _ in 0..self.below {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Evidence for `m < n` by unfolding the definition.
pub fn nat_less_decide(m: u64, n: u64) -> Option<NatLessEvidence> {
    NatLessEvidence::between(m, n)
}

/// The relation `<` on `u64`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct NatLess;

/// The auxiliary `p(n) ∈ Π m. m < n → P(m)`, defined by structural recursion
/// on `n`:
///
/// ```text
/// p(0)       m ls        = contr(ls)
/// p(succ n)  m inl(eq)   = step(m, p(n))
/// p(succ n)  m inr(ls)   = p(n) m ls
/// ```
fn below<P: 'static>(step: Step<u64, NatLessEvidence, P>, n: u64) -> Rec<u64, NatLessEvidence, P> {
    Rc::new(move |m: &u64, ls: &NatLessEvidence| {
        let mut level = n;
        let mut ls = *ls;
        loop {
            if level == 0 {
                unreachable!("no evidence for {m} < 0");
            }
            match ls.case() {
                NatLessCase::Eq => {
                    let pred = level - 1;
                    debug_assert_eq!(*m, pred, "evidence lands on {pred}, call was for {m}");
                    let _g = DepthGuard::enter();
                    return step(&pred, below(step.clone(), pred));
                }
                NatLessCase::Below(inner) => {
                    level -= 1;
                    ls = inner;
                }
            }
        }
    })
}

/// Course-of-values recursion through the auxiliary `p`.
pub fn nat_wfrec<P: 'static>(step: &Step<u64, NatLessEvidence, P>, n: u64) -> P {
    step(&n, guarded(&NatLess, &n, below(step.clone(), n)))
}

impl WellFounded for NatLess {
    type Elem = u64;
    type Evidence = NatLessEvidence;

    fn decide(&self, lesser: &u64, greater: &u64) -> Option<NatLessEvidence> {
        nat_less_decide(*lesser, *greater)
    }

    fn validate(&self, lesser: &u64, greater: &u64, evidence: &NatLessEvidence) -> bool {
        lesser
            .checked_add(evidence.below)
            .and_then(|s| s.checked_add(1))
            .is_some_and(|s| s == *greater)
    }

    fn predecessors(&self, x: &u64) -> Option<Vec<(u64, NatLessEvidence)>> {
        Some(
            (0..*x)
                .map(|m| (m, NatLessEvidence { below: x - m - 1 }))
                .collect(),
        )
    }

    fn wfrec<P: 'static>(&self, step: &Step<u64, NatLessEvidence, P>, a: &u64) -> P {
        nat_wfrec(step, *a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::{step, wfrec_direct};

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

    fn fib_iter(n: u64) -> u64 {
        let (mut a, mut b) = (0u64, 1u64);
        for _ in 0..n {
            (a, b) = (b, a + b);
        }
        a
    }

    #[test]
    fn decide_unfolds_definition() {
        assert_eq!(nat_less_decide(2, 3).unwrap().to_string(), "inl(eq)");
        assert!(nat_less_decide(3, 3).is_none());
        assert_eq!(
            nat_less_decide(0, 3).unwrap().to_string(),
            "inr(inr(inl(eq)))"
        );
        assert_eq!(nat_less_decide(0, 3).unwrap().depth(), 3);
    }

    #[test]
    fn fibonacci_by_course_of_values() {
        assert_eq!(nat_wfrec(&fib_step(), 10), 55);
        assert_eq!(fib_iter(10), 55);
        for n in 0..20 {
            assert_eq!(nat_wfrec(&fib_step(), n), fib_iter(n));
        }
    }

    #[test]
    fn constant_step_at_zero() {
        let s = step(|_n: &u64, _r: Rec<u64, NatLessEvidence, u32>| 7u32);
        assert_eq!(nat_wfrec(&s, 0), 7);
        let id = step(|n: &u64, _r: Rec<u64, NatLessEvidence, u64>| *n);
        assert_eq!(nat_wfrec(&id, 4), 4);
    }

    #[test]
    fn agrees_with_direct_dispatch() {
        let s = step(|n: &u64, rec: Rec<u64, NatLessEvidence, u64>| {
            // sum over all smaller values, weighted
            (0..*n)
                .map(|m| rec(&m, &NatLessEvidence::between(m, *n).unwrap()) % 1_000_003)
                .fold(*n + 1, |acc, v| (acc * 31 + v) % 1_000_003)
        });
        for n in 0..12 {
            assert_eq!(nat_wfrec(&s, n), wfrec_direct(&NatLess, &s, &n));
        }
        let lin = step(|n: &u64, rec: Rec<u64, NatLessEvidence, u64>| match *n {
            0 => 1,
            n => (rec(&(n - 1), &NatLessEvidence::eq()) * 3 + n) % 1_000_003,
        });
        for n in 0..50 {
            assert_eq!(nat_wfrec(&lin, n), wfrec_direct(&NatLess, &lin, &n));
        }
    }

    #[test]
    fn predecessors_match_decide() {
        let preds = NatLess.predecessors(&5).unwrap();
        assert_eq!(preds.len(), 5);
        for (m, e) in preds {
            assert_eq!(Some(e), NatLess.decide(&m, &5));
            assert!(NatLess.validate(&m, &5, &e));
        }
    }

    #[test]
    #[cfg(debug_assertions)]
    #[should_panic(expected = "does not certify descent")]
    fn invalid_evidence_is_caught_in_debug() {
        let s = step(|n: &u64, rec: Rec<u64, NatLessEvidence, u64>| match *n {
            0 => 0,
            // claims n - 1 < n with the evidence of n - 2 < n
            n => rec(&(n - 1), &NatLessEvidence::between(n.saturating_sub(2), n).unwrap()),
        });
        nat_wfrec(&s, 3);
    }
}
