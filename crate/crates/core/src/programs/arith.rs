use std::rc::Rc;

use crate::combinators::{lex_product, LexEvidence};
use crate::error::WfError;
use crate::nat::{nat_wfrec, NatLess, NatLessEvidence};
use crate::relation::{Step, WellFounded};

/// Course-of-values Fibonacci: the step calls back at `n − 1` and `n − 2`
/// with evidence built for each.
pub fn fib_cov(n: u64) -> u128 {
    let step: Step<u64, NatLessEvidence, u128> = Rc::new(|&n, ih| {
        if n < 2 {
            return n as u128;
        }
        let e1 = NatLessEvidence::between(n - 1, n).expect("n - 1 < n");
        let e2 = NatLessEvidence::between(n - 2, n).expect("n - 2 < n");
        ih(&(n - 1), &e1) + ih(&(n - 2), &e2)
    });
    nat_wfrec(&step, n)
}

/// Value budget used by [`ackermann`].  The number of recursive calls
/// grows far faster than the values, so the budget is kept small.
pub const DEFAULT_ACK_BUDGET: u64 = 1 << 12;

pub fn ackermann(m: u64, n: u64) -> Result<u64, WfError> {
    ackermann_with_budget(m, n, DEFAULT_ACK_BUDGET)
}

/// Ackermann's function by recursion over `< × <` on `⟨m, n⟩`:
///
/// ```text
/// A(0, n)         = n + 1
/// A(m + 1, 0)     = A(m, 1)
/// A(m + 1, n + 1) = A(m, A(m + 1, n))
/// ```
///
/// The inner call keeps the first component and descends in the second;
/// both outer calls descend in the first.  Any argument or intermediate
/// result above `budget` aborts with [`WfError::ValueBudget`].
pub fn ackermann_with_budget(m: u64, n: u64, budget: u64) -> Result<u64, WfError> {
    let over = move |value: u64| WfError::ValueBudget { value, budget };
    if n > budget {
        return Err(over(n));
    }
    let rel = lex_product(NatLess, NatLess);
    let step: Step<(u64, u64), LexEvidence<NatLessEvidence, NatLessEvidence>, Result<u64, WfError>> =
        Rc::new(move |&(m, n), ih| {
            if m == 0 {
                return if n >= budget { Err(over(n.saturating_add(1))) } else { Ok(n + 1) };
            }
            let outer = LexEvidence::First(NatLessEvidence::between(m - 1, m).expect("m - 1 < m"));
            if n == 0 {
                return ih(&(m - 1, 1), &outer);
            }
            // equal first components: the evidence is for n - 1 < n alone
            let inner = LexEvidence::Second(NatLessEvidence::between(n - 1, n).expect("n - 1 < n"));
            let v = ih(&(m, n - 1), &inner)?;
            ih(&(m - 1, v), &outer)
        });
    rel.wfrec(&step, &(m, n))
}
