//! Recursion depth budget for `wfrec` evaluation.
//!
//! Every base relation (naturals, W-trees, the generic re-dispatching
//! operator) enters a [`DepthGuard`] for each recursive call it serves.
//! Combinators bottom out in those, so a single thread-local counter bounds
//! the host stack used by any composite recursion.  Exceeding the budget
//! panics with a [`DepthExceeded`] payload; callers that need to recover can
//! use [`catch_depth`].

use std::cell::Cell;
use std::panic::{self, AssertUnwindSafe};

/// Default number of nested recursive calls permitted per thread.
pub const DEFAULT_DEPTH_BUDGET: usize = 100_000;

/// Environment variable that overrides the default budget.
pub const DEPTH_ENV: &str = "WFREC_DEPTH";

thread_local! {
    static DEPTH: Cell<usize> = const { Cell::new(0) };
    static BUDGET: Cell<Option<usize>> = const { Cell::new(None) };
}

/// Panic payload raised when the budget is exhausted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DepthExceeded {
    pub budget: usize,
}

/// Budget currently in force on this thread.
pub fn budget() -> usize {
    BUDGET.with(|b| match b.get() {
        Some(n) => n,
        None => {
            let n = std::env::var(DEPTH_ENV)
                .ok()
                .and_then(|s| s.trim().parse().ok())
                .unwrap_or(DEFAULT_DEPTH_BUDGET);
            b.set(Some(n));
            n
        }
    })
}

/// Overrides the budget for the current thread.
pub fn set_budget(limit: usize) {
    BUDGET.with(|b| b.set(Some(limit)));
}

/// Current nesting depth on this thread.
pub fn current() -> usize {
    DEPTH.with(Cell::get)
}

pub struct DepthGuard(());

impl DepthGuard {
    pub fn enter() -> Self {
        let limit = budget();
        DEPTH.with(|d| {
            let next = d.get() + 1;
            if next > limit {
                panic::panic_any(DepthExceeded { budget: limit });
            }
            d.set(next);
        });
        DepthGuard(())
    }
}

impl Drop for DepthGuard {
    fn drop(&mut self) {
        DEPTH.with(|d| d.set(d.get().saturating_sub(1)));
    }
}

/// Runs `f`, converting a depth-budget panic into `Err`.  Other panics
/// propagate unchanged.
pub fn catch_depth<T>(f: impl FnOnce() -> T) -> Result<T, DepthExceeded> {
    let depth_before = current();
    match panic::catch_unwind(AssertUnwindSafe(f)) {
        Ok(v) => Ok(v),
        Err(payload) => {
            DEPTH.with(|d| d.set(depth_before));
            match payload.downcast::<DepthExceeded>() {
                Ok(e) => Err(*e),
                Err(other) => panic::resume_unwind(other),
            }
        }
    }
}
