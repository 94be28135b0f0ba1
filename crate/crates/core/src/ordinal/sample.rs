use rand::Rng;

use super::{normalize, Ordinal};

/// A random notation of exponent height at most `height`, with at most
/// `max_terms` terms per sum and coefficients below `max_coef`.
pub fn random_ordinal<G: Rng + ?Sized>(rng: &mut G, height: usize, max_terms: usize, max_coef: u64) -> Ordinal {
    if height == 0 {
        return Ordinal::nat(rng.gen_range(0..max_coef.max(1)));
    }
    let n = rng.gen_range(0..=max_terms);
    let mut raw: Vec<(Ordinal, u64)> = (0..n)
        .map(|_| {
            let e = random_ordinal(rng, height - 1, max_terms, max_coef);
            (e, rng.gen_range(0..max_coef.max(1)))
        })
        .collect();
    raw.sort_by(|a, b| b.0.cmp(&a.0));
    normalize(raw)
}

/// A random strictly smaller notation, or `None` at zero.
///
/// The ordering is infinitely branching (every `ω^e` has infinitely many
/// predecessors), so the sampler caps what it invents: it decrements one
/// coefficient, truncates the terms after it, and optionally appends a
/// single term `ω^e'·c` with `e'` a sampled predecessor of the exponent and
/// `1 ≤ c ≤ cap`.
pub fn random_predecessor<G: Rng + ?Sized>(o: &Ordinal, rng: &mut G, cap: u64) -> Option<Ordinal> {
    if o.is_zero() {
        return None;
    }
    let terms = o.terms();
    let i = rng.gen_range(0..terms.len());
    let (e, c) = &terms[i];
    let mut raw: Vec<(Ordinal, u64)> = terms[..i].to_vec();
    raw.push((e.clone(), c - 1));
    if rng.gen_bool(0.5) {
        if let Some(smaller) = random_predecessor(e, rng, cap) {
            raw.push((smaller, rng.gen_range(1..=cap.max(1))));
        }
    }
    Some(normalize(raw))
}
