//! Ordinal notations below ε₀ in Cantor normal form.
//!
//! An ordinal is a sum `ω^e₁·c₁ + … + ω^eₖ·cₖ` with `e₁ > … > eₖ` and every
//! `cᵢ ≥ 1`; the empty sum is `0`.  Exponents are ordinals of the same
//! form.  Nested multisets over a one-point carrier give an equivalent
//! notation (see [`to_nested`]), and the two comparison routes agree.

mod gentzen;
mod parse;
mod sample;

use std::cmp::Ordering;
use std::fmt;

use crate::error::WfError;

pub use gentzen::{from_nested, to_nested, unit_nested_relation, UnitNested};
pub use parse::{parse, parse_with_depth, DEFAULT_PARSE_DEPTH};
pub use sample::{random_ordinal, random_predecessor};

/// A notation in Cantor normal form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    terms: Vec<(Ordinal, u64)>,
}

impl Ordinal {
    pub fn zero() -> Self {
        Ordinal::default()
    }

    pub fn nat(n: u64) -> Self {
        Self::omega_pow(Ordinal::zero(), n)
    }

    pub fn omega() -> Self {
        Self::omega_pow(Ordinal::nat(1), 1)
    }

    /// `ω^e · c`.
    pub fn omega_pow(exponent: Ordinal, coefficient: u64) -> Self {
        if coefficient == 0 {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![(exponent, coefficient)],
        }
    }

    /// Checked construction from terms already in normal form.
    pub fn from_terms(terms: Vec<(Ordinal, u64)>) -> Result<Self, WfError> {
        for (i, (_, c)) in terms.iter().enumerate() {
            if *c == 0 {
                return Err(WfError::ZeroMultiplicity);
            }
            if i > 0 && compare(&terms[i - 1].0, &terms[i].0) != Ordering::Greater {
                return Err(WfError::NotDescending { index: i });
            }
        }
        Ok(Ordinal { terms })
    }

    pub fn terms(&self) -> &[(Ordinal, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value as a natural number, if finite.
    pub fn as_nat(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(e, c)] if e.is_zero() => Some(*c),
            _ => None,
        }
    }

    /// Nesting depth of exponents: `0` for naturals, `1` below `ω^ω`, …
    pub fn height(&self) -> usize {
        self.terms
            .iter()
            .map(|(e, _)| if e.is_zero() { 0 } else { 1 + e.height() })
            .max()
            .unwrap_or(0)
    }

    /// Ordinal addition.
    pub fn add(&self, other: &Ordinal) -> Ordinal {
        let mut raw = self.terms.clone();
        raw.extend(other.terms.iter().cloned());
        normalize(raw)
    }
}

/// Lexicographic comparison of the term sequences, comparing exponents
/// recursively and then coefficients; a proper prefix is smaller.
pub fn compare(a: &Ordinal, b: &Ordinal) -> Ordering {
    for ((ea, ca), (eb, cb)) in a.terms.iter().zip(&b.terms) {
        match compare(ea, eb).then(ca.cmp(cb)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.terms.len().cmp(&b.terms.len())
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

/// Brings a raw sum of terms `ω^eᵢ·cᵢ` into normal form, reading it as
/// left-to-right ordinal addition: a term absorbs every preceding term of
/// smaller exponent, and equal exponents merge their coefficients.
pub fn normalize(raw: Vec<(Ordinal, u64)>) -> Ordinal {
    let mut terms: Vec<(Ordinal, u64)> = Vec::new();
    for (e, c) in raw {
        if c == 0 {
            continue;
        }
        while terms.last().is_some_and(|(last, _)| compare(last, &e) == Ordering::Less) {
            terms.pop();
        }
        match terms.last_mut() {
            Some((last, k)) if *last == e => *k = k.saturating_add(c),
            _ => terms.push((e, c)),
        }
    }
    Ordinal { terms }
}

/// Canonical text: `w^2*3 + w + 5`.  Coefficient one is omitted, exponent
/// one prints as a bare `w`, finite exponents and `ω` print unbracketed,
/// and other exponents are parenthesized.
impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if e.is_zero() {
                write!(f, "{c}")?;
                continue;
            }
            match e.as_nat() {
                Some(1) => f.write_str("w")?,
                Some(n) => write!(f, "w^{n}")?,
                None if *e == Ordinal::omega() => f.write_str("w^w")?,
                None => write!(f, "w^({e})")?,
            }
            if *c > 1 {
                write!(f, "*{c}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl std::str::FromStr for Ordinal {
    type Err = WfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s).map_err(WfError::from)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> Ordinal {
        parse(s).unwrap()
    }

    /// Coefficients of ω³, ω², ω¹, ω⁰ for a notation below ω⁴.
    fn vector(a: &Ordinal) -> [u64; 4] {
        let mut v = [0; 4];
        for (e, c) in a.terms() {
            v[3 - e.as_nat().unwrap() as usize] = *c;
        }
        v
    }

    #[test]
    fn compare_examples() {
        assert_eq!(compare(&o("w"), &o("w^w")), Ordering::Less);
        assert_eq!(compare(&o("w*2+1"), &o("w*2+1")), Ordering::Equal);
        assert_eq!(compare(&o("w^2"), &o("w*9+5")), Ordering::Greater);
        assert_eq!(vector(&o("w^2")).cmp(&vector(&o("w*9+5"))), Ordering::Greater);
    }

    #[test]
    fn agrees_with_coefficient_vectors() {
        let mut all = Vec::new();
        for code in 0..256u32 {
            let raw = (0..4)
                .rev()
                .map(|k| (Ordinal::nat(k), ((code >> (2 * k)) & 3) as u64))
                .collect();
            all.push(normalize(raw));
        }
        for a in &all {
            for b in &all {
                assert_eq!(compare(a, b), vector(a).cmp(&vector(b)), "{a} {b}");
            }
        }
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(vec![(Ordinal::zero(), 1), (Ordinal::nat(1), 1)]), Ordinal::omega());
        assert_eq!(
            normalize(vec![(Ordinal::nat(1), 1), (Ordinal::nat(1), 1)]),
            Ordinal::omega_pow(Ordinal::nat(1), 2)
        );
        assert_eq!(normalize(vec![]), Ordinal::zero());
        assert_eq!(o("1 + w").to_string(), "w");
        assert_eq!(o("w + w").to_string(), "w*2");
        assert_eq!(o("w + 3 + w^2 + 1").to_string(), "w^2 + 1");
        assert_eq!(o("w*0 + 2").to_string(), "2");
    }

    /// Order type of small ordinals checked by counting: `α + β` computed by
    /// the normalizer must match the position obtained by concatenating
    /// order types for naturals and `ω·k + n`.
    #[test]
    fn addition_matches_small_order_types() {
        let code = |a: &Ordinal| vector(a)[2] * 1000 + vector(a)[3];
        for a1 in 0..4u64 {
            for a0 in 0..4u64 {
                for b1 in 0..4u64 {
                    for b0 in 0..4u64 {
                        let a = normalize(vec![(Ordinal::nat(1), a1), (Ordinal::zero(), a0)]);
                        let b = normalize(vec![(Ordinal::nat(1), b1), (Ordinal::zero(), b0)]);
                        // ω·a1 + a0 + ω·b1 + b0: a0 is absorbed when b1 > 0
                        let expected = if b1 > 0 { (a1 + b1) * 1000 + b0 } else { a1 * 1000 + a0 + b0 };
                        assert_eq!(code(&a.add(&b)), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn checked_terms() {
        assert_eq!(
            Ordinal::from_terms(vec![(Ordinal::zero(), 1), (Ordinal::nat(1), 1)]),
            Err(WfError::NotDescending { index: 1 })
        );
        assert_eq!(Ordinal::from_terms(vec![(Ordinal::zero(), 0)]), Err(WfError::ZeroMultiplicity));
        assert_eq!(o("w^(w^2)").height(), 2);
        assert_eq!(o("w^w").height(), 2);
        assert_eq!(o("w*5 + 1").height(), 1);
    }
}
