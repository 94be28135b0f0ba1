//! The translation between notations and nested multisets over a
//! one-point carrier: `0` is the atom, and `ω^e₁·c₁ + … + ω^eₖ·cₖ` is the
//! multiset holding the image of each `eᵢ` with multiplicity `cᵢ`.  So `1`
//! is `{0̂}` and `ω` is `{{0̂}}`.  The nesting depth of an image is one more
//! than the exponent height, so the depth-first nested ordering agrees with
//! the notation ordering.

use super::Ordinal;
use crate::derived::{nested_multiset_relation, FiniteFunction, Layer, LayerRelation, NestedMultiset, NestedMultisetRelation};
use crate::error::WfError;
use crate::relation::{EmptyRelation, Never};

/// A nested multiset over the one-point carrier.
pub type UnitNested = NestedMultiset<(), Never>;

fn unit() -> EmptyRelation<()> {
    EmptyRelation::over(vec![()])
}

/// The nested multiset ordering over the one-point carrier.
pub fn unit_nested_relation() -> NestedMultisetRelation<EmptyRelation<()>> {
    nested_multiset_relation(unit())
}

pub fn to_nested(o: &Ordinal) -> UnitNested {
    if o.is_zero() {
        return (0, Layer::Atom(()));
    }
    let members: Vec<(UnitNested, u64)> = o.terms().iter().map(|(e, c)| (to_nested(e), *c)).collect();
    let inner = members.iter().map(|((d, _), _)| *d).max().unwrap_or(0);
    let entries = members
        .into_iter()
        .map(|((d, v), c)| (v.lifted((inner - d) as usize), c))
        .collect();
    // exponents descend, and the translation is monotone, so the entries
    // are already in descending order
    let bag = FiniteFunction::new(&LayerRelation::new(unit(), inner as usize), entries)
        .expect("images of descending exponents descend");
    (inner + 1, Layer::Bag(bag))
}

/// The inverse translation.  Fails on an empty multiset, which has no
/// counterpart, and on values that are not well-formed at their depth.
pub fn from_nested(m: &UnitNested) -> Result<Ordinal, WfError> {
    from_layer(m.0, &m.1)
}

fn from_layer(depth: u64, v: &Layer<(), Never>) -> Result<Ordinal, WfError> {
    match (v, depth) {
        (Layer::Atom(()), 0) => Ok(Ordinal::zero()),
        (Layer::Lift(inner), d) if d > 0 => from_layer(d - 1, inner),
        (Layer::Bag(bag), d) if d > 0 && !bag.is_empty() => {
            let terms = bag
                .entries()
                .iter()
                .map(|(x, c)| Ok((from_layer(d - 1, x)?, *c)))
                .collect::<Result<Vec<_>, WfError>>()?;
            Ordinal::from_terms(terms)
        }
        (Layer::Bag(_), d) if d > 0 => Err(WfError::NotAMultiset),
        _ => Err(WfError::IllFormed { depth }),
    }
}
