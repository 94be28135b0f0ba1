use std::fmt;
use std::hash::{Hash, Hasher};

use crate::combinators::{inverse_image, lex_product, InverseImage, LexEvidence, LexSigma};
use crate::error::WfError;
use crate::power::{pow_relation, Certificate, DescendingList, PowRelation};
use crate::relation::WellFounded;

/// A finite function from `A` to `B`: entries whose keys strictly descend
/// under `≺_A`, with the certificate for that descent.
#[derive(Clone)]
pub struct FiniteFunction<A, B, E> {
    entries: Vec<(A, B)>,
    keys: Certificate<E>,
}

impl<A, B, E> FiniteFunction<A, B, E> {
    pub fn empty() -> Self {
        FiniteFunction {
            entries: Vec::new(),
            keys: Vec::new(),
        }
    }

    /// Checked construction: keys must strictly descend.
    pub fn new<R>(rel: &R, entries: Vec<(A, B)>) -> Result<Self, WfError>
    where
        R: WellFounded<Elem = A, Evidence = E>,
    {
        let mut keys = Vec::with_capacity(entries.len().saturating_sub(1));
        for (i, w) in entries.windows(2).enumerate() {
            keys.push(rel.decide(&w[1].0, &w[0].0).ok_or(WfError::NotDescending { index: i + 1 })?);
        }
        Ok(FiniteFunction { entries, keys })
    }

    /// Trusted construction.
    pub fn from_parts(entries: Vec<(A, B)>, keys: Certificate<E>) -> Self {
        debug_assert_eq!(keys.len(), entries.len().saturating_sub(1), "certificate length");
        FiniteFunction { entries, keys }
    }

    pub fn entries(&self) -> &[(A, B)] {
        &self.entries
    }

    pub fn key_certificate(&self) -> &[E] {
        &self.keys
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &A) -> Option<&B>
    where
        A: PartialEq,
    {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

impl<A: PartialEq, B: PartialEq, E> PartialEq for FiniteFunction<A, B, E> {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl<A: Eq, B: Eq, E> Eq for FiniteFunction<A, B, E> {}

impl<A: Hash, B: Hash, E> Hash for FiniteFunction<A, B, E> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.entries.hash(state);
    }
}

impl<A: fmt::Debug, B: fmt::Debug, E> fmt::Debug for FiniteFunction<A, B, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter().map(|(k, v)| (k, v))).finish()
    }
}

type PairEv<RA, RB> = LexEvidence<<RA as WellFounded>::Evidence, <RB as WellFounded>::Evidence>;
type PairList<RA, RB> = DescendingList<(<RA as WellFounded>::Elem, <RB as WellFounded>::Elem), PairEv<RA, RB>>;
type FinFun<RA, RB> = FiniteFunction<<RA as WellFounded>::Elem, <RB as WellFounded>::Elem, <RA as WellFounded>::Evidence>;

/// `B^A` as the inverse image of the power type over `A × B`.
pub type FinFunExp<RA, RB> = InverseImage<PowRelation<LexSigma<RA, RB>>, FinFun<RA, RB>>;

/// Descending keys give descending pairs: each key link becomes a
/// first-component link of the product.
pub fn finfun_as_pairs<RA: WellFounded, RB: WellFounded>(f: &FinFun<RA, RB>) -> PairList<RA, RB> {
    DescendingList::from_parts(
        f.entries.clone(),
        f.keys.iter().cloned().map(LexEvidence::First).collect(),
    )
}

/// The converse, defined on pair lists whose keys strictly descend.
fn pairs_as_finfun<RA: WellFounded, RB: WellFounded>(l: &PairList<RA, RB>) -> Option<FinFun<RA, RB>> {
    let keys = l
        .cert()
        .iter()
        .map(|e| match e {
            LexEvidence::First(k) => Some(k.clone()),
            LexEvidence::Second(_) => None,
        })
        .collect::<Option<Vec<_>>>()?;
    Some(FiniteFunction::from_parts(l.elems().to_vec(), keys))
}

/// Two-argument exponentiation: finite functions compared as descending
/// lists of pairs under `≺_{A×B}`.
pub fn finfun_exp<RA, RB>(rel_a: RA, rel_b: RB) -> FinFunExp<RA, RB>
where
    RA: WellFounded,
    RB: WellFounded + Send + Sync,
{
    inverse_image(pow_relation(lex_product(rel_a, rel_b)), finfun_as_pairs::<RA, RB>)
        .with_preimage(|l: &PairList<RA, RB>| pairs_as_finfun::<RA, RB>(l).into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinators::FiniteRelation;
    use crate::harness::{carrier_rank_step, check_recursion_equation, fuzz_descent, is_descending_chain};
    use crate::nat::NatLess;

    type F = FiniteFunction<u64, u64, crate::nat::NatLessEvidence>;

    fn ff(entries: &[(u64, u64)]) -> F {
        FiniteFunction::new(&NatLess, entries.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        let r = finfun_exp(NatLess, NatLess);
        assert!(r.decide(&ff(&[(1, 7)]), &ff(&[(2, 0)])).is_some());
        assert!(r.decide(&ff(&[]), &ff(&[])).is_none());
        assert!(r.decide(&ff(&[(2, 3)]), &ff(&[(2, 5)])).is_some());
        assert!(r.decide(&ff(&[(2, 5)]), &ff(&[(2, 3)])).is_none());
        assert!(r.decide(&ff(&[(2, 3), (1, 9), (0, 9)]), &ff(&[(2, 4)])).is_some());
    }

    #[test]
    fn rejects_non_descending_keys() {
        assert_eq!(
            FiniteFunction::<u64, u64, _>::new(&NatLess, vec![(1, 0), (1, 1)]).unwrap_err(),
            WfError::NotDescending { index: 1 }
        );
    }

    /// All finite functions from {0,1,2} to {0,1}.
    fn small_carrier() -> Vec<FiniteFunction<usize, usize, crate::combinators::EdgeIndex>> {
        let keys = FiniteRelation::nat_less(3);
        let mut out = Vec::new();
        for mask in 0u32..8 {
            let domain: Vec<usize> = (0..3).rev().filter(|k| mask & (1 << k) != 0).collect();
            for values in 0..(1u32 << domain.len()) {
                let entries = domain
                    .iter()
                    .enumerate()
                    .map(|(i, &k)| (k, ((values >> i) & 1) as usize))
                    .collect();
                out.push(FiniteFunction::new(&keys, entries).unwrap());
            }
        }
        out
    }

    #[test]
    fn order_type_is_the_power() {
        // B^A with |A| = 3, |B| = 2 has 3^3 = 27 elements, totally ordered:
        // reading a function as base-3 digits (0 = absent, v + 1 otherwise)
        // over descending keys gives its position
        let r = finfun_exp(FiniteRelation::nat_less(3), FiniteRelation::nat_less(2));
        let all = small_carrier();
        assert_eq!(all.len(), 27);
        let code = |f: &FiniteFunction<usize, usize, _>| {
            (0..3).rev().fold(0u32, |acc, k| acc * 3 + f.get(&k).map_or(0, |v| *v as u32 + 1))
        };
        for a in &all {
            for b in &all {
                assert_eq!(r.decide(a, b).is_some(), code(a) < code(b), "{a:?} {b:?}");
            }
        }
        let s = carrier_rank_step(&r, &all);
        assert!(check_recursion_equation(&r, &s, &all).passed());
        for a in &all {
            assert_eq!(r.wfrec(&s, a), code(a) as u64);
        }
    }

    #[test]
    fn predecessors_and_descents() {
        let r = finfun_exp(FiniteRelation::nat_less(3), FiniteRelation::nat_less(2));
        let all = small_carrier();
        for x in &all {
            let preds = r.predecessors(x).unwrap();
            assert_eq!(preds.len(), all.iter().filter(|y| r.decide(y, x).is_some()).count());
        }
        let top = all.iter().find(|f| f.len() == 3 && f.entries().iter().all(|e| e.1 == 1)).unwrap();
        for seed in 0..10 {
            let chain = fuzz_descent(&r, top, 100, seed).unwrap();
            assert!(is_descending_chain(&r, &chain));
            assert!(chain.last().unwrap().is_empty());
        }
    }
}
