use std::collections::HashMap;
use std::sync::Arc;

use super::inverse_image::{inverse_image, InverseImage};
use super::subrelation::{subrelation, Subrelation};
use crate::error::WfError;
use crate::nat::{NatLess, NatLessEvidence};
use crate::relation::{Step, WellFounded};

/// Evidence that a pair is an edge: its position in the edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeIndex(pub usize);

type Inner = Subrelation<InverseImage<NatLess, usize>, EdgeIndex>;

/// An explicitly listed acyclic relation on `0..n`; an edge `(a, b)` means
/// `a ≺ b`.
///
/// Well-foundedness comes from the rank function `height`: every edge
/// strictly increases height, so the relation is a subrelation of the
/// inverse image of `<` under `height`, and recursion runs through those
/// two combinators.
#[derive(Debug, Clone)]
pub struct FiniteRelation {
    size: usize,
    edges: Arc<Vec<(usize, usize)>>,
    inner: Inner,
}

impl FiniteRelation {
    /// Builds the relation, rejecting out-of-range nodes and cycles.
    pub fn new(size: usize, edges: &[(usize, usize)]) -> Result<Self, WfError> {
        for &(a, b) in edges {
            for node in [a, b] {
                if node >= size {
                    return Err(WfError::OutOfRange { node, size });
                }
            }
        }
        let height = Arc::new(heights(size, edges)?);
        let index: Arc<HashMap<(usize, usize), usize>> = Arc::new(
            edges
                .iter()
                .enumerate()
                .rev()
                .map(|(i, &e)| (e, i))
                .collect(),
        );
        let h = height.clone();
        let base = inverse_image(NatLess, move |x: &usize| h[*x]).with_carrier((0..size).collect());
        let h = height.clone();
        let inner = subrelation(
            base,
            move |a: &usize, b: &usize, _e: &EdgeIndex| {
                NatLessEvidence::between(h[*a], h[*b]).expect("edges increase height")
            },
            move |a: &usize, b: &usize| index.get(&(*a, *b)).map(|&i| EdgeIndex(i)),
        );
        Ok(FiniteRelation {
            size,
            edges: Arc::new(edges.to_vec()),
            inner,
        })
    }

    /// `<` on `0..n`, listed edge by edge.
    pub fn nat_less(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|b| (0..b).map(move |a| (a, b))).collect();
        Self::new(n, &edges).expect("< is acyclic")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// Length of the longest descending path below each node.
fn heights(size: usize, edges: &[(usize, usize)]) -> Result<Vec<u64>, WfError> {
    let mut below: Vec<Vec<usize>> = vec![Vec::new(); size];
    for &(a, b) in edges {
        below[b].push(a);
    }
    // 0 = unvisited, 1 = on the stack, 2 = done
    let mut state = vec![0u8; size];
    let mut height = vec![0u64; size];
    for root in 0..size {
        if state[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        state[root] = 1;
        while let Some(&mut (node, ref mut next)) = stack.last_mut() {
            if let Some(&child) = below[node].get(*next) {
                *next += 1;
                match state[child] {
                    0 => {
                        state[child] = 1;
                        stack.push((child, 0));
                    }
                    1 => return Err(WfError::Cyclic { node: child }),
                    _ => {}
                }
            } else {
                height[node] = below[node].iter().map(|&c| height[c] + 1).max().unwrap_or(0);
                state[node] = 2;
                stack.pop();
            }
        }
    }
    Ok(height)
}

impl WellFounded for FiniteRelation {
    type Elem = usize;
    type Evidence = EdgeIndex;

    fn decide(&self, lesser: &usize, greater: &usize) -> Option<EdgeIndex> {
        self.inner.decide(lesser, greater)
    }

    fn validate(&self, lesser: &usize, greater: &usize, evidence: &EdgeIndex) -> bool {
        self.edges.get(evidence.0) == Some(&(*lesser, *greater))
    }

    fn predecessors(&self, x: &usize) -> Option<Vec<(usize, EdgeIndex)>> {
        self.inner.predecessors(x)
    }

    fn elements(&self) -> Option<Vec<usize>> {
        Some((0..self.size).collect())
    }

    fn wfrec<P: 'static>(&self, step: &Step<usize, EdgeIndex, P>, a: &usize) -> P {
        self.inner.wfrec(step, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{check_recursion_equation, check_unique_solution};
    use crate::relation::{step, Rec};

    #[test]
    fn rejects_cycles_and_strays() {
        assert_eq!(
            FiniteRelation::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap_err(),
            WfError::Cyclic { node: 0 }
        );
        assert!(matches!(FiniteRelation::new(2, &[(1, 1)]), Err(WfError::Cyclic { .. })));
        assert_eq!(
            FiniteRelation::new(2, &[(0, 5)]).unwrap_err(),
            WfError::OutOfRange { node: 5, size: 2 }
        );
    }

    #[test]
    fn decide_matches_edges() {
        let r = FiniteRelation::new(4, &[(0, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(r.decide(&1, &2), Some(EdgeIndex(1)));
        assert!(r.decide(&0, &3).is_none());
        assert!(r.decide(&2, &0).is_none());
        let preds: Vec<usize> = r.predecessors(&2).unwrap().into_iter().map(|p| p.0).collect();
        assert_eq!(preds, vec![0, 1]);
    }

    #[test]
    fn recursion_counts_paths() {
        let r = FiniteRelation::new(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (0, 4)]).unwrap();
        let rr = r.clone();
        // number of maximal descending paths from x
        let s = step(move |x: &usize, rec: Rec<usize, EdgeIndex, u64>| {
            let preds = rr.predecessors(x).unwrap();
            if preds.is_empty() {
                1
            } else {
                preds.iter().map(|(y, e)| rec(y, e)).sum()
            }
        });
        let carrier: Vec<usize> = (0..5).collect();
        assert!(check_recursion_equation(&r, &s, &carrier).passed());
        assert_eq!(r.wfrec(&s, &4), 3);
        let table = [1u64, 1, 1, 2, 3];
        assert!(check_unique_solution(&r, &s, &carrier, move |x| table[*x]));
    }

    #[test]
    fn nat_less_listing() {
        let r = FiniteRelation::nat_less(6);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(r.decide(&a, &b).is_some(), a < b);
            }
        }
    }
}
