//! Finite posets and binary relations on `0..n`: graded checks with
//! witnesses and isomorphism search.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::BitMatrix;

/// A binary relation on `0..n`. Used both for partial orders (`get(i, j)`
/// meaning `i <= j`) and for directed graphs (`i -> j`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    bits: BitMatrix,
}

impl Relation {
    pub fn new(n: usize) -> Self {
        Relation {
            bits: BitMatrix::new(n),
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut r = Relation::new(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    r.set(i, j);
                }
            }
        }
        r
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Relation::new(n);
        for (i, j) in pairs {
            r.set(i, j);
        }
        r
    }

    pub fn size(&self) -> usize {
        self.bits.size()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits.get(i, j)
    }

    pub fn set(&mut self, i: usize, j: usize) {
        self.bits.set(i, j);
    }

    pub fn count(&self) -> usize {
        self.bits.count()
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for i in 0..n {
            for j in self.bits.row_ones(i) {
                out.push((i, j));
            }
        }
        out
    }

    /// The relation induced on `subset` (positions in the result follow the
    /// order of `subset`).
    pub fn restrict(&self, subset: &[usize]) -> Relation {
        Relation::from_fn(subset.len(), |a, b| self.get(subset[a], subset[b]))
    }

    /// Whether the relation is reflexive, antisymmetric and transitive.
    pub fn is_partial_order(&self) -> bool {
        let n = self.size();
        for i in 0..n {
            if !self.get(i, i) {
                return false;
            }
            for j in 0..n {
                if i != j && self.get(i, j) && self.get(j, i) {
                    return false;
                }
                if self.get(i, j) {
                    for k in 0..n {
                        if self.get(j, k) && !self.get(i, k) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Element below every other element, if any.
    pub fn minimum(&self) -> Option<usize> {
        let n = self.size();
        (0..n).find(|&m| (0..n).all(|x| self.get(m, x)))
    }

    pub fn maximum(&self) -> Option<usize> {
        let n = self.size();
        (0..n).find(|&m| (0..n).all(|x| self.get(x, m)))
    }

    /// Covering pairs `(i, j)`: `i < j` with nothing strictly between,
    /// for a partial order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        // strict[j] = {i : i < j}
        let mut strict = BitMatrix::new(n);
        for j in 0..n {
            for i in 0..n {
                if i != j && self.get(i, j) {
                    strict.set(j, i);
                }
            }
        }
        // deep[j] = elements strictly below something strictly below j
        let mut deep = BitMatrix::new(n);
        for j in 0..n {
            for k in strict.row_ones(j) {
                deep.or_row_from(&strict, k, j);
            }
        }
        let mut out = Vec::new();
        for j in 0..n {
            for i in strict.row_ones(j) {
                if !deep.get(j, i) {
                    out.push((i, j));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Why a candidate rank function does not grade a poset.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GradedFailure {
    Empty,
    NoMinimum,
    /// The minimum exists but its rank is not zero.
    BottomRank {
        bottom: usize,
        rank: i64,
    },
    /// A maximal chain `chain[0] = bottom < ... < chain.last()` whose length
    /// differs from the rank claimed for its top.
    UnevenChain {
        chain: Vec<usize>,
        claimed_rank: i64,
    },
}

/// Outcome of a graded-poset check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PosetReport {
    pub graded: bool,
    /// The verified rank function, in input order.
    pub ranks: Option<Vec<i64>>,
    /// Offset `n_Q` subtracted from the ambient rank (almost faithful checks).
    pub offset: Option<i64>,
    pub failure: Option<GradedFailure>,
}

impl PosetReport {
    fn failed(failure: GradedFailure) -> Self {
        PosetReport {
            graded: false,
            ranks: None,
            offset: None,
            failure: Some(failure),
        }
    }

    /// Largest rank, when graded.
    pub fn top_rank(&self) -> Option<i64> {
        self.ranks.as_ref().and_then(|r| r.iter().copied().max())
    }
}

/// Checks that `(P, <=, rank)` is graded: a minimum exists with rank 0, and
/// every maximal chain in every `[0, x]` has length `rank(x)`.
///
/// The chain condition is equivalent to every cover raising the rank by
/// exactly one, which is what gets tested; a failing cover is turned into an
/// explicit maximal chain witness.
pub fn check_graded(order: &Relation, rank: &[i64]) -> PosetReport {
    assert_eq!(order.size(), rank.len());
    if rank.is_empty() {
        return PosetReport::failed(GradedFailure::Empty);
    }
    let Some(bottom) = order.minimum() else {
        return PosetReport::failed(GradedFailure::NoMinimum);
    };
    if rank[bottom] != 0 {
        return PosetReport::failed(GradedFailure::BottomRank {
            bottom,
            rank: rank[bottom],
        });
    }
    let covers = order.covers();
    for &(lo, hi) in &covers {
        if rank[hi] != rank[lo] + 1 {
            let mut chain = chain_down(&covers, bottom, lo);
            chain.push(hi);
            return PosetReport::failed(GradedFailure::UnevenChain {
                chain,
                claimed_rank: rank[hi],
            });
        }
    }
    PosetReport {
        graded: true,
        ranks: Some(rank.to_vec()),
        offset: None,
        failure: None,
    }
}

/// Some maximal chain from `bottom` up to `top`, following covers.
fn chain_down(covers: &[(usize, usize)], bottom: usize, top: usize) -> Vec<usize> {
    let mut chain = vec![top];
    let mut x = top;
    while x != bottom {
        let (lo, _) = *covers
            .iter()
            .find(|&&(_, hi)| hi == x)
            .expect("non-minimal element has a lower cover");
        chain.push(lo);
        x = lo;
    }
    chain.reverse();
    chain
}

/// An isomorphism of relations `a -> b`, as a map from indices of `a` to
/// indices of `b`. Candidates are tried in increasing index order so the
/// witness is deterministic.
pub fn isomorphism(a: &Relation, b: &Relation) -> Option<Vec<usize>> {
    let n = a.size();
    if n != b.size() || a.count() != b.count() {
        return None;
    }
    let sig = |r: &Relation, i: usize| {
        let out = (0..n).filter(|&j| r.get(i, j)).count();
        let inn = (0..n).filter(|&j| r.get(j, i)).count();
        (out, inn, r.get(i, i))
    };
    let sa: Vec<_> = (0..n).map(|i| sig(a, i)).collect();
    let sb: Vec<_> = (0..n).map(|i| sig(b, i)).collect();
    let mut candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| sb[j] == sa[i]).collect())
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (candidates[i].len(), i));
    for c in candidates.iter_mut() {
        c.sort_unstable();
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &order, &candidates, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(
    a: &Relation,
    b: &Relation,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for &img in &candidates[v] {
        if used[img] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&k| a.get(v, k) == b.get(img, map[k]) && a.get(k, v) == b.get(map[k], img));
        if !consistent {
            continue;
        }
        map[v] = img;
        used[img] = true;
        if extend(a, b, order, candidates, depth + 1, map, used) {
            return true;
        }
        used[img] = false;
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Relation {
        Relation::from_fn(n, |i, j| i <= j)
    }

    fn antichain(n: usize) -> Relation {
        Relation::from_fn(n, |i, j| i == j)
    }

    /// 0 < 1, 2 < 3
    fn diamond() -> Relation {
        Relation::from_fn(4, |i, j| i == j || i == 0 || j == 3)
    }

    #[test]
    fn covers_of_diamond() {
        assert_eq!(diamond().covers(), [(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(chain(3).covers(), [(0, 1), (1, 2)]);
    }

    #[test]
    fn graded_checks() {
        let r = check_graded(&diamond(), &[0, 1, 1, 2]);
        assert!(r.graded);
        assert_eq!(r.top_rank(), Some(2));
        let r = check_graded(&diamond(), &[0, 1, 2, 2]);
        assert!(!r.graded);
        assert!(matches!(
            r.failure,
            Some(GradedFailure::UnevenChain {
                claimed_rank: 2,
                ..
            })
        ));
        assert_eq!(
            check_graded(&antichain(2), &[0, 0]).failure,
            Some(GradedFailure::NoMinimum)
        );
        assert_eq!(
            check_graded(&chain(2), &[1, 2]).failure,
            Some(GradedFailure::BottomRank { bottom: 0, rank: 1 })
        );
        assert_eq!(
            check_graded(&chain(2), &[0, 2]).failure,
            Some(GradedFailure::UnevenChain {
                chain: vec![0, 1],
                claimed_rank: 2
            })
        );
    }

    #[test]
    fn isomorphisms() {
        assert!(isomorphism(&chain(3), &antichain(3)).is_none());
        let d = diamond();
        let relabeled = Relation::from_fn(4, |i, j| i == j || j == 0 || i == 3);
        let map = isomorphism(&d, &relabeled).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(d.get(i, j), relabeled.get(map[i], map[j]));
            }
        }
        assert!(isomorphism(&chain(4), &d).is_none());
    }

    #[test]
    fn partial_order_detection() {
        assert!(diamond().is_partial_order());
        assert!(!Relation::from_fn(2, |_, _| true).is_partial_order());
        assert_eq!(diamond().minimum(), Some(0));
        assert_eq!(diamond().maximum(), Some(3));
    }
}
