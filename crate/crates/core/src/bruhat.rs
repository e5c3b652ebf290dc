//! Bruhat order, lower intervals `B(w)` and their Bruhat graphs.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::bits::BitMatrix;
use crate::element::{Element, Side};
use crate::error::{Error, Result};
use crate::system::{Backend, CoxeterSystem};

/// `u <= w` in Bruhat order, by descent recursion.
///
/// Pick `s` in `D_L(w)`. If `s` is also a left descent of `u` the question
/// reduces to `su <= sw`, otherwise to `u <= sw`.
pub fn bruhat_leq(sys: &CoxeterSystem, u: &Element, w: &Element) -> bool {
    let mut u = u.clone();
    let mut w = w.clone();
    loop {
        if u.length() > w.length() {
            return false;
        }
        if u.is_identity() {
            return true;
        }
        if u.length() == w.length() {
            return u == w;
        }
        let s = sys
            .first_descent(&w, Side::Left)
            .expect("non-identity element has a left descent");
        if sys.has_descent(&u, s, Side::Left) {
            u = sys.lmul_gen(s, &u);
        }
        w = sys.lmul_gen(s, &w);
    }
}

/// Type-A Bruhat order by rank-matrix dominance:
/// `#{k <= i : u(k) >= j} <= #{k <= i : w(k) >= j}` for all `i, j`.
pub fn bruhat_leq_dot(sys: &CoxeterSystem, u: &Element, w: &Element) -> Result<bool> {
    let Backend::TypeA { rank } = sys.backend() else {
        return Err(Error::Backend("rank-matrix criterion requires type A"));
    };
    let m = rank + 1;
    let (du, dw) = (u.canonical(), w.canonical());
    for j in 1..=m as i64 {
        let (mut cu, mut cw) = (0, 0);
        for i in 0..m {
            cu += (du[i] >= j) as i32;
            cw += (dw[i] >= j) as i32;
            if cu > cw {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The lower interval `B(w) = [e, w]` with its Bruhat graph.
///
/// Members are sorted by `(length, canonical form)`; all index-based
/// accessors refer to that order, so `e` has index 0 and `w` is last.
#[derive(Clone, Debug)]
pub struct LowerInterval {
    members: Vec<Element>,
    index: BTreeMap<Element, usize>,
    levels: Vec<Range<usize>>,
    edges: Vec<(usize, usize)>,
    down: Vec<Vec<usize>>,
    up: Vec<Vec<usize>>,
    below: BitMatrix,
}

impl LowerInterval {
    /// Enumerates `B(w)` by coatom closure and generates each edge once at
    /// its upper endpoint from the left inversions of a reduced word.
    pub fn new(sys: &CoxeterSystem, w: &Element) -> Self {
        let mut all: BTreeSet<Element> = BTreeSet::new();
        let mut current: BTreeSet<Element> = BTreeSet::new();
        current.insert(w.clone());
        while !current.is_empty() {
            let mut next = BTreeSet::new();
            for v in &current {
                let word = sys.reduced_word(v);
                for pos in 0..word.len() {
                    let u = sys.eval(&word.without(pos)).expect("valid word");
                    if u.length() + 1 == v.length() {
                        next.insert(u);
                    }
                }
            }
            all.append(&mut current);
            current = next;
        }

        let members: Vec<Element> = all.into_iter().collect();
        let index: BTreeMap<Element, usize> = members
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, x)| (x, i))
            .collect();
        let mut levels = vec![0..0; w.length() as usize + 1];
        let mut start = 0;
        for (k, level) in levels.iter_mut().enumerate() {
            let end = start
                + members[start..]
                    .iter()
                    .take_while(|x| x.length() as usize == k)
                    .count();
            *level = start..end;
            start = end;
        }

        let n = members.len();
        let mut edges = Vec::new();
        let mut down = vec![Vec::new(); n];
        let mut up = vec![Vec::new(); n];
        for (j, v) in members.iter().enumerate() {
            let word = sys.reduced_word(v);
            for pos in 0..word.len() {
                let u = sys.eval(&word.without(pos)).expect("valid word");
                if u.length() < v.length() {
                    let i = *index
                        .get(&u)
                        .expect("subword of a reduced word of a member lies in the interval");
                    edges.push((i, j));
                    down[j].push(i);
                    up[i].push(j);
                }
            }
        }
        edges.sort_unstable();
        for list in down.iter_mut().chain(up.iter_mut()) {
            list.sort_unstable();
        }

        // Members are in increasing length, so lower neighbours come first.
        let mut below = BitMatrix::new(n);
        for (j, lower) in down.iter().enumerate() {
            below.set(j, j);
            for &i in lower {
                below.or_row_into(i, j);
            }
        }

        LowerInterval {
            members,
            index,
            levels,
            edges,
            down,
            up,
            below,
        }
    }

    pub fn top(&self) -> &Element {
        self.members.last().expect("interval is nonempty")
    }

    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, x: &Element) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.index.contains_key(x)
    }

    /// Index range of the members of each length `0..=l(w)`.
    pub fn levels(&self) -> &[Range<usize>] {
        &self.levels
    }

    pub fn level_counts(&self) -> Vec<usize> {
        self.levels.iter().map(|r| r.len()).collect()
    }

    /// Directed edges `(u, v)` meaning `u -> v`, as index pairs, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.down[j].binary_search(&i).is_ok()
    }

    pub fn lower_neighbours(&self, j: usize) -> &[usize] {
        &self.down[j]
    }

    pub fn upper_neighbours(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn degree_at(&self, i: usize) -> usize {
        self.down[i].len() + self.up[i].len()
    }

    /// `deg_w(u)`: number of edges incident to `u`, in either direction.
    pub fn degree(&self, u: &Element) -> Result<usize> {
        self.index_of(u)
            .map(|i| self.degree_at(i))
            .ok_or(Error::NotMember)
    }

    /// Bruhat order between members, as reachability in the Bruhat graph.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.below.get(j, i)
    }

    /// Row `j` holds the members below member `j`.
    pub fn below_matrix(&self) -> &BitMatrix {
        &self.below
    }

    /// `[u, w]` as a subset of this interval.
    pub fn slice(&self, sys: &CoxeterSystem, u: &Element) -> Result<IntervalSlice> {
        let hi = self.top().clone();
        if !bruhat_leq(sys, u, &hi) {
            return Err(Error::NotBelow);
        }
        let members = self
            .members
            .iter()
            .filter(|v| bruhat_leq(sys, u, v))
            .cloned()
            .collect();
        Ok(IntervalSlice {
            lo: u.clone(),
            hi,
            members,
        })
    }
}

/// A Bruhat interval `[lo, hi]`, members sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntervalSlice {
    pub lo: Element,
    pub hi: Element,
    pub members: Vec<Element>,
}

pub fn lower_interval(sys: &CoxeterSystem, w: &Element) -> LowerInterval {
    LowerInterval::new(sys, w)
}

pub fn interval_slice(sys: &CoxeterSystem, u: &Element, w: &Element) -> Result<IntervalSlice> {
    if !bruhat_leq(sys, u, w) {
        return Err(Error::NotBelow);
    }
    LowerInterval::new(sys, w).slice(sys, u)
}
