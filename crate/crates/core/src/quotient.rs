//! The quotient lower interval `C(w)`: Bruhat cosets under the quotient
//! Bruhat order and the quotient Bruhat graph, plus the graded-subposet
//! checks used to analyse it.

use alloc::format;
use alloc::vec::Vec;

use crate::bruhat::LowerInterval;
use crate::coset::{project_down, BruhatCoset, Partition};
use crate::element::{Element, Side};
use crate::error::{Error, Result};
use crate::poset::{check_graded, isomorphism, PosetReport, Relation};
use crate::system::CoxeterSystem;

/// `C(w)` with its order and arcs. Coset indices follow
/// [`Partition::cosets`].
#[derive(Clone, Debug)]
pub struct QuotientInterval {
    interval: LowerInterval,
    partition: Partition,
    order: Relation,
    arcs: Vec<(usize, usize)>,
}

impl QuotientInterval {
    /// Builds the quotient from `B(w)`. The order is read off `P_up`
    /// comparisons and must coincide with the `P_down` comparisons.
    pub fn new(sys: &CoxeterSystem, interval: LowerInterval) -> Result<Self> {
        let partition = Partition::new(sys, &interval)?;
        let idx = |x: &Element| interval.index_of(x).expect("coset extremes lie in B(w)");
        let cosets = partition.cosets();
        let tops: Vec<usize> = cosets.iter().map(|c| idx(c.max())).collect();
        let bottoms: Vec<usize> = cosets.iter().map(|c| idx(c.min())).collect();
        let k = cosets.len();
        let order = Relation::from_fn(k, |a, b| interval.leq(tops[a], tops[b]));
        let by_min = Relation::from_fn(k, |a, b| interval.leq(bottoms[a], bottoms[b]));
        if order != by_min {
            let (a, b) = (0..k)
                .flat_map(|a| (0..k).map(move |b| (a, b)))
                .find(|&(a, b)| order.get(a, b) != by_min.get(a, b))
                .expect("relations differ somewhere");
            return Err(Error::Inconsistent(format!(
                "P_up and P_down orders disagree on cosets of {} and {}",
                sys.format_element(cosets[a].max()),
                sys.format_element(cosets[b].max())
            )));
        }
        let mut arcs: Vec<(usize, usize)> = interval
            .edges()
            .iter()
            .map(|&(i, j)| (partition.coset_of(i), partition.coset_of(j)))
            .filter(|(c, d)| c != d)
            .collect();
        arcs.sort_unstable();
        arcs.dedup();
        Ok(QuotientInterval {
            interval,
            partition,
            order,
            arcs,
        })
    }

    pub fn w(&self) -> &Element {
        self.interval.top()
    }

    pub fn interval(&self) -> &LowerInterval {
        &self.interval
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn cosets(&self) -> &[BruhatCoset] {
        self.partition.cosets()
    }

    pub fn len(&self) -> usize {
        self.partition.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partition.is_empty()
    }

    /// Quotient Bruhat order: `order().get(c, d)` means `C <= D`.
    pub fn order(&self) -> &Relation {
        &self.order
    }

    pub fn leq(&self, c: usize, d: usize) -> bool {
        self.order.get(c, d)
    }

    /// Quotient Bruhat graph arcs `C -> D`, sorted.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_relation(&self) -> Relation {
        Relation::from_pairs(self.len(), self.arcs.iter().copied())
    }

    /// Index of the coset containing `e`.
    pub fn bottom(&self) -> usize {
        self.partition.coset_of(0)
    }

    /// Index of the coset containing `w`.
    pub fn top(&self) -> usize {
        self.partition.coset_of(self.interval.len() - 1)
    }

    /// Index of the coset containing `x`.
    pub fn coset_index(&self, x: &Element) -> Option<usize> {
        self.interval
            .index_of(x)
            .map(|i| self.partition.coset_of(i))
    }

    /// Interval indices of `P_down(C)` for every coset `C`.
    pub fn min_indices(&self) -> Vec<usize> {
        self.cosets()
            .iter()
            .map(|c| self.interval.index_of(c.min()).expect("member"))
            .collect()
    }

    /// Interval indices of `P_up(C)` for every coset `C`.
    pub fn max_indices(&self) -> Vec<usize> {
        self.cosets()
            .iter()
            .map(|c| self.interval.index_of(c.max()).expect("member"))
            .collect()
    }
}

pub fn quotient_interval(sys: &CoxeterSystem, w: &Element) -> Result<QuotientInterval> {
    QuotientInterval::new(sys, LowerInterval::new(sys, w))
}

/// `D_L(w)` and `D_R(w)` both avoid the support of `P_down(w)`.
pub fn is_separated(sys: &CoxeterSystem, w: &Element) -> bool {
    let bottom = project_down(sys, w, w).expect("w <= w");
    let support = sys.support(&bottom);
    sys.descents(w, Side::Left).intersection(support).is_empty()
        && sys
            .descents(w, Side::Right)
            .intersection(support)
            .is_empty()
}

/// Bruhat order of `B(w)` as a relation over member indices.
pub fn order_relation(interval: &LowerInterval) -> Relation {
    Relation::from_fn(interval.len(), |i, j| interval.leq(i, j))
}

/// Bruhat graph of `B(w)` as a relation over member indices.
pub fn edge_relation(interval: &LowerInterval) -> Relation {
    Relation::from_pairs(interval.len(), interval.edges().iter().copied())
}

fn indices_of(q: &[Element], p: &LowerInterval) -> Result<Vec<usize>> {
    q.iter()
        .map(|x| p.index_of(x).ok_or(Error::NotMember))
        .collect()
}

/// `(Q, <=, l)` is graded with the ambient rank, i.e. a faithful subposet.
pub fn check_faithful(q: &[Element], p: &LowerInterval) -> Result<PosetReport> {
    let idx = indices_of(q, p)?;
    let order = order_relation(p).restrict(&idx);
    let ranks: Vec<i64> = q.iter().map(|x| x.length() as i64).collect();
    let mut report = check_graded(&order, &ranks);
    if report.graded {
        report.offset = Some(0);
    }
    Ok(report)
}

/// `(Q, <=, l - n_Q)` is graded for `n_Q = min l` over `Q`.
pub fn check_almost_faithful(q: &[Element], p: &LowerInterval) -> Result<PosetReport> {
    let idx = indices_of(q, p)?;
    let order = order_relation(p).restrict(&idx);
    let offset = q.iter().map(|x| x.length() as i64).min().unwrap_or(0);
    let ranks: Vec<i64> = q.iter().map(|x| x.length() as i64 - offset).collect();
    let mut report = check_graded(&order, &ranks);
    if report.graded {
        report.offset = Some(offset);
    }
    Ok(report)
}

/// An order isomorphism between the subposets `a` and `b` of `p`, mapping
/// positions in `a` to positions in `b`.
pub fn poset_isomorphic(
    a: &[Element],
    b: &[Element],
    p: &LowerInterval,
) -> Result<Option<Vec<usize>>> {
    let full = order_relation(p);
    let ra = full.restrict(&indices_of(a, p)?);
    let rb = full.restrict(&indices_of(b, p)?);
    Ok(isomorphism(&ra, &rb))
}

/// Comparison of the quotient arcs with Bruhat edges between minima.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraphCheck {
    pub separated: bool,
    /// `P_down(C) -> P_down(D)` without `C -> D`; must always be empty.
    pub forward_violations: Vec<(usize, usize)>,
    /// `C -> D` without `P_down(C) -> P_down(D)`; allowed only when `w` is
    /// not separated.
    pub converse_violations: Vec<(usize, usize)>,
}

impl GraphCheck {
    /// `C -> D` iff `P_down(C) -> P_down(D)` for all cosets.
    pub fn equivalence(&self) -> bool {
        self.forward_violations.is_empty() && self.converse_violations.is_empty()
    }

    /// Whether the result is consistent with the theory: the forward
    /// implication always, the equivalence when separated.
    pub fn consistent(&self) -> bool {
        self.forward_violations.is_empty() && (!self.separated || self.equivalence())
    }
}

pub fn quotient_graph_check(sys: &CoxeterSystem, q: &QuotientInterval) -> GraphCheck {
    let b = q.interval();
    let mins = q.min_indices();
    let k = q.len();
    let mut forward_violations = Vec::new();
    let mut converse_violations = Vec::new();
    for c in 0..k {
        for d in 0..k {
            if c == d {
                continue;
            }
            let edge = b.has_edge(mins[c], mins[d]);
            let arc = q.arcs().binary_search(&(c, d)).is_ok();
            if edge && !arc {
                forward_violations.push((c, d));
            }
            if arc && !edge {
                converse_violations.push((c, d));
            }
        }
    }
    GraphCheck {
        separated: is_separated(sys, q.w()),
        forward_violations,
        converse_violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::{critical_set, min_set};
    use crate::poset::GradedFailure;
    use alloc::string::String;
    use alloc::vec;

    fn a(n: usize) -> CoxeterSystem {
        CoxeterSystem::type_a(n).unwrap()
    }

    #[test]
    fn diamond_for_3412() {
        let sys = a(3);
        let w = sys.parse_element("3412").unwrap();
        let q = quotient_interval(&sys, &w).unwrap();
        assert_eq!(q.len(), 4);
        assert_eq!(q.order().minimum(), Some(q.bottom()));
        assert_eq!(q.order().maximum(), Some(q.top()));
        assert_eq!(q.order().covers().len(), 4);
        assert_eq!(q.arcs().len(), 4);
        let check = quotient_graph_check(&sys, &q);
        assert!(check.separated && check.equivalence());
    }

    #[test]
    fn trivial_quotient() {
        let sys = a(3);
        let q = quotient_interval(&sys, &sys.identity()).unwrap();
        assert_eq!(q.len(), 1);
        assert!(q.arcs().is_empty());
        assert!(is_separated(&sys, &sys.identity()));
    }

    #[test]
    fn quotient_graphs_of_worked_examples() {
        let sys = a(4);
        let q = quotient_interval(&sys, &sys.parse_element("45312").unwrap()).unwrap();
        assert_eq!((q.len(), q.arcs().len()), (4, 4));
        assert!(quotient_graph_check(&sys, &q).equivalence());
        let q = quotient_interval(&sys, &sys.parse_element("52341").unwrap()).unwrap();
        assert_eq!((q.len(), q.arcs().len()), (6, 9));
        assert!(q.arcs().contains(&(q.bottom(), q.top())));
        assert!(quotient_graph_check(&sys, &q).equivalence());
    }

    #[test]
    fn separatedness() {
        let sys = a(4);
        for w in ["45312", "52341"] {
            assert!(is_separated(&sys, &sys.parse_element(w).unwrap()), "{w}");
        }
        assert!(is_separated(&a(3), &a(3).parse_element("3412").unwrap()));
        let s6 = a(5);
        assert!(!is_separated(&s6, &s6.parse_element("456123").unwrap()));
    }

    #[test]
    fn faithfulness_for_45312() {
        let sys = a(4);
        let w = sys.parse_element("45312").unwrap();
        let b = LowerInterval::new(&sys, &w);
        let mins = min_set(&sys, &b);
        let r = check_faithful(&mins, &b).unwrap();
        assert!(r.graded);
        let mut ranks = r.ranks.unwrap();
        ranks.sort_unstable();
        assert_eq!(ranks, [0, 1, 1, 2]);
        let maxes = critical_set(&sys, &b);
        let r = check_almost_faithful(&maxes, &b).unwrap();
        assert!(!r.graded);
        assert!(matches!(r.failure, Some(GradedFailure::UnevenChain { .. })));
        assert!(poset_isomorphic(&mins, &maxes, &b).unwrap().is_some());
    }

    #[test]
    fn faithful_edge_cases() {
        let sys = a(3);
        let w = sys.parse_element("3412").unwrap();
        let b = LowerInterval::new(&sys, &w);
        assert!(
            !check_faithful(core::slice::from_ref(&w), &b)
                .unwrap()
                .graded
        );
        let r = check_almost_faithful(core::slice::from_ref(&w), &b).unwrap();
        assert!(r.graded);
        assert_eq!(r.offset, Some(4));
        let outside = sys.parse_element("4321").unwrap();
        assert_eq!(check_faithful(&[outside], &b), Err(Error::NotMember));
        let q = QuotientInterval::new(&sys, b.clone()).unwrap();
        for c in q.cosets() {
            let r = check_almost_faithful(c.members(), &b).unwrap();
            assert!(r.graded);
            assert_eq!(r.offset, Some(c.mid() as i64));
            assert_eq!(r.top_rank(), Some(c.side() as i64));
        }
        let bottom = &q.cosets()[q.bottom()];
        assert!(check_faithful(bottom.members(), &b).unwrap().graded);
        let names: Vec<String> = bottom
            .members()
            .iter()
            .map(|x| sys.format_element(x))
            .collect();
        assert_eq!(names, vec!["1234", "1324"]);
    }
}
