//! Clause-by-clause verifiers for the two structure theorems on `B(w)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::coset::{critical_set, min_set, project_down, project_up_greedy};
use crate::element::Element;
use crate::error::Result;
use crate::lab::report::{CheckReport, Clause};
use crate::poset::isomorphism;
use crate::quotient::{
    check_almost_faithful, check_faithful, is_separated, poset_isomorphic, quotient_graph_check,
    QuotientInterval,
};
use crate::system::CoxeterSystem;

/// A clause name together with the phrase of the theorem it checks.
pub type ClauseSpec = (&'static str, &'static str);

/// Clauses of the first structure theorem (every `w`).
pub const THEOREM1_CLAUSES: &[ClauseSpec] = &[
    ("partition", "a disjoint union of two-sided cosets"),
    ("quotient-interval", "is an interval"),
    ("coset-subinterval", "is a subinterval of"),
    ("coset-almost-faithful", "is an almost faithful subposet of"),
    ("bottom-faithful", "the bottom coset is a faithful subposet"),
    ("coset-regular", "-regular"),
    ("extremes", "=\\min\\{C\\mid C\\in C(w)\\}"),
    ("extremes-isomorphic", "are isomorphic to"),
    (
        "extremes-parametrize",
        "They both parametrize the partition",
    ),
    ("length-split", "There is a natural partition of"),
    ("mid-monotone", "is weakly increasing"),
];

/// Clauses of the second structure theorem (separated `w`).
pub const THEOREM2_CLAUSES: &[ClauseSpec] = &[
    ("partition", "a disjoint union of two-sided cosets"),
    ("extremes-isomorphic", "are isomorphic to"),
    ("min-set-faithful", "is a faithful subposet of"),
    (
        "extremes-parametrize",
        "=\\bigcup_{v\\in B^{\\uparrow}(w)} C_{w}(v)",
    ),
    ("length-split", "There is a natural partition of"),
    ("mid-side-monotone", "are weakly increasing"),
    ("coset-subinterval", "is a subinterval of"),
    ("coset-almost-faithful", "is an almost faithful subposet of"),
    ("coset-regular", "-regular"),
    (
        "degree-monotone",
        "the degree of such cosets is weakly increasing",
    ),
    ("arc-equivalence", "There is an equivalence"),
];

/// The shared facts behind both theorems, computed once per `w`.
struct Facts<'a> {
    sys: &'a CoxeterSystem,
    q: &'a QuotientInterval,
}

impl<'a> Facts<'a> {
    fn name(&self, x: &Element) -> String {
        self.sys.format_element(x)
    }

    fn partition(&self) -> Option<String> {
        let b = self.q.interval();
        let total: usize = self.q.cosets().iter().map(|c| c.len()).sum();
        if total != b.len() {
            return Some(format!("coset sizes sum to {total}, |B(w)| = {}", b.len()));
        }
        for (i, x) in b.members().iter().enumerate() {
            let c = &self.q.cosets()[self.q.partition().coset_of(i)];
            if !c.contains(x) {
                return Some(format!("{} not in its assigned coset", self.name(x)));
            }
        }
        None
    }

    fn quotient_interval(&self) -> Option<String> {
        let order = self.q.order();
        if !order.is_partial_order() {
            return Some(String::from("quotient order is not a partial order"));
        }
        if order.minimum() != Some(self.q.bottom()) {
            return Some(String::from("coset of e is not the minimum"));
        }
        if order.maximum() != Some(self.q.top()) {
            return Some(String::from("coset of w is not the maximum"));
        }
        None
    }

    fn coset_subinterval(&self) -> Option<String> {
        let b = self.q.interval();
        for c in self.q.cosets() {
            let lo = b.index_of(c.min()).expect("coset minimum lies in B(w)");
            let hi = b.index_of(c.max()).expect("coset maximum lies in B(w)");
            let slice: Vec<&Element> = (0..b.len())
                .filter(|&i| b.leq(lo, i) && b.leq(i, hi))
                .map(|i| &b.members()[i])
                .collect();
            if !slice.iter().copied().eq(c.members().iter()) {
                return Some(format!(
                    "coset of {} differs from [{}, {}]",
                    self.name(c.max()),
                    self.name(c.min()),
                    self.name(c.max())
                ));
            }
        }
        None
    }

    fn coset_almost_faithful(&self) -> Result<Option<String>> {
        for c in self.q.cosets() {
            let r = check_almost_faithful(c.members(), self.q.interval())?;
            let ok = r.graded
                && r.offset == Some(c.mid() as i64)
                && r.top_rank() == Some(c.side() as i64);
            if !ok {
                return Ok(Some(format!(
                    "coset of {}: {:?}",
                    self.name(c.max()),
                    r.failure
                )));
            }
        }
        Ok(None)
    }

    fn bottom_faithful(&self) -> Result<Option<String>> {
        let c = &self.q.cosets()[self.q.bottom()];
        let r = check_faithful(c.members(), self.q.interval())?;
        Ok((!r.graded).then(|| format!("bottom coset: {:?}", r.failure)))
    }

    fn coset_regular(&self) -> Option<String> {
        let b = self.q.interval();
        for c in self.q.cosets() {
            let idx: BTreeSet<usize> = c.members().iter().filter_map(|x| b.index_of(x)).collect();
            for &i in &idx {
                let inside = b
                    .lower_neighbours(i)
                    .iter()
                    .chain(b.upper_neighbours(i))
                    .filter(|j| idx.contains(j))
                    .count();
                if inside != c.side() as usize {
                    return Some(format!(
                        "{} has {inside} edges inside its coset, side = {}",
                        self.name(&b.members()[i]),
                        c.side()
                    ));
                }
            }
        }
        None
    }

    /// `B_down` / `B_up` are the coset minima / maxima, and the greedy
    /// projections agree with the enumerated extremes.
    fn extremes(&self) -> Result<Option<String>> {
        let b = self.q.interval();
        let mins: BTreeSet<&Element> = self.q.cosets().iter().map(|c| c.min()).collect();
        let maxes: BTreeSet<&Element> = self.q.cosets().iter().map(|c| c.max()).collect();
        let low = min_set(self.sys, b);
        let high = critical_set(self.sys, b);
        if !low.iter().eq(mins.iter().copied()) {
            return Ok(Some(String::from(
                "B_down(w) differs from the coset minima",
            )));
        }
        if !high.iter().eq(maxes.iter().copied()) {
            return Ok(Some(String::from("B_up(w) differs from the coset maxima")));
        }
        if !low.contains(&self.sys.identity()) || !high.contains(self.q.w()) {
            return Ok(Some(String::from("e or w missing from the extremes")));
        }
        let w = self.q.w();
        for (i, u) in b.members().iter().enumerate() {
            let c = &self.q.cosets()[self.q.partition().coset_of(i)];
            if &project_down(self.sys, w, u)? != c.min() {
                return Ok(Some(format!(
                    "greedy P_down({}) is not the minimum",
                    self.name(u)
                )));
            }
            if &project_up_greedy(self.sys, w, u)? != c.max() {
                return Ok(Some(format!(
                    "greedy P_up({}) is not the maximum",
                    self.name(u)
                )));
            }
        }
        Ok(None)
    }

    fn extremes_isomorphic(&self) -> Result<Option<String>> {
        let b = self.q.interval();
        let low = min_set(self.sys, b);
        let high = critical_set(self.sys, b);
        Ok(poset_isomorphic(&low, &high, b)?
            .is_none()
            .then(|| String::from("B_down(w) and B_up(w) are not isomorphic")))
    }

    /// Each coset holds exactly one element of `B_down` and one of `B_up`.
    fn extremes_parametrize(&self) -> Option<String> {
        let b = self.q.interval();
        for (set, label) in [
            (min_set(self.sys, b), "B_down"),
            (critical_set(self.sys, b), "B_up"),
        ] {
            let hit: BTreeSet<usize> = set.iter().filter_map(|x| self.q.coset_index(x)).collect();
            if set.len() != self.q.len() || hit.len() != self.q.len() {
                return Some(format!(
                    "{label}(w) has {} elements meeting {} of {} cosets",
                    set.len(),
                    hit.len(),
                    self.q.len()
                ));
            }
        }
        None
    }

    fn length_split(&self) -> Option<String> {
        let b = self.q.interval();
        for (i, u) in b.members().iter().enumerate() {
            let c = &self.q.cosets()[self.q.partition().coset_of(i)];
            let mid = c.mid();
            if mid > u.length() || mid + (u.length() - mid) != u.length() {
                return Some(format!("l({}) does not split", self.name(u)));
            }
            if u.length() > c.length() {
                return Some(format!("{} longer than its coset top", self.name(u)));
            }
        }
        None
    }

    /// `mid_w` (and optionally `side_w`) weakly increasing along Bruhat
    /// edges, which generate the order.
    fn monotone(&self, with_side: bool) -> Option<String> {
        let b = self.q.interval();
        let part = self.q.partition();
        let mid = |i: usize| self.q.cosets()[part.coset_of(i)].mid();
        for &(i, j) in b.edges() {
            let (u, v) = (&b.members()[i], &b.members()[j]);
            if mid(i) > mid(j) {
                return Some(format!(
                    "mid drops along {} -> {}",
                    self.name(u),
                    self.name(v)
                ));
            }
            if with_side && u.length() - mid(i) > v.length() - mid(j) {
                return Some(format!(
                    "side drops along {} -> {}",
                    self.name(u),
                    self.name(v)
                ));
            }
        }
        None
    }

    fn min_set_faithful(&self) -> Result<Option<String>> {
        let low = min_set(self.sys, self.q.interval());
        let r = check_faithful(&low, self.q.interval())?;
        Ok((!r.graded).then(|| format!("B_down(w): {:?}", r.failure)))
    }

    fn degree_monotone(&self) -> Option<String> {
        let cosets = self.q.cosets();
        for c in 0..cosets.len() {
            for d in 0..cosets.len() {
                if self.q.leq(c, d) && cosets[c].degree() > cosets[d].degree() {
                    return Some(format!(
                        "deg drops from coset of {} to coset of {}",
                        self.name(cosets[c].max()),
                        self.name(cosets[d].max())
                    ));
                }
            }
        }
        None
    }

    fn arc_equivalence(&self) -> Option<String> {
        let check = quotient_graph_check(self.sys, self.q);
        let cosets = self.q.cosets();
        let pair = |&(c, d): &(usize, usize)| {
            format!(
                "{} / {}",
                self.name(cosets[c].min()),
                self.name(cosets[d].min())
            )
        };
        if let Some(p) = check.forward_violations.first() {
            return Some(format!("edge between minima without arc: {}", pair(p)));
        }
        if let Some(p) = check.converse_violations.first() {
            return Some(format!("arc without edge between minima: {}", pair(p)));
        }
        // The map C -> P_down(C) is then a digraph isomorphism; confirm with
        // an independent search as well.
        let b = self.q.interval();
        let mins = self.q.min_indices();
        let induced =
            crate::poset::Relation::from_fn(mins.len(), |a, c| b.has_edge(mins[a], mins[c]));
        isomorphism(&self.q.arc_relation(), &induced)
            .is_none()
            .then(|| String::from("no digraph isomorphism to B_down(w)"))
    }
}

fn subject(sys: &CoxeterSystem, theorem: &str, w: &Element) -> String {
    format!("{theorem} w={}", sys.format_element(w))
}

/// Checks every clause of the first structure theorem on `C(w)`.
pub fn verify_theorem1_on(sys: &CoxeterSystem, q: &QuotientInterval) -> CheckReport {
    let f = Facts { sys, q };
    let err = |e: crate::error::Error| Some(format!("error: {e}"));
    let clauses = alloc::vec![
        Clause::from_check("partition", f.partition()),
        Clause::from_check("quotient-interval", f.quotient_interval()),
        Clause::from_check("coset-subinterval", f.coset_subinterval()),
        Clause::from_check(
            "coset-almost-faithful",
            f.coset_almost_faithful().unwrap_or_else(err)
        ),
        Clause::from_check("bottom-faithful", f.bottom_faithful().unwrap_or_else(err)),
        Clause::from_check("coset-regular", f.coset_regular()),
        Clause::from_check("extremes", f.extremes().unwrap_or_else(err)),
        Clause::from_check(
            "extremes-isomorphic",
            f.extremes_isomorphic().unwrap_or_else(err)
        ),
        Clause::from_check("extremes-parametrize", f.extremes_parametrize()),
        Clause::from_check("length-split", f.length_split()),
        Clause::from_check("mid-monotone", f.monotone(false)),
    ];
    CheckReport::new(subject(sys, "theorem1", q.w()), clauses)
}

/// Checks every clause of the second structure theorem, or skips them all
/// when `w` is not separated.
pub fn verify_theorem2_on(sys: &CoxeterSystem, q: &QuotientInterval) -> CheckReport {
    let subject = subject(sys, "theorem2", q.w());
    if !is_separated(sys, q.w()) {
        let reason = String::from("hypothesis `separated` fails");
        let clauses = THEOREM2_CLAUSES
            .iter()
            .map(|(name, _)| Clause::skip(name, reason.clone()))
            .collect();
        return CheckReport::new(subject, clauses);
    }
    let f = Facts { sys, q };
    let err = |e: crate::error::Error| Some(format!("error: {e}"));
    let clauses = alloc::vec![
        Clause::from_check("partition", f.partition()),
        Clause::from_check(
            "extremes-isomorphic",
            f.extremes_isomorphic().unwrap_or_else(err)
        ),
        Clause::from_check("min-set-faithful", f.min_set_faithful().unwrap_or_else(err)),
        Clause::from_check("extremes-parametrize", f.extremes_parametrize()),
        Clause::from_check("length-split", f.length_split()),
        Clause::from_check("mid-side-monotone", f.monotone(true)),
        Clause::from_check("coset-subinterval", f.coset_subinterval()),
        Clause::from_check(
            "coset-almost-faithful",
            f.coset_almost_faithful().unwrap_or_else(err)
        ),
        Clause::from_check("coset-regular", f.coset_regular()),
        Clause::from_check("degree-monotone", f.degree_monotone()),
        Clause::from_check("arc-equivalence", f.arc_equivalence()),
    ];
    CheckReport::new(subject, clauses)
}

fn build_failed(
    sys: &CoxeterSystem,
    theorem: &str,
    w: &Element,
    e: crate::error::Error,
) -> CheckReport {
    CheckReport::new(
        subject(sys, theorem, w),
        alloc::vec![Clause::fail("partition", format!("error: {e}"))],
    )
}

pub fn verify_theorem1(sys: &CoxeterSystem, w: &Element) -> CheckReport {
    match crate::quotient::quotient_interval(sys, w) {
        Ok(q) => verify_theorem1_on(sys, &q),
        Err(e) => build_failed(sys, "theorem1", w, e),
    }
}

pub fn verify_theorem2(sys: &CoxeterSystem, w: &Element) -> CheckReport {
    match crate::quotient::quotient_interval(sys, w) {
        Ok(q) => verify_theorem2_on(sys, &q),
        Err(e) => build_failed(sys, "theorem2", w, e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::report::Outcome;

    #[test]
    fn clause_lists_match_constants() {
        let sys = CoxeterSystem::type_a(3).unwrap();
        let w = sys.parse_element("3412").unwrap();
        let r = verify_theorem1(&sys, &w);
        let names: Vec<&str> = THEOREM1_CLAUSES.iter().map(|c| c.0).collect();
        assert_eq!(r.clause_names(), names);
        assert!(r.passed(), "{r}");
        let r = verify_theorem2(&sys, &w);
        let names: Vec<&str> = THEOREM2_CLAUSES.iter().map(|c| c.0).collect();
        assert_eq!(r.clause_names(), names);
        assert!(r.passed() && !r.skipped(), "{r}");
    }

    #[test]
    fn identity_passes_degenerately() {
        let sys = CoxeterSystem::type_a(2).unwrap();
        assert!(verify_theorem1(&sys, &sys.identity()).passed());
        assert!(verify_theorem2(&sys, &sys.identity()).passed());
    }

    #[test]
    fn non_separated_is_skipped() {
        let sys = CoxeterSystem::type_a(5).unwrap();
        let w = sys.parse_element("456123").unwrap();
        let r = verify_theorem2(&sys, &w);
        assert!(r.skipped() && r.passed());
        assert!(r.clauses.iter().all(|c| c.outcome == Outcome::Skip));
        assert_eq!(r.clauses.len(), THEOREM2_CLAUSES.len());
    }

    #[test]
    fn worked_examples_pass() {
        let sys = CoxeterSystem::type_a(4).unwrap();
        for w in ["45312", "52341"] {
            let w = sys.parse_element(w).unwrap();
            let r = verify_theorem2(&sys, &w);
            assert!(r.passed() && !r.skipped(), "{r}");
        }
    }
}
