//! Bruhat cosets `C_w(u) = W_{D_L(w)} u W_{D_R(w)}` and the partition of
//! `B(w)` into them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::bits::GeneratorSet;
use crate::bruhat::{bruhat_leq, LowerInterval};
use crate::element::{Element, Side};
use crate::error::{Error, Result};
use crate::system::CoxeterSystem;

/// One two-sided coset `C_w(u)` of `B(w)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BruhatCoset {
    left: GeneratorSet,
    right: GeneratorSet,
    members: Vec<Element>,
    min: Element,
    max: Element,
}

impl BruhatCoset {
    /// Left index set `I = D_L(w)`.
    pub fn left(&self) -> GeneratorSet {
        self.left
    }

    /// Right index set `J = D_R(w)`.
    pub fn right(&self) -> GeneratorSet {
        self.right
    }

    /// Members sorted by `(length, canonical form)`.
    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.members.binary_search(x).is_ok()
    }

    /// `P_down(C)`, the Bruhat minimum.
    pub fn min(&self) -> &Element {
        &self.min
    }

    /// `P_up(C)`, the Bruhat maximum.
    pub fn max(&self) -> &Element {
        &self.max
    }

    /// `mid_w(C) = l(P_down(C))`.
    pub fn mid(&self) -> u32 {
        self.min.length()
    }

    /// `side_w(C) = l(P_up(C)) - l(P_down(C))`.
    pub fn side(&self) -> u32 {
        self.max.length() - self.min.length()
    }

    /// `l(C) = mid + side = l(P_up(C))`.
    pub fn length(&self) -> u32 {
        self.mid() + self.side()
    }

    /// Graph degree of the coset, equal to its side length.
    pub fn degree(&self) -> u32 {
        self.side()
    }
}

/// Closure of `{u}` under `x -> s x` (`s` in `left`) and `x -> x s`
/// (`s` in `right`). Terminates only when the two-sided coset is finite.
pub fn double_coset_closure(
    sys: &CoxeterSystem,
    u: &Element,
    left: GeneratorSet,
    right: GeneratorSet,
) -> Vec<Element> {
    let mut seen: BTreeSet<Element> = BTreeSet::new();
    let mut stack = Vec::new();
    seen.insert(u.clone());
    stack.push(u.clone());
    while let Some(x) = stack.pop() {
        let neighbours = left
            .iter()
            .map(|s| sys.lmul_gen(s, &x))
            .chain(right.iter().map(|s| sys.rmul_gen(&x, s)));
        for y in neighbours {
            if !seen.contains(&y) {
                seen.insert(y.clone());
                stack.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

fn extreme(sys: &CoxeterSystem, members: &[Element], top: bool) -> Result<Element> {
    let candidate = if top { members.last() } else { members.first() }.expect("coset is nonempty");
    let dominates = members.iter().all(|x| {
        if top {
            bruhat_leq(sys, x, candidate)
        } else {
            bruhat_leq(sys, candidate, x)
        }
    });
    if dominates {
        Ok(candidate.clone())
    } else {
        Err(Error::Inconsistent(format!(
            "coset has no Bruhat {} at {}",
            if top { "maximum" } else { "minimum" },
            sys.format_element(candidate)
        )))
    }
}

fn build(
    sys: &CoxeterSystem,
    u: &Element,
    left: GeneratorSet,
    right: GeneratorSet,
) -> Result<BruhatCoset> {
    let members = double_coset_closure(sys, u, left, right);
    let min = extreme(sys, &members, false)?;
    let max = extreme(sys, &members, true)?;
    Ok(BruhatCoset {
        left,
        right,
        members,
        min,
        max,
    })
}

fn index_sets(sys: &CoxeterSystem, w: &Element) -> (GeneratorSet, GeneratorSet) {
    (sys.descents(w, Side::Left), sys.descents(w, Side::Right))
}

fn require_below(sys: &CoxeterSystem, u: &Element, w: &Element) -> Result<()> {
    if bruhat_leq(sys, u, w) {
        Ok(())
    } else {
        Err(Error::NotBelow)
    }
}

/// `C_w(u)`, enumerated by closure.
pub fn coset(sys: &CoxeterSystem, w: &Element, u: &Element) -> Result<BruhatCoset> {
    require_below(sys, u, w)?;
    let (left, right) = index_sets(sys, w);
    build(sys, u, left, right)
}

/// Strips left descents in `left` and right descents in `right` until none
/// remain; the result is the minimum of `W_left u W_right`.
pub fn strip_to_minimum(
    sys: &CoxeterSystem,
    u: &Element,
    left: GeneratorSet,
    right: GeneratorSet,
) -> Element {
    let mut x = u.clone();
    loop {
        if let Some(s) = left.iter().find(|&s| sys.has_descent(&x, s, Side::Left)) {
            x = sys.lmul_gen(s, &x);
        } else if let Some(s) = right.iter().find(|&s| sys.has_descent(&x, s, Side::Right)) {
            x = sys.rmul_gen(&x, s);
        } else {
            return x;
        }
    }
}

/// `P_down(u) = min C_w(u)`, by greedy descent stripping.
pub fn project_down(sys: &CoxeterSystem, w: &Element, u: &Element) -> Result<Element> {
    require_below(sys, u, w)?;
    let (left, right) = index_sets(sys, w);
    Ok(strip_to_minimum(sys, u, left, right))
}

/// `P_up(u) = max C_w(u)`, by enumerating the coset.
pub fn project_up(sys: &CoxeterSystem, w: &Element, u: &Element) -> Result<Element> {
    Ok(coset(sys, w, u)?.max)
}

/// Greedy ascent: multiply by any length-increasing `s` in `D_L(w)` on the
/// left or `D_R(w)` on the right until stuck. Must agree with
/// [`project_up`]; only an optimization.
pub fn project_up_greedy(sys: &CoxeterSystem, w: &Element, u: &Element) -> Result<Element> {
    require_below(sys, u, w)?;
    let (left, right) = index_sets(sys, w);
    let mut x = u.clone();
    loop {
        if let Some(s) = left.iter().find(|&s| !sys.has_descent(&x, s, Side::Left)) {
            x = sys.lmul_gen(s, &x);
        } else if let Some(s) = right.iter().find(|&s| !sys.has_descent(&x, s, Side::Right)) {
            x = sys.rmul_gen(&x, s);
        } else {
            return Ok(x);
        }
    }
}

/// `u ~_w v`.
pub fn same_coset(sys: &CoxeterSystem, w: &Element, u: &Element, v: &Element) -> Result<bool> {
    Ok(project_down(sys, w, u)? == project_down(sys, w, v)?)
}

/// `(mid_w(u), side_w(u))`.
pub fn mid_side(sys: &CoxeterSystem, w: &Element, u: &Element) -> Result<(u32, u32)> {
    let mid = project_down(sys, w, u)?.length();
    Ok((mid, u.length() - mid))
}

/// The partition of `B(w)` into Bruhat cosets.
///
/// Cosets are ordered by `P_up` descending in `(length, canonical form)`.
#[derive(Clone, Debug)]
pub struct Partition {
    left: GeneratorSet,
    right: GeneratorSet,
    cosets: Vec<BruhatCoset>,
    coset_of: Vec<usize>,
}

impl Partition {
    pub fn new(sys: &CoxeterSystem, interval: &LowerInterval) -> Result<Self> {
        let (left, right) = index_sets(sys, interval.top());
        let n = interval.len();
        let mut assigned = alloc::vec![false; n];
        let mut cosets = Vec::new();
        for (i, u) in interval.members().iter().enumerate() {
            if assigned[i] {
                continue;
            }
            let c = build(sys, u, left, right)?;
            for x in c.members() {
                let k = interval.index_of(x).ok_or_else(|| {
                    Error::Inconsistent(format!(
                        "coset member {} escapes B(w)",
                        sys.format_element(x)
                    ))
                })?;
                if assigned[k] {
                    return Err(Error::Inconsistent(format!(
                        "{} lies in two cosets",
                        sys.format_element(x)
                    )));
                }
                assigned[k] = true;
            }
            cosets.push(c);
        }
        cosets.sort_by(|a, b| b.max.cmp(&a.max));
        let mut coset_of = alloc::vec![0; n];
        for (c, coset) in cosets.iter().enumerate() {
            for x in coset.members() {
                coset_of[interval.index_of(x).expect("checked above")] = c;
            }
        }
        Ok(Partition {
            left,
            right,
            cosets,
            coset_of,
        })
    }

    pub fn left(&self) -> GeneratorSet {
        self.left
    }

    pub fn right(&self) -> GeneratorSet {
        self.right
    }

    pub fn cosets(&self) -> &[BruhatCoset] {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Coset index of the interval member with index `i`.
    pub fn coset_of(&self, i: usize) -> usize {
        self.coset_of[i]
    }

    /// Per-member coset indices, aligned with the interval's members.
    pub fn assignment(&self) -> &[usize] {
        &self.coset_of
    }

    /// `mid_w` for each interval member, in member order.
    pub fn mids(&self) -> Vec<u32> {
        self.coset_of
            .iter()
            .map(|&c| self.cosets[c].mid())
            .collect()
    }

    /// Member count of each coset, keyed by `P_up`. Convenience for tests
    /// and reports.
    pub fn sizes(&self) -> BTreeMap<Element, usize> {
        self.cosets
            .iter()
            .map(|c| (c.max.clone(), c.len()))
            .collect()
    }
}

pub fn partition(sys: &CoxeterSystem, w: &Element) -> Result<Partition> {
    Partition::new(sys, &LowerInterval::new(sys, w))
}

/// `B_up(w)`: members `u` with `D_L(w) ⊆ D_L(u)` and `D_R(w) ⊆ D_R(u)`.
pub fn critical_set(sys: &CoxeterSystem, interval: &LowerInterval) -> Vec<Element> {
    let (left, right) = index_sets(sys, interval.top());
    interval
        .members()
        .iter()
        .filter(|u| {
            left.is_subset(sys.descents(u, Side::Left))
                && right.is_subset(sys.descents(u, Side::Right))
        })
        .cloned()
        .collect()
}

/// `B_down(w)`: members with no left descent in `D_L(w)` and no right
/// descent in `D_R(w)`.
pub fn min_set(sys: &CoxeterSystem, interval: &LowerInterval) -> Vec<Element> {
    let (left, right) = index_sets(sys, interval.top());
    interval
        .members()
        .iter()
        .filter(|u| {
            sys.descents(u, Side::Left).intersection(left).is_empty()
                && sys.descents(u, Side::Right).intersection(right).is_empty()
        })
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::String;

    fn names(sys: &CoxeterSystem, xs: &[Element]) -> BTreeSet<String> {
        xs.iter().map(|x| sys.format_element(x)).collect()
    }

    fn set(xs: &[&str]) -> BTreeSet<String> {
        xs.iter().map(|s| String::from(*s)).collect()
    }

    #[test]
    fn cosets_of_3412() {
        let sys = CoxeterSystem::type_a(3).unwrap();
        let p = |s: &str| sys.parse_element(s).unwrap();
        let w = p("3412");
        let c = coset(&sys, &w, &p("2143")).unwrap();
        assert_eq!(
            names(&sys, c.members()),
            set(&["3412", "3142", "2413", "2143"])
        );
        assert_eq!((c.mid(), c.side(), c.length()), (2, 2, 4));
        let c = coset(&sys, &w, &sys.identity()).unwrap();
        assert_eq!(names(&sys, c.members()), set(&["1324", "1234"]));
        assert_eq!(sys.format_element(c.max()), "1324");

        assert_eq!(
            sys.format_element(&project_down(&sys, &w, &p("3214")).unwrap()),
            "2134"
        );
        assert!(project_down(&sys, &w, &sys.identity())
            .unwrap()
            .is_identity());
        assert_eq!(project_up(&sys, &w, &p("2143")).unwrap(), w);
        assert_eq!(
            sys.format_element(&project_up(&sys, &w, &sys.identity()).unwrap()),
            "1324"
        );
        assert_eq!(project_up(&sys, &w, &w).unwrap(), w);

        assert!(same_coset(&sys, &w, &p("2143"), &p("3142")).unwrap());
        assert!(!same_coset(&sys, &w, &p("2143"), &p("2134")).unwrap());
        assert_eq!(mid_side(&sys, &w, &w).unwrap(), (2, 2));
        assert_eq!(mid_side(&sys, &w, &p("1324")).unwrap(), (0, 1));
        assert_eq!(mid_side(&sys, &w, &sys.identity()).unwrap(), (0, 0));
        assert_eq!(coset(&sys, &w, &p("4321")), Err(Error::NotBelow));
        assert_eq!(
            project_down(&sys, &p("2143"), &p("3412")),
            Err(Error::NotBelow)
        );
    }

    #[test]
    fn trivial_coset() {
        let sys = CoxeterSystem::type_a(2).unwrap();
        let e = sys.identity();
        let c = coset(&sys, &e, &e).unwrap();
        assert_eq!(c.members(), core::slice::from_ref(&e));
        let p = partition(&sys, &e).unwrap();
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn partition_of_3412() {
        let sys = CoxeterSystem::type_a(3).unwrap();
        let w = sys.parse_element("3412").unwrap();
        let b = LowerInterval::new(&sys, &w);
        let part = Partition::new(&sys, &b).unwrap();
        let sizes: Vec<usize> = part.cosets().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, [4, 4, 4, 2]);
        let tops: Vec<String> = part
            .cosets()
            .iter()
            .map(|c| sys.format_element(c.max()))
            .collect();
        assert_eq!(tops, ["3412", "3214", "1432", "1324"]);
        assert_eq!(
            names(&sys, &critical_set(&sys, &b)),
            set(&["3412", "3214", "1432", "1324"])
        );
        assert_eq!(
            names(&sys, &min_set(&sys, &b)),
            set(&["2143", "2134", "1243", "1234"])
        );
    }

    #[test]
    fn worked_example_45312() {
        let sys = CoxeterSystem::type_a(4).unwrap();
        let w = sys.parse_element("45312").unwrap();
        let b = LowerInterval::new(&sys, &w);
        assert_eq!(
            sys.format_element(&project_down(&sys, &w, &w).unwrap()),
            "21354"
        );
        assert_eq!(
            names(&sys, &critical_set(&sys, &b)),
            set(&["45312", "43215", "15432", "14325"])
        );
        assert_eq!(
            names(&sys, &min_set(&sys, &b)),
            set(&["21354", "21345", "12354", "12345"])
        );
    }
}
