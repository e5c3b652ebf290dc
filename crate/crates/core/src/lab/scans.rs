//! Evidence gathering around degrees and length generating functions:
//! Deodhar's inequality, degree class invariance, the degree-monotonicity
//! question, Poincaré polynomials, and witness hunts for the phenomena
//! that distinguish two-sided cosets from one-sided ones.
//!
//! Per-`w` functions are independent so callers may run them in parallel;
//! the aggregators fold results in scope order.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bits::GeneratorSet;
use crate::bruhat::{bruhat_leq, LowerInterval};
use crate::coset::{double_coset_closure, min_set, strip_to_minimum, Partition};
use crate::element::{Element, Side};
use crate::error::Result;
use crate::lab::report::{CheckReport, Clause};
use crate::quotient::{is_separated, QuotientInterval};
use crate::system::CoxeterSystem;

/// A polynomial with nonnegative integer coefficients; index = degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial(pub Vec<u64>);

impl Polynomial {
    pub fn coefficients(&self) -> &[u64] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|&c| c != 0)
    }

    /// Value at `q = 1`.
    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("q")?,
                (1, c) => write!(f, "{c}q")?,
                (k, 1) => write!(f, "q^{k}")?,
                (k, c) => write!(f, "{c}q^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `P_w(q) = sum over u in B(w) of q^l(u)`.
pub fn poincare_of(interval: &LowerInterval) -> Polynomial {
    Polynomial(
        interval
            .level_counts()
            .into_iter()
            .map(|c| c as u64)
            .collect(),
    )
}

pub fn poincare(sys: &CoxeterSystem, w: &Element) -> Polynomial {
    poincare_of(&LowerInterval::new(sys, w))
}

/// `(P_w, P_{P_down(w)})`, for exploration only.
pub fn poincare_compare(sys: &CoxeterSystem, w: &Element) -> (Polynomial, Polynomial) {
    let (left, right) = (sys.descents(w, Side::Left), sys.descents(w, Side::Right));
    let bottom = strip_to_minimum(sys, w, left, right);
    (poincare(sys, w), poincare(sys, &bottom))
}

/// A member `u` of `B(w)` with its degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeAt {
    pub w: Element,
    pub u: Element,
    pub degree: usize,
}

/// Deodhar's inequality `deg_w(u) >= l(w)` on one interval.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeodharResult {
    pub w: Element,
    /// `min over u of deg_w(u) - l(w)`.
    pub slack: i64,
    pub violations: Vec<DegreeAt>,
}

pub fn deodhar_one(sys: &CoxeterSystem, w: &Element) -> DeodharResult {
    let b = LowerInterval::new(sys, w);
    let mut slack = i64::MAX;
    let mut violations = Vec::new();
    for (i, u) in b.members().iter().enumerate() {
        let d = b.degree_at(i);
        slack = slack.min(d as i64 - w.length() as i64);
        if (d as u32) < w.length() {
            violations.push(DegreeAt {
                w: w.clone(),
                u: u.clone(),
                degree: d,
            });
        }
    }
    DeodharResult {
        w: w.clone(),
        slack,
        violations,
    }
}

/// Aggregated Deodhar scan.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeodharScan {
    pub intervals: usize,
    pub min_slack: Option<i64>,
    pub violations: Vec<DegreeAt>,
}

impl DeodharScan {
    pub fn collect(results: Vec<DeodharResult>) -> Self {
        DeodharScan {
            intervals: results.len(),
            min_slack: results.iter().map(|r| r.slack).min(),
            violations: results.into_iter().flat_map(|r| r.violations).collect(),
        }
    }

    pub fn report(&self, sys: &CoxeterSystem) -> CheckReport {
        let clause = match self.violations.first() {
            None => Clause::pass_with(
                "deodhar",
                format!(
                    "{} intervals, min slack {}",
                    self.intervals,
                    self.min_slack
                        .map_or(String::from("n/a"), |s| format!("{s}"))
                ),
            ),
            Some(v) => Clause::fail(
                "deodhar",
                format!(
                    "{} violations; first: w={} u={} deg={}",
                    self.violations.len(),
                    sys.format_element(&v.w),
                    sys.format_element(&v.u),
                    v.degree
                ),
            ),
        };
        CheckReport::new(String::from("deodhar"), alloc::vec![clause])
    }
}

pub fn deodhar_scan(sys: &CoxeterSystem, scope: &[Element]) -> DeodharScan {
    DeodharScan::collect(scope.iter().map(|w| deodhar_one(sys, w)).collect())
}

/// Pairs `u ~_w v` with different degrees, found in one interval.
pub fn degree_class_one(sys: &CoxeterSystem, w: &Element) -> Result<Vec<(DegreeAt, DegreeAt)>> {
    let b = LowerInterval::new(sys, w);
    let part = Partition::new(sys, &b)?;
    let mut first: Vec<Option<usize>> = alloc::vec![None; part.len()];
    let mut out = Vec::new();
    for i in 0..b.len() {
        let c = part.coset_of(i);
        match first[c] {
            None => first[c] = Some(i),
            Some(r) if b.degree_at(r) != b.degree_at(i) => {
                let at = |k: usize| DegreeAt {
                    w: w.clone(),
                    u: b.members()[k].clone(),
                    degree: b.degree_at(k),
                };
                out.push((at(r), at(i)));
            }
            Some(_) => {}
        }
    }
    Ok(out)
}

/// Degree class invariance over a scope.
pub fn degree_class_scan(sys: &CoxeterSystem, scope: &[Element]) -> Result<CheckReport> {
    let mut violations = Vec::new();
    for w in scope {
        violations.extend(degree_class_one(sys, w)?);
    }
    let clause = match violations.first() {
        None => Clause::pass_with("degree-class", format!("{} intervals", scope.len())),
        Some((a, b)) => Clause::fail(
            "degree-class",
            format!(
                "w={}: deg({})={} but deg({})={}",
                sys.format_element(&a.w),
                sys.format_element(&a.u),
                a.degree,
                sys.format_element(&b.u),
                b.degree
            ),
        ),
    };
    Ok(CheckReport::new(
        String::from("degree-class"),
        alloc::vec![clause],
    ))
}

/// `u < v` in `B(w)` with `deg_w(u) < deg_w(v)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonotoneWitness {
    pub w: Element,
    pub u: Element,
    pub v: Element,
    pub deg_u: usize,
    pub deg_v: usize,
}

/// Per-interval result of the degree-monotonicity search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonotoneResult {
    pub w: Element,
    pub comparable_pairs: usize,
    /// Total number of witnesses in this interval.
    pub witness_count: usize,
    /// The first `limit` witnesses in member order.
    pub witnesses: Vec<MonotoneWitness>,
}

pub fn degree_monotone_one(sys: &CoxeterSystem, w: &Element, limit: usize) -> MonotoneResult {
    let b = LowerInterval::new(sys, w);
    let mut comparable_pairs = 0;
    let mut witness_count = 0;
    let mut witnesses = Vec::new();
    for j in 0..b.len() {
        for i in 0..b.len() {
            if i == j || !b.leq(i, j) {
                continue;
            }
            comparable_pairs += 1;
            let (du, dv) = (b.degree_at(i), b.degree_at(j));
            if du < dv {
                witness_count += 1;
                if witnesses.len() < limit {
                    witnesses.push(MonotoneWitness {
                        w: w.clone(),
                        u: b.members()[i].clone(),
                        v: b.members()[j].clone(),
                        deg_u: du,
                        deg_v: dv,
                    });
                }
            }
        }
    }
    MonotoneResult {
        w: w.clone(),
        comparable_pairs,
        witness_count,
        witnesses,
    }
}

/// Aggregated degree-monotonicity evidence. Never a pass/fail verdict.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonotoneScan {
    pub intervals: usize,
    pub comparable_pairs: usize,
    pub witness_count: usize,
    pub witnesses: Vec<MonotoneWitness>,
}

impl MonotoneScan {
    pub fn collect(results: Vec<MonotoneResult>) -> Self {
        MonotoneScan {
            intervals: results.len(),
            comparable_pairs: results.iter().map(|r| r.comparable_pairs).sum(),
            witness_count: results.iter().map(|r| r.witness_count).sum(),
            witnesses: results.into_iter().flat_map(|r| r.witnesses).collect(),
        }
    }

    pub fn report(&self, sys: &CoxeterSystem) -> CheckReport {
        let evidence = match self.witnesses.first() {
            None => format!(
                "none found in {} intervals ({} comparable pairs)",
                self.intervals, self.comparable_pairs
            ),
            Some(x) => format!(
                "{} witnesses in {} comparable pairs; first: w={} u={} (deg {}) < v={} (deg {})",
                self.witness_count,
                self.comparable_pairs,
                sys.format_element(&x.w),
                sys.format_element(&x.u),
                x.deg_u,
                sys.format_element(&x.v),
                x.deg_v
            ),
        };
        CheckReport::new(
            String::from("degree-monotone"),
            alloc::vec![Clause::note("degree-monotone", evidence)],
        )
    }
}

pub fn degree_monotone_scan(sys: &CoxeterSystem, scope: &[Element], limit: usize) -> MonotoneScan {
    MonotoneScan::collect(
        scope
            .iter()
            .map(|w| degree_monotone_one(sys, w, limit))
            .collect(),
    )
}

/// `v = x u y = x' u y'` with additive lengths and `(x, y) != (x', y')`,
/// where `u` is the minimum of `W_I u W_J`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NonUniqueWitness {
    pub left: GeneratorSet,
    pub right: GeneratorSet,
    pub u: Element,
    pub v: Element,
    pub first: (Element, Element),
    pub second: (Element, Element),
}

/// `W_I u W_J = W_I' u W_J'` with `(I, J) != (I', J')`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexChoiceWitness {
    pub u: Element,
    pub first: (GeneratorSet, GeneratorSet),
    pub second: (GeneratorSet, GeneratorSet),
}

/// `u < w` in `^I W^J` with `l(u, w) >= 2` and nothing of the quotient
/// strictly between.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GapWitness {
    pub left: GeneratorSet,
    pub right: GeneratorSet,
    pub u: Element,
    pub w: Element,
}

/// Witnesses for the two-sided coset phenomena.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RemarkWitnesses {
    pub non_unique: Option<NonUniqueWitness>,
    pub index_choice: Option<IndexChoiceWitness>,
    pub not_graded: Option<GapWitness>,
    /// Number of `(u, I, J)` triples examined.
    pub triples: usize,
}

impl RemarkWitnesses {
    pub fn report(&self, sys: &CoxeterSystem) -> CheckReport {
        let f = |x: &Element| sys.format_element(x);
        let found = |name: &str, w: Option<String>| match w {
            Some(w) => Clause::note(name, w),
            None => Clause::note(name, String::from("none found")),
        };
        let clauses = alloc::vec![
            found(
                "non-unique-factorization",
                self.non_unique.as_ref().map(|x| format!(
                    "I={} J={} u={} v={}: ({}, {}) and ({}, {})",
                    x.left,
                    x.right,
                    f(&x.u),
                    f(&x.v),
                    f(&x.first.0),
                    f(&x.first.1),
                    f(&x.second.0),
                    f(&x.second.1)
                ))
            ),
            found(
                "index-choice",
                self.index_choice.as_ref().map(|x| format!(
                    "u={}: (I, J) = ({}, {}) and ({}, {})",
                    f(&x.u),
                    x.first.0,
                    x.first.1,
                    x.second.0,
                    x.second.1
                ))
            ),
            found(
                "two-sided-quotient-not-graded",
                self.not_graded.as_ref().map(|x| format!(
                    "I={} J={}: {} < {} with no quotient element between",
                    x.left,
                    x.right,
                    f(&x.u),
                    f(&x.w)
                ))
            ),
        ];
        CheckReport::new(
            format!("remark-witnesses triples={}", self.triples),
            clauses,
        )
    }
}

/// Hunts the three two-sided phenomena over `(u, I, J)` for `u` in
/// `universe`. Requires a finite group: every `W_I` is enumerated.
pub fn remark_witness_hunt(sys: &CoxeterSystem, universe: &[Element]) -> RemarkWitnesses {
    let subsets: Vec<GeneratorSet> = GeneratorSet::all_subsets(sys.rank()).collect();
    let pairs: Vec<(GeneratorSet, GeneratorSet)> = subsets
        .iter()
        .flat_map(|&i| subsets.iter().map(move |&j| (i, j)))
        .collect();
    remark_witness_hunt_in(sys, universe, &pairs)
}

/// [`remark_witness_hunt`] restricted to the given index pairs `(I, J)`.
pub fn remark_witness_hunt_in(
    sys: &CoxeterSystem,
    universe: &[Element],
    pairs: &[(GeneratorSet, GeneratorSet)],
) -> RemarkWitnesses {
    let parabolic =
        |i: GeneratorSet| double_coset_closure(sys, &sys.identity(), i, GeneratorSet::EMPTY);
    let mut out = RemarkWitnesses::default();
    let mut seen_cosets: alloc::collections::BTreeMap<Vec<Element>, (GeneratorSet, GeneratorSet)> =
        alloc::collections::BTreeMap::new();
    for &(i, j) in pairs {
        let (wi, wj) = (parabolic(i), parabolic(j));
        for u in universe {
            out.triples += 1;
            let coset = double_coset_closure(sys, u, i, j);
            match seen_cosets.get(&coset) {
                Some(&(i0, j0)) if (i0, j0) != (i, j) => {
                    if out.index_choice.is_none() {
                        out.index_choice = Some(IndexChoiceWitness {
                            u: u.clone(),
                            first: (i0, j0),
                            second: (i, j),
                        });
                    }
                }
                Some(_) => {}
                None => {
                    seen_cosets.insert(coset.clone(), (i, j));
                }
            }
            if out.non_unique.is_none() && coset[0] == *u {
                out.non_unique = find_non_unique(sys, u, &coset, i, j, &wi, &wj);
            }
        }
        if out.not_graded.is_none() {
            out.not_graded = find_gap(sys, universe, i, j);
        }
    }
    out
}

fn find_non_unique(
    sys: &CoxeterSystem,
    u: &Element,
    coset: &[Element],
    i: GeneratorSet,
    j: GeneratorSet,
    wi: &[Element],
    wj: &[Element],
) -> Option<NonUniqueWitness> {
    for v in coset {
        let mut first: Option<(Element, Element)> = None;
        for x in wi {
            let xu = sys.multiply(x, u);
            for y in wj {
                if x.length() + u.length() + y.length() != v.length() {
                    continue;
                }
                if sys.multiply(&xu, y) == *v {
                    match &first {
                        None => first = Some((x.clone(), y.clone())),
                        Some(f) => {
                            return Some(NonUniqueWitness {
                                left: i,
                                right: j,
                                u: u.clone(),
                                v: v.clone(),
                                first: f.clone(),
                                second: (x.clone(), y.clone()),
                            })
                        }
                    }
                }
            }
        }
    }
    None
}

fn find_gap(
    sys: &CoxeterSystem,
    universe: &[Element],
    i: GeneratorSet,
    j: GeneratorSet,
) -> Option<GapWitness> {
    let q: Vec<&Element> = universe
        .iter()
        .filter(|x| {
            sys.descents(x, Side::Left).intersection(i).is_empty()
                && sys.descents(x, Side::Right).intersection(j).is_empty()
        })
        .collect();
    for w in &q {
        for u in &q {
            if u.length() + 2 > w.length() || !bruhat_leq(sys, u, w) {
                continue;
            }
            let between = q
                .iter()
                .any(|z| z != u && z != w && bruhat_leq(sys, u, z) && bruhat_leq(sys, z, w));
            if !between {
                return Some(GapWitness {
                    left: i,
                    right: j,
                    u: (*u).clone(),
                    w: (*w).clone(),
                });
            }
        }
    }
    None
}

/// A separated `w` where `|B(w)| != |B_down(w)| * |top coset|`, showing
/// `B(w)` is not the direct product of the two graded structures.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProductWitness {
    pub w: Element,
    pub interval_size: usize,
    pub min_set_size: usize,
    pub top_coset_size: usize,
}

pub fn direct_product_one(sys: &CoxeterSystem, w: &Element) -> Result<Option<ProductWitness>> {
    if !is_separated(sys, w) {
        return Ok(None);
    }
    let q = QuotientInterval::new(sys, LowerInterval::new(sys, w))?;
    let b = q.interval();
    let min_set_size = min_set(sys, b).len();
    let top_coset_size = q.cosets()[q.top()].len();
    Ok(
        (b.len() != min_set_size * top_coset_size).then(|| ProductWitness {
            w: w.clone(),
            interval_size: b.len(),
            min_set_size,
            top_coset_size,
        }),
    )
}

/// First separated `w` in scope that is not a direct product.
pub fn direct_product_witness(
    sys: &CoxeterSystem,
    scope: &[Element],
) -> Result<Option<ProductWitness>> {
    for w in scope {
        if let Some(x) = direct_product_one(sys, w)? {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// Every element of a finite group, sorted. `None` when the group has an
/// element longer than `max_length` (in particular when it is infinite).
pub fn all_elements(sys: &CoxeterSystem, max_length: u32) -> Option<Vec<Element>> {
    let w0 = sys.longest_element(max_length)?;
    Some(LowerInterval::new(sys, &w0).members().to_vec())
}

/// Distinct members of a list, in first-seen order.
pub fn dedup_scope(scope: Vec<Element>) -> Vec<Element> {
    let mut seen = BTreeSet::new();
    scope
        .into_iter()
        .filter(|x| seen.insert(x.clone()))
        .collect()
}
