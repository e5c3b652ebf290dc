//! Versioned JSON documents. Field order is fixed by declaration order and
//! every document starts with `"v": 1`. Elements are written in canonical
//! text form and lists of elements are sorted by (length, canonical form).

use bruhat_core::lab::{CheckReport, Clause, Outcome};
use bruhat_core::{
    BruhatCoset, CoxeterSystem, Element, GeneratorSet, LowerInterval, Partition, QuotientInterval,
    Side, Word,
};
use serde::{Deserialize, Serialize};

use crate::descriptor::SystemDoc;
use crate::scope::{Context, ScopeDoc};

pub const SCHEMA_VERSION: u32 = 1;

/// `[e, w]` with its Bruhat graph. `edges` and `degrees` index `members`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IntervalDoc {
    pub v: u32,
    pub system: SystemDoc,
    pub w: String,
    pub length: u32,
    pub size: usize,
    /// Number of members of each length `0..=l(w)`.
    pub levels: Vec<usize>,
    pub members: Vec<String>,
    /// Bruhat graph degree of each member.
    pub degrees: Vec<usize>,
    /// Bruhat graph edges `u -> v` (`v = t u`, `l(u) < l(v)`) as member indices.
    pub edges: Vec<[usize; 2]>,
}

/// One Bruhat coset, as a row of the paper-style table.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CosetRow {
    pub members: Vec<String>,
    pub p_up: String,
    pub length: u32,
    pub p_down: String,
    pub mid: u32,
    pub side: u32,
    /// `P_up = x | P_down | y` with `x` in `W_I`, `y` in `W_J`, lengths adding.
    pub factorization: String,
}

/// The partition of `[e, w]` into Bruhat cosets, ordered by `P_up`
/// descending.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CosetsDoc {
    pub v: u32,
    pub system: SystemDoc,
    pub w: String,
    /// `D_L(w)` and `D_R(w)` as generator indices.
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub cosets: Vec<CosetRow>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QuotientChecks {
    /// `C -> D` exactly when `P_down(C) -> P_down(D)`.
    pub arc_equivalence: bool,
    /// Forward implication always holds, equivalence when separated.
    pub consistent: bool,
    pub forward_violations: Vec<[usize; 2]>,
    pub converse_violations: Vec<[usize; 2]>,
}

/// The quotient interval `C(w)`. Indices refer to `cosets`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct QuotientDoc {
    pub v: u32,
    pub system: SystemDoc,
    pub w: String,
    pub separated: bool,
    pub cosets: Vec<CosetRow>,
    /// Covering pairs `C < D` of the quotient order.
    pub order: Vec<[usize; 2]>,
    /// Arcs `C -> D` induced by Bruhat graph edges between members.
    pub arcs: Vec<[usize; 2]>,
    pub checks: QuotientChecks,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ClauseDoc {
    pub name: String,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReportDoc {
    pub subject: String,
    pub passed: bool,
    pub clauses: Vec<ClauseDoc>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Summary {
    pub reports: usize,
    pub passed: usize,
    pub failed: usize,
    /// Reports where every clause was skipped (a hypothesis fails).
    pub skipped: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckDoc {
    pub v: u32,
    pub check: String,
    pub system: SystemDoc,
    pub scope: ScopeDoc,
    pub summary: Summary,
    pub reports: Vec<ReportDoc>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DegreeDoc {
    pub w: String,
    pub u: String,
    pub degree: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MonotoneDoc {
    pub w: String,
    pub u: String,
    pub v: String,
    pub deg_u: usize,
    pub deg_v: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PoincareRow {
    pub w: String,
    pub poincare: Vec<u64>,
    /// `P_down(w)`, the minimum of the top coset.
    pub bottom: String,
    pub bottom_poincare: Vec<u64>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct NonUniqueDoc {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub u: String,
    pub v: String,
    pub first: [String; 2],
    pub second: [String; 2],
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IndexChoiceDoc {
    pub u: String,
    pub first: [Vec<usize>; 2],
    pub second: [Vec<usize>; 2],
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GapDoc {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub u: String,
    pub w: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ProductDoc {
    pub w: String,
    pub interval_size: usize,
    pub min_set_size: usize,
    pub top_coset_size: usize,
}

/// Scan-specific payload, tagged by `kind`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ScanData {
    Deodhar {
        intervals: usize,
        min_slack: Option<i64>,
        violations: Vec<DegreeDoc>,
    },
    Degmono {
        intervals: usize,
        comparable_pairs: usize,
        witness_count: usize,
        witnesses: Vec<MonotoneDoc>,
    },
    Poincare {
        rows: Vec<PoincareRow>,
    },
    Witnesses {
        triples: usize,
        non_unique: Option<Box<NonUniqueDoc>>,
        index_choice: Option<Box<IndexChoiceDoc>>,
        not_graded: Option<Box<GapDoc>>,
    },
    Degclass {
        intervals: usize,
    },
    Product {
        witness: Option<ProductDoc>,
    },
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ScanDoc {
    pub v: u32,
    pub scan: String,
    pub system: SystemDoc,
    pub scope: ScopeDoc,
    pub report: ReportDoc,
    pub data: ScanData,
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("documents are always serializable");
    text.push('\n');
    text
}

pub fn indices(set: GeneratorSet) -> Vec<usize> {
    set.iter().map(|s| s.index()).collect()
}

fn pairs(xs: &[(usize, usize)]) -> Vec<[usize; 2]> {
    xs.iter().map(|&(a, b)| [a, b]).collect()
}

pub fn interval_doc(ctx: &Context, b: &LowerInterval) -> IntervalDoc {
    IntervalDoc {
        v: SCHEMA_VERSION,
        system: ctx.doc.clone(),
        w: ctx.name(b.top()),
        length: b.top().length(),
        size: b.len(),
        levels: b.level_counts(),
        members: b.members().iter().map(|x| ctx.name(x)).collect(),
        degrees: (0..b.len()).map(|i| b.degree_at(i)).collect(),
        edges: pairs(b.edges()),
    }
}

/// Word written as a product of generators, e.g. `s2s3s2`, or `e`.
pub fn product_word(word: &Word) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.indices().iter().map(|i| format!("s{i}")).collect()
}

/// A length-additive factorization `P_up = x | P_down | y`: `x` is the
/// largest `W_I` prefix of `P_up`, `y` the `W_J` suffix of what remains.
/// Falls back to splitting on the right first; `?` if neither splits
/// through `P_down`.
pub fn factorization(sys: &CoxeterSystem, c: &BruhatCoset) -> String {
    let (top, bottom) = (c.max(), c.min());
    let split = |first: Side| -> Option<(Element, Element)> {
        let (a, b) = match first {
            Side::Left => (c.left(), c.right()),
            Side::Right => (c.right(), c.left()),
        };
        let outer = sys.parabolic_decompose(top, a, first).ok()?;
        let other = match first {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        };
        let inner = sys.parabolic_decompose(&outer.minimal, b, other).ok()?;
        if &inner.minimal != bottom {
            return None;
        }
        Some(match first {
            Side::Left => (outer.parabolic, inner.parabolic),
            Side::Right => (inner.parabolic, outer.parabolic),
        })
    };
    match split(Side::Left).or_else(|| split(Side::Right)) {
        Some((x, y)) => format!(
            "{}|{}|{}",
            product_word(&sys.reduced_word(&x)),
            product_word(&sys.reduced_word(bottom)),
            product_word(&sys.reduced_word(&y))
        ),
        None => "?".into(),
    }
}

pub fn coset_row(ctx: &Context, c: &BruhatCoset) -> CosetRow {
    CosetRow {
        members: c.members().iter().map(|x| ctx.name(x)).collect(),
        p_up: ctx.name(c.max()),
        length: c.length(),
        p_down: ctx.name(c.min()),
        mid: c.mid(),
        side: c.side(),
        factorization: factorization(&ctx.sys, c),
    }
}

pub fn cosets_doc(ctx: &Context, w: &Element, p: &Partition) -> CosetsDoc {
    CosetsDoc {
        v: SCHEMA_VERSION,
        system: ctx.doc.clone(),
        w: ctx.name(w),
        left: indices(p.left()),
        right: indices(p.right()),
        cosets: p.cosets().iter().map(|c| coset_row(ctx, c)).collect(),
    }
}

pub fn quotient_doc(ctx: &Context, q: &QuotientInterval) -> QuotientDoc {
    let check = bruhat_core::quotient_graph_check(&ctx.sys, q);
    QuotientDoc {
        v: SCHEMA_VERSION,
        system: ctx.doc.clone(),
        w: ctx.name(q.w()),
        separated: check.separated,
        cosets: q.cosets().iter().map(|c| coset_row(ctx, c)).collect(),
        order: pairs(&q.order().covers()),
        arcs: pairs(q.arcs()),
        checks: QuotientChecks {
            arc_equivalence: check.equivalence(),
            consistent: check.consistent(),
            forward_violations: pairs(&check.forward_violations),
            converse_violations: pairs(&check.converse_violations),
        },
    }
}

fn outcome_from_str(s: &str) -> Option<Outcome> {
    [Outcome::Pass, Outcome::Fail, Outcome::Skip, Outcome::Note]
        .into_iter()
        .find(|o| o.as_str() == s)
}

impl ReportDoc {
    pub fn from_report(r: &CheckReport) -> Self {
        ReportDoc {
            subject: r.subject.clone(),
            passed: r.passed(),
            clauses: r
                .clauses
                .iter()
                .map(|c| ClauseDoc {
                    name: c.name.clone(),
                    outcome: c.outcome.as_str().into(),
                    witness: c.witness.clone(),
                })
                .collect(),
        }
    }

    /// Rebuilds the in-memory report (without timing). `None` on an
    /// unknown outcome string.
    pub fn to_report(&self) -> Option<CheckReport> {
        let clauses = self
            .clauses
            .iter()
            .map(|c| {
                Some(Clause {
                    name: c.name.clone(),
                    outcome: outcome_from_str(&c.outcome)?,
                    witness: c.witness.clone(),
                })
            })
            .collect::<Option<Vec<_>>>()?;
        Some(CheckReport::new(self.subject.clone(), clauses))
    }
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Self {
        Summary {
            reports: reports.len(),
            passed: reports
                .iter()
                .filter(|r| r.passed() && !r.skipped())
                .count(),
            failed: reports.iter().filter(|r| !r.passed()).count(),
            skipped: reports.iter().filter(|r| r.skipped()).count(),
        }
    }
}
