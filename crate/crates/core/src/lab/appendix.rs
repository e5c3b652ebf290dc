//! Exhaustive checks of the classical background facts: lifting, inversion
//! sets, the exchange/subword properties, parabolic factorization, the
//! chain property of one-sided quotients, and the left-coset partition of
//! lower intervals.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bits::{BitMatrix, GeneratorSet};
use crate::bruhat::{bruhat_leq, LowerInterval};
use crate::coset::double_coset_closure;
use crate::element::{Element, Side, Word};
use crate::lab::report::{CheckReport, Clause};
use crate::quotient::poset_isomorphic;
use crate::system::CoxeterSystem;

use super::theorems::ClauseSpec;

/// Appendix facts with the phrase of the statement each clause checks.
pub const APPENDIX_CLAUSES: &[ClauseSpec] = &[
    ("lifting", "then $su\\le w.$"),
    ("inversions", "$t_i$ are all distinct"),
    ("exchange", "the number $i$ the above is unique"),
    (
        "subword",
        "There exists a subword of $s_1\\cdots s_l$ for $u$",
    ),
    ("parabolic-unique", "(w_{J}, w^{J})\\in W_{J}\\times W^{J}"),
    (
        "chain",
        "Every one-sided quotient is graded with the rank function",
    ),
    ("left-coset-partition", "left cosets with the same index"),
];

/// Reduced words examined per element in the word-dependent checks.
const WORD_LIMIT: usize = 64;

/// The downward closure of a scope, with its Bruhat graph reachability.
struct Universe {
    members: Vec<Element>,
    index: BTreeMap<Element, usize>,
    /// Row `j` holds the members below member `j`, from graph paths.
    below: BitMatrix,
    reflections: Vec<Element>,
}

impl Universe {
    fn new(sys: &CoxeterSystem, scope: &[Element]) -> Self {
        let mut all = BTreeSet::new();
        for w in scope {
            all.extend(LowerInterval::new(sys, w).members().iter().cloned());
        }
        let members: Vec<Element> = all.into_iter().collect();
        let index: BTreeMap<Element, usize> = members
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, x)| (x, i))
            .collect();
        let n = members.len();
        let inverses: Vec<Element> = members.iter().map(|x| sys.inverse(x)).collect();
        let mut below = BitMatrix::new(n);
        // Members are sorted by length, so every lower endpoint is complete
        // before it is folded into a longer element.
        for j in 0..n {
            below.set(j, j);
            for i in 0..j {
                if members[i].length() < members[j].length()
                    && sys.is_reflection(&sys.multiply(&members[j], &inverses[i]))
                {
                    below.or_row_into(i, j);
                }
            }
        }
        let reflections = members
            .iter()
            .filter(|x| sys.is_reflection(x))
            .cloned()
            .collect();
        Universe {
            members,
            index,
            below,
            reflections,
        }
    }

    fn reach(&self, u: usize, w: usize) -> bool {
        self.below.get(w, u)
    }
}

struct Ctx<'a> {
    sys: &'a CoxeterSystem,
    scope: &'a [Element],
    universe: Universe,
}

type Check = Result<String, String>;

impl<'a> Ctx<'a> {
    fn name(&self, x: &Element) -> String {
        self.sys.format_element(x)
    }

    fn lifting(&self) -> Check {
        let mut cases = 0usize;
        for w in self.scope {
            let b = LowerInterval::new(self.sys, w);
            for u in b.members().iter().filter(|u| *u != w) {
                for side in [Side::Left, Side::Right] {
                    let ds = self
                        .sys
                        .descents(w, side)
                        .difference(self.sys.descents(u, side));
                    for s in ds.iter() {
                        let su = match side {
                            Side::Left => self.sys.lmul_gen(s, u),
                            Side::Right => self.sys.rmul_gen(u, s),
                        };
                        cases += 1;
                        if !b.contains(&su) {
                            return Err(format!(
                                "u={} w={} s={s} ({side:?}): lifted element not below w",
                                self.name(u),
                                self.name(w)
                            ));
                        }
                    }
                }
            }
        }
        Ok(format!("{cases} triples"))
    }

    fn inversions(&self) -> Check {
        let mut words_seen = 0usize;
        for w in self.scope {
            let canonical: BTreeSet<Element> = self.sys.left_inversion_set(w);
            let wi = self.sys.reduced_words(w, WORD_LIMIT);
            for word in &wi {
                words_seen += 1;
                let ts = self.sys.inversions(word).map_err(|e| format!("{e}"))?;
                let set: BTreeSet<Element> = ts.iter().cloned().collect();
                if set.len() != ts.len() || ts.len() as u32 != w.length() {
                    return Err(format!(
                        "w={} word {word}: inversions not distinct",
                        self.name(w)
                    ));
                }
                if set != canonical {
                    return Err(format!(
                        "w={} word {word}: inversion set depends on word",
                        self.name(w)
                    ));
                }
                for t in &ts {
                    let tw = self.sys.multiply(t, w);
                    if !self.sys.is_reflection(t) || tw.length() >= w.length() {
                        return Err(format!(
                            "w={}: {} is not a left inversion",
                            self.name(w),
                            self.name(t)
                        ));
                    }
                }
            }
            for t in &self.universe.reflections {
                if self.sys.multiply(t, w).length() < w.length() && !canonical.contains(t) {
                    return Err(format!(
                        "w={}: left inversion {} missed",
                        self.name(w),
                        self.name(t)
                    ));
                }
            }
        }
        Ok(format!("{words_seen} reduced words"))
    }

    fn exchange(&self) -> Check {
        let mut cases = 0usize;
        for w in self.scope {
            let inv = self.sys.left_inversion_set(w);
            for word in self.sys.reduced_words(w, WORD_LIMIT) {
                let ts = self.sys.inversions(&word).map_err(|e| format!("{e}"))?;
                let deletions: Vec<Element> = (0..word.len())
                    .map(|i| self.sys.eval(&word.without(i)).expect("valid word"))
                    .collect();
                for t in &self.universe.reflections {
                    let tw = self.sys.multiply(t, w);
                    let hits: Vec<usize> =
                        (0..word.len()).filter(|&i| deletions[i] == tw).collect();
                    cases += 1;
                    let ok = if inv.contains(t) {
                        hits.len() == 1 && ts[hits[0]] == *t
                    } else {
                        hits.is_empty()
                    };
                    if !ok {
                        return Err(format!(
                            "w={} word {word} t={}: deletion positions {hits:?}",
                            self.name(w),
                            self.name(t)
                        ));
                    }
                }
            }
        }
        Ok(format!("{cases} (word, reflection) pairs"))
    }

    fn subword(&self) -> Check {
        let u = &self.universe;
        let mut pairs = 0usize;
        for w in self.scope {
            let word = self.sys.reduced_word(w);
            let subwords = subword_values(self.sys, &word);
            let wi = u.index[w];
            for (ui, x) in u.members.iter().enumerate() {
                let by_subword = subwords.contains(x);
                let by_graph = u.reach(ui, wi);
                let by_descent = bruhat_leq(self.sys, x, w);
                pairs += 1;
                if by_subword != by_graph || by_graph != by_descent {
                    return Err(format!(
                        "u={} w={}: subword {by_subword}, graph {by_graph}, descent recursion {by_descent}",
                        self.name(x),
                        self.name(w)
                    ));
                }
            }
        }
        Ok(format!("{pairs} pairs"))
    }

    fn parabolic_unique(&self) -> Check {
        let mut cases = 0usize;
        let rank = self.sys.rank();
        for w in self.scope {
            for j in GeneratorSet::all_subsets(rank) {
                let parabolic = bounded_parabolic(self.sys, j, w.length());
                for side in [Side::Left, Side::Right] {
                    cases += 1;
                    let mut found = Vec::new();
                    for x in &parabolic {
                        let xi = self.sys.inverse(x);
                        let y = match side {
                            Side::Left => self.sys.multiply(&xi, w),
                            Side::Right => self.sys.multiply(w, &xi),
                        };
                        let minimal = self.sys.descents(&y, side).intersection(j).is_empty();
                        if minimal && x.length() + y.length() == w.length() {
                            found.push((x.clone(), y));
                        }
                    }
                    let fact = self
                        .sys
                        .parabolic_decompose(w, j, side)
                        .map_err(|e| format!("{e}"))?;
                    let ok = found.len() == 1
                        && found[0].0 == fact.parabolic
                        && found[0].1 == fact.minimal;
                    if !ok {
                        return Err(format!(
                            "w={} J={j} {side:?}: {} length-additive factorizations",
                            self.name(w),
                            found.len()
                        ));
                    }
                }
            }
        }
        Ok(format!("{cases} (w, J, side) cases"))
    }

    fn chain(&self) -> Check {
        let u = &self.universe;
        let n = u.members.len();
        let mut pairs = 0usize;
        for j in GeneratorSet::all_subsets(self.sys.rank()) {
            for side in [Side::Left, Side::Right] {
                let quotient: Vec<usize> = (0..n)
                    .filter(|&i| {
                        self.sys
                            .descents(&u.members[i], side)
                            .intersection(j)
                            .is_empty()
                    })
                    .collect();
                // chained[b] = quotient members reachable from b by
                // length-one steps down inside the quotient.
                let mut chained = BitMatrix::new(n);
                for &b in &quotient {
                    chained.set(b, b);
                    for &a in &quotient {
                        if u.members[a].length() + 1 == u.members[b].length() && u.reach(a, b) {
                            chained.or_row_into(a, b);
                        }
                    }
                }
                for &b in &quotient {
                    for &a in &quotient {
                        if a != b && u.reach(a, b) {
                            pairs += 1;
                            if !chained.get(b, a) {
                                return Err(format!(
                                    "J={j} {side:?}: no unit-step chain from {} to {}",
                                    self.name(&u.members[a]),
                                    self.name(&u.members[b])
                                ));
                            }
                        }
                    }
                }
            }
        }
        Ok(format!("{pairs} comparable quotient pairs"))
    }

    fn left_coset_partition(&self) -> Check {
        let mut cosets_seen = 0usize;
        for w in self.scope {
            let b = LowerInterval::new(self.sys, w);
            let i_set = self.sys.descents(w, Side::Left);
            let mut covered = BTreeSet::new();
            let mut cosets: Vec<Vec<Element>> = Vec::new();
            for u in b.members() {
                if covered.contains(u) {
                    continue;
                }
                let c = double_coset_closure(self.sys, u, i_set, GeneratorSet::EMPTY);
                for x in &c {
                    if !b.contains(x) {
                        return Err(format!("w={}: {} escapes B(w)", self.name(w), self.name(x)));
                    }
                    if !covered.insert(x.clone()) {
                        return Err(format!(
                            "w={}: {} in two cosets",
                            self.name(w),
                            self.name(x)
                        ));
                    }
                }
                cosets.push(c);
            }
            cosets_seen += cosets.len();
            let mut degree = None;
            for c in &cosets {
                if poset_isomorphic(&cosets[0], c, &b)
                    .map_err(|e| format!("{e}"))?
                    .is_none()
                {
                    return Err(format!(
                        "w={}: cosets of {} and {} not isomorphic",
                        self.name(w),
                        self.name(&cosets[0][0]),
                        self.name(&c[0])
                    ));
                }
                let (lo, hi) = (&c[0], c.last().expect("nonempty"));
                let weak: Vec<&Element> = b
                    .members()
                    .iter()
                    .filter(|v| {
                        self.sys.weak_leq(lo, v, Side::Left) && self.sys.weak_leq(v, hi, Side::Left)
                    })
                    .collect();
                if !weak.iter().copied().eq(c.iter()) {
                    return Err(format!(
                        "w={}: coset of {} is not a left weak interval",
                        self.name(w),
                        self.name(lo)
                    ));
                }
                let idx: BTreeSet<usize> = c.iter().filter_map(|x| b.index_of(x)).collect();
                for &i in &idx {
                    let d = b
                        .lower_neighbours(i)
                        .iter()
                        .chain(b.upper_neighbours(i))
                        .filter(|k| idx.contains(k))
                        .count();
                    if *degree.get_or_insert(d) != d {
                        return Err(format!(
                            "w={}: degree {d} at {} differs",
                            self.name(w),
                            self.name(&b.members()[i])
                        ));
                    }
                }
            }
        }
        Ok(format!("{cosets_seen} left cosets"))
    }
}

/// Every element represented by a subword of `word`.
fn subword_values(sys: &CoxeterSystem, word: &Word) -> BTreeSet<Element> {
    let mut values = BTreeSet::new();
    values.insert(sys.identity());
    for &s in word.letters() {
        let extended: Vec<Element> = values.iter().map(|x| sys.rmul_gen(x, s)).collect();
        values.extend(extended);
    }
    values
}

/// Elements of `W_J` of length at most `bound`.
fn bounded_parabolic(sys: &CoxeterSystem, j: GeneratorSet, bound: u32) -> Vec<Element> {
    let mut seen = BTreeSet::new();
    seen.insert(sys.identity());
    let mut frontier = alloc::vec![sys.identity()];
    while let Some(x) = frontier.pop() {
        for s in j.iter() {
            let y = sys.rmul_gen(&x, s);
            if y.length() <= bound && !seen.contains(&y) {
                seen.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// Runs every appendix fact over `scope` (and its downward closure where a
/// fact quantifies over all of `W`).
pub fn verify_appendix(sys: &CoxeterSystem, scope: &[Element]) -> CheckReport {
    let ctx = Ctx {
        sys,
        scope,
        universe: Universe::new(sys, scope),
    };
    let results: [(&str, Check); 7] = [
        ("lifting", ctx.lifting()),
        ("inversions", ctx.inversions()),
        ("exchange", ctx.exchange()),
        ("subword", ctx.subword()),
        ("parabolic-unique", ctx.parabolic_unique()),
        ("chain", ctx.chain()),
        ("left-coset-partition", ctx.left_coset_partition()),
    ];
    let clauses = results
        .into_iter()
        .map(|(name, r)| match r {
            Ok(detail) => Clause::pass_with(name, detail),
            Err(w) => Clause::fail(name, w),
        })
        .collect();
    CheckReport::new(format!("appendix scope={}", scope.len()), clauses)
}
