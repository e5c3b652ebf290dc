//! Reduced words and the structure read off them: inversions, support,
//! parabolic factorizations and the weak orders.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bits::GeneratorSet;
use crate::element::{Element, Generator, Side, Word};
use crate::error::{Error, Result};
use crate::system::{Backend, CoxeterSystem};

/// `w = parabolic * minimal` (left) or `w = minimal * parabolic` (right),
/// with lengths adding up.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParabolicFactors {
    /// Factor in the parabolic subgroup `W_J`.
    pub parabolic: Element,
    /// Minimal-length representative of the coset.
    pub minimal: Element,
}

impl CoxeterSystem {
    /// Canonical reduced word: the smallest-index left descent is taken
    /// first, then the rest of the word is produced from `s w`.
    pub fn reduced_word(&self, w: &Element) -> Word {
        let mut letters = Vec::with_capacity(w.length() as usize);
        let mut x = w.clone();
        while let Some(s) = self.first_descent(&x, Side::Left) {
            letters.push(s);
            x = self.lmul_gen(s, &x);
        }
        Word(letters)
    }

    pub fn is_reduced(&self, word: &Word) -> Result<bool> {
        Ok(self.eval(word)?.length() as usize == word.len())
    }

    /// `t_i = s_1 ... s_{i-1} s_i s_{i-1} ... s_1` for a reduced word.
    pub fn inversions(&self, word: &Word) -> Result<Vec<Element>> {
        if !self.is_reduced(word)? {
            return Err(Error::NotReduced);
        }
        let mut prefix = self.identity();
        let mut out = Vec::with_capacity(word.len());
        for &s in word.letters() {
            let next = self.rmul_gen(&prefix, s);
            out.push(self.multiply(&next, &self.inverse(&prefix)));
            prefix = next;
        }
        Ok(out)
    }

    /// `T_L(w)` computed from the canonical reduced word.
    pub fn left_inversion_set(&self, w: &Element) -> BTreeSet<Element> {
        self.inversions(&self.reduced_word(w))
            .expect("canonical word is reduced")
            .into_iter()
            .collect()
    }

    /// `T_R(w) = T_L(w^{-1})`.
    pub fn right_inversion_set(&self, w: &Element) -> BTreeSet<Element> {
        self.left_inversion_set(&self.inverse(w))
    }

    /// Left weak order compares right inversion sets, right weak order
    /// compares left inversion sets.
    pub fn weak_leq(&self, u: &Element, w: &Element, side: Side) -> bool {
        if u.length() > w.length() {
            return false;
        }
        let (a, b) = match side {
            Side::Left => (self.right_inversion_set(u), self.right_inversion_set(w)),
            Side::Right => (self.left_inversion_set(u), self.left_inversion_set(w)),
        };
        a.is_subset(&b)
    }

    /// Letters of any reduced word of `w`; equals `{s : s <= w}`.
    pub fn support(&self, w: &Element) -> GeneratorSet {
        self.reduced_word(w).letters().iter().copied().collect()
    }

    /// The unique length-additive factorization of `w` through `W_J`.
    pub fn parabolic_decompose(
        &self,
        w: &Element,
        j: GeneratorSet,
        side: Side,
    ) -> Result<ParabolicFactors> {
        for s in j.iter() {
            self.check_generator(s)?;
        }
        let mut x = w.clone();
        let mut letters = Vec::new();
        while let Some(s) = j.iter().find(|&s| self.has_descent(&x, s, side)) {
            letters.push(s);
            x = match side {
                Side::Left => self.lmul_gen(s, &x),
                Side::Right => self.rmul_gen(&x, s),
            };
        }
        let word = match side {
            Side::Left => Word(letters),
            Side::Right => Word(letters).reversed(),
        };
        Ok(ParabolicFactors {
            parabolic: self.eval(&word)?,
            minimal: x,
        })
    }

    /// Parses an element literal.
    ///
    /// `e` is the identity. A whitespace- or comma-separated list of
    /// generator indices (optionally prefixed `s`) is a word. A compact
    /// digit string of length at least two is one-line notation, accepted
    /// only by the type-A backend.
    pub fn parse_element(&self, literal: &str) -> Result<Element> {
        let text = literal.trim();
        if text.is_empty() || text == "e" {
            return Ok(self.identity());
        }
        let compact = !text.contains(|c: char| c.is_whitespace() || c == ',');
        if compact && text.len() > 1 && text.bytes().all(|b| b.is_ascii_digit()) {
            if !self.is_type_a() {
                return Err(Error::Parse(String::from(
                    "one-line literals are only accepted for type A systems",
                )));
            }
            let values: Vec<usize> = text.bytes().map(|b| (b - b'0') as usize).collect();
            return self.from_one_line(&values);
        }
        let mut letters = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let digits = token.strip_prefix('s').unwrap_or(token);
            let index: usize = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad generator token `{token}`")))?;
            if index == 0 || index > self.rank() {
                return Err(Error::InvalidGenerator {
                    index,
                    rank: self.rank(),
                });
            }
            letters.push(Generator::new(index));
        }
        self.eval(&Word(letters))
    }

    /// Canonical text form: one-line digits for type A (comma separated past
    /// nine letters), the canonical reduced word otherwise.
    pub fn format_element(&self, w: &Element) -> String {
        match self.backend() {
            Backend::TypeA { rank } => {
                let sep = if *rank + 1 > 9 { "," } else { "" };
                let parts: Vec<String> = w.canonical().iter().map(|v| format!("{v}")).collect();
                parts.join(sep)
            }
            Backend::RootLattice { .. } => format!("{}", self.reduced_word(w)),
        }
    }

    /// Every reduced word of `w`, by backtracking over left descents.
    /// Stops after `limit` words.
    pub fn reduced_words(&self, w: &Element, limit: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        self.collect_words(w, &mut prefix, &mut out, limit);
        out
    }

    fn collect_words(
        &self,
        w: &Element,
        prefix: &mut Vec<Generator>,
        out: &mut Vec<Word>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if w.is_identity() {
            out.push(Word(prefix.clone()));
            return;
        }
        for s in self.descents(w, Side::Left).iter() {
            prefix.push(s);
            self.collect_words(&self.lmul_gen(s, w), prefix, out, limit);
            prefix.pop();
        }
    }
}
