//! Coxeter systems and the group law for both exact backends.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::GeneratorSet;
use crate::element::{Element, Generator, Side, Word};
use crate::error::{Error, Result};

/// Matrix entry standing for `m = infinity`.
pub const INFINITY: u32 = 0;

/// Symmetric Coxeter matrix. Entries are `1` on the diagonal and one of
/// `2, 3, 4, 6` or [`INFINITY`] off it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoxeterMatrix {
    n: usize,
    m: Vec<u32>,
}

impl CoxeterMatrix {
    /// Validates a square matrix given in rows. `0` encodes infinity.
    pub fn new(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > 64 {
            return Err(Error::InvalidRank(n));
        }
        let mut m = vec![0u32; n * n];
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix {
                    row: i,
                    col: row.len(),
                    entry: 0,
                    reason: "matrix is not square",
                });
            }
            for (j, &entry) in row.iter().enumerate() {
                let bad = |reason| Error::InvalidMatrix {
                    row: i,
                    col: j,
                    entry,
                    reason,
                };
                if i == j {
                    if entry != 1 {
                        return Err(bad("diagonal entries must be 1"));
                    }
                } else {
                    if rows[j][i] != entry {
                        return Err(bad("matrix is not symmetric"));
                    }
                    if !matches!(entry, 0 | 2 | 3 | 4 | 6) {
                        return Err(bad(
                            "off-diagonal entries must be 2, 3, 4, 6 or 0 (infinity)",
                        ));
                    }
                }
                m[i * n + j] = entry as u32;
            }
        }
        Ok(CoxeterMatrix { n, m })
    }

    /// The Coxeter matrix of type `A_rank`.
    pub fn type_a(rank: usize) -> Result<Self> {
        if rank == 0 || rank > 64 {
            return Err(Error::InvalidRank(rank));
        }
        let rows: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| match i.abs_diff(j) {
                        0 => 1,
                        1 => 3,
                        _ => 2,
                    })
                    .collect()
            })
            .collect();
        CoxeterMatrix::new(&rows)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `m(s_i, s_j)` with 1-based indices; [`INFINITY`] for an infinite entry.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.m[(i - 1) * self.n + (j - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.m[i * self.n + j] as i64).collect())
            .collect()
    }

    /// Generalized Cartan integers realizing this matrix.
    ///
    /// For `i < j`: `(a_ij, a_ji)` is `(0, 0)` for m=2, `(-1, -1)` for m=3,
    /// `(-1, -2)` for m=4, `(-1, -3)` for m=6 and `(-2, -2)` for m=infinity.
    pub fn cartan(&self) -> Vec<i64> {
        let n = self.n;
        let mut a = vec![0i64; n * n];
        for i in 0..n {
            a[i * n + i] = 2;
            for j in (i + 1)..n {
                let (aij, aji) = match self.m[i * n + j] {
                    2 => (0, 0),
                    3 => (-1, -1),
                    4 => (-1, -2),
                    6 => (-1, -3),
                    _ => (-2, -2),
                };
                a[i * n + j] = aij;
                a[j * n + i] = aji;
            }
        }
        a
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Backend {
    /// The symmetric group on `rank + 1` letters acting on positions.
    TypeA { rank: usize },
    /// Integer action on simple-root coordinates, row-major Cartan integers.
    RootLattice { cartan: Vec<i64> },
}

/// How to build a system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SystemDescriptor {
    TypeA { rank: usize },
    Matrix(Vec<Vec<i64>>),
}

/// A Coxeter system `(W, S)` together with an exact arithmetic backend.
///
/// Immutable after construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    backend: Backend,
}

/// Builds a system from a descriptor.
pub fn make_system(descriptor: &SystemDescriptor) -> Result<CoxeterSystem> {
    match descriptor {
        SystemDescriptor::TypeA { rank } => CoxeterSystem::type_a(*rank),
        SystemDescriptor::Matrix(rows) => CoxeterMatrix::new(rows).map(CoxeterSystem::root_lattice),
    }
}

impl CoxeterSystem {
    /// `S_{rank+1}` with `s_i` the transposition `(i, i+1)`.
    pub fn type_a(rank: usize) -> Result<Self> {
        let matrix = CoxeterMatrix::type_a(rank)?;
        Ok(CoxeterSystem {
            matrix,
            backend: Backend::TypeA { rank },
        })
    }

    pub fn root_lattice(matrix: CoxeterMatrix) -> Self {
        let cartan = matrix.cartan();
        CoxeterSystem {
            matrix,
            backend: Backend::RootLattice { cartan },
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn is_type_a(&self) -> bool {
        matches!(self.backend, Backend::TypeA { .. })
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> {
        (1..=self.rank()).map(Generator::new)
    }

    pub fn all_generators(&self) -> GeneratorSet {
        GeneratorSet::full(self.rank())
    }

    pub fn check_generator(&self, s: Generator) -> Result<()> {
        if s.index() > self.rank() {
            Err(Error::InvalidGenerator {
                index: s.index(),
                rank: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    pub fn identity(&self) -> Element {
        match &self.backend {
            Backend::TypeA { rank } => {
                let data: Box<[i64]> = (1..=(*rank as i64 + 1)).collect();
                Element::from_parts(0, data)
            }
            Backend::RootLattice { .. } => {
                let n = self.rank();
                let mut data = vec![0i64; 2 * n * n];
                for i in 0..n {
                    data[i * n + i] = 1;
                    data[n * n + i * n + i] = 1;
                }
                Element::from_parts(0, data.into_boxed_slice())
            }
        }
    }

    /// # Panics
    /// If `s` is out of range.
    pub fn generator(&self, s: Generator) -> Element {
        self.check_generator(s).expect("generator in range");
        self.rmul_gen(&self.identity(), s)
    }

    /// Builds a type-A element from one-line notation `w(1) ... w(n+1)`.
    pub fn from_one_line(&self, values: &[usize]) -> Result<Element> {
        let Backend::TypeA { rank } = self.backend else {
            return Err(Error::Backend("one-line notation requires type A"));
        };
        let m = rank + 1;
        if values.len() != m {
            return Err(Error::Parse(alloc::format!(
                "one-line literal needs {m} entries, got {}",
                values.len()
            )));
        }
        let mut seen = vec![false; m + 1];
        for &v in values {
            if v == 0 || v > m || seen[v] {
                return Err(Error::Parse(String::from(
                    "one-line literal is not a permutation",
                )));
            }
            seen[v] = true;
        }
        let data: Box<[i64]> = values.iter().map(|&v| v as i64).collect();
        let length = inversion_count(&data);
        Ok(Element::from_parts(length, data))
    }

    /// One-line notation of a type-A element.
    pub fn one_line(&self, w: &Element) -> Option<Vec<usize>> {
        match self.backend {
            Backend::TypeA { .. } => Some(w.canonical().iter().map(|&v| v as usize).collect()),
            Backend::RootLattice { .. } => None,
        }
    }

    /// `w * s`.
    pub fn rmul_gen(&self, w: &Element, s: Generator) -> Element {
        let descent = self.has_descent(w, s, Side::Right);
        let mut out = w.clone();
        match &self.backend {
            Backend::TypeA { .. } => out.data_mut().swap(s.slot(), s.slot() + 1),
            Backend::RootLattice { cartan } => {
                let n = self.rank();
                let (m, inv) = out.data_mut().split_at_mut(n * n);
                right_reflect(m, cartan, n, s.slot());
                left_reflect(inv, cartan, n, s.slot());
                assert_root_signs(m, n);
            }
        }
        out.set_length(step(w.length(), descent));
        out
    }

    /// `s * w`.
    pub fn lmul_gen(&self, s: Generator, w: &Element) -> Element {
        let descent = self.has_descent(w, s, Side::Left);
        let mut out = w.clone();
        match &self.backend {
            Backend::TypeA { .. } => {
                let a = s.index() as i64;
                for v in out.data_mut().iter_mut() {
                    if *v == a {
                        *v = a + 1;
                    } else if *v == a + 1 {
                        *v = a;
                    }
                }
            }
            Backend::RootLattice { cartan } => {
                let n = self.rank();
                let (m, inv) = out.data_mut().split_at_mut(n * n);
                left_reflect(m, cartan, n, s.slot());
                right_reflect(inv, cartan, n, s.slot());
                assert_root_signs(m, n);
            }
        }
        out.set_length(step(w.length(), descent));
        out
    }

    /// Whether `l(s w) < l(w)` (left) or `l(w s) < l(w)` (right).
    pub fn has_descent(&self, w: &Element, s: Generator, side: Side) -> bool {
        let d = w.canonical();
        match (&self.backend, side) {
            (Backend::TypeA { .. }, Side::Right) => d[s.slot()] > d[s.slot() + 1],
            (Backend::TypeA { .. }, Side::Left) => {
                let a = s.index() as i64;
                let pa = d.iter().position(|&v| v == a);
                let pb = d.iter().position(|&v| v == a + 1);
                pb < pa
            }
            (Backend::RootLattice { .. }, side) => {
                let n = self.rank();
                let block = match side {
                    Side::Right => &d[..n * n],
                    Side::Left => &d[n * n..],
                };
                column_is_negative(block, n, s.slot())
            }
        }
    }

    /// `D_L(w)` or `D_R(w)`.
    pub fn descents(&self, w: &Element, side: Side) -> GeneratorSet {
        self.generators()
            .filter(|&s| self.has_descent(w, s, side))
            .collect()
    }

    /// Smallest-index descent on the given side, if any.
    pub fn first_descent(&self, w: &Element, side: Side) -> Option<Generator> {
        self.generators().find(|&s| self.has_descent(w, s, side))
    }

    pub fn length(&self, w: &Element) -> u32 {
        w.length()
    }

    pub fn inverse(&self, w: &Element) -> Element {
        match &self.backend {
            Backend::TypeA { .. } => {
                let d = w.canonical();
                let mut inv = vec![0i64; d.len()];
                for (i, &v) in d.iter().enumerate() {
                    inv[v as usize - 1] = i as i64 + 1;
                }
                Element::from_parts(w.length(), inv.into_boxed_slice())
            }
            Backend::RootLattice { .. } => {
                let n2 = self.rank() * self.rank();
                let d = w.canonical();
                let mut data = Vec::with_capacity(2 * n2);
                data.extend_from_slice(&d[n2..]);
                data.extend_from_slice(&d[..n2]);
                Element::from_parts(w.length(), data.into_boxed_slice())
            }
        }
    }

    /// Group product `u v`. For type A, `(uv)(i) = u(v(i))`.
    pub fn multiply(&self, u: &Element, v: &Element) -> Element {
        match &self.backend {
            Backend::TypeA { .. } => {
                let (du, dv) = (u.canonical(), v.canonical());
                let data: Box<[i64]> = dv.iter().map(|&x| du[x as usize - 1]).collect();
                let length = inversion_count(&data);
                Element::from_parts(length, data)
            }
            Backend::RootLattice { .. } => self
                .reduced_word(v)
                .letters()
                .iter()
                .fold(u.clone(), |acc, &s| self.rmul_gen(&acc, s)),
        }
    }

    /// Evaluates a word left to right.
    pub fn eval(&self, word: &Word) -> Result<Element> {
        let mut w = self.identity();
        for &s in word.letters() {
            self.check_generator(s)?;
            w = self.rmul_gen(&w, s);
        }
        Ok(w)
    }

    /// Whether `x` is a reflection, i.e. conjugate to a simple reflection.
    pub fn is_reflection(&self, x: &Element) -> bool {
        match &self.backend {
            Backend::TypeA { .. } => {
                let moved = x
                    .canonical()
                    .iter()
                    .enumerate()
                    .filter(|&(i, &v)| v != i as i64 + 1)
                    .count();
                moved == 2
            }
            Backend::RootLattice { .. } => {
                if x.length().is_multiple_of(2) {
                    return false;
                }
                let n = self.rank();
                let mut m: Vec<i128> = x.canonical()[..n * n].iter().map(|&v| v as i128).collect();
                for i in 0..n {
                    m[i * n + i] -= 1;
                }
                crate::linalg::integer_rank(&mut m, n) == 1
            }
        }
    }

    /// Longest element if it can be reached by ascending within
    /// `max_length` steps. Always `Some` for type A.
    pub fn longest_element(&self, max_length: u32) -> Option<Element> {
        if let Backend::TypeA { rank } = self.backend {
            let values: Vec<usize> = (1..=rank + 1).rev().collect();
            return self.from_one_line(&values).ok();
        }
        let mut w = self.identity();
        while let Some(s) = self
            .generators()
            .find(|&s| !self.has_descent(&w, s, Side::Right))
        {
            if w.length() >= max_length {
                return None;
            }
            w = self.rmul_gen(&w, s);
        }
        Some(w)
    }
}

fn step(length: u32, descent: bool) -> u32 {
    if descent {
        length - 1
    } else {
        length + 1
    }
}

pub(crate) fn inversion_count(values: &[i64]) -> u32 {
    let mut count = 0;
    for i in 0..values.len() {
        for j in (i + 1)..values.len() {
            if values[i] > values[j] {
                count += 1;
            }
        }
    }
    count
}

// Matrix of s_i on root coordinates: S e_j = e_j - a_ij e_i.

/// `m <- m * S_i`: column c becomes `col_c - a_ic * col_i`.
fn right_reflect(m: &mut [i64], cartan: &[i64], n: usize, i: usize) {
    for r in 0..n {
        let pivot = m[r * n + i];
        if pivot == 0 {
            continue;
        }
        for c in 0..n {
            let a = cartan[i * n + c];
            if a != 0 {
                m[r * n + c] -= a * pivot;
            }
        }
    }
}

/// `m <- S_i * m`: row i becomes `row_i - sum_k a_ik row_k`.
fn left_reflect(m: &mut [i64], cartan: &[i64], n: usize, i: usize) {
    for c in 0..n {
        let mut acc = 0;
        for k in 0..n {
            acc += cartan[i * n + k] * m[k * n + c];
        }
        m[i * n + c] -= acc;
    }
}

fn column_is_negative(m: &[i64], n: usize, c: usize) -> bool {
    (0..n).any(|r| m[r * n + c] < 0)
}

/// Every column of the action matrix is the coordinate vector of a root,
/// hence all entries share a sign.
fn assert_root_signs(m: &[i64], n: usize) {
    for c in 0..n {
        let pos = (0..n).any(|r| m[r * n + c] > 0);
        let neg = (0..n).any(|r| m[r * n + c] < 0);
        assert!(
            pos != neg,
            "root coordinates of column {c} are not sign-coherent: {m:?}"
        );
    }
}
