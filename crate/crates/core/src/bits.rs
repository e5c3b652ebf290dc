//! Small fixed-width sets used throughout: generator subsets and dense bit
//! matrices for order relations.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::element::Generator;

/// A subset of the Coxeter generators, stored as a bitmask.
///
/// Bit `i - 1` is set when `s_i` is a member.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GeneratorSet(u64);

impl GeneratorSet {
    pub const EMPTY: GeneratorSet = GeneratorSet(0);

    pub fn from_bits(bits: u64) -> Self {
        GeneratorSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All generators `s_1, ..., s_rank`.
    pub fn full(rank: usize) -> Self {
        if rank >= 64 {
            GeneratorSet(u64::MAX)
        } else {
            GeneratorSet((1u64 << rank) - 1)
        }
    }

    pub fn contains(self, s: Generator) -> bool {
        self.0 & (1 << s.slot()) != 0
    }

    pub fn insert(&mut self, s: Generator) {
        self.0 |= 1 << s.slot();
    }

    pub fn with(mut self, s: Generator) -> Self {
        self.insert(s);
        self
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: GeneratorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(self, other: GeneratorSet) -> Self {
        GeneratorSet(self.0 & other.0)
    }

    pub fn union(self, other: GeneratorSet) -> Self {
        GeneratorSet(self.0 | other.0)
    }

    pub fn difference(self, other: GeneratorSet) -> Self {
        GeneratorSet(self.0 & !other.0)
    }

    /// Members in increasing index order.
    pub fn iter(self) -> impl Iterator<Item = Generator> {
        let bits = self.0;
        (0..64usize)
            .filter(move |i| bits & (1 << i) != 0)
            .map(|i| Generator::new(i + 1))
    }

    /// Every subset of `s_1..s_rank`, in increasing bitmask order.
    pub fn all_subsets(rank: usize) -> impl Iterator<Item = GeneratorSet> {
        (0..(1u64 << rank)).map(GeneratorSet)
    }
}

impl FromIterator<Generator> for GeneratorSet {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        let mut set = GeneratorSet::EMPTY;
        for s in iter {
            set.insert(s);
        }
        set
    }
}

impl fmt::Debug for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, s) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("}")
    }
}

/// Dense square boolean matrix, one bit row per element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    n: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let stride = n.div_ceil(64);
        BitMatrix {
            n,
            stride,
            words: vec![0; stride * n],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.words[i * self.stride + j / 64] & (1 << (j % 64)) != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.words[i * self.stride + j / 64] |= 1 << (j % 64);
    }

    pub fn clear(&mut self, i: usize, j: usize) {
        self.words[i * self.stride + j / 64] &= !(1 << (j % 64));
    }

    /// `row(dst) |= row(src)`.
    pub fn or_row_into(&mut self, src: usize, dst: usize) {
        if src == dst {
            return;
        }
        for k in 0..self.stride {
            let bits = self.words[src * self.stride + k];
            self.words[dst * self.stride + k] |= bits;
        }
    }

    /// `row(dst) |= other.row(src)`.
    pub fn or_row_from(&mut self, other: &BitMatrix, src: usize, dst: usize) {
        debug_assert_eq!(self.stride, other.stride);
        for k in 0..self.stride {
            self.words[dst * self.stride + k] |= other.words[src * other.stride + k];
        }
    }

    pub fn row_ones(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.get(i, j))
    }

    pub fn row_count(&self, i: usize) -> usize {
        self.words[i * self.stride..(i + 1) * self.stride]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The matrix with rows and columns swapped.
    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.n);
        for i in 0..self.n {
            for j in self.row_ones(i) {
                t.set(j, i);
            }
        }
        t
    }
}
