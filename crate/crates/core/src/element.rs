use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

/// A simple reflection `s_i`, indexed from 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(u8);

impl Generator {
    /// # Panics
    /// If `index` is 0 or larger than 64.
    pub fn new(index: usize) -> Self {
        assert!(
            (1..=64).contains(&index),
            "generator index {index} out of range"
        );
        Generator(index as u8)
    }

    /// The 1-based index `i` of `s_i`.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Zero-based storage slot.
    pub(crate) fn slot(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Left,
    Right,
}

/// A finite sequence of generators. Not necessarily reduced.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        Word(indices.iter().map(|&i| Generator::new(i)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn indices(&self) -> Vec<usize> {
        self.0.iter().map(|s| s.index()).collect()
    }

    /// The word with the letter at `pos` removed.
    pub fn without(&self, pos: usize) -> Word {
        let mut letters = self.0.clone();
        letters.remove(pos);
        Word(letters)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", s.index())?;
        }
        Ok(())
    }
}

/// A group element in canonical form with its length cached.
///
/// `data` holds the one-line notation for the permutation backend, or the
/// action matrix on simple-root coordinates followed by its inverse for the
/// root-lattice backend. Two elements of the same system are equal iff they
/// are the same group element. The derived order compares length first, so
/// sorting yields the `(length, canonical form)` order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    length: u32,
    data: Box<[i64]>,
}

impl Element {
    pub(crate) fn from_parts(length: u32, data: Box<[i64]>) -> Self {
        Element { length, data }
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    /// Backend canonical coordinates.
    pub fn canonical(&self) -> &[i64] {
        &self.data
    }

    pub(crate) fn data_mut(&mut self) -> &mut [i64] {
        &mut self.data
    }

    pub(crate) fn set_length(&mut self, length: u32) {
        self.length = length;
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element(l={}, {:?})", self.length, &self.data[..])
    }
}
