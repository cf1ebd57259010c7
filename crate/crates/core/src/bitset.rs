//! Word-packed bit sets used for edge sets and node relations.

use std::fmt;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

/// A set of edge indices, stored as a packed bitset.
///
/// Two sets over the same lattice compare and hash structurally; the word
/// count is fixed by the universe size so there is exactly one representation
/// of each set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet {
    words: Box<[u64]>,
}

impl EdgeSet {
    pub fn empty(universe: usize) -> Self {
        EdgeSet {
            words: vec![0; words_for(universe)].into_boxed_slice(),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for e in 0..universe {
            s.insert(e);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut s = Self::empty(universe);
        for e in indices {
            s.insert(e);
        }
        s
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        self.words
            .get(e / 64)
            .is_some_and(|w| w & (1u64 << (e % 64)) != 0)
    }

    /// Inserts `e`, returning true if it was absent.
    #[inline]
    pub fn insert(&mut self, e: usize) -> bool {
        let w = &mut self.words[e / 64];
        let mask = 1u64 << (e % 64);
        let absent = *w & mask == 0;
        *w |= mask;
        absent
    }

    #[inline]
    pub fn remove(&mut self, e: usize) -> bool {
        let w = &mut self.words[e / 64];
        let mask = 1u64 << (e % 64);
        let present = *w & mask != 0;
        *w &= !mask;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &EdgeSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Ascending iterator over member indices.
    pub fn iter(&self) -> Ones<'_> {
        Ones::new(&self.words)
    }

    /// Approximate heap footprint of one stored set.
    pub fn heap_bytes(&self) -> usize {
        self.words.len() * 8
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over set bits of a word slice.
pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        Ones {
            words,
            idx: 0,
            cur: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let t = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + t);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// Square bit matrix over lattice nodes. Row `i` holds the set of `j` with
/// `(i, j)` in the relation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NodeMatrix {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl NodeMatrix {
    pub fn new(n: usize) -> Self {
        let stride = words_for(n).max(1);
        NodeMatrix {
            n,
            stride,
            bits: vec![0; stride * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n);
        for i in 0..n {
            m.set(i, i);
        }
        m
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn stride(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.stride + j / 64] & (1u64 << (j % 64)) != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.stride + j / 64] |= 1u64 << (j % 64);
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.bits[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row_iter(&self, i: usize) -> Ones<'_> {
        Ones::new(self.row(i))
    }

    pub fn transpose(&self) -> NodeMatrix {
        let mut t = NodeMatrix::new(self.n);
        for i in 0..self.n {
            for j in self.row_iter(i) {
                t.set(j, i);
            }
        }
        t
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn as_words(&self) -> &[u64] {
        &self.bits
    }

    /// All pairs `(i, j)` in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| self.row_iter(i).map(move |j| (i, j)))
    }
}

impl fmt::Debug for NodeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

#[inline]
pub(crate) fn is_subset_words(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}
