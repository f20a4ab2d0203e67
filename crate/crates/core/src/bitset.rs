//! Fixed-universe bitsets used for adjacency rows and vertex subsets.

/// A set of vertex labels drawn from a fixed universe `0..len`.
///
/// Backed by 64-bit words; intersection, difference and popcount are the
/// hot operations in counting and clique search.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
    len: usize,
}

const WORD_BITS: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

impl VertexSet {
    /// The empty set over universe `0..len`.
    pub fn empty(len: usize) -> Self {
        VertexSet {
            words: vec![0; words_for(len)],
            len,
        }
    }

    /// The full set `{0, .., len-1}`.
    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for v in 0..len {
            s.insert(v);
        }
        s
    }

    /// Universe size (not the number of elements; see [`VertexSet::count`]).
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.len);
        self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.len);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < self.len);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    /// Number of elements.
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// In-place intersection.
    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// In-place difference `self -= other`.
    pub fn subtract(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.subtract(other);
        s
    }

    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Smallest element, if any.
    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Largest element, if any.
    pub fn max(&self) -> Option<usize> {
        for (i, w) in self.words.iter().enumerate().rev() {
            if *w != 0 {
                return Some(i * WORD_BITS + (WORD_BITS - 1 - w.leading_zeros() as usize));
            }
        }
        None
    }

    /// Extends the universe to `new_len`, keeping all elements.
    pub fn grow(&mut self, new_len: usize) {
        debug_assert!(new_len >= self.len);
        self.words.resize(words_for(new_len), 0);
        self.len = new_len;
    }

    /// Ascending iterator over elements.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    /// Collects labels into a set whose universe is just large enough.
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let items: Vec<usize> = iter.into_iter().collect();
        let len = items.iter().max().map_or(0, |m| m + 1);
        let mut s = VertexSet::empty(len);
        for v in items {
            s.insert(v);
        }
        s
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    word_idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.set.words.len() {
                return None;
            }
            self.current = self.set.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}
