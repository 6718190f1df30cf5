//! Vertex identifiers and bitsets over a fixed vertex table.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{BitAnd, BitOr, Sub};

use smallvec::SmallVec;

const WORD: usize = 64;

/// Position of a vertex in its owner's vertex table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

type Words = SmallVec<[u64; 2]>;

/// A set of vertices of a table with `universe` entries.
///
/// Up to 128 vertices the words live inline; larger tables spill to the heap
/// with the same semantics. Sets compare as the integers their bits spell,
/// so `Ord` is the lex-by-bitset order used for every enumeration.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Words,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        let n = universe.div_ceil(WORD);
        VertexSet {
            universe,
            words: SmallVec::from_elem(0, n),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let hi = (lo + WORD).min(universe);
            let width = hi - lo;
            *w = if width == WORD {
                u64::MAX
            } else {
                (1u64 << width) - 1
            };
        }
        s
    }

    pub fn singleton(universe: usize, v: VertexId) -> Self {
        let mut s = Self::empty(universe);
        s.insert(v);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, it: I) -> Self {
        let mut s = Self::empty(universe);
        for i in it {
            s.insert(VertexId(i));
        }
        s
    }

    /// Builds a set from the low `universe` bits of `mask`.
    pub fn from_mask(universe: usize, mask: u128) -> Self {
        let mut s = Self::empty(universe);
        for (i, w) in s.words.iter_mut().enumerate().take(2) {
            *w = (mask >> (i * WORD)) as u64;
        }
        s.trim();
        s
    }

    fn trim(&mut self) {
        let extra = self.words.len() * WORD - self.universe;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        v.0 < self.universe && self.words[v.0 / WORD] >> (v.0 % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: VertexId) {
        assert!(
            v.0 < self.universe,
            "vertex {} outside table of {}",
            v.0,
            self.universe
        );
        self.words[v.0 / WORD] |= 1 << (v.0 % WORD);
    }

    #[inline]
    pub fn remove(&mut self, v: VertexId) {
        if v.0 < self.universe {
            self.words[v.0 / WORD] &= !(1 << (v.0 % WORD));
        }
    }

    pub fn with(&self, v: VertexId) -> Self {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    pub fn without(&self, v: VertexId) -> Self {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Self) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn union_with(&mut self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
    }

    /// Complement relative to the whole table.
    pub fn complement(&self) -> Self {
        let mut s = Self::full(self.universe);
        s.difference_with(self);
        s
    }

    /// Lowest member.
    pub fn first(&self) -> Option<VertexId> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| VertexId(i * WORD + w.trailing_zeros() as usize))
    }

    /// Members in increasing index order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Re-embeds the set in a table of a different size; members beyond the
    /// new size are dropped.
    pub fn resized(&self, universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for (a, b) in s.words.iter_mut().zip(self.words.iter()) {
            *a = *b;
        }
        s.trim();
        s
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(VertexId(self.idx * WORD + tz));
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe.cmp(&other.universe).then_with(|| {
            for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v.0)).finish()
    }
}

impl BitAnd for &VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(rhs);
        s
    }
}

impl BitOr for &VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(rhs);
        s
    }
}

impl Sub for &VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(rhs);
        s
    }
}

/// Reduces a family of sets to its inclusion-maximal members, deduplicated and
/// sorted lex-by-bitset.
pub fn maximal_antichain(mut sets: alloc::vec::Vec<VertexSet>) -> alloc::vec::Vec<VertexSet> {
    // Larger sets first so each candidate only needs checking against kept ones.
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: alloc::vec::Vec<VertexSet> = alloc::vec::Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}
