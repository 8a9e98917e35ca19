//! Dense bitsets over the element indices of one group.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A group element, identified by its index in the owning group's table.
///
/// Indices are only meaningful relative to one [`FiniteGroup`](crate::FiniteGroup);
/// the identity is always index 0.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(u32);

impl Element {
    pub const IDENTITY: Element = Element(0);

    #[inline]
    pub fn new(index: usize) -> Self {
        Element(index as u32)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl From<Element> for usize {
    fn from(e: Element) -> usize {
        e.index()
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of `0..universe`, stored as a little-endian array of 64-bit words.
///
/// Ordering compares the sets as binary numbers (bit `i` has weight `2^i`),
/// which is the canonical "bitset value" order used for subgroups.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.words[i / 64] |= 1 << (i % 64);
        }
        s
    }

    pub fn from_elements<I: IntoIterator<Item = Element>>(universe: usize, elements: I) -> Self {
        let mut s = Self::empty(universe);
        for e in elements {
            s.insert(e);
        }
        s
    }

    /// Size of the ambient index range (the order of the owning group).
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, e: Element) -> bool {
        let i = e.index();
        i < self.universe && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    /// Inserts `e`, returning `true` if it was not already present.
    ///
    /// Panics if `e` lies outside the universe.
    #[inline]
    pub fn insert(&mut self, e: Element) -> bool {
        let i = e.index();
        assert!(
            i < self.universe,
            "element {i} outside universe {}",
            self.universe
        );
        let mask = 1 << (i % 64);
        let fresh = self.words[i / 64] & mask == 0;
        self.words[i / 64] |= mask;
        fresh
    }

    pub fn remove(&mut self, e: Element) -> bool {
        let i = e.index();
        if i >= self.universe {
            return false;
        }
        let mask = 1 << (i % 64);
        let present = self.words[i / 64] & mask != 0;
        self.words[i / 64] &= !mask;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(Element::new(wi * 64 + tz))
            })
        })
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<Element> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        ElementSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Sorted member indices, the exchange format used in reports.
    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().map(Element::index).collect()
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe.cmp(&other.universe).then_with(|| {
            for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(Element::index))
            .finish()
    }
}
