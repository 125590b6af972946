use std::fmt;

use super::words_for;

/// Iterates the set bit positions of a word slice in increasing order.
pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + b)
            }
        })
    })
}

/// Clears bits at positions `>= n`.
pub(crate) fn mask_tail(words: &mut [u64], n: usize) {
    let full = n / 64;
    let rem = n % 64;
    if rem != 0 && full < words.len() {
        words[full] &= (1u64 << rem) - 1;
        for w in &mut words[full + 1..] {
            *w = 0;
        }
    } else {
        let start = full.min(words.len());
        for w in &mut words[start..] {
            *w = 0;
        }
    }
}

/// Set of vertices of a graph on `universe` vertices, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> VertexSet {
        VertexSet {
            universe,
            words: vec![0; words_for(universe)],
        }
    }

    pub fn full(universe: usize) -> VertexSet {
        let mut words = vec![u64::MAX; words_for(universe)];
        mask_tail(&mut words, universe);
        VertexSet { universe, words }
    }

    pub(crate) fn from_words(universe: usize, words: Vec<u64>) -> VertexSet {
        VertexSet { universe, words }
    }

    pub fn from_vertices(universe: usize, vertices: impl IntoIterator<Item = usize>) -> VertexSet {
        let mut set = VertexSet::new(universe);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        iter_bits(&self.words)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_set_respects_universe() {
        let s = VertexSet::full(70);
        assert_eq!(s.len(), 70);
        assert!(s.contains(69));
        assert!(!s.contains(70));
        let mut t = VertexSet::from_vertices(70, [1, 65]);
        assert!(t.is_subset(&s));
        t.remove(65);
        assert_eq!(t.to_vec(), vec![1]);
    }
}
