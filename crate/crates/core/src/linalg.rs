//! Linear algebra over `F₂` with dense bit rows.
//!
//! Rows grow on demand, so callers can index columns as they discover them
//! (typically through an [`Indexer`]) without fixing a width up front.

use std::collections::HashMap;
use std::hash::Hash;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
}

impl BitVec {
    pub fn new() -> Self {
        BitVec::default()
    }

    pub fn unit(i: usize) -> Self {
        let mut v = BitVec::new();
        v.set(i);
        v
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v = BitVec::new();
        for i in iter {
            v.toggle(i);
        }
        v
    }

    fn ensure(&mut self, i: usize) {
        let w = i / 64 + 1;
        if self.words.len() < w {
            self.words.resize(w, 0);
        }
    }

    pub fn get(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn set(&mut self, i: usize) {
        self.ensure(i);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn toggle(&mut self, i: usize) {
        self.ensure(i);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Lowest set index at or after `from`.
    pub fn next_one(&self, from: usize) -> Option<usize> {
        let mut wi = from / 64;
        if wi >= self.words.len() {
            return None;
        }
        let mut w = self.words[wi] & (!0u64 << (from % 64));
        loop {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
            wi += 1;
            if wi >= self.words.len() {
                return None;
            }
            w = self.words[wi];
        }
    }

    pub fn first_one(&self) -> Option<usize> {
        self.next_one(0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + t)
            })
        })
    }
}

/// Row echelon form keyed by leading (lowest) column.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<BitVec>,
    pivot_row: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    /// Reduces `v` against the stored rows; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &mut BitVec) {
        let mut pos = 0;
        while let Some(p) = v.next_one(pos) {
            match self.pivot_row.get(&p) {
                Some(&r) => v.xor_assign(&self.rows[r]),
                None => pos = p + 1,
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    /// Adds `v` to the span; returns false when it was already dependent.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        self.reduce(&mut v);
        match v.first_one() {
            None => false,
            Some(p) => {
                self.pivot_row.insert(p, self.rows.len());
                self.rows.push(v);
                true
            }
        }
    }
}

/// Basis of the kernel of the linear map sending the `k`-th unit vector to
/// `images[k]`. Kernel vectors are expressed in the source basis.
pub fn kernel(images: &[BitVec]) -> Vec<BitVec> {
    let mut rows: Vec<(BitVec, BitVec)> = Vec::new();
    let mut pivot_row: HashMap<usize, usize> = HashMap::new();
    let mut out = Vec::new();
    for (k, img) in images.iter().enumerate() {
        let mut v = img.clone();
        let mut comb = BitVec::unit(k);
        let mut pos = 0;
        while let Some(p) = v.next_one(pos) {
            match pivot_row.get(&p) {
                Some(&r) => {
                    v.xor_assign(&rows[r].0);
                    comb.xor_assign(&rows[r].1);
                }
                None => pos = p + 1,
            }
        }
        match v.first_one() {
            None => out.push(comb),
            Some(p) => {
                pivot_row.insert(p, rows.len());
                rows.push((v, comb));
            }
        }
    }
    out
}

pub fn rank(vectors: &[BitVec]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v.clone());
    }
    e.rank()
}

/// Assigns consecutive column indices to hashable keys.
#[derive(Debug, Clone)]
pub struct Indexer<K> {
    index: HashMap<K, usize>,
    keys: Vec<K>,
}

impl<K> Default for Indexer<K> {
    fn default() -> Self {
        Indexer {
            index: HashMap::new(),
            keys: Vec::new(),
        }
    }
}

impl<K: Hash + Eq + Clone> Indexer<K> {
    pub fn new() -> Self {
        Indexer::default()
    }

    pub fn index(&mut self, key: &K) -> usize {
        if let Some(&i) = self.index.get(key) {
            return i;
        }
        let i = self.keys.len();
        self.index.insert(key.clone(), i);
        self.keys.push(key.clone());
        i
    }

    pub fn get(&self, key: &K) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn key(&self, i: usize) -> &K {
        &self.keys[i]
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn vector<'a, I: IntoIterator<Item = &'a K>>(&mut self, keys: I) -> BitVec
    where
        K: 'a,
    {
        let mut v = BitVec::new();
        for k in keys {
            let i = self.index(k);
            v.toggle(i);
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_vec(rng: &mut ChaCha8Rng, width: usize, density: f64) -> BitVec {
        BitVec::from_indices((0..width).filter(|_| rng.gen_bool(density)))
    }

    // Naive rank by Gaussian elimination on Vec<bool>, independent of the bit tricks.
    fn naive_rank(vs: &[BitVec], width: usize) -> usize {
        let mut m: Vec<Vec<bool>> = vs
            .iter()
            .map(|v| (0..width).map(|i| v.get(i)).collect())
            .collect();
        let mut r = 0;
        for col in 0..width {
            if let Some(p) = (r..m.len()).find(|&i| m[i][col]) {
                m.swap(r, p);
                for i in 0..m.len() {
                    if i != r && m[i][col] {
                        let row = m[r].clone();
                        for (a, b) in m[i].iter_mut().zip(row) {
                            *a ^= b;
                        }
                    }
                }
                r += 1;
            }
        }
        r
    }

    #[test]
    fn bit_ops() {
        let mut v = BitVec::new();
        v.set(3);
        v.set(130);
        assert!(v.get(130) && v.get(3) && !v.get(4));
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![3, 130]);
        assert_eq!(v.next_one(4), Some(130));
        v.toggle(3);
        assert_eq!(v.first_one(), Some(130));
        v.toggle(130);
        assert!(v.is_zero());
    }

    #[test]
    fn rank_matches_naive() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..200 {
            let width = 1 + trial % 150;
            let n = rng.gen_range(0..40);
            let vs: Vec<BitVec> = (0..n).map(|_| random_vec(&mut rng, width, 0.3)).collect();
            assert_eq!(rank(&vs), naive_rank(&vs, width));
        }
    }

    #[test]
    fn kernel_vectors_map_to_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let n = rng.gen_range(1..30);
            let width = rng.gen_range(1..90);
            let images: Vec<BitVec> = (0..n).map(|_| random_vec(&mut rng, width, 0.2)).collect();
            let ker = kernel(&images);
            assert_eq!(ker.len() + rank(&images), n);
            for k in &ker {
                let mut sum = BitVec::new();
                for i in k.ones() {
                    sum.xor_assign(&images[i]);
                }
                assert!(sum.is_zero());
            }
            assert_eq!(rank(&ker), ker.len());
        }
    }

    #[test]
    fn membership() {
        let mut e = Echelon::new();
        assert!(e.insert(BitVec::from_indices([0, 2])));
        assert!(e.insert(BitVec::from_indices([2, 5])));
        assert!(!e.insert(BitVec::from_indices([0, 5])));
        assert!(e.contains(&BitVec::from_indices([0, 5])));
        assert!(!e.contains(&BitVec::from_indices([5])));
        assert!(e.contains(&BitVec::new()));
    }
}
