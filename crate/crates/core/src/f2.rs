//! Dense vectors and row echelon forms over F_2.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vec {
    len: usize,
    words: Vec<u64>,
}

impl F2Vec {
    pub fn zeros(len: usize) -> Self {
        F2Vec {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if b {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &F2Vec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }

    /// Bits as a `0`/`1` string, index 0 first.
    pub fn to_bit_string(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for F2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vec({})", self.to_bit_string())
    }
}

/// Reduced row echelon form, optionally tracking which inserted rows
/// contributed to each stored row (`tags`, a bitmask over insertions).
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: Vec<(usize, F2Vec, F2Vec)>,
    tag_width: usize,
}

impl Echelon {
    pub fn new(width: usize, tag_width: usize) -> Self {
        Echelon {
            width,
            rows: Vec::new(),
            tag_width,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `v` against the stored rows, returning the residue and the
    /// combination of tags that was subtracted.
    pub fn reduce(&self, v: &F2Vec) -> (F2Vec, F2Vec) {
        let mut v = v.clone();
        let mut tag = F2Vec::zeros(self.tag_width);
        for (pivot, row, row_tag) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(row);
                tag.xor_assign(row_tag);
            }
        }
        (v, tag)
    }

    /// Inserts a row with the given tag. Returns `None` if it was independent,
    /// or `Some(tag combination)` expressing a dependency if it reduced to 0.
    pub fn insert(&mut self, v: &F2Vec, tag: F2Vec) -> Option<F2Vec> {
        let (mut r, reduced_tag) = self.reduce(v);
        let mut tag = tag;
        tag.xor_assign(&reduced_tag);
        let Some(pivot) = r.first_one() else {
            return Some(tag);
        };
        // keep fully reduced: clear the new pivot from existing rows
        for (_, row, row_tag) in &mut self.rows {
            if row.get(pivot) {
                row.xor_assign(&r);
                row_tag.xor_assign(&tag);
            }
        }
        // rows stay sorted by pivot so that `reduce` works in a single pass
        let pos = self.rows.partition_point(|(p, _, _)| *p < pivot);
        r.set(pivot, true);
        self.rows.insert(pos, (pivot, r, tag));
        None
    }

    pub fn insert_untagged(&mut self, v: &F2Vec) -> bool {
        self.insert(v, F2Vec::zeros(self.tag_width)).is_none()
    }

    pub fn contains(&self, v: &F2Vec) -> bool {
        self.reduce(v).0.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_ops() {
        let mut v = F2Vec::zeros(130);
        assert!(v.is_zero());
        v.set(129, true);
        v.flip(3);
        assert_eq!(v.first_one(), Some(3));
        assert_eq!(v.count_ones(), 2);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![3, 129]);
        let w = v.clone();
        v.xor_assign(&w);
        assert!(v.is_zero());
    }

    #[test]
    fn echelon_tracks_dependencies() {
        let a = F2Vec::from_bits([true, true, false]);
        let b = F2Vec::from_bits([false, true, true]);
        let c = F2Vec::from_bits([true, false, true]);
        let mut e = Echelon::new(3, 3);
        assert!(e.insert(&a, F2Vec::unit(3, 0)).is_none());
        assert!(e.insert(&b, F2Vec::unit(3, 1)).is_none());
        let dep = e.insert(&c, F2Vec::unit(3, 2)).unwrap();
        assert_eq!(dep, F2Vec::from_bits([true, true, true]));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&c));
        assert!(!e.contains(&F2Vec::unit(3, 0)));
    }

    #[test]
    fn reduced_form_is_lexicographically_least_in_coset() {
        // span{110, 011}; the coset of 100 is {100, 010, 111, 001}
        let mut e = Echelon::new(3, 0);
        e.insert_untagged(&F2Vec::from_bits([true, true, false]));
        e.insert_untagged(&F2Vec::from_bits([false, true, true]));
        let (r, _) = e.reduce(&F2Vec::from_bits([true, false, false]));
        assert_eq!(r, F2Vec::from_bits([false, false, true]));
    }
}
