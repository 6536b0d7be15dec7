use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// A dense vector over GF(2), bit-packed into 64-bit words.
///
/// Bit index `k - 1` corresponds to message `x_k`; all modules share this
/// convention. Word `i / 64`, bit `i % 64` holds coordinate `i`, and bits
/// beyond `len` are kept zero so that derived equality and hashing are exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(len: usize) -> usize {
    len.div_ceil(64)
}

impl BitVec {
    /// The zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; word_count(len)],
        }
    }

    /// The standard unit vector with a single 1 at `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    /// Builds a vector from the low `len` bits of `mask` (bit 0 first).
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= 64, "mask constructor limited to 64 bits");
        let mut v = Self::zeros(len);
        if len > 0 {
            let keep = if len == 64 { !0 } else { (1u64 << len) - 1 };
            v.words[0] = mask & keep;
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// # Panics
    /// Panics if `index >= len`.
    #[inline]
    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "bit index {index} out of range (len={})", self.len);
        (self.words[index / 64] >> (index % 64)) & 1 == 1
    }

    /// # Panics
    /// Panics if `index >= len`.
    #[inline]
    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "bit index {index} out of range (len={})", self.len);
        let word = index / 64;
        let bit = index % 64;
        if value {
            self.words[word] |= 1u64 << bit;
        } else {
            self.words[word] &= !(1u64 << bit);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Number of ones (Hamming weight).
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// GF(2) addition.
    ///
    /// # Panics
    /// Panics if lengths differ.
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Index of the lowest set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Indices of the set coordinates, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// The low 64 coordinates as an integer mask (bit 0 = coordinate 0).
    ///
    /// # Panics
    /// Panics if `len > 64`.
    pub fn as_mask(&self) -> u64 {
        assert!(self.len <= 64, "vector too long for a 64-bit mask");
        self.words.first().copied().unwrap_or(0)
    }
}

/// Vectors sort by length, then by integer value under the bit-order
/// convention (bit 0 least significant). This is the canonical codeword
/// order used everywhere deduplication or reporting needs determinism.
impl Ord for BitVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for BitVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

/// Parses a string of `0`/`1` characters, first character = coordinate 0.
impl FromStr for BitVec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut v = BitVec::zeros(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => v.set(i, true),
                other => return Err(format!("invalid bit character {other:?}")),
            }
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_roundtrip() {
        let mut v = BitVec::zeros(70);
        v.set(0, true);
        v.set(63, true);
        v.set(64, true);
        v.set(69, true);
        assert!(v.get(0) && v.get(63) && v.get(64) && v.get(69));
        assert!(!v.get(1) && !v.get(65));
        assert_eq!(v.weight(), 4);
        v.set(64, false);
        assert_eq!(v.weight(), 3);
    }

    #[test]
    fn xor_is_gf2_addition() {
        let a: BitVec = "1100".parse().unwrap();
        let b: BitVec = "1010".parse().unwrap();
        assert_eq!(a.xor(&b), "0110".parse().unwrap());
        assert!(a.xor(&a).is_zero());
    }

    #[test]
    fn ordering_matches_integer_value() {
        let x1: BitVec = "100".parse().unwrap();
        let x2: BitVec = "010".parse().unwrap();
        let x12: BitVec = "110".parse().unwrap();
        let x3: BitVec = "001".parse().unwrap();
        assert!(x1 < x2 && x2 < x12 && x12 < x3);
        assert_eq!(x12.as_mask(), 3);
    }

    #[test]
    fn display_parses_back() {
        let v: BitVec = "10101".parse().unwrap();
        assert_eq!(v.to_string(), "10101");
        assert_eq!(v.support().collect::<Vec<_>>(), vec![0, 2, 4]);
    }
}
