//! Alphabets, finite blocks, coordinatewise domination, and sets of
//! equal-length blocks.
//!
//! Blocks are finite words over `{0, …, r-1}`. Domination compares two
//! equal-length blocks coordinatewise; the blocks dominated by `w` form a
//! product set of size `∏ (w_i + 1)`, which this module can count exactly
//! (arbitrary precision) and enumerate under a budget.
//!
//! `BlockSet` stores all members of one length. It is bit-indexed (dense)
//! whenever `r^n <= 2^26` and falls back to an ordered set otherwise. The
//! dense index of an n-block is the radix-r value of its symbols, most
//! significant symbol first, so dense iteration order is lexicographic.

use std::collections::BTreeSet;
use std::fmt;

use num::bigint::BigUint;
use num::traits::One;

use crate::error::{Error, Result};

/// Upper bound on a dense bit table: sets with `r^n` above this use the
/// sparse representation.
pub const DENSE_CAPACITY_CAP: u64 = 1 << 26;

/// Default cap for block enumeration (`dominated_blocks`, closures).
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 26;

/// A finite alphabet `{0, …, size-1}` with `1 <= size <= 2^16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    size: u32,
}

impl Alphabet {
    pub fn new(size: u32) -> Result<Self> {
        if size == 0 || size > 1 << 16 {
            return Err(Error::InvalidAlphabetSize { size: size as u64 });
        }
        Ok(Alphabet { size })
    }

    pub fn binary() -> Self {
        Alphabet { size: 2 }
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn contains(&self, symbol: u16) -> bool {
        (symbol as u32) < self.size
    }

    fn check_match(&self, other: &Alphabet) -> Result<()> {
        if self.size != other.size {
            return Err(Error::AlphabetMismatch {
                left: self.size,
                right: other.size,
            });
        }
        Ok(())
    }
}

/// A finite word over an alphabet. The empty block has length zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    alphabet: Alphabet,
    symbols: Vec<u16>,
}

impl Block {
    pub fn new(alphabet: Alphabet, symbols: Vec<u16>) -> Result<Self> {
        for &s in &symbols {
            if !alphabet.contains(s) {
                return Err(Error::SymbolOutOfRange {
                    symbol: s as u32,
                    alphabet: alphabet.size(),
                });
            }
        }
        Ok(Block { alphabet, symbols })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Block {
            alphabet,
            symbols: Vec::new(),
        }
    }

    /// Parses the text form: a string of decimal digits for `r <= 10`,
    /// comma-separated decimal integers for `r > 10`. The empty string is
    /// the empty block.
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Block::empty(alphabet));
        }
        let symbols: Vec<u16> = if alphabet.size() <= 10 {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u16)
                        .ok_or_else(|| Error::Parse(format!("invalid digit {c:?} in block")))
                })
                .collect::<Result<_>>()?
        } else {
            text.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u16>()
                        .map_err(|_| Error::Parse(format!("invalid symbol {part:?} in block")))
                })
                .collect::<Result<_>>()?
        };
        Block::new(alphabet, symbols)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u16] {
        &self.symbols
    }

    /// Number of occurrences of `symbol`.
    pub fn count_symbol(&self, symbol: u16) -> usize {
        self.symbols.iter().filter(|&&s| s == symbol).count()
    }

    /// `uv`: the symbols of `self` followed by the symbols of `other`.
    pub fn concat(&self, other: &Block) -> Result<Block> {
        self.alphabet.check_match(&other.alphabet)?;
        let mut symbols = Vec::with_capacity(self.len() + other.len());
        symbols.extend_from_slice(&self.symbols);
        symbols.extend_from_slice(&other.symbols);
        Ok(Block {
            alphabet: self.alphabet,
            symbols,
        })
    }

    /// `u^n`: n-fold concatenation; `repeat(0)` is the empty block.
    pub fn repeat(&self, n: usize) -> Block {
        let mut symbols = Vec::with_capacity(self.len() * n);
        for _ in 0..n {
            symbols.extend_from_slice(&self.symbols);
        }
        Block {
            alphabet: self.alphabet,
            symbols,
        }
    }

    /// The sub-block from 1-based position `i` through `j` inclusive.
    pub fn slice(&self, i: usize, j: usize) -> Result<Block> {
        if i == 0 || i > j || j > self.len() {
            return Err(Error::InvalidArgument(format!(
                "slice [{i},{j}] out of range for block of length {}",
                self.len()
            )));
        }
        Ok(Block {
            alphabet: self.alphabet,
            symbols: self.symbols[i - 1..j].to_vec(),
        })
    }

    /// True iff `z = self · v` for some block `v`.
    pub fn is_prefix_of(&self, z: &Block) -> Result<bool> {
        self.alphabet.check_match(&z.alphabet)?;
        Ok(z.symbols.len() >= self.symbols.len()
            && z.symbols[..self.symbols.len()] == self.symbols[..])
    }

    /// True iff the blocks have equal length and `other_i <= self_i` at
    /// every position. Unequal lengths (or alphabets) give `false`: the
    /// relation is only defined on equal-length blocks and a total
    /// predicate keeps set-level callers simple.
    pub fn dominates(&self, other: &Block) -> bool {
        self.alphabet == other.alphabet
            && self.len() == other.len()
            && self
                .symbols
                .iter()
                .zip(&other.symbols)
                .all(|(&w, &v)| v <= w)
    }

    /// Exact number of blocks dominated by `self`: `∏ (w_i + 1)`.
    /// For binary blocks this is `2^(number of ones)`.
    pub fn dominated_count(&self) -> BigUint {
        if self.alphabet.size() == 2 {
            return BigUint::one() << self.count_symbol(1);
        }
        let mut product = BigUint::one();
        for &s in &self.symbols {
            product *= BigUint::from(s as u64 + 1);
        }
        product
    }

    /// Enumerates every block dominated by `self`, under the default cap.
    pub fn dominated_blocks(&self) -> Result<BlockSet> {
        self.dominated_blocks_capped(DEFAULT_ENUMERATION_CAP)
    }

    /// Enumerates every block dominated by `self`; errors if the exact
    /// count exceeds `cap`.
    pub fn dominated_blocks_capped(&self, cap: u64) -> Result<BlockSet> {
        let count = self.dominated_count();
        if count > BigUint::from(cap) {
            return Err(Error::Budget {
                what: "dominated-block enumeration",
                required: count.to_string(),
                cap: cap.to_string(),
            });
        }
        let mut set = BlockSet::new(self.alphabet, self.len());
        let mut current = vec![0u16; self.len()];
        loop {
            set.insert_symbols(&current);
            // odometer over the product space ∏ {0..=w_i}
            let mut pos = self.len();
            loop {
                if pos == 0 {
                    return Ok(set);
                }
                pos -= 1;
                if current[pos] < self.symbols[pos] {
                    current[pos] += 1;
                    break;
                }
                current[pos] = 0;
            }
        }
    }

    /// Radix-r value of the symbols, most significant symbol first, when
    /// `r^len` fits the dense cap.
    pub fn dense_index(&self) -> Option<u64> {
        dense_capacity(self.alphabet.size(), self.len())?;
        let r = self.alphabet.size() as u64;
        let mut idx = 0u64;
        for &s in &self.symbols {
            idx = idx * r + s as u64;
        }
        Some(idx)
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet.size() <= 10 {
            for &s in &self.symbols {
                write!(f, "{s}")?;
            }
        } else {
            for (i, &s) in self.symbols.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

/// `r^n` when it is within the dense cap.
pub fn dense_capacity(r: u32, n: usize) -> Option<u64> {
    let mut cap = 1u64;
    for _ in 0..n {
        cap = cap.checked_mul(r as u64)?;
        if cap > DENSE_CAPACITY_CAP {
            return None;
        }
    }
    Some(cap)
}

/// A binary block packed one bit per symbol, least significant bit of each
/// word first. Used where long binary blocks need word-wise arithmetic
/// (ones counts, domination sweeps over construction levels).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackedBits {
    len: usize,
    words: Vec<u64>,
}

impl PackedBits {
    pub fn from_block(block: &Block) -> Result<Self> {
        if block.alphabet().size() != 2 {
            return Err(Error::InvalidArgument(
                "packed bits require a binary block".into(),
            ));
        }
        let len = block.len();
        let mut words = vec![0u64; len.div_ceil(64)];
        for (i, &s) in block.symbols().iter().enumerate() {
            if s == 1 {
                words[i / 64] |= 1u64 << (i % 64);
            }
        }
        Ok(PackedBits { len, words })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Equal-length coordinatewise comparison, one word at a time.
    pub fn dominates(&self, other: &PackedBits) -> bool {
        self.len == other.len
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(&w, &v)| v & !w == 0)
    }

    pub fn to_block(&self) -> Block {
        let symbols = (0..self.len)
            .map(|i| ((self.words[i / 64] >> (i % 64)) & 1) as u16)
            .collect();
        Block {
            alphabet: Alphabet::binary(),
            symbols,
        }
    }
}

#[derive(Clone, Debug)]
enum Repr {
    Dense { bits: Vec<u64>, capacity: u64 },
    Sparse(BTreeSet<Vec<u16>>),
}

/// A set of blocks of one fixed length over one alphabet.
#[derive(Clone, Debug)]
pub struct BlockSet {
    alphabet: Alphabet,
    block_len: usize,
    count: u64,
    repr: Repr,
}

impl BlockSet {
    pub fn new(alphabet: Alphabet, block_len: usize) -> Self {
        let repr = match dense_capacity(alphabet.size(), block_len) {
            Some(capacity) => Repr::Dense {
                bits: vec![0u64; (capacity as usize).div_ceil(64)],
                capacity,
            },
            None => Repr::Sparse(BTreeSet::new()),
        };
        BlockSet {
            alphabet,
            block_len,
            count: 0,
            repr,
        }
    }

    pub fn from_blocks<'a>(
        alphabet: Alphabet,
        block_len: usize,
        blocks: impl IntoIterator<Item = &'a Block>,
    ) -> Self {
        let mut set = BlockSet::new(alphabet, block_len);
        for b in blocks {
            set.insert(b);
        }
        set
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn block_len(&self) -> usize {
        self.block_len
    }

    pub fn len(&self) -> u64 {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn is_dense(&self) -> bool {
        matches!(self.repr, Repr::Dense { .. })
    }

    fn index_of(&self, symbols: &[u16]) -> u64 {
        let r = self.alphabet.size() as u64;
        symbols.iter().fold(0u64, |idx, &s| idx * r + s as u64)
    }

    fn decode(&self, mut idx: u64) -> Vec<u16> {
        let r = self.alphabet.size() as u64;
        let mut symbols = vec![0u16; self.block_len];
        for pos in (0..self.block_len).rev() {
            symbols[pos] = (idx % r) as u16;
            idx /= r;
        }
        symbols
    }

    /// Inserts a block; returns true when it was not already present.
    /// Panics on a length or alphabet mismatch: sets are homogeneous by
    /// construction and a mismatch is a caller bug.
    pub fn insert(&mut self, block: &Block) -> bool {
        assert_eq!(
            block.alphabet(),
            self.alphabet,
            "block alphabet does not match set"
        );
        assert_eq!(block.len(), self.block_len, "block length does not match set");
        self.insert_symbols(block.symbols())
    }

    pub(crate) fn insert_symbols(&mut self, symbols: &[u16]) -> bool {
        debug_assert_eq!(symbols.len(), self.block_len);
        match &mut self.repr {
            Repr::Dense { bits, .. } => {
                let idx = {
                    let r = self.alphabet.size() as u64;
                    symbols.iter().fold(0u64, |i, &s| i * r + s as u64)
                };
                let word = &mut bits[(idx / 64) as usize];
                let mask = 1u64 << (idx % 64);
                if *word & mask == 0 {
                    *word |= mask;
                    self.count += 1;
                    true
                } else {
                    false
                }
            }
            Repr::Sparse(set) => {
                if set.insert(symbols.to_vec()) {
                    self.count += 1;
                    true
                } else {
                    false
                }
            }
        }
    }

    /// Inserts by dense index. Only valid on dense sets.
    pub(crate) fn insert_index(&mut self, idx: u64) -> bool {
        match &mut self.repr {
            Repr::Dense { bits, capacity } => {
                debug_assert!(idx < *capacity);
                let word = &mut bits[(idx / 64) as usize];
                let mask = 1u64 << (idx % 64);
                if *word & mask == 0 {
                    *word |= mask;
                    self.count += 1;
                    true
                } else {
                    false
                }
            }
            Repr::Sparse(_) => panic!("insert_index on a sparse set"),
        }
    }

    pub fn contains(&self, block: &Block) -> bool {
        if block.alphabet() != self.alphabet || block.len() != self.block_len {
            return false;
        }
        match &self.repr {
            Repr::Dense { bits, .. } => {
                let idx = self.index_of(block.symbols());
                bits[(idx / 64) as usize] & (1u64 << (idx % 64)) != 0
            }
            Repr::Sparse(set) => set.contains(block.symbols()),
        }
    }

    pub(crate) fn contains_symbols(&self, symbols: &[u16]) -> bool {
        debug_assert_eq!(symbols.len(), self.block_len);
        match &self.repr {
            Repr::Dense { bits, .. } => {
                let idx = self.index_of(symbols);
                bits[(idx / 64) as usize] & (1u64 << (idx % 64)) != 0
            }
            Repr::Sparse(set) => set.contains(symbols),
        }
    }

    /// Iterates members in lexicographic (equivalently, dense index) order.
    pub fn iter(&self) -> impl Iterator<Item = Block> + '_ {
        let dense = match &self.repr {
            Repr::Dense { bits, capacity } => Some((bits, *capacity)),
            Repr::Sparse(_) => None,
        };
        let sparse = match &self.repr {
            Repr::Sparse(set) => Some(set.iter()),
            Repr::Dense { .. } => None,
        };
        let dense_iter = dense.into_iter().flat_map(move |(bits, capacity)| {
            (0..capacity)
                .filter(move |&idx| bits[(idx / 64) as usize] & (1u64 << (idx % 64)) != 0)
                .map(move |idx| Block {
                    alphabet: self.alphabet,
                    symbols: self.decode(idx),
                })
        });
        let sparse_iter = sparse.into_iter().flatten().map(move |symbols| Block {
            alphabet: self.alphabet,
            symbols: symbols.clone(),
        });
        dense_iter.chain(sparse_iter)
    }

    pub(crate) fn dense_words(&self) -> Option<(&[u64], u64)> {
        match &self.repr {
            Repr::Dense { bits, capacity } => Some((bits, *capacity)),
            Repr::Sparse(_) => None,
        }
    }

    /// True iff every member of `self` is a member of `other`.
    pub fn is_subset_of(&self, other: &BlockSet) -> bool {
        if self.alphabet != other.alphabet || self.block_len != other.block_len {
            return false;
        }
        self.iter().all(|b| other.contains(&b))
    }

    pub fn set_equal(&self, other: &BlockSet) -> bool {
        self.len() == other.len() && self.is_subset_of(other)
    }

    /// Replaces the set with its downward closure under domination: every
    /// block obtained by lowering symbols of a member is added.
    ///
    /// Dense sets close in place with an O(n·capacity) sweep; sparse sets
    /// grow by a worklist and `cap` bounds the closure size.
    pub fn close_downward(&mut self, cap: u64) -> Result<()> {
        let r = self.alphabet.size() as u64;
        let n = self.block_len;
        match &mut self.repr {
            Repr::Dense { bits, capacity } => {
                if r == 2 {
                    close_bits_binary(bits, n as u32);
                } else {
                    // One descending pass per position: lowering cascades
                    // because the lowered index is visited later.
                    let mut step = *capacity / r.max(1);
                    for _pos in 0..n {
                        let mut idx = *capacity;
                        while idx > 0 {
                            idx -= 1;
                            if bits[(idx / 64) as usize] & (1u64 << (idx % 64)) != 0 {
                                let digit = (idx / step) % r;
                                if digit > 0 {
                                    let lower = idx - step;
                                    bits[(lower / 64) as usize] |= 1u64 << (lower % 64);
                                }
                            }
                        }
                        step /= r;
                    }
                }
                self.count = bits.iter().map(|w| w.count_ones() as u64).sum();
                Ok(())
            }
            Repr::Sparse(set) => {
                let mut work: Vec<Vec<u16>> = set.iter().cloned().collect();
                while let Some(symbols) = work.pop() {
                    for pos in 0..n {
                        if symbols[pos] > 0 {
                            let mut lower = symbols.clone();
                            lower[pos] -= 1;
                            if set.insert(lower.clone()) {
                                self.count += 1;
                                if self.count > cap {
                                    return Err(Error::Budget {
                                        what: "downward closure",
                                        required: format!("more than {}", self.count),
                                        cap: cap.to_string(),
                                    });
                                }
                                work.push(lower);
                            }
                        }
                    }
                }
                Ok(())
            }
        }
    }
}

/// Downward closure of a bit table indexed by binary blocks: one pass per
/// bit position, OR-ing each set entry into the entry with that bit
/// cleared (sum-over-subsets style).
pub(crate) fn close_bits_binary(words: &mut [u64], n: u32) {
    const LOW_MASKS: [u64; 6] = [
        0xAAAA_AAAA_AAAA_AAAA,
        0xCCCC_CCCC_CCCC_CCCC,
        0xF0F0_F0F0_F0F0_F0F0,
        0xFF00_FF00_FF00_FF00,
        0xFFFF_0000_FFFF_0000,
        0xFFFF_FFFF_0000_0000,
    ];
    for b in 0..n {
        if b < 6 {
            let shift = 1u32 << b;
            let mask = LOW_MASKS[b as usize];
            for w in words.iter_mut() {
                *w |= (*w & mask) >> shift;
            }
        } else {
            let stride = 1usize << (b - 6);
            let mut base = 0;
            while base + 2 * stride <= words.len() {
                let (lo, hi) = words[base..base + 2 * stride].split_at_mut(stride);
                for (l, h) in lo.iter_mut().zip(hi.iter()) {
                    *l |= *h;
                }
                base += 2 * stride;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bin(text: &str) -> Block {
        Block::parse(Alphabet::binary(), text).unwrap()
    }

    #[test]
    fn concat_identity_and_lengths() {
        let e = Block::empty(Alphabet::binary());
        let b = bin("01");
        assert_eq!(e.concat(&b).unwrap(), b);
        assert_eq!(b.concat(&e).unwrap(), b);
        let u = bin("110");
        let v = bin("01");
        assert_eq!(u.concat(&v).unwrap().len(), u.len() + v.len());
    }

    #[test]
    fn concat_alphabet_mismatch() {
        let u = bin("01");
        let v = Block::parse(Alphabet::new(3).unwrap(), "012").unwrap();
        assert!(matches!(
            u.concat(&v),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn repeat_examples() {
        assert_eq!(bin("10").repeat(3), bin("101010"));
        assert_eq!(Block::empty(Alphabet::binary()).repeat(5).len(), 0);
        let w1 = bin("1111000000");
        let w2 = w1.repeat(10);
        assert_eq!(w2.len(), 100);
        assert_eq!(w1.concat(&w1).unwrap(), w2.slice(1, 20).unwrap());
    }

    #[test]
    fn prefix_examples() {
        let e = Block::empty(Alphabet::binary());
        assert!(e.is_prefix_of(&bin("010")).unwrap());
        let w1 = bin("1111000000");
        assert!(w1.is_prefix_of(&w1.repeat(10)).unwrap());
        assert!(!bin("11").is_prefix_of(&bin("10")).unwrap());
    }

    #[test]
    fn domination_examples() {
        assert!(bin("111").dominates(&bin("010")));
        assert!(!bin("0101").dominates(&bin("0010")));
        let w = bin("0110");
        assert!(w.dominates(&w));
        // unequal lengths are never related
        assert!(!bin("111").dominates(&bin("01")));
    }

    #[test]
    fn dominated_count_examples() {
        assert_eq!(bin("0101").dominated_count(), BigUint::from(4u32));
        assert_eq!(bin("111").dominated_count(), BigUint::from(8u32));
        let t = Block::parse(Alphabet::new(3).unwrap(), "012").unwrap();
        assert_eq!(t.dominated_count(), BigUint::from(6u32));
    }

    #[test]
    fn dominated_count_matches_brute_force_ternary() {
        // oracle: enumerate all 27 ternary 3-blocks and test domination
        let a3 = Alphabet::new(3).unwrap();
        let w = Block::parse(a3, "012").unwrap();
        let mut n = 0u32;
        for i in 0..3u16 {
            for j in 0..3u16 {
                for k in 0..3u16 {
                    let v = Block::new(a3, vec![i, j, k]).unwrap();
                    if w.dominates(&v) {
                        n += 1;
                    }
                }
            }
        }
        assert_eq!(BigUint::from(n), w.dominated_count());
    }

    #[test]
    fn dominated_blocks_examples() {
        let set = bin("0101").dominated_blocks().unwrap();
        let expected = ["0000", "0001", "0100", "0101"];
        assert_eq!(set.len(), 4);
        for t in expected {
            assert!(set.contains(&bin(t)));
        }

        let only_self = bin("00").dominated_blocks().unwrap();
        assert_eq!(only_self.len(), 1);
        assert!(only_self.contains(&bin("00")));

        let all = bin("11").dominated_blocks().unwrap();
        assert_eq!(all.len(), 4);
    }

    #[test]
    fn dominated_blocks_budget_error_names_count() {
        let w = bin("1").repeat(40);
        let err = w.dominated_blocks().unwrap_err();
        match err {
            Error::Budget { required, .. } => {
                assert_eq!(required, (1u64 << 40).to_string());
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn dominated_blocks_big_count_uses_bigints() {
        let w = bin("1").repeat(100);
        assert_eq!(w.dominated_count(), BigUint::one() << 100);
    }

    #[test]
    fn domination_is_partial_order_up_to_length_6() {
        for n in 0..=6usize {
            let blocks: Vec<Block> = (0..(1u32 << n))
                .map(|m| {
                    let symbols = (0..n).map(|i| ((m >> (n - 1 - i)) & 1) as u16).collect();
                    Block::new(Alphabet::binary(), symbols).unwrap()
                })
                .collect();
            for a in &blocks {
                assert!(a.dominates(a));
                for b in &blocks {
                    if a.dominates(b) && b.dominates(a) {
                        assert_eq!(a, b);
                    }
                    for c in &blocks {
                        if a.dominates(b) && b.dominates(c) {
                            assert!(a.dominates(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_size_matches_count_exhaustive_len_12() {
        for n in [6usize, 12] {
            for m in 0..(1u64 << n) {
                let symbols: Vec<u16> = (0..n).map(|i| ((m >> (n - 1 - i)) & 1) as u16).collect();
                let w = Block::new(Alphabet::binary(), symbols).unwrap();
                let set = w.dominated_blocks().unwrap();
                assert_eq!(BigUint::from(set.len()), w.dominated_count());
            }
        }
    }

    #[test]
    fn enumeration_is_downward_closed() {
        let w = bin("110101");
        let set = w.dominated_blocks().unwrap();
        for v in set.iter() {
            for u in v.dominated_blocks().unwrap().iter() {
                assert!(set.contains(&u));
            }
        }
    }

    #[test]
    fn dense_index_is_radix_value() {
        let b = bin("0101");
        assert_eq!(b.dense_index(), Some(5));
        let t = Block::parse(Alphabet::new(3).unwrap(), "210").unwrap();
        assert_eq!(t.dense_index(), Some(2 * 9 + 1 * 3));
    }

    #[test]
    fn block_set_dense_and_sparse_agree() {
        let a20 = Alphabet::new(20).unwrap();
        // 20^8 is far beyond the dense cap, so this set is sparse
        let mut sparse = BlockSet::new(a20, 8);
        assert!(!sparse.is_dense());
        let b = Block::new(a20, vec![0, 19, 3, 3, 3, 0, 1, 2]).unwrap();
        assert!(sparse.insert(&b));
        assert!(!sparse.insert(&b));
        assert!(sparse.contains(&b));
        assert_eq!(sparse.iter().count(), 1);

        let mut dense = BlockSet::new(Alphabet::binary(), 4);
        assert!(dense.is_dense());
        dense.insert(&bin("0101"));
        dense.insert(&bin("1100"));
        let members: Vec<String> = dense.iter().map(|b| b.to_string()).collect();
        assert_eq!(members, ["0101", "1100"]);
    }

    #[test]
    fn close_downward_matches_enumeration() {
        let w = bin("0101");
        let mut set = BlockSet::new(Alphabet::binary(), 4);
        set.insert(&w);
        set.close_downward(1 << 20).unwrap();
        assert!(set.set_equal(&w.dominated_blocks().unwrap()));
    }

    #[test]
    fn close_downward_sparse_matches_dense() {
        let a20 = Alphabet::new(20).unwrap();
        let w = Block::new(a20, vec![2, 0, 3, 1, 1, 0, 2, 1]).unwrap();
        let mut sparse = BlockSet::new(a20, 8);
        sparse.insert(&w);
        sparse.close_downward(1 << 20).unwrap();
        assert_eq!(BigUint::from(sparse.len()), w.dominated_count());
        for v in sparse.iter() {
            assert!(w.dominates(&v));
        }
    }

    #[test]
    fn close_downward_general_alphabet_dense() {
        let a3 = Alphabet::new(3).unwrap();
        let w = Block::parse(a3, "021").unwrap();
        let mut set = BlockSet::new(a3, 3);
        assert!(set.is_dense());
        set.insert(&w);
        set.close_downward(1 << 20).unwrap();
        assert!(set.set_equal(&w.dominated_blocks().unwrap()));
    }

    #[test]
    fn packed_bits_round_trip_and_domination() {
        let w = bin("1111000000").repeat(17);
        let p = PackedBits::from_block(&w).unwrap();
        assert_eq!(p.len(), 170);
        assert_eq!(p.count_ones(), 68);
        assert_eq!(p.to_block(), w);

        let v = bin("1010000000").repeat(17);
        let q = PackedBits::from_block(&v).unwrap();
        assert!(p.dominates(&q));
        assert!(!q.dominates(&p));
    }

    #[test]
    fn block_text_round_trip() {
        let a12 = Alphabet::new(12).unwrap();
        let b = Block::new(a12, vec![0, 11, 2]).unwrap();
        assert_eq!(b.to_string(), "0,11,2");
        assert_eq!(Block::parse(a12, &b.to_string()).unwrap(), b);

        let s = bin("0101");
        assert_eq!(s.to_string(), "0101");
        assert_eq!(Block::parse(Alphabet::binary(), "").unwrap().len(), 0);
    }
}
