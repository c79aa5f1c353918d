use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite binary word, bit-packed 64 letters per block.
///
/// Bits past `len` in the last block are always zero, so structural equality
/// is word equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    blocks: Vec<u64>,
    len: usize,
}

impl Word {
    pub fn new() -> Self {
        Word::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        Word {
            blocks: Vec::with_capacity(bits.div_ceil(64)),
            len: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Letter at 0-based position `i`.
    pub fn get(&self, i: usize) -> Option<bool> {
        (i < self.len).then(|| self.blocks[i / 64] >> (i % 64) & 1 == 1)
    }

    pub fn push(&mut self, bit: bool) {
        if self.len.is_multiple_of(64) {
            self.blocks.push(0);
        }
        if bit {
            self.blocks[self.len / 64] |= 1 << (self.len % 64);
        }
        self.len += 1;
    }

    /// Appends `other` (concatenation).
    pub fn extend_word(&mut self, other: &Word) {
        let shift = self.len % 64;
        if shift == 0 {
            self.blocks.extend_from_slice(&other.blocks);
        } else {
            for &b in &other.blocks {
                *self.blocks.last_mut().expect("partial block exists") |= b << shift;
                self.blocks.push(b >> (64 - shift));
            }
        }
        self.len += other.len;
        self.trim();
    }

    fn trim(&mut self) {
        self.blocks.truncate(self.len.div_ceil(64));
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// The first `n` letters (the whole word if shorter).
    pub fn prefix(&self, n: usize) -> Word {
        let mut w = Word {
            blocks: self.blocks[..n.min(self.len).div_ceil(64)].to_vec(),
            len: n.min(self.len),
        };
        w.trim();
        w
    }

    pub fn repeat(&self, times: usize) -> Word {
        let mut w = Word::with_capacity(self.len * times);
        for _ in 0..times {
            w.extend_word(self);
        }
        w
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.extend_word(other);
        w
    }

    pub fn count_ones(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.blocks[i / 64] >> (i % 64) & 1 == 1)
    }
}

impl FromIterator<bool> for Word {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        let mut w = Word::new();
        for b in iter {
            w.push(b);
        }
        w
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::parse(s, format!("unexpected letter {other:?}"))),
            })
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.iter().map(|b| if b { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}
