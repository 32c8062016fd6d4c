//! The (1, 2, n) scheme: windows of two adjacent cells, one per cell.
//!
//! Each window stores one bit — whether its left cell holds more charge than
//! its right cell — so a state of the memory is a cyclic binary word of
//! length `n`. A push-to-the-top on one cell rewrites exactly the two bits
//! watching that cell, which makes the reachable-in-one-push relation easy to
//! state directly on bits: see [`BinaryWord::push_overwrite`].
//!
//! Codes for this scheme are cyclic Gray codes over the realizable words,
//! usually of constant weight. [`build_graph`] exposes the weight-preserving
//! transition graph, [`longest_cycle`] searches it exhaustively, and
//! [`construct_2n_code`] builds an explicit cyclic code of length `2n`.

mod bounds;
mod gray;
mod search;

pub use bounds::upper_bounds;
pub use gray::{construct_2n_code, validate_gray, GrayCode, GrayFailure, GrayReport};
pub use search::{build_graph, longest_cycle, CycleSearch, TransitionGraph};

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::params::LrmParams;
use crate::word::{BaseWord, WindowPermutation};

/// State of an (1, 2, n) memory: bit `i` is 1 exactly when cell `i` holds
/// more charge than cell `i + 1 (mod n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    bits: Vec<bool>,
}

impl BinaryWord {
    /// Builds from bits; the length must be at least 3.
    pub fn new(bits: Vec<bool>) -> Result<Self, Error> {
        if bits.len() < 3 {
            return Err(Error::TooShort {
                what: "binary word",
                min: 3,
                got: bits.len(),
            });
        }
        Ok(Self { bits })
    }

    /// All-zero word of length `n` with ones at the given positions.
    pub fn from_support(n: usize, ones: &[usize]) -> Result<Self, Error> {
        let mut bits = vec![false; n];
        for &p in ones {
            if p >= n {
                return Err(Error::IndexOutOfRange {
                    what: "bit",
                    index: p,
                    len: n,
                });
            }
            bits[p] = true;
        }
        Self::new(bits)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Bit at position `i`; panics if out of range.
    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// The scheme parameters this word lives under: (1, 2, n).
    pub fn params(&self) -> LrmParams {
        LrmParams::new(1, 2, self.bits.len()).expect("n >= 3 admits (1, 2, n)")
    }

    /// The equivalent base-word of window permutations.
    pub fn to_base_word(&self) -> BaseWord {
        let symbols = self
            .bits
            .iter()
            .map(|&b| {
                let order = if b { vec![1, 2] } else { vec![2, 1] };
                WindowPermutation::new(order).expect("two-element permutation")
            })
            .collect();
        BaseWord::new(&self.params(), symbols).expect("one symbol per window")
    }

    /// Reads the bits off a base-word of size-2 window permutations.
    pub fn from_base_word(word: &BaseWord) -> Result<Self, Error> {
        let mut bits = Vec::with_capacity(word.symbols().len());
        for sym in word.symbols() {
            if sym.size() != 2 {
                return Err(Error::LengthMismatch {
                    what: "window permutation",
                    expected: 2,
                    got: sym.size(),
                });
            }
            bits.push(sym.order()[0] == 1);
        }
        Self::new(bits)
    }

    /// Whether some charge configuration demodulates to this word.
    ///
    /// The constraint graph is the cycle of adjacent-cell pairs, each edge
    /// oriented by its bit; it is acyclic exactly when both orientations
    /// occur, i.e. the word is not constant.
    pub fn is_realizable(&self) -> bool {
        self.bits.iter().any(|&b| b) && !self.bits.iter().all(|&b| b)
    }

    /// Bit effect of pushing cell `j` to the top: the two windows watching
    /// cell `j` now both rank it highest, so bits `j - 1 (mod n)` and `j`
    /// become 0 and 1 regardless of their previous values.
    pub fn push_overwrite(&self, j: usize) -> Result<Self, Error> {
        let n = self.bits.len();
        if j >= n {
            return Err(Error::IndexOutOfRange {
                what: "cell",
                index: j,
                len: n,
            });
        }
        let mut bits = self.bits.clone();
        bits[(j + n - 1) % n] = false;
        bits[j] = true;
        Ok(Self { bits })
    }
}

/// Whether `b` is the result of pushing exactly one cell of `a`, with an
/// observable change.
pub fn is_gray_step(a: &BinaryWord, b: &BinaryWord) -> bool {
    a.len() == b.len()
        && a != b
        && (0..a.len()).any(|j| a.push_overwrite(j).expect("j < n") == *b)
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut bits = Vec::with_capacity(s.len());
        for (index, ch) in s.chars().enumerate() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => {
                    return Err(Error::InvalidDigit {
                        index,
                        found: ch,
                        allowed: "0-1",
                    })
                }
            }
        }
        Self::new(bits)
    }
}
