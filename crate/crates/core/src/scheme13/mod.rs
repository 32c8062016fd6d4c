//! The (1, 3, n) scheme: windows of three adjacent cells, one per cell.
//!
//! Each window demodulates to one of the six permutations of three cells,
//! here numbered 0 through 5. Overlap consistency between adjacent windows
//! reduces to a *succession rule*: the symbols split into an even class
//! `{0, 2, 4}` (trailing window pair descending) and an odd class
//! `{1, 3, 5}`, and a symbol from the even class may only be followed by one
//! of `{0, 1, 3}`, a symbol from the odd class only by one of `{2, 4, 5}`.
//! Since each class of successors has exactly three members, every window
//! narrows the next window to three choices — the starting point for the
//! ternary block code in [`codec`].

mod codec;
mod count;

pub use codec::{decode, encode, is_legal, next_symbol, IllegalCodeword};
pub use count::{count_by_orders, count_by_scan, rate_table, CountMethod, CountReport};

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::params::LrmParams;
use crate::word::{BaseWord, WindowPermutation};

/// Parity class of a symbol: which half of the succession rule it selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Window rankings by symbol value: entry `v` is the rank-to-position list
/// of symbol `v`.
const ORDERS: [[u8; 3]; 6] = [
    [1, 2, 3], // 0
    [1, 3, 2], // 1
    [2, 1, 3], // 2
    [3, 1, 2], // 3
    [2, 3, 1], // 4
    [3, 2, 1], // 5
];

/// Constraint-chain edges of each symbol, as (lower, higher) cell offsets
/// within its window.
const CHAIN_EDGES: [[(u8, u8); 2]; 6] = [
    [(1, 0), (2, 1)], // 0: cell+0 > cell+1 > cell+2
    [(2, 0), (1, 2)], // 1: cell+0 > cell+2 > cell+1
    [(0, 1), (2, 0)], // 2: cell+1 > cell+0 > cell+2
    [(0, 2), (1, 0)], // 3: cell+2 > cell+0 > cell+1
    [(2, 1), (0, 2)], // 4: cell+1 > cell+2 > cell+0
    [(1, 2), (0, 1)], // 5: cell+2 > cell+1 > cell+0
];

/// Admissible successor values by parity class of the predecessor.
const SUCCESSORS: [[u8; 3]; 2] = [
    [0, 1, 3], // after an even symbol
    [2, 4, 5], // after an odd symbol
];

/// One of the six window permutations of the (1, 3, n) scheme, by value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol13(u8);

impl Symbol13 {
    pub const ALL: [Symbol13; 6] = [
        Symbol13(0),
        Symbol13(1),
        Symbol13(2),
        Symbol13(3),
        Symbol13(4),
        Symbol13(5),
    ];

    pub fn new(value: u8) -> Result<Self, Error> {
        if value > 5 {
            return Err(Error::InvalidSymbol { value, max: 5 });
        }
        Ok(Self(value))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// Even symbols rank their window's trailing pair in descending charge.
    pub fn parity(self) -> Parity {
        if self.0.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(self) -> bool {
        self.parity() == Parity::Even
    }

    /// The three symbols allowed to follow this one.
    pub fn successors(self) -> [Symbol13; 3] {
        let class = SUCCESSORS[if self.is_even() { 0 } else { 1 }];
        [Symbol13(class[0]), Symbol13(class[1]), Symbol13(class[2])]
    }

    /// Whether `next` may follow this symbol on the cycle.
    pub fn admits(self, next: Symbol13) -> bool {
        let class = SUCCESSORS[if self.is_even() { 0 } else { 1 }];
        class.contains(&next.value())
    }

    /// The window permutation this symbol stands for.
    pub fn permutation(self) -> WindowPermutation {
        WindowPermutation::new(ORDERS[self.0 as usize].to_vec())
            .expect("symbol orders are permutations")
    }

    /// The symbol of a size-3 window permutation.
    pub fn from_permutation(perm: &WindowPermutation) -> Result<Self, Error> {
        if perm.size() != 3 {
            return Err(Error::LengthMismatch {
                what: "window permutation",
                expected: 3,
                got: perm.size(),
            });
        }
        let value = ORDERS
            .iter()
            .position(|o| o == perm.order())
            .expect("all six size-3 permutations have symbols");
        Ok(Self(value as u8))
    }

    /// Ranks a window's three charge levels; `None` on any tie.
    pub fn from_ranking(a: i64, b: i64, c: i64) -> Option<Self> {
        if a == b || a == c || b == c {
            return None;
        }
        let value = match (a > b, a > c, b > c) {
            (true, true, true) => 0,    // a > b > c
            (true, true, false) => 1,   // a > c > b
            (false, true, true) => 2,   // b > a > c
            (false, false, true) => 4,  // b > c > a
            (true, false, false) => 3,  // c > a > b
            (false, false, false) => 5, // c > b > a
            // (true, false, true) and (false, true, false) are cyclic
            // comparison chains, impossible for distinct integers.
            _ => unreachable!("contradictory comparisons"),
        };
        Some(Self(value))
    }
}

impl fmt::Display for Symbol13 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A state of the (1, 3, n) memory: `n` symbols, cyclically satisfying the
/// succession rule.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseWord13 {
    symbols: Vec<Symbol13>,
}

impl BaseWord13 {
    /// Validates length (at least 3) and the cyclic succession rule.
    pub fn new(symbols: Vec<Symbol13>) -> Result<Self, Error> {
        if symbols.len() < 3 {
            return Err(Error::TooShort {
                what: "base-word",
                min: 3,
                got: symbols.len(),
            });
        }
        let n = symbols.len();
        for i in 0..n {
            if !symbols[i].admits(symbols[(i + 1) % n]) {
                return Err(Error::SuccessionViolation { index: i });
            }
        }
        Ok(Self { symbols })
    }

    /// Convenience constructor from raw symbol values.
    pub fn from_values(values: &[u8]) -> Result<Self, Error> {
        let symbols = values
            .iter()
            .map(|&v| Symbol13::new(v))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(symbols)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol13] {
        &self.symbols
    }

    /// The scheme parameters this word lives under: (1, 3, n).
    pub fn params(&self) -> LrmParams {
        LrmParams::new(1, 3, self.symbols.len()).expect("n >= 3 admits (1, 3, n)")
    }

    /// The equivalent generic base-word.
    pub fn to_base_word(&self) -> BaseWord {
        let symbols = self.symbols.iter().map(|s| s.permutation()).collect();
        BaseWord::new(&self.params(), symbols).expect("one symbol per window")
    }

    /// Reads the symbols off a base-word of size-3 window permutations.
    pub fn from_base_word(word: &BaseWord) -> Result<Self, Error> {
        let symbols = word
            .symbols()
            .iter()
            .map(Symbol13::from_permutation)
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(symbols)
    }

    /// Whether some charge configuration demodulates to this word.
    ///
    /// Uses the per-window chain edges directly; agrees with the generic
    /// [`crate::is_realizable`] on the corresponding base-word.
    pub fn is_realizable(&self) -> bool {
        let mut scratch = KahnScratch::default();
        scratch.load(self.symbols.iter().map(|s| s.value()));
        scratch.is_realizable()
    }
}

impl fmt::Display for BaseWord13 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, sym) in self.symbols.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{sym}")?;
        }
        Ok(())
    }
}

impl FromStr for BaseWord13 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut values = Vec::new();
        for (index, token) in s.split(',').enumerate() {
            match token.trim().parse::<u8>() {
                Ok(v) if v <= 5 => values.push(v),
                Ok(v) => return Err(Error::InvalidSymbol { value: v, max: 5 }),
                Err(_) => {
                    return Err(Error::InvalidDigit {
                        index,
                        found: token.trim().chars().next().unwrap_or(' '),
                        allowed: "0-5",
                    })
                }
            }
        }
        Self::from_values(&values)
    }
}

/// A ternary codeword: `n` digits, each 0, 1 or 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TernaryWord {
    digits: Vec<u8>,
}

impl TernaryWord {
    pub fn new(digits: Vec<u8>) -> Result<Self, Error> {
        if digits.len() < 3 {
            return Err(Error::TooShort {
                what: "ternary word",
                min: 3,
                got: digits.len(),
            });
        }
        for &d in &digits {
            if d > 2 {
                return Err(Error::InvalidSymbol { value: d, max: 2 });
            }
        }
        Ok(Self { digits })
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }
}

impl fmt::Display for TernaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for TernaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut digits = Vec::with_capacity(s.len());
        for (index, ch) in s.chars().enumerate() {
            match ch {
                '0' => digits.push(0),
                '1' => digits.push(1),
                '2' => digits.push(2),
                _ => {
                    return Err(Error::InvalidDigit {
                        index,
                        found: ch,
                        allowed: "0-2",
                    })
                }
            }
        }
        Self::new(digits)
    }
}

/// Reusable buffers for the chain-edge acyclicity check, so bulk scans do
/// not allocate per word.
#[derive(Debug, Default)]
pub(crate) struct KahnScratch {
    vals: Vec<u8>,
    succ: Vec<Vec<u16>>,
    indegree: Vec<u16>,
    queue: Vec<u16>,
}

impl KahnScratch {
    pub(crate) fn load(&mut self, values: impl Iterator<Item = u8>) {
        self.vals.clear();
        self.vals.extend(values);
    }

    pub(crate) fn values_mut(&mut self) -> &mut Vec<u8> {
        &mut self.vals
    }

    /// Acyclicity of the union of per-window chain edges for the loaded
    /// symbol values.
    ///
    /// Chains are total orders on their windows, so any overlap
    /// inconsistency between two windows already shows up as a directed
    /// cycle here; no separate consistency check is needed.
    pub(crate) fn is_realizable(&mut self) -> bool {
        let n = self.vals.len();
        if self.succ.len() < n {
            self.succ.resize_with(n, Vec::new);
        }
        for s in &mut self.succ[..n] {
            s.clear();
        }
        self.indegree.clear();
        self.indegree.resize(n, 0);
        for (i, &v) in self.vals.iter().enumerate() {
            for &(lo, hi) in &CHAIN_EDGES[v as usize] {
                let from = (i + lo as usize) % n;
                let to = (i + hi as usize) % n;
                self.succ[from].push(to as u16);
                self.indegree[to] += 1;
            }
        }
        self.queue.clear();
        self.queue
            .extend((0..n as u16).filter(|&v| self.indegree[v as usize] == 0));
        let mut processed = 0;
        while let Some(v) = self.queue.pop() {
            processed += 1;
            for i in 0..self.succ[v as usize].len() {
                let w = self.succ[v as usize][i];
                self.indegree[w as usize] -= 1;
                if self.indegree[w as usize] == 0 {
                    self.queue.push(w);
                }
            }
        }
        processed == n
    }
}
