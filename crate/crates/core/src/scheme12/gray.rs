use std::collections::HashMap;

use crate::error::Error;
use crate::scheme12::{is_gray_step, BinaryWord};

/// A candidate Gray code: an ordered list of states, optionally cyclic.
///
/// Construction does not validate anything; run [`validate_gray`] to check
/// the Gray-code laws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayCode {
    words: Vec<BinaryWord>,
    cyclic: bool,
}

impl GrayCode {
    pub fn new(words: Vec<BinaryWord>, cyclic: bool) -> Self {
        Self { words, cyclic }
    }

    pub fn words(&self) -> &[BinaryWord] {
        &self.words
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// One way a candidate code fails to be a Gray code.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GrayFailure {
    #[error("code contains no words")]
    Empty,

    #[error("word {index} has length {got}, but word 0 has length {expected}")]
    LengthMismatch {
        index: usize,
        expected: usize,
        got: usize,
    },

    #[error("word {index} is not realizable")]
    NotRealizable { index: usize },

    #[error("words {first} and {second} are identical")]
    Duplicate { first: usize, second: usize },

    #[error("word {index} has weight {got}, expected {expected}")]
    WrongWeight {
        index: usize,
        expected: usize,
        got: usize,
    },

    #[error("step from word {from} to word {to} is not a single push")]
    InvalidStep { from: usize, to: usize },
}

/// Outcome of [`validate_gray`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayReport {
    word_count: usize,
    failures: Vec<GrayFailure>,
}

impl GrayReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn word_count(&self) -> usize {
        self.word_count
    }

    pub fn failures(&self) -> &[GrayFailure] {
        &self.failures
    }
}

/// Checks the Gray-code laws: words are realizable, pairwise distinct, of one
/// common length, and consecutive words differ by a single push (wrapping
/// around if the code is cyclic). With `constant_weight = Some(w)` every word
/// must additionally have weight `w`.
pub fn validate_gray(code: &GrayCode, constant_weight: Option<usize>) -> GrayReport {
    let mut failures = Vec::new();
    let words = code.words();

    if words.is_empty() {
        return GrayReport {
            word_count: 0,
            failures: vec![GrayFailure::Empty],
        };
    }

    let n = words[0].len();
    for (index, word) in words.iter().enumerate() {
        if word.len() != n {
            failures.push(GrayFailure::LengthMismatch {
                index,
                expected: n,
                got: word.len(),
            });
        }
        if !word.is_realizable() {
            failures.push(GrayFailure::NotRealizable { index });
        }
        if let Some(expected) = constant_weight {
            if word.weight() != expected {
                failures.push(GrayFailure::WrongWeight {
                    index,
                    expected,
                    got: word.weight(),
                });
            }
        }
    }

    let mut seen: HashMap<&BinaryWord, usize> = HashMap::new();
    for (index, word) in words.iter().enumerate() {
        if let Some(&first) = seen.get(word) {
            failures.push(GrayFailure::Duplicate {
                first,
                second: index,
            });
        } else {
            seen.insert(word, index);
        }
    }

    let step_count = if code.is_cyclic() && words.len() > 1 {
        words.len()
    } else {
        words.len() - 1
    };
    for from in 0..step_count {
        let to = (from + 1) % words.len();
        if words[from].len() == words[to].len() && !is_gray_step(&words[from], &words[to]) {
            failures.push(GrayFailure::InvalidStep { from, to });
        }
    }

    GrayReport {
        word_count: words.len(),
        failures,
    }
}

/// Explicit cyclic Gray code of length `2n` over weight-2 words of length
/// `n`, for `n >= 5`.
///
/// The sequence alternates between an adjacent pair and a skip pair anchored
/// at each position: words `2i` and `2i + 1` have ones at `{i, i+1}` and
/// `{i, i+2}` respectively (indices mod n). Each step moves one of the two
/// ones a single cell to the right, so consecutive words differ by one push,
/// and after `2n` steps both ones have travelled once around the cycle.
pub fn construct_2n_code(n: usize) -> Result<GrayCode, Error> {
    // For n = 4 the skip pairs {i, i+2} coincide in opposite pairs, so the
    // sequence revisits words; no code of this shape exists below n = 5.
    if n < 5 {
        return Err(Error::UnsupportedN { n });
    }
    let mut words = Vec::with_capacity(2 * n);
    for i in 0..n {
        words.push(BinaryWord::from_support(n, &[i, (i + 1) % n])?);
        words.push(BinaryWord::from_support(n, &[i, (i + 2) % n])?);
    }
    Ok(GrayCode::new(words, true))
}
