use std::fmt;
use std::str::FromStr;

use crate::charge::ChargeConfig;
use crate::error::Error;
use crate::params::LrmParams;

/// Relative ranking of the cells of one window.
///
/// `order()[r]` is the 1-based position (within the window) of the cell with
/// rank `r`, ranks running from highest charge to lowest. So `[2, 1, 3]`
/// means the window's second cell holds the most charge and its third cell
/// the least.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WindowPermutation {
    order: Vec<u8>,
}

impl WindowPermutation {
    /// Builds from the rank-to-position list; must be a permutation of `1..=t`.
    pub fn new(order: Vec<u8>) -> Result<Self, Error> {
        let t = order.len();
        let mut seen = vec![false; t];
        for &pos in &order {
            let idx = pos as usize;
            if idx < 1 || idx > t || seen[idx - 1] {
                return Err(Error::InvalidPermutation { size: t });
            }
            seen[idx - 1] = true;
        }
        Ok(Self { order })
    }

    /// Ranks a window's charge levels, highest first. `None` on a tie.
    pub fn from_levels(levels: &[i64]) -> Option<Self> {
        let mut idx: Vec<usize> = (0..levels.len()).collect();
        idx.sort_by_key(|&k| std::cmp::Reverse(levels[k]));
        for pair in idx.windows(2) {
            if levels[pair[0]] == levels[pair[1]] {
                return None;
            }
        }
        Some(Self {
            order: idx.into_iter().map(|k| (k + 1) as u8).collect(),
        })
    }

    /// Window size `t`.
    pub fn size(&self) -> usize {
        self.order.len()
    }

    /// Rank-to-position list: entry `r` is the 1-based position of rank `r`.
    pub fn order(&self) -> &[u8] {
        &self.order
    }

    /// Rank of the cell at 1-based position `pos` (0 = highest charge).
    pub fn rank_of_position(&self, pos: usize) -> Option<usize> {
        self.order.iter().position(|&p| p as usize == pos)
    }
}

/// Renders as concatenated digits, e.g. `[2, 1, 3]` as `213` (sizes <= 9).
impl fmt::Display for WindowPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &pos in &self.order {
            write!(f, "{pos}")?;
        }
        Ok(())
    }
}

impl FromStr for WindowPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut order = Vec::with_capacity(s.len());
        for (index, ch) in s.chars().enumerate() {
            match ch.to_digit(10) {
                Some(d) if d >= 1 => order.push(d as u8),
                _ => {
                    return Err(Error::InvalidDigit {
                        index,
                        found: ch,
                        allowed: "1-9",
                    })
                }
            }
        }
        Self::new(order)
    }
}

/// Demodulated form of a charge configuration: one [`WindowPermutation`]
/// per window.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseWord {
    symbols: Vec<WindowPermutation>,
}

impl BaseWord {
    /// Builds from per-window permutations; needs one per window, each of
    /// size `t`.
    pub fn new(params: &LrmParams, symbols: Vec<WindowPermutation>) -> Result<Self, Error> {
        if symbols.len() != params.window_count() {
            return Err(Error::LengthMismatch {
                what: "base-word",
                expected: params.window_count(),
                got: symbols.len(),
            });
        }
        for sym in &symbols {
            if sym.size() != params.t() {
                return Err(Error::LengthMismatch {
                    what: "window permutation",
                    expected: params.t(),
                    got: sym.size(),
                });
            }
        }
        Ok(Self { symbols })
    }

    pub fn symbols(&self) -> &[WindowPermutation] {
        &self.symbols
    }

    /// Checks that every pair of overlapping windows ranks its shared cells
    /// the same way.
    pub fn check_overlap(&self, params: &LrmParams) -> Result<(), Error> {
        let w = params.window_count();
        let n = params.n();
        let s = params.s();
        let t = params.t();

        // rank_of[i][j] = rank of cell j within window i, if covered.
        let rank_of: Vec<Vec<Option<usize>>> = (0..w)
            .map(|i| {
                let mut ranks = vec![None; n];
                let start = i * s;
                for pos in 1..=t {
                    let cell = (start + pos - 1) % n;
                    ranks[cell] = self.symbols[i].rank_of_position(pos);
                }
                ranks
            })
            .collect();

        // Window i+d starts inside window i exactly when d*s < t; together
        // with the mirrored pair (visited from the other side) this covers
        // every overlapping pair.
        for i in 0..w {
            for d in 1..w {
                if d * s >= t {
                    break;
                }
                let j = (i + d) % w;
                let shared: Vec<usize> =
                    (0..n).filter(|&c| rank_of[i][c].is_some() && rank_of[j][c].is_some()).collect();
                for a in 0..shared.len() {
                    for b in a + 1..shared.len() {
                        let (ca, cb) = (shared[a], shared[b]);
                        let in_i = rank_of[i][ca].unwrap() < rank_of[i][cb].unwrap();
                        let in_j = rank_of[j][ca].unwrap() < rank_of[j][cb].unwrap();
                        if in_i != in_j {
                            return Err(Error::InconsistentOverlap { first: i, second: j });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_overlap_consistent(&self, params: &LrmParams) -> bool {
        self.check_overlap(params).is_ok()
    }
}

/// Reads the base-word off a charge configuration: ranks each window's cells
/// by charge, highest first.
pub fn demodulate(params: &LrmParams, config: &ChargeConfig) -> Result<BaseWord, Error> {
    if config.levels().len() != params.n() {
        return Err(Error::LengthMismatch {
            what: "charge configuration",
            expected: params.n(),
            got: config.levels().len(),
        });
    }
    let mut symbols = Vec::with_capacity(params.window_count());
    let mut window = vec![0i64; params.t()];
    for i in 0..params.window_count() {
        for (k, slot) in window.iter_mut().enumerate() {
            *slot = config.levels()[(i * params.s() + k) % params.n()];
        }
        let sym =
            WindowPermutation::from_levels(&window).ok_or(Error::TiedWindow { window: i })?;
        symbols.push(sym);
    }
    BaseWord::new(params, symbols)
}
