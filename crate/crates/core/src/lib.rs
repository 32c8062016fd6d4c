//! Local rank modulation (LRM) for multilevel flash cells.
//!
//! In an (s, t, n) scheme, `n` cells on a cycle are read through sliding
//! windows of `t` cells starting at every multiple of `s`. Each window is
//! demodulated to the permutation ranking its cells by charge, so a stored
//! value is a sequence of window permutations (a *base-word*) rather than a
//! vector of absolute levels. Writing uses push-to-the-top operations, which
//! only ever raise a cell above the cells it is compared with.
//!
//! This crate provides the window geometry and demodulation machinery, the
//! constraint-graph test for which base-words are realizable, and two
//! concrete schemes built on top:
//!
//! * [`scheme12`]: the (1, 2, n) scheme, storing one bit per window, with
//!   cyclic constant-weight Gray codes over the realizable words;
//! * [`scheme13`]: the (1, 3, n) scheme, with a rate-optimal block code
//!   mapping realizable words to ternary strings.

pub mod budget;
pub mod charge;
pub mod error;
pub mod graph;
pub mod params;
pub mod scheme12;
pub mod scheme13;
pub mod word;

pub use budget::{BudgetExceeded, SearchBudget};
pub use charge::{push_to_top, ChargeConfig};
pub use error::Error;
pub use graph::{constraint_graph, is_realizable, realize, ConstraintGraph};
pub use params::LrmParams;
pub use word::{demodulate, BaseWord, WindowPermutation};
