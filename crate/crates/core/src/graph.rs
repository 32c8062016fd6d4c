use std::collections::BTreeSet;

use crate::charge::ChargeConfig;
use crate::error::Error;
use crate::params::LrmParams;
use crate::word::BaseWord;

/// Directed order constraints a base-word imposes on cell charges.
///
/// Each window contributes a chain: an edge `a -> b` for every pair of cells
/// adjacent in its ranking, meaning cell `a` must hold strictly less charge
/// than cell `b`. Duplicate edges from different windows are merged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl ConstraintGraph {
    pub fn cell_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(lower, higher)` in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, lower: usize, higher: usize) -> bool {
        self.edges.contains(&(lower, higher))
    }

    fn successors(&self) -> Vec<Vec<usize>> {
        let mut succ = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            succ[a].push(b);
        }
        succ
    }

    /// Kahn's algorithm; true when the constraints admit a total order.
    pub fn is_acyclic(&self) -> bool {
        self.longest_path_levels().is_ok()
    }

    /// Level of every cell: the longest constraint path (in edges) ending at
    /// it. Errors with [`Error::NotRealizable`] if the graph has a cycle.
    pub fn longest_path_levels(&self) -> Result<Vec<i64>, Error> {
        let succ = self.successors();
        let mut indegree = vec![0usize; self.n];
        for &(_, b) in &self.edges {
            indegree[b] += 1;
        }
        let mut levels = vec![0i64; self.n];
        let mut queue: Vec<usize> = (0..self.n).filter(|&v| indegree[v] == 0).collect();
        let mut processed = 0;
        while let Some(v) = queue.pop() {
            processed += 1;
            for &w in &succ[v] {
                if levels[v] + 1 > levels[w] {
                    levels[w] = levels[v] + 1;
                }
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    queue.push(w);
                }
            }
        }
        if processed == self.n {
            Ok(levels)
        } else {
            Err(Error::NotRealizable)
        }
    }
}

/// Builds the constraint graph of `word`, first checking that overlapping
/// windows agree on their shared cells.
pub fn constraint_graph(params: &LrmParams, word: &BaseWord) -> Result<ConstraintGraph, Error> {
    word.check_overlap(params)?;
    Ok(raw_constraint_graph(params, word))
}

/// The per-window chain edges, without the overlap pre-check.
fn raw_constraint_graph(params: &LrmParams, word: &BaseWord) -> ConstraintGraph {
    let n = params.n();
    let s = params.s();
    let mut edges = BTreeSet::new();
    for (i, sym) in word.symbols().iter().enumerate() {
        let order = sym.order();
        // order runs from highest charge to lowest; chain edges point upward.
        for pair in order.windows(2) {
            let higher = (i * s + pair[0] as usize - 1) % n;
            let lower = (i * s + pair[1] as usize - 1) % n;
            edges.insert((lower, higher));
        }
    }
    ConstraintGraph { n, edges }
}

/// Whether some charge configuration demodulates to `word`: overlapping
/// windows must be consistent and the constraint graph acyclic.
pub fn is_realizable(params: &LrmParams, word: &BaseWord) -> bool {
    word.check_overlap(params).is_ok() && raw_constraint_graph(params, word).is_acyclic()
}

/// Canonical charge configuration demodulating to `word`: each cell's level
/// is the length of the longest constraint path ending at it. This uses the
/// fewest distinct levels possible and `demodulate(realize(w)) == w`.
pub fn realize(params: &LrmParams, word: &BaseWord) -> Result<ChargeConfig, Error> {
    let graph = constraint_graph(params, word)?;
    let levels = graph.longest_path_levels()?;
    ChargeConfig::new(params, levels)
}
