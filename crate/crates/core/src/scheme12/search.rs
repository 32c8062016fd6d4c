use std::collections::HashMap;

use crate::budget::{BudgetMeter, SearchBudget};
use crate::error::Error;
use crate::scheme12::BinaryWord;

/// Most vertices a transition graph may hold.
const MAX_VERTICES: u128 = 4_000_000;
/// Widest word representable in the packed vertex encoding.
const MAX_N: usize = 63;

/// Transition graph on the weight-`w` binary words of length `n`.
///
/// There is an edge `a -> b` when `b` arises from `a` by a single push that
/// keeps the weight: one 1 of `a` moves one position to the right (cyclically)
/// into an empty slot. Pushes that change the weight leave the graph, and
/// pushes with no observable effect are not edges.
#[derive(Debug, Clone)]
pub struct TransitionGraph {
    n: usize,
    w: usize,
    /// Vertex masks (bit i of the mask = bit i of the word), sorted so that
    /// vertex indices follow lexicographic word order.
    verts: Vec<u64>,
    /// Out-neighbours, each list sorted by vertex index.
    adj: Vec<Vec<u32>>,
    index: HashMap<u64, u32>,
}

impl TransitionGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self) -> usize {
        self.w
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn vertices(&self) -> impl Iterator<Item = BinaryWord> + '_ {
        self.verts.iter().map(|&m| self.word(m))
    }

    fn word(&self, mask: u64) -> BinaryWord {
        BinaryWord::new((0..self.n).map(|i| mask >> i & 1 == 1).collect())
            .expect("graph words have n >= 4")
    }

    fn mask(word: &BinaryWord) -> u64 {
        word.bits()
            .iter()
            .enumerate()
            .fold(0, |m, (i, &b)| if b { m | 1 << i } else { m })
    }

    pub fn contains(&self, word: &BinaryWord) -> bool {
        word.len() == self.n && self.index.contains_key(&Self::mask(word))
    }

    pub fn has_edge(&self, from: &BinaryWord, to: &BinaryWord) -> bool {
        if from.len() != self.n || to.len() != self.n {
            return false;
        }
        match (
            self.index.get(&Self::mask(from)),
            self.index.get(&Self::mask(to)),
        ) {
            (Some(&a), Some(&b)) => self.adj[a as usize].contains(&b),
            _ => false,
        }
    }

    pub fn out_neighbors(&self, word: &BinaryWord) -> Option<Vec<BinaryWord>> {
        let &v = self.index.get(&Self::mask(word))?;
        Some(
            self.adj[v as usize]
                .iter()
                .map(|&u| self.word(self.verts[u as usize]))
                .collect(),
        )
    }
}

/// Key whose numeric order is the lexicographic order of the bit strings:
/// bit 0 of the word is the most significant character.
fn string_key(n: usize, mask: u64) -> u64 {
    (0..n).fold(0, |k, i| k << 1 | (mask >> i & 1))
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Builds the weight-`w` transition graph on words of length `n`.
///
/// Needs `4 <= n <= 63` and `1 <= w < n`, and refuses graphs with more than
/// four million vertices.
pub fn build_graph(n: usize, w: usize) -> Result<TransitionGraph, Error> {
    if n > MAX_N {
        return Err(Error::GraphTooLarge {
            n,
            w,
            vertices: binomial(n as u128, w.min(n) as u128),
            limit: MAX_VERTICES,
        });
    }
    if n < 4 || w < 1 || w >= n {
        return Err(Error::InvalidParams { s: 1, t: 2, n });
    }
    let count = binomial(n as u128, w as u128);
    if count > MAX_VERTICES {
        return Err(Error::GraphTooLarge {
            n,
            w,
            vertices: count,
            limit: MAX_VERTICES,
        });
    }

    // Enumerate weight-w masks (Gosper's hack), then sort into lexicographic
    // word order.
    let mut verts: Vec<u64> = Vec::with_capacity(count as usize);
    let limit = 1u64 << n;
    let mut m = (1u64 << w) - 1;
    while m < limit {
        verts.push(m);
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = r | ((m ^ r) >> (2 + m.trailing_zeros()));
    }
    verts.sort_by_key(|&m| string_key(n, m));

    let index: HashMap<u64, u32> = verts
        .iter()
        .enumerate()
        .map(|(i, &m)| (m, i as u32))
        .collect();

    let adj: Vec<Vec<u32>> = verts
        .iter()
        .map(|&m| {
            let mut out: Vec<u32> = (0..n)
                .filter_map(|p| {
                    let q = (p + 1) % n;
                    if m >> p & 1 == 1 && m >> q & 1 == 0 {
                        let next = m & !(1 << p) | 1 << q;
                        Some(index[&next])
                    } else {
                        None
                    }
                })
                .collect();
            out.sort_unstable();
            out
        })
        .collect();

    Ok(TransitionGraph {
        n,
        w,
        verts,
        adj,
        index,
    })
}

/// Result of an exhaustive longest-cycle search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSearch {
    /// Length of the longest directed simple cycle; 0 if the graph has none.
    pub length: usize,
    /// The cycle, rotated so its lexicographically least word comes first.
    pub witness: Vec<BinaryWord>,
    /// DFS nodes expanded.
    pub nodes: u64,
}

/// Exhaustive longest simple cycle in a transition graph.
///
/// Every cycle is counted against its minimum vertex: the search runs one
/// DFS pass per candidate minimum, restricted to the vertices allowed to sit
/// above it. For weight 2 the passes are indexed by the minimum cyclic gap
/// between the two ones instead — the graph is invariant under rotation, so
/// any cycle can be rotated to pass through the word with ones at {0, d},
/// where d is the smallest gap on the cycle. That cuts the pass count from
/// C(n, 2) to n/2.
///
/// Each DFS expansion costs one budget node; the search aborts with
/// [`Error::Budget`] once the budget is exhausted.
pub fn longest_cycle(
    graph: &TransitionGraph,
    budget: SearchBudget,
) -> Result<CycleSearch, Error> {
    let mut meter = BudgetMeter::new(budget);
    let mut best: Option<Vec<u32>> = None;

    if graph.w == 2 {
        let n = graph.n;
        let gap = |mask: u64| -> usize {
            let p = mask.trailing_zeros() as usize;
            let q = 63 - mask.leading_zeros() as usize;
            (q - p).min(n - (q - p))
        };
        for d in 1..=n / 2 {
            let anchor = graph.index[&(1 | 1 << d)];
            let allowed: Vec<bool> = graph.verts.iter().map(|&m| gap(m) >= d).collect();
            pass(graph, anchor, &allowed, &mut meter, &mut best)?;
        }
    } else {
        for v in 0..graph.vertex_count() as u32 {
            let allowed: Vec<bool> = (0..graph.vertex_count() as u32).map(|u| u >= v).collect();
            pass(graph, v, &allowed, &mut meter, &mut best)?;
        }
    }

    let witness: Vec<BinaryWord> = best
        .map(|cycle| {
            let least = (0..cycle.len())
                .min_by_key(|&j| string_key(graph.n, graph.verts[cycle[j] as usize]))
                .unwrap_or(0);
            cycle
                .iter()
                .cycle()
                .skip(least)
                .take(cycle.len())
                .map(|&v| graph.word(graph.verts[v as usize]))
                .collect()
        })
        .unwrap_or_default();

    Ok(CycleSearch {
        length: witness.len(),
        witness,
        nodes: meter.used(),
    })
}

/// One anchored DFS pass: finds the longest simple cycle through `anchor`
/// using only `allowed` vertices, updating `best`.
fn pass(
    graph: &TransitionGraph,
    anchor: u32,
    allowed: &[bool],
    meter: &mut BudgetMeter,
    best: &mut Option<Vec<u32>>,
) -> Result<(), Error> {
    if !allowed[anchor as usize] {
        return Ok(());
    }
    let mut remaining = allowed.iter().filter(|&&a| a).count();
    let best_len = |best: &Option<Vec<u32>>| best.as_ref().map_or(1, Vec::len);

    let mut on_path = vec![false; graph.vertex_count()];
    let mut path: Vec<u32> = Vec::new();
    // (vertex, index of the next out-neighbour to try)
    let mut stack: Vec<(u32, usize)> = Vec::new();

    meter.tick()?;
    on_path[anchor as usize] = true;
    path.push(anchor);
    remaining -= 1;
    stack.push((anchor, 0));

    while let Some(&mut (v, ref mut next)) = stack.last_mut() {
        let neighbours = &graph.adj[v as usize];
        if let Some(&u) = neighbours.get(*next) {
            *next += 1;
            if u == anchor && path.len() >= 2 {
                if path.len() > best_len(best) {
                    *best = Some(path.clone());
                }
                continue;
            }
            let ui = u as usize;
            // An extension can beat the best only with enough fresh vertices.
            if allowed[ui] && !on_path[ui] && path.len() + remaining > best_len(best) {
                meter.tick()?;
                on_path[ui] = true;
                path.push(u);
                remaining -= 1;
                stack.push((u, 0));
            }
        } else {
            stack.pop();
            path.pop();
            on_path[v as usize] = false;
            remaining += 1;
        }
    }
    Ok(())
}
