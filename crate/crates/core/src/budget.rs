/// Node budget for exhaustive searches and enumerations.
///
/// One "node" is one unit of enumeration work: a DFS expansion, a permutation
/// visited, or a word scanned. Operations that can exceed the budget abort
/// with [`BudgetExceeded`] instead of running unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    max_nodes: u64,
}

impl SearchBudget {
    /// Default ceiling: one hundred million nodes.
    pub const DEFAULT_NODES: u64 = 100_000_000;

    pub fn new(max_nodes: u64) -> Self {
        Self { max_nodes }
    }

    pub fn max_nodes(&self) -> u64 {
        self.max_nodes
    }

    /// Error for work whose size is known up front to exceed the budget.
    pub(crate) fn refuse(&self, needed: u64) -> BudgetExceeded {
        BudgetExceeded {
            limit: self.max_nodes,
            needed,
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::new(Self::DEFAULT_NODES)
    }
}

/// A search or enumeration was aborted because it hit its node budget.
///
/// `needed` is the exact cost when it is known up front, otherwise the number
/// of nodes already expanded when the search gave up (a lower bound).
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("budget of {limit} nodes exceeded: the task needs at least {needed}")]
pub struct BudgetExceeded {
    pub limit: u64,
    pub needed: u64,
}

/// Incrementing node counter checked against a [`SearchBudget`].
#[derive(Debug, Clone)]
pub(crate) struct BudgetMeter {
    limit: u64,
    used: u64,
}

impl BudgetMeter {
    pub(crate) fn new(budget: SearchBudget) -> Self {
        Self {
            limit: budget.max_nodes(),
            used: 0,
        }
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }

    /// Counts one node; errors once the budget is exhausted.
    pub(crate) fn tick(&mut self) -> Result<(), BudgetExceeded> {
        self.used += 1;
        if self.used > self.limit {
            Err(BudgetExceeded {
                limit: self.limit,
                needed: self.used,
            })
        } else {
            Ok(())
        }
    }
}
