use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Caller-supplied limits for the exhaustive solvers. Exhausting a budget
/// yields [`Error::BudgetExceeded`], never an inexact answer.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            deadline: None,
        }
    }

    pub fn timeout(limit: Duration) -> Self {
        Budget {
            max_nodes: None,
            deadline: Some(Instant::now() + limit),
        }
    }

    pub(crate) fn meter(self) -> Meter {
        Meter {
            budget: self,
            nodes: 0,
        }
    }
}

#[derive(Debug)]
pub(crate) struct Meter {
    budget: Budget,
    nodes: u64,
}

impl Meter {
    /// Counts one search node.
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if let Some(max) = self.budget.max_nodes {
            if self.nodes > max {
                return Err(Error::BudgetExceeded { nodes: self.nodes });
            }
        }
        if self.nodes % 256 == 1 {
            if let Some(deadline) = self.budget.deadline {
                if Instant::now() >= deadline {
                    return Err(Error::BudgetExceeded { nodes: self.nodes });
                }
            }
        }
        Ok(())
    }
}
