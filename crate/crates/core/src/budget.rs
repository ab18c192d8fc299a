//! Node budget for the potentially expensive enumerations.
//!
//! Every deep search in the crate (face searches, path-tuple backtracking,
//! standard-monomial recursion, the inclusion-exclusion subset walk) charges
//! one unit per explored node against a [`NodeBudget`]. Public entry points
//! construct the budget from the `SCHUBERT_NODE_BUDGET` environment variable;
//! when the variable is unset the budget is unlimited.

use crate::error::{Error, Result};

/// Environment variable that caps enumeration work, as a node count.
pub const BUDGET_ENV_VAR: &str = "SCHUBERT_NODE_BUDGET";

#[derive(Debug, Clone)]
pub struct NodeBudget {
    limit: u64,
    used: u64,
}

impl NodeBudget {
    pub fn unlimited() -> Self {
        NodeBudget {
            limit: u64::MAX,
            used: 0,
        }
    }

    pub fn with_limit(limit: u64) -> Self {
        NodeBudget { limit, used: 0 }
    }

    /// Budget from `SCHUBERT_NODE_BUDGET`; unlimited when unset or unparsable.
    pub fn from_env() -> Self {
        match std::env::var(BUDGET_ENV_VAR) {
            Ok(s) => match s.trim().parse::<u64>() {
                Ok(limit) => Self::with_limit(limit),
                Err(_) => Self::unlimited(),
            },
            Err(_) => Self::unlimited(),
        }
    }

    /// Record `n` explored nodes, failing once the limit is crossed.
    pub fn charge(&mut self, n: u64) -> Result<()> {
        self.used = self.used.saturating_add(n);
        if self.used > self.limit {
            Err(Error::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for NodeBudget {
    fn default() -> Self {
        Self::unlimited()
    }
}
