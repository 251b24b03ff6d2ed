use crate::{Error, Result};

/// Work guard for the exhaustive censuses.
///
/// Exact enumerations estimate their work up front and refuse to start when
/// it exceeds the budget, instead of running away. `max_steps` caps
/// elementary enumeration steps (lineups visited times per-lineup cost,
/// matrices visited times bits checked, and so on); `max_scs_states` caps the
/// product-automaton state space of a single shortest-common-supersequence
/// search.
///
/// Defaults are sized for laptop-scale runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_steps: u128,
    pub max_scs_states: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_steps: 1_000_000_000,
            max_scs_states: 10_000_000,
        }
    }
}

impl Budget {
    /// Default budget with a custom step cap.
    pub fn with_max_steps(max_steps: u128) -> Self {
        Self {
            max_steps,
            ..Self::default()
        }
    }

    /// No limits. Exhaustive calls then run to completion no matter the size.
    pub fn unlimited() -> Self {
        Self {
            max_steps: u128::MAX,
            max_scs_states: u128::MAX,
        }
    }

    pub(crate) fn charge_steps(&self, needed: u128) -> Result<()> {
        if needed > self.max_steps {
            Err(Error::BudgetExceeded {
                needed,
                limit: self.max_steps,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn charge_scs_states(&self, needed: u128) -> Result<()> {
        if needed > self.max_scs_states {
            Err(Error::BudgetExceeded {
                needed,
                limit: self.max_scs_states,
            })
        } else {
            Ok(())
        }
    }
}
