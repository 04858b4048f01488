use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Resource caps for Gröbner basis computations. Exceeding any of them
/// aborts the computation with [`Error::Budget`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of S-pairs reduced in one Buchberger run.
    pub max_pairs: u64,
    /// Maximum total degree of any basis element.
    pub max_degree: u32,
    /// Absolute wall-clock deadline shared by every call using this budget.
    pub deadline: Option<Instant>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 1_000_000,
            max_degree: 1 << 12,
            deadline: None,
        }
    }
}

impl Budget {
    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.deadline = Some(Instant::now() + limit);
        self
    }

    pub(crate) fn check_time(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::Budget("wall-clock limit reached".into())),
            _ => Ok(()),
        }
    }
}
