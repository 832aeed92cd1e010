use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Upper bound on the number of strings an eager generator may materialize.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(10_000_000);

    pub const UNLIMITED: Budget = Budget(u64::MAX);

    pub fn check(self, requested: &BigUint) -> Result<()> {
        if *requested > BigUint::from(self.0) {
            Err(Error::BudgetExceeded {
                requested: requested.to_string(),
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_power(self, base: u32, exp: usize) -> Result<()> {
        self.check(&BigUint::from(base).pow(exp as u32))
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
