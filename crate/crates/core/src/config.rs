//! Runtime configuration read from the environment.

use crate::error::{Error, Result};

pub const DEFAULT_GENERATOR_BUDGET: usize = 8;
pub const BUDGET_ENV: &str = "SUPERLIE_GENERATOR_BUDGET";
/// Bitmask monomials are `u32`.
pub const HARD_GENERATOR_LIMIT: usize = 24;

/// Maximum number of Grassmann generators. `SUPERLIE_GENERATOR_BUDGET` overrides the default.
pub fn generator_budget() -> usize {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|b| b.min(HARD_GENERATOR_LIMIT))
        .unwrap_or(DEFAULT_GENERATOR_BUDGET)
}

pub fn check_budget(generators: usize) -> Result<()> {
    let budget = generator_budget();
    if generators > budget {
        Err(Error::Budget { generators, budget })
    } else {
        Ok(())
    }
}
